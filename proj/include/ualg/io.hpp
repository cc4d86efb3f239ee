#pragma once

// JSON algebra and homomorphism files.
//
//   {"name": "B", "size": 3, "labels": ["1","2","3"],
//    "ops": [{"name": "mul", "arity": 2, "table": [0,1,2,0,0,2,0,1,0]}]}
//
//   {"from": "@B", "to": "a.json", "map": [0,0,1]}
//
// "from"/"to" are algebra references: @name for a built-in, otherwise a path
// relative to the homomorphism file.

#include <string>
#include <string_view>

#include "ualg/algebra.hpp"

namespace ualg {

  // Errors name the source and the offending location.
  FiniteAlgebra parse_algebra_json(std::string_view   text,
                                   std::string const& source = "<input>");
  std::string   render_algebra_json(FiniteAlgebra const& alg);

  std::string read_text_file(std::string const& path);

  // "@name" or a file path.
  FiniteAlgebra load_algebra(std::string const& ref);

  Homomorphism parse_hom_json(std::string_view text, std::string const& source,
                              std::string const& base_dir);
  // "@f" and "@g" are the built-in maps B -> A; anything else is a file.
  Homomorphism load_hom(std::string const& ref);

}  // namespace ualg
