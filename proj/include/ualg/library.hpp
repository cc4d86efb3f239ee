#pragma once

// Built-in algebras, addressable from the command line as @name.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ualg/algebra.hpp"

namespace ualg::lib {

  // The two implication algebras, binary operation "mul", labels "1".."n".
  FiniteAlgebra implication_a();
  FiniteAlgebra implication_b();

  // Z_n with add (binary), neg (unary), zero (nullary).
  FiniteAlgebra cyclic_group(std::size_t n);

  // ({0,1}, meet), operation "meet".
  FiniteAlgebra chain_semilattice();

  // n-element set, empty signature.
  FiniteAlgebra plain_set(std::size_t n);

  // One-element algebra of the given signature.
  FiniteAlgebra trivial_algebra(Signature const& sig, std::string name = "1");

  // The maps B -> A with f(1) = f(2) = 1, f(3) = 2 and g(1) = g(3) = 1,
  // g(2) = 2.
  Homomorphism example_f();
  Homomorphism example_g();

  // A, B, Z2, Z3, SL2, set1 .. set9.
  std::vector<std::string>     builtin_names();
  std::optional<FiniteAlgebra> builtin(std::string_view name);

}  // namespace ualg::lib
