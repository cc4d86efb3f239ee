#pragma once

// Pullback of a split epimorphism along a split epimorphism:
//
//        p2
//     E ----> C          fr = 1_B = gs,  p1 e1 = 1_A,  p2 e2 = 1_C
//   p1| ^e1 e2^ |g       g p2 = f p1,  p1 e2 = r g,  e1 r = e2 s,
//     v |     | v s      p2 e1 = s f
//     A ----> B
//        f r
//
// E is the subalgebra {(a, c) : f(a) = g(c)} of A x C.

#include <optional>
#include <string>

#include "ualg/algebra.hpp"
#include "ualg/closure.hpp"

namespace ualg {

  struct SplitPullback {
    Homomorphism f, r, g, s;
    Homomorphism p1, p2, e1, e2;
    Subproduct   pullback;

    FiniteAlgebra const& A() const {
      return f.dom;
    }
    FiniteAlgebra const& B() const {
      return f.cod;
    }
    FiniteAlgebra const& C() const {
      return g.dom;
    }
    FiniteAlgebra const& E() const {
      return pullback.algebra;
    }
    Elem pair(Elem a, Elem c) const {
      return pullback.at({a, c});
    }
  };

  // Throws Error naming the first section equation that fails.
  SplitPullback split_pullback(Homomorphism const& f, Homomorphism const& r,
                               Homomorphism const& g, Homomorphism const& s);

  // Name of the first of the eight square identities (or hom condition) that
  // fails, nullopt if the diagram is a double split epimorphism.
  std::optional<std::string> check_split_pullback(SplitPullback const& spd);

}  // namespace ualg
