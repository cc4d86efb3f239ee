#pragma once

// Subalgebra generation inside a (possibly huge, never materialised) product of
// finite algebras, remembering for every element a term over the seeds that
// produces it. Free algebras, compatible relations and the witness extraction
// for Hagemann-Mitschke terms are all built on this.

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/term.hpp"

namespace ualg {

  struct VecHash {
    std::size_t operator()(std::vector<Elem> const& v) const noexcept;
  };

  struct Closure {
    // One entry per coordinate; all share a signature.
    std::vector<FiniteAlgebra> coordinates;
    // Elements in discovery order: seeds first, then by depth.
    std::vector<std::vector<Elem>> points;
    // witnesses[i] is a term over the seeds (variable j = seed j) evaluating
    // coordinatewise to points[i]. Minimal depth; among equal depths the first
    // candidate in (operation index, argument discovery indices) order wins.
    std::vector<Term>        witnesses;
    std::vector<std::size_t> depth;
    std::unordered_map<std::vector<Elem>, std::size_t, VecHash> index;

    std::size_t size() const noexcept {
      return points.size();
    }
    std::optional<std::size_t> find(std::vector<Elem> const& p) const;
  };

  // Throws ResourceError (with the partial size) once more than
  // limits.max_elements points have been produced.
  Closure generate_closure(std::vector<FiniteAlgebra>            coordinates,
                           std::vector<std::vector<Elem>> const& seeds,
                           Limits const&                         limits = {});

  // Materialises the closure as an algebra whose element i is points[i].
  FiniteAlgebra closure_algebra(Closure const& cl, std::string name,
                                Limits const& limits = {});

  // A subalgebra of a product given as an explicit, operation-closed list of
  // tuples; element i of `algebra` is tuples[i].
  struct Subproduct {
    FiniteAlgebra                  algebra;
    std::vector<FiniteAlgebra>     factors;
    std::vector<std::vector<Elem>> tuples;
    std::unordered_map<std::vector<Elem>, Elem, VecHash> index;

    std::optional<Elem> find(std::vector<Elem> const& t) const;
    Elem                at(std::vector<Elem> const& t) const;
    Homomorphism        projection(std::size_t i) const;
  };

  // Throws Error if the tuples are not closed under the operations.
  Subproduct make_subproduct(std::string                    name,
                             std::vector<FiniteAlgebra>     factors,
                             std::vector<std::vector<Elem>> tuples,
                             Limits const&                  limits = {});

  // All tuples of factors (lexicographic) satisfying pred.
  template <typename Pred>
  std::vector<std::vector<Elem>> filter_tuples(
      std::vector<FiniteAlgebra> const& factors, Pred&& pred) {
    std::vector<std::vector<Elem>> out;
    std::vector<Elem>              t(factors.size(), 0);
    while (true) {
      if (pred(std::as_const(t))) {
        out.push_back(t);
      }
      std::size_t j = t.size();
      while (j > 0 && ++t[j - 1] == factors[j - 1].size()) {
        t[j - 1] = 0;
        --j;
      }
      if (j == 0) {
        break;
      }
    }
    return out;
  }

}  // namespace ualg
