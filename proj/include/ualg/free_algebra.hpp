#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/closure.hpp"
#include "ualg/term.hpp"

namespace ualg {

  // A class of algebras: either the quasivariety generated by finitely many
  // finite algebras, or one axiomatised by (quasi-)identities, for which only
  // bounded term searches make sense.
  struct VarietySpec {
    Signature                  signature;
    std::vector<FiniteAlgebra> generators;
    std::vector<QuasiIdentity> axioms;
    std::size_t                depth_bound = 0;

    bool is_generated() const noexcept {
      return !generators.empty();
    }

    static VarietySpec generated_by(std::vector<FiniteAlgebra> algs);
    static VarietySpec axiomatised_by(Signature                  sig,
                                      std::vector<QuasiIdentity> axioms,
                                      std::size_t                depth_bound);
  };

  struct FreeAlgebra {
    VarietySpec   spec;
    std::size_t   rank = 0;
    FiniteAlgebra algebra;
    // Element i of `algebra`, as the tuple of its values: for each generating
    // algebra A_i and each assignment of the generators into A_i (lexicographic,
    // first generator most significant), one value of A_i.
    std::vector<std::vector<Elem>> vectors;
    std::vector<Term>              witnesses;
    std::vector<Elem>              generators;
    Closure                        closure;

    std::optional<Elem> find(std::vector<Elem> const& v) const;
    // Evaluation vector of an arbitrary term over the generators.
    std::vector<Elem> evaluate(Term const& t) const;
  };

  // The free algebra on k generators of the quasivariety generated by
  // spec.generators: the subalgebra of prod_i A_i^(A_i^k) generated by the
  // k projection vectors.
  FreeAlgebra free_algebra(VarietySpec const& spec, std::size_t k,
                           Limits const& limits = {});

}  // namespace ualg
