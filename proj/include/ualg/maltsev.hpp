#pragma once

// Decision procedures for Mal'tsev-type conditions on finitely generated
// quasivarieties: n-permutability with witness terms, commuting congruences,
// symmetry of compatible preorders, and the weakly Mal'tsev quasi-identity.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/free_algebra.hpp"
#include "ualg/relation.hpp"
#include "ualg/split_pullback.hpp"
#include "ualg/term.hpp"

namespace ualg {

  ////////////////////////////////////////////////////////////////////////
  // n-permutability
  ////////////////////////////////////////////////////////////////////////

  // w1(x,z,z) = x,  wi(x,x,z) = w(i+1)(x,z,z),  w(n-1)(x,x,z) = z
  // as identities over the variables x, y, z.
  std::vector<Identity> hm_chain_identities(std::vector<Term> const& terms);

  struct ChainVerification {
    std::string                algebra;
    std::vector<Identity>      identities;
    std::vector<IdentityCheck> checks;
    bool                       holds = true;
  };

  std::vector<ChainVerification> verify_hm_terms(
      std::vector<Term> const& terms, std::vector<FiniteAlgebra> const& algs);

  enum class PermOutcome { NPermutable, NotPermutable, Unknown };

  struct PermutabilityVerdict {
    PermOutcome       outcome = PermOutcome::Unknown;
    std::size_t       n       = 0;
    std::vector<Term> terms;
    // z = chain[0] R chain[1] R ... R chain[n-1] = x in the free algebra.
    std::vector<Elem>        chain;
    std::vector<std::string> chain_labels;  // witness terms over x, z
    // NotPermutable: R^k = R^(k+1) and (z,x) not in R^k.
    std::size_t fixpoint_power = 0;

    std::size_t              free_size = 0;
    std::vector<std::size_t> power_sizes;  // |R^1|, |R^2|, ...
    std::vector<ChainVerification> verification;
    std::string                    note;  // reason for Unknown
  };

  // Least n <= max_n such that the quasivariety is n-permutable, with terms.
  PermutabilityVerdict find_hm_terms(VarietySpec const& spec,
                                     std::size_t        max_n,
                                     Limits const&      limits = {});

  struct PermutabilityCounterexample {
    Relation r;
    Relation s;
    Pair     witness;
    // true: witness in (R,S)_n but not (S,R)_n; false: the other way round.
    bool in_rs = false;
  };

  // Candidate congruences: kernels of homomorphisms from alg into alg and
  // into each target, then principal congruences Cg(a,b) for a < b.
  std::vector<Relation> candidate_congruences(
      FiniteAlgebra const& alg, std::vector<FiniteAlgebra> const& targets = {});

  // The witness is the least pair in the symmetric difference.
  std::optional<PermutabilityCounterexample> chains_differ(Relation const& r,
                                                           Relation const& s,
                                                           std::size_t     n);

  std::optional<PermutabilityCounterexample> permutability_counterexample(
      FiniteAlgebra const& alg, std::size_t n,
      std::vector<FiniteAlgebra> const& targets = {});

  ////////////////////////////////////////////////////////////////////////
  // Preorders
  ////////////////////////////////////////////////////////////////////////

  struct PreorderCounterexample {
    Relation preorder;
    Pair     asymmetric;  // in the preorder, reversed pair is not
  };

  struct PreorderScan {
    std::optional<PreorderCounterexample> counterexample;
    std::size_t                           seeds     = 0;
    std::size_t                           preorders = 0;  // distinct ones seen
  };

  // For each pair (a,b) with a != b, the least compatible preorder containing
  // it. A non-symmetric compatible preorder exists iff one of these is
  // non-symmetric, so single seeds suffice. Throws ResourceError when the
  // carrier exceeds max_carrier.
  PreorderScan preorder_symmetry_scan(FiniteAlgebra const& alg,
                                      std::size_t max_carrier = 64);

  ////////////////////////////////////////////////////////////////////////
  // Weakly Mal'tsev quasi-identity
  ////////////////////////////////////////////////////////////////////////

  struct WmRow {
    Elem              a, b, c;
    std::vector<Elem> solutions;
  };

  struct WmTable {
    FiniteAlgebra      algebra;
    std::vector<WmRow> rows;  // (a,b,c) lexicographic, a most significant
    bool               member = true;  // every solution set has <= 1 element

    WmRow const& at(Elem a, Elem b, Elem c) const;
  };

  // Solutions x of w1(x,a,b) = w2(a,b,c) and w2(b,c,x) = w1(a,b,c).
  WmTable wm_solution_table(FiniteAlgebra const& alg, Term const& w1,
                            Term const& w2);

  // One table cell as text: "-" for no solution, labels joined by "/".
  std::string render_solutions(FiniteAlgebra const&     alg,
                               std::vector<Elem> const& sols);

  // Column order of a printed table with b slowest, c next, a fastest.
  std::vector<std::array<Elem, 3>> printed_column_order(std::size_t n);

  ////////////////////////////////////////////////////////////////////////
  // Joint epimorphicity of the pullback injections
  ////////////////////////////////////////////////////////////////////////

  struct JointEpicity {
    bool                   holds = true;
    std::optional<Mapping> phi1, phi2;  // distinct, equal on Im e1 and Im e2
    std::size_t            homs = 0;
  };

  JointEpicity joint_epicity_check(SplitPullback const& spd,
                                   FiniteAlgebra const& d,
                                   std::size_t max_nodes = Limits{}.max_search_nodes);

}  // namespace ualg
