#pragma once

// Internal reflexive graphs, categories, groupoids and pregroupoids inside a
// quasivariety generated by finite algebras, given as finite algebras and
// homomorphisms. The empty signature gives plain finite sets.
//
// Orientation: an element u of C1 is an arrow d(u) -> c(u). A pair (u, v) is
// composable when d(u) = c(v), and m(u, v) is "u after v".

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/closure.hpp"
#include "ualg/relation.hpp"
#include "ualg/split_pullback.hpp"

namespace ualg {

  struct ReflexiveGraph {
    FiniteAlgebra c1;
    FiniteAlgebra c0;
    Homomorphism  d, c, e;
  };

  // Name of the first failing law (hom condition, de = 1, ce = 1).
  std::optional<std::string> check_reflexive_graph(ReflexiveGraph const& g);

  // C1 = C0, d = c = e = 1.
  ReflexiveGraph discrete_graph(FiniteAlgebra const& x);
  // C1 = the congruence as a subalgebra of X^2, d(a,b) = b, c(a,b) = a,
  // e(a) = (a,a). Throws unless the relation is a reflexive compatible one.
  ReflexiveGraph relation_graph(Relation const& r);
  // relation_graph of the full relation.
  ReflexiveGraph pair_graph(FiniteAlgebra const& x);

  // C2 = {(u,v) : d(u) = c(v)} with pi1 = p1, pi2 = p2,
  // e1(u) = (u, e d u), e2(v) = (e c v, v).
  SplitPullback composable_pairs(ReflexiveGraph const& g);

  struct Multiplications {
    std::vector<Mapping> found;
    bool                 complete = true;  // false: node budget ran out
  };

  // Every homomorphism m: C2 -> C1 with m e1 = 1 = m e2, dm = d pi2 and
  // cm = c pi1.
  Multiplications find_multiplications(ReflexiveGraph const& g,
                                       std::size_t max_nodes = 1'000'000);

  struct InternalCategory {
    ReflexiveGraph graph;
    SplitPullback  pairs;
    Mapping        m;  // indexed by elements of pairs.E()

    Elem mul(Elem u, Elem v) const {
      return m[pairs.pair(u, v)];
    }
    bool composable(Elem u, Elem v) const {
      return graph.d(u) == graph.c(v);
    }
  };

  InternalCategory make_internal_category(ReflexiveGraph g, Mapping m);
  // m given on composable pairs of C1 elements.
  InternalCategory make_internal_category(
      ReflexiveGraph g, std::function<Elem(Elem, Elem)> const& mul);

  // Name of the first failing multiplicative-graph law.
  std::optional<std::string> check_multiplicative_graph(
      InternalCategory const& ic);

  // First composable triple (u, v, w) with m(m(u,v),w) != m(u,m(v,w)).
  std::optional<std::array<Elem, 3>> check_category(InternalCategory const& ic);

  // Composable triples as a subalgebra of C1^3.
  Subproduct composable_triples(InternalCategory const& ic);

  struct Cancellability {
    bool left  = true;  // <pi1, m> injective
    bool right = true;  // <m, pi2> injective
    // Two composable pairs with equal images, as (u, v, u2, v2).
    std::optional<std::array<Elem, 4>> left_witness, right_witness;
  };
  Cancellability cancellability_check(InternalCategory const& ic);

  // Name of the first failing groupoid law for t, nullopt if all hold.
  std::optional<std::string> check_groupoid_inverse(InternalCategory const& ic,
                                                    Mapping const&          t);

  // Homomorphism search for t with ct = d, dt = c, m<1,t> = ec, m<t,1> = ed.
  std::optional<Mapping> groupoid_inverse_direct(InternalCategory const& ic);

  struct InverseByRelation {
    // Q = {(u, m(u,v))}; a relation (not merely a span) iff <pi1, m> is
    // injective.
    Relation q;
    bool     jointly_monic = false;
    bool     symmetric     = false;
    std::optional<Mapping> t;
  };
  // If Q is symmetric, t(u) is the q with m(u, q) = e c u; the result is
  // returned only when it passes check_groupoid_inverse.
  InverseByRelation groupoid_inverse_by_relation(InternalCategory const& ic);

  // Pair groupoid: pair graph with m((a,b),(b,c)) = (a,c).
  InternalCategory pair_groupoid(FiniteAlgebra const& x);
  InternalCategory relation_groupoid(Relation const& congruence);

  // One object, arrows = elements of a monoid given by an n x n table
  // (row = left factor) with identity `unit`; empty signature throughout.
  InternalCategory one_object_category(std::string           name,
                                       std::size_t           n,
                                       std::vector<Elem>     table,
                                       Elem                  unit);

  ////////////////////////////////////////////////////////////////////////
  // Pregroupoids
  ////////////////////////////////////////////////////////////////////////

  struct Span {
    Homomorphism d;  // D -> D0
    Homomorphism c;  // D -> D0'

    FiniteAlgebra const& D() const {
      return d.dom;
    }
  };

  // Throws unless d, c are homomorphisms out of one algebra.
  Span make_span(Homomorphism d, Homomorphism c);
  // Both legs into a one-element algebra of the same signature.
  Span trivial_span(FiniteAlgebra const& x);
  // D = X^2, d = second projection, c = first projection.
  Span pair_span(FiniteAlgebra const& x);

  bool jointly_injective(Span const& s);

  struct Pregroupoid {
    Span       span;
    Subproduct triples;  // (x,y,z) with d x = d y, c y = c z
    Mapping    p;        // indexed by triples.algebra

    Elem apply(Elem x, Elem y, Elem z) const {
      return p[triples.at({x, y, z})];
    }
  };

  Subproduct span_triples(Span const& s);
  Pregroupoid make_pregroupoid(Span                                       s,
                               std::function<Elem(Elem, Elem, Elem)> const& p);

  struct PregroupoidViolation {
    std::string         law;
    std::array<Elem, 3> triple{};
  };
  std::optional<PregroupoidViolation> check_pregroupoid(Pregroupoid const& pg);

  struct InterchangeResult {
    bool        holds          = true;
    std::size_t configurations = 0;
    // rows (x1,y1,z1), (x2,y2,z2), (x3,y3,z3)
    std::optional<std::array<Elem, 9>> witness;
  };

  // Every 3x3 arrangement whose rows and columns are composable triples,
  // checked for p(p(x1,x2,x3),p(y1,y2,y3),p(z1,z2,z3)) =
  //             p(p(x1,y1,z1),p(x2,y2,z2),p(x3,y3,z3)).
  InterchangeResult interchange_check(Pregroupoid const& pg);

  struct PerturbedPregroupoid {
    Pregroupoid         pregroupoid;
    std::array<Elem, 3> triple{};
    Elem                old_value = 0;
    Elem                new_value = 0;
    InterchangeResult   interchange;
  };

  // Changes one p entry at a time until the result is still a pregroupoid but
  // breaks the interchange law. nullopt when no single change does.
  std::optional<PerturbedPregroupoid> perturb_for_interchange_failure(
      Pregroupoid const& pg);

  ////////////////////////////////////////////////////////////////////////
  // Fill-ins over a split pullback
  ////////////////////////////////////////////////////////////////////////

  enum class SpanFlavor { Span, Relation, StrongRelation };
  enum class FillCount { None, Unique, Multiple };

  struct FillIn {
    FillCount            outcome = FillCount::None;
    std::vector<Mapping> fills;  // at most two
  };

  // phi: E -> D with phi e1 = alpha, phi e2 = gamma, d phi = d gamma pi2,
  // c phi = c alpha pi1. Throws Error naming the first failing precondition
  // (alpha r = beta = gamma s, d alpha = d beta f, c gamma = c beta g, and
  // joint injectivity of (d, c) for the relation flavours).
  FillIn condition_v_check(SplitPullback const& spd, Span const& span,
                           Homomorphism const& alpha, Homomorphism const& beta,
                           Homomorphism const& gamma, SpanFlavor flavor,
                           std::size_t max_nodes = 1'000'000);

  struct PushoutFailure {
    std::string          algebra;
    Mapping              alpha, gamma;
    std::vector<Mapping> fills;  // none or two of them
  };

  struct PushoutCheck {
    bool                          holds = true;
    std::size_t                   pairs = 0;  // (alpha, gamma) examined
    std::optional<PushoutFailure> failure;
  };

  // For each D in the battery and each alpha: A -> D, gamma: C -> D with
  // alpha r = gamma s, exactly one phi with phi e1 = alpha, phi e2 = gamma.
  PushoutCheck pushout_of_sections_check(
      SplitPullback const& spd, std::vector<FiniteAlgebra> const& battery,
      std::size_t max_nodes = 1'000'000);

  ////////////////////////////////////////////////////////////////////////
  // Instance generators
  ////////////////////////////////////////////////////////////////////////

  // A = C = X^2, B = X, f = g = first projection, r = s = diagonal.
  SplitPullback diagonal_split_pullback(FiniteAlgebra const& x);

  // Kernel pairs of the endomorphisms of y (distinct ones), each as a
  // subalgebra of y^2 with legs d = second projection, c = first projection.
  std::vector<Span> kernel_pair_spans(FiniteAlgebra const& y);

  struct ConditionVInstance {
    Span         span;
    Homomorphism alpha, beta, gamma;
  };

  // Up to per_span instances (alpha, beta, gamma) satisfying the
  // preconditions of condition_v_check, sampled reproducibly from seed.
  std::vector<ConditionVInstance> condition_v_instances(
      SplitPullback const& spd, std::vector<Span> const& spans,
      std::size_t per_span, std::uint64_t seed);

}  // namespace ualg
