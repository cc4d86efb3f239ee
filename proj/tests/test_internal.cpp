#include <catch_amalgamated.hpp>

#include "support.hpp"
#include "ualg/internal.hpp"
#include "ualg/library.hpp"
#include "ualg/maltsev.hpp"

using namespace ualg;

namespace {
  std::vector<FiniteAlgebra> small_builtins() {
    std::vector<FiniteAlgebra> out;
    for (auto const& name : lib::builtin_names()) {
      auto a = *lib::builtin(name);
      if (a.size() <= 3) {
        out.push_back(a);
      }
    }
    return out;
  }

  // The arrow (a, b) of a relation graph: codomain a, domain b.
  std::pair<Elem, Elem> ends(ReflexiveGraph const& g, Elem u) {
    return {g.c(u), g.d(u)};
  }
}  // namespace

TEST_CASE("internal: reflexive graphs", "[internal]") {
  auto const x = lib::implication_b();
  for (auto const& g : {discrete_graph(x), pair_graph(x),
                        relation_graph(kernel_pair(lib::example_f()))}) {
    CHECK_FALSE(check_reflexive_graph(g).has_value());
  }
  auto const pg = pair_graph(x);
  CHECK(pg.c1.size() == 9);
  for (Elem a = 0; a < 3; ++a) {
    CHECK(ends(pg, pg.e(a)) == std::pair<Elem, Elem>{a, a});
  }
  Relation nonrefl(x, x);
  nonrefl.insert(0, 1);
  CHECK_THROWS_AS(relation_graph(nonrefl), Error);
}

TEST_CASE("internal: composable pairs", "[internal]") {
  auto const g  = pair_graph(lib::implication_a());
  auto const c2 = composable_pairs(g);
  CHECK(c2.E().size() == 8);
  for (auto const& t : c2.pullback.tuples) {
    CHECK(g.d(t[0]) == g.c(t[1]));
  }
  CHECK_FALSE(check_split_pullback(c2).has_value());
}

TEST_CASE("internal: pair groupoids on small built-ins", "[internal]") {
  for (auto const& x : small_builtins()) {
    INFO(x.name());
    auto const g  = pair_graph(x);
    auto const ms = find_multiplications(g);
    REQUIRE(ms.found.size() == 1);
    CHECK(ms.complete);
    auto const ic = make_internal_category(g, ms.found[0]);
    CHECK_FALSE(check_multiplicative_graph(ic).has_value());
    CHECK_FALSE(check_category(ic).has_value());
    auto const cc = cancellability_check(ic);
    CHECK(cc.left);
    CHECK(cc.right);
    auto const direct = groupoid_inverse_direct(ic);
    auto const route  = groupoid_inverse_by_relation(ic);
    REQUIRE(direct.has_value());
    REQUIRE(route.t.has_value());
    CHECK(*direct == *route.t);
    CHECK(route.jointly_monic);
    CHECK(route.symmetric);
    for (Elem u = 0; u < g.c1.size(); ++u) {
      auto const [a, b] = ends(g, u);
      CHECK(ends(g, (*direct)[u]) == std::pair<Elem, Elem>{b, a});
      // m((a,b),(b,c)) = (a,c)
      for (Elem v = 0; v < g.c1.size(); ++v) {
        if (ic.composable(u, v)) {
          CHECK(ends(g, ic.mul(u, v))
                == std::pair<Elem, Elem>{a, ends(g, v).second});
        }
      }
    }
    CHECK_FALSE(check_groupoid_inverse(ic, *direct).has_value());
  }
}

TEST_CASE("internal: one-object category of the meet monoid", "[internal]") {
  auto const ic = one_object_category("M", 2, {0, 0, 0, 1}, 1);
  CHECK_FALSE(check_category(ic).has_value());
  auto const cc = cancellability_check(ic);
  CHECK_FALSE(cc.left);
  CHECK_FALSE(cc.right);
  REQUIRE(cc.left_witness.has_value());
  auto const w = *cc.left_witness;
  CHECK(w[0] == w[2]);
  CHECK(ic.mul(w[0], w[1]) == ic.mul(w[2], w[3]));
  CHECK_FALSE(groupoid_inverse_direct(ic).has_value());
  CHECK_FALSE(groupoid_inverse_by_relation(ic).t.has_value());
  // Z2 as a monoid is a groupoid.
  auto const z2 = one_object_category("Z2", 2, {0, 1, 1, 0}, 0);
  auto const t  = groupoid_inverse_direct(z2);
  REQUIRE(t.has_value());
  CHECK(*t == Mapping{0, 1});
  CHECK(groupoid_inverse_by_relation(z2).t == t);
  CHECK_THROWS_AS(one_object_category("bad", 2, {0, 0, 0}, 0), Error);
  // 0 is not an identity for meet: the unit laws fail.
  auto const nonunit = one_object_category("M", 2, {0, 0, 0, 1}, 0);
  CHECK(check_multiplicative_graph(nonunit).has_value());
}

TEST_CASE("internal: non-associative multiplication is caught",
          "[internal]") {
  // Unit 0; distinct non-units multiply to 1, equal ones to 0.
  auto const g = one_object_category("Z3", 3, {0, 1, 2, 1, 2, 0, 2, 0, 1}, 0)
                     .graph;
  auto const bad = make_internal_category(g, [](Elem u, Elem v) {
    if (u == 0) {
      return v;
    }
    if (v == 0) {
      return u;
    }
    return u == v ? Elem{0} : Elem{1};
  });
  CHECK_FALSE(check_multiplicative_graph(bad).has_value());
  auto const trip = check_category(bad);
  REQUIRE(trip.has_value());
  auto const [x, y, z] = *trip;
  CHECK(bad.mul(bad.mul(x, y), z) != bad.mul(x, bad.mul(y, z)));
}

TEST_CASE("internal: relation groupoid of a congruence", "[internal]") {
  auto const ic = relation_groupoid(kernel_pair(lib::example_f()));
  CHECK(ic.graph.c1.size() == 5);
  CHECK_FALSE(check_category(ic).has_value());
  CHECK(groupoid_inverse_direct(ic).has_value());
}

TEST_CASE("internal: discrete graph is a groupoid with t = 1",
          "[internal]") {
  auto const g  = discrete_graph(lib::cyclic_group(3));
  auto const ms = find_multiplications(g);
  REQUIRE(ms.found.size() == 1);
  auto const ic = make_internal_category(g, ms.found[0]);
  auto const t  = groupoid_inverse_direct(ic);
  REQUIRE(t.has_value());
  CHECK(*t == Mapping{0, 1, 2});
}

TEST_CASE("internal: Mal'tsev pregroupoids satisfy interchange",
          "[internal]") {
  for (std::size_t n : {2, 3}) {
    auto const z = lib::cyclic_group(n);
    auto const pg = make_pregroupoid(trivial_span(z), [n](Elem x, Elem y, Elem w) {
      return static_cast<Elem>((x + n - y + w) % n);
    });
    CHECK_FALSE(check_pregroupoid(pg).has_value());
    auto const ic = interchange_check(pg);
    CHECK(ic.holds);
    CHECK(ic.configurations == checked_pow(n, 9));
  }
}

TEST_CASE("internal: pair-span pregroupoid", "[internal]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const x    = lib::plain_set(n);
    auto const span = pair_span(x);
    auto const& D   = span.D();
    // D = X^2 with d = second, c = first; q((a,b),(c,b),(c,e)) = (a,e).
    auto const pg = make_pregroupoid(span, [&](Elem p, Elem, Elem r) {
      return static_cast<Elem>(span.c(p) * n + span.d(r));
    });
    CHECK(D.size() == n * n);
    CHECK_FALSE(check_pregroupoid(pg).has_value());
    auto const ic = interchange_check(pg);
    CHECK(ic.holds);
    CHECK(ic.configurations > 0);
  }
}

TEST_CASE("internal: pregroupoid law violations are located",
          "[internal]") {
  auto const z3 = lib::cyclic_group(3);
  // x + y + z fails p(x,x,z) = z.
  auto const pg = make_pregroupoid(trivial_span(z3), [](Elem x, Elem y, Elem w) {
    return static_cast<Elem>((x + y + w) % 3);
  });
  auto const v = check_pregroupoid(pg);
  REQUIRE(v.has_value());
  CHECK_FALSE(v->law.empty());
}

TEST_CASE("internal: a perturbed pregroupoid breaks interchange",
          "[internal]") {
  // x - y + z on a bare 3-element set; entries with x, y, z distinct are free
  // as far as the pregroupoid laws go.
  auto const x  = lib::plain_set(3);
  auto const pg = make_pregroupoid(trivial_span(x), [](Elem a, Elem b, Elem c) {
    return static_cast<Elem>((a + 3 - b + c) % 3);
  });
  REQUIRE(interchange_check(pg).holds);
  auto const pert = perturb_for_interchange_failure(pg);
  REQUIRE(pert.has_value());
  CHECK_FALSE(check_pregroupoid(pert->pregroupoid).has_value());
  CHECK_FALSE(pert->interchange.holds);
  REQUIRE(pert->interchange.witness.has_value());
  CHECK(pert->old_value != pert->new_value);
  auto const& w = *pert->interchange.witness;
  auto const& q = pert->pregroupoid;
  CHECK(q.apply(q.apply(w[0], w[3], w[6]), q.apply(w[1], w[4], w[7]),
                q.apply(w[2], w[5], w[8]))
        != q.apply(q.apply(w[0], w[1], w[2]), q.apply(w[3], w[4], w[5]),
                   q.apply(w[6], w[7], w[8])));
}

TEST_CASE("internal: condition (v) over the Z3 ambient", "[internal]") {
  auto const z3  = lib::cyclic_group(3);
  auto const spd = diagonal_split_pullback(z3);
  CHECK_FALSE(check_split_pullback(spd).has_value());
  std::vector<FiniteAlgebra> sq{z3, z3};
  auto const spans = kernel_pair_spans(product(sq));
  REQUIRE_FALSE(spans.empty());
  for (auto const& s : spans) {
    CHECK(jointly_injective(s));
  }
  auto const insts = condition_v_instances(spd, spans, 4, 5);
  REQUIRE_FALSE(insts.empty());
  for (auto const& in : insts) {
    auto const r = condition_v_check(spd, in.span, in.alpha, in.beta,
                                     in.gamma, SpanFlavor::Relation);
    CHECK(r.outcome == FillCount::Unique);
    REQUIRE(r.fills.size() == 1);
    auto const& phi = r.fills[0];
    for (Elem a = 0; a < spd.A().size(); ++a) {
      CHECK(phi[spd.e1(a)] == in.alpha(a));
    }
    for (Elem c = 0; c < spd.C().size(); ++c) {
      CHECK(phi[spd.e2(c)] == in.gamma(c));
    }
  }
}

TEST_CASE("internal: condition (v) fails for spans of plain sets",
          "[internal]") {
  auto const s2  = lib::plain_set(2);
  auto const spd = diagonal_split_pullback(s2);
  std::vector<Span> spans{trivial_span(s2)};
  auto const insts = condition_v_instances(spd, spans, 16, 3);
  REQUIRE_FALSE(insts.empty());
  int multiple = 0;
  for (auto const& in : insts) {
    auto const r = condition_v_check(spd, in.span, in.alpha, in.beta,
                                     in.gamma, SpanFlavor::Span);
    multiple += r.outcome == FillCount::Multiple;
  }
  CHECK(multiple > 0);
  // The relation flavours insist on joint injectivity.
  auto const& in = insts.front();
  CHECK_THROWS_AS(condition_v_check(spd, in.span, in.alpha, in.beta, in.gamma,
                                    SpanFlavor::Relation),
                  Error);
}

TEST_CASE("internal: pushout of sections", "[internal]") {
  auto const z3 = lib::cyclic_group(3);
  auto const ok = pushout_of_sections_check(diagonal_split_pullback(z3),
                                            {z3, lib::cyclic_group(2)});
  CHECK(ok.holds);
  CHECK(ok.pairs > 0);
  auto const s2  = lib::plain_set(2);
  auto const bad = pushout_of_sections_check(diagonal_split_pullback(s2), {s2});
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.failure.has_value());
  CHECK(bad.failure->fills.size() != 1);
}
