#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "support.hpp"
#include "ualg/algebra.hpp"
#include "ualg/library.hpp"

using namespace ualg;

TEST_CASE("algebra: tables are row-major, first argument most significant",
          "[algebra]") {
  auto const B = lib::implication_b();
  // B's table rows are "1 2 3 / 1 1 3 / 1 2 1" in 1-based labels.
  CHECK(B.apply(0, {0, 2}) == 2);
  CHECK(B.apply(0, {1, 1}) == 0);
  CHECK(B.apply(0, {2, 2}) == 0);
  CHECK(B.apply(0, {2, 1}) == 1);
  CHECK(B.label(0) == "1");
  CHECK(B.element("3") == Elem{2});
  CHECK_FALSE(B.element("4").has_value());
}

TEST_CASE("algebra: construction rejects bad tables", "[algebra]") {
  Signature sig({{"mul", 2}});
  CHECK_THROWS_AS(FiniteAlgebra("X", sig, 2, {{0, 1, 0}}), Error);
  CHECK_THROWS_AS(FiniteAlgebra("X", sig, 2, {{0, 1, 0, 2}}), Error);
  CHECK_THROWS_AS(FiniteAlgebra("X", sig, 2, {}), Error);
  CHECK_THROWS_AS(FiniteAlgebra("X", sig, 2, {{0, 1, 0, 0}}, {"a"}), Error);
  CHECK_THROWS_AS(FiniteAlgebra("X", sig, 0, {{}}), Error);
}

TEST_CASE("algebra: built-in library", "[algebra]") {
  for (auto const& name : lib::builtin_names()) {
    auto const a = lib::builtin(name);
    REQUIRE(a.has_value());
    CHECK(a->name() == name);
  }
  CHECK_FALSE(lib::builtin("nope").has_value());
  auto const z3 = lib::cyclic_group(3);
  auto const add = *z3.signature().find("add");
  auto const neg = *z3.signature().find("neg");
  for (Elem a = 0; a < 3; ++a) {
    CHECK(z3.apply(neg, {a}) == (3 - a) % 3);
    for (Elem b = 0; b < 3; ++b) {
      CHECK(z3.apply(add, {a, b}) == (a + b) % 3);
    }
  }
  CHECK(lib::plain_set(4).signature().empty());
}

TEST_CASE("algebra: f and g from B to A are homomorphisms", "[algebra]") {
  auto const f = lib::example_f();
  auto const g = lib::example_g();
  CHECK(is_homomorphism(f));
  CHECK(is_homomorphism(g));
  CHECK(test::map_is_hom(f.dom, f.cod, f.map));
  CHECK(test::map_is_hom(g.dom, g.cod, g.map));
  // A non-homomorphism is reported with a concrete violating tuple.
  Homomorphism bad{f.dom, f.cod, {1, 0, 0}};
  auto const   v = check_homomorphism(bad);
  REQUIRE(v.has_value());
  CHECK(bad.map[f.dom.apply(v->op, v->args)] == v->image_of_result);
  CHECK(v->image_of_result != v->result_of_images);
}

TEST_CASE("algebra: homomorphism enumeration matches brute force",
          "[algebra]") {
  test::Rng rng(7);
  auto const sig = test::small_signature();
  for (int round = 0; round < 40; ++round) {
    auto const a = test::random_algebra(rng, sig, test::uniform(rng, 1, 3));
    auto const b = test::random_algebra(rng, sig, test::uniform(rng, 1, 3));
    std::set<Mapping> expected;
    test::for_each_map(a.size(), b.size(), [&](std::vector<Elem> const& h) {
      if (test::map_is_hom(a, b, h)) {
        expected.insert(h);
      }
    });
    std::set<Mapping> got;
    for (auto const& h : enumerate_homomorphisms(a, b)) {
      got.insert(h.map);
    }
    CHECK(got == expected);
  }
}

TEST_CASE("algebra: products and projections", "[algebra]") {
  std::vector<FiniteAlgebra> fs{lib::implication_a(), lib::implication_b()};
  auto const P = product(fs);
  CHECK(P.size() == 6);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(is_homomorphism(product_projection(P, fs, i)));
  }
  for (Elem x = 0; x < P.size(); ++x) {
    CHECK(encode_product(fs, decode_product(fs, x)) == x);
  }
  // Coordinatewise operation.
  for (Elem x = 0; x < 6; ++x) {
    for (Elem y = 0; y < 6; ++y) {
      auto const cx = decode_product(fs, x);
      auto const cy = decode_product(fs, y);
      auto const cz = decode_product(fs, P.apply(0, {x, y}));
      CHECK(cz[0] == fs[0].apply(0, {cx[0], cy[0]}));
      CHECK(cz[1] == fs[1].apply(0, {cx[1], cy[1]}));
    }
  }
}

TEST_CASE("algebra: generated subalgebras", "[algebra]") {
  auto const z3 = lib::cyclic_group(3);
  std::vector<Elem> none;
  // zero is a constant, so the empty seed already generates {0}.
  CHECK(subalgebra_generated(z3, none) == std::vector<Elem>{0});
  std::vector<Elem> one{1};
  CHECK(subalgebra_generated(z3, one).size() == 3);
  auto const sl = lib::chain_semilattice();
  std::vector<Elem> top{1};
  CHECK(subalgebra_generated(sl, top) == std::vector<Elem>{1});
  auto const sub = make_subalgebra(sl, top, "T");
  CHECK(sub.algebra.size() == 1);
  std::vector<Elem> open{0, 2};
  CHECK_THROWS_AS(make_subalgebra(z3, open), Error);
}

TEST_CASE("property: generated subalgebra is monotone and idempotent",
          "[property]") {
  test::Rng  rng(11);
  auto const sig = test::small_signature();
  for (int round = 0; round < 200; ++round) {
    auto const        a = test::random_algebra(rng, sig, test::uniform(rng, 1, 6));
    std::vector<Elem> s, t;
    for (Elem x = 0; x < a.size(); ++x) {
      auto const pick = test::uniform(rng, 0, 2);
      if (pick >= 1) {
        t.push_back(x);
      }
      if (pick == 2) {
        s.push_back(x);
      }
    }
    auto const gs = subalgebra_generated(a, s);
    auto const gt = subalgebra_generated(a, t);
    CHECK(std::includes(gt.begin(), gt.end(), gs.begin(), gs.end()));
    CHECK(subalgebra_generated(a, gs) == gs);
    CHECK(std::includes(gs.begin(), gs.end(), s.begin(), s.end()));
    // Closed under every operation.
    std::set<Elem> in(gs.begin(), gs.end());
    for (auto x : gs) {
      CHECK(in.count(a.apply(1, {x})));
      for (auto y : gs) {
        CHECK(in.count(a.apply(0, {x, y})));
      }
    }
  }
}

TEST_CASE("property: composition of homomorphisms is a homomorphism",
          "[property]") {
  test::Rng  rng(13);
  auto const sig = test::small_signature();
  int        composed = 0;
  for (int round = 0; round < 100; ++round) {
    auto const a = test::random_algebra(rng, sig, test::uniform(rng, 1, 3));
    auto const b = test::random_algebra(rng, sig, test::uniform(rng, 1, 3));
    auto const c = test::random_algebra(rng, sig, test::uniform(rng, 1, 3));
    auto const ab = enumerate_homomorphisms(a, b);
    auto const bc = enumerate_homomorphisms(b, c);
    for (auto const& f : ab) {
      CHECK(same_map(compose(identity_hom(b), f), f));
      for (auto const& g : bc) {
        auto const gf = compose(g, f);
        CHECK(test::map_is_hom(a, c, gf.map));
        ++composed;
      }
    }
  }
  CHECK(composed > 0);
}
