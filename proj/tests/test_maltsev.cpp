#include <catch_amalgamated.hpp>

#include <map>

#include "support.hpp"
#include "ualg/library.hpp"
#include "ualg/maltsev.hpp"

using namespace ualg;

namespace {
  // Chain identities checked by direct evaluation over x, y, z, without the
  // identity checker.
  bool chain_holds(std::vector<Term> const& w, FiniteAlgebra const& a) {
    auto const n = static_cast<Elem>(a.size());
    for (Elem x = 0; x < n; ++x) {
      for (Elem z = 0; z < n; ++z) {
        std::vector<Elem> xzz{x, z, z}, xxz{x, x, z};
        if (eval_term(w.front(), a, xzz) != x) {
          return false;
        }
        if (eval_term(w.back(), a, xxz) != z) {
          return false;
        }
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
          if (eval_term(w[i], a, xxz) != eval_term(w[i + 1], a, xzz)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Every reflexive, transitive, compatible relation on a, by brute force
  // over all subsets of a^2; true if one of them is not symmetric.
  bool has_asymmetric_preorder(FiniteAlgebra const& a) {
    auto const n     = a.size();
    auto const cells = n * n;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
      test::PairSet r;
      for (std::size_t i = 0; i < cells; ++i) {
        if (bits >> i & 1) {
          r.insert({Elem(i / n), Elem(i % n)});
        }
      }
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x) {
        ok = r.count({x, x}) > 0;
      }
      if (!ok || test::warshall(r, n) != r
          || test::naive_compatible_closure(a, r) != r) {
        continue;
      }
      for (auto [x, y] : r) {
        if (!r.count({y, x})) {
          return true;
        }
      }
    }
    return false;
  }
}  // namespace

TEST_CASE("maltsev: Z3 is 2-permutable", "[maltsev]") {
  auto const z3 = lib::cyclic_group(3);
  auto const v  = find_hm_terms(VarietySpec::generated_by({z3}), 6);
  REQUIRE(v.outcome == PermOutcome::NPermutable);
  CHECK(v.n == 2);
  REQUIRE(v.terms.size() == 1);
  CHECK(chain_holds(v.terms, z3));
  // p(x,y,z) = x - y + z as a function.
  for (Elem x = 0; x < 3; ++x) {
    for (Elem y = 0; y < 3; ++y) {
      for (Elem z = 0; z < 3; ++z) {
        std::vector<Elem> xyz{x, y, z};
        CHECK(eval_term(v.terms[0], z3, xyz) == (x + 3 - y + z) % 3);
      }
    }
  }
}

TEST_CASE("maltsev: A and B generate a 3-permutable class", "[maltsev]") {
  std::vector<FiniteAlgebra> gens{lib::implication_a(), lib::implication_b()};
  auto const v = find_hm_terms(VarietySpec::generated_by(gens), 6);
  REQUIRE(v.outcome == PermOutcome::NPermutable);
  CHECK(v.n == 3);
  CHECK(v.free_size == 6);
  REQUIRE(v.terms.size() == 2);
  for (auto const& g : gens) {
    CHECK(chain_holds(v.terms, g));
  }
  REQUIRE(v.verification.size() == 2);
  for (auto const& cv : v.verification) {
    CHECK(cv.holds);
    CHECK(cv.identities.size() == 3);
  }
  CHECK(v.verification[0].checks[0].assignments == 8);
  CHECK(v.verification[1].checks[0].assignments == 27);
  CHECK(v.chain.size() == 3);

  // The hand-written pair passes the same verifier.
  auto const& sig = gens[0].signature();
  std::vector<Term> mine{parse_ternary("(mul (mul z y) x)", sig),
                         parse_ternary("(mul (mul x y) z)", sig)};
  for (auto const& cv : verify_hm_terms(mine, gens)) {
    CHECK(cv.holds);
  }
  CHECK(chain_holds(mine, gens[1]));
  // No Mal'tsev term: the 2-chain fails for the best candidates.
  CHECK(find_hm_terms(VarietySpec::generated_by(gens), 2).outcome
        == PermOutcome::Unknown);
}

TEST_CASE("maltsev: semilattice is not n-permutable", "[maltsev]") {
  auto const v = find_hm_terms(
      VarietySpec::generated_by({lib::chain_semilattice()}), 6);
  CHECK(v.outcome == PermOutcome::NotPermutable);
  CHECK(v.fixpoint_power >= 1);
  CHECK(v.terms.empty());
}

TEST_CASE("maltsev: resource bounds and presented classes give Unknown",
          "[maltsev]") {
  Limits tight;
  tight.max_elements = 3;
  auto const v = find_hm_terms(
      VarietySpec::generated_by({lib::implication_a(), lib::implication_b()}),
      6, tight);
  CHECK(v.outcome == PermOutcome::Unknown);
  CHECK_FALSE(v.note.empty());
  auto const spec =
      VarietySpec::axiomatised_by(lib::implication_a().signature(), {}, 3);
  CHECK(find_hm_terms(spec, 6).outcome == PermOutcome::Unknown);
}

TEST_CASE("maltsev: commuting congruences", "[maltsev]") {
  auto const B = lib::implication_b();
  auto const w = permutability_counterexample(B, 2);
  REQUIRE(w.has_value());
  auto const rs = compose(w->r, w->s);
  auto const sr = compose(w->s, w->r);
  CHECK(rs.contains(w->witness.first, w->witness.second) == w->in_rs);
  CHECK(sr.contains(w->witness.first, w->witness.second) != w->in_rs);
  CHECK_FALSE(permutability_counterexample(B, 3).has_value());
  CHECK_FALSE(permutability_counterexample(lib::cyclic_group(3), 2));
  // On the semilattice the only congruences are the trivial ones.
  CHECK_FALSE(permutability_counterexample(lib::chain_semilattice(), 2));
  for (auto const& c : candidate_congruences(B)) {
    CHECK(classify_relation(c).equivalence);
    CHECK(is_compatible(c));
  }
}

TEST_CASE("maltsev: preorder scan", "[maltsev]") {
  auto const sl = lib::chain_semilattice();
  auto const s  = preorder_symmetry_scan(sl);
  REQUIRE(s.counterexample.has_value());
  CHECK(test::pair_set(s.counterexample->preorder)
        == test::PairSet{{0, 0}, {0, 1}, {1, 1}});
  CHECK_FALSE(preorder_symmetry_scan(lib::cyclic_group(3)).counterexample);
  CHECK_FALSE(preorder_symmetry_scan(lib::implication_b()).counterexample);
  CHECK_THROWS_AS(preorder_symmetry_scan(lib::plain_set(5), 4),
                  ResourceError);
}

TEST_CASE("property: preorder scan agrees with exhaustive search",
          "[property]") {
  test::Rng  rng(37);
  auto const sig = test::small_signature();
  int        found = 0;
  for (int round = 0; round < 60; ++round) {
    auto const a = test::random_algebra(rng, sig, test::uniform(rng, 1, 3));
    bool const got = preorder_symmetry_scan(a).counterexample.has_value();
    CHECK(got == has_asymmetric_preorder(a));
    found += got;
  }
  CHECK(found > 0);
}

TEST_CASE("maltsev: solution tables", "[maltsev]") {
  auto const A  = lib::implication_a();
  auto const B  = lib::implication_b();
  auto const w1 = parse_ternary("(mul (mul z y) x)", A.signature());
  auto const w2 = parse_ternary("(mul (mul x y) z)", A.signature());
  for (auto const& alg : {A, B}) {
    auto const t = wm_solution_table(alg, w1, w2);
    CHECK(t.member);
    auto const n = static_cast<Elem>(alg.size());
    CHECK(t.rows.size() == std::size_t(n) * n * n);
    auto m = [&](Elem p, Elem q) { return alg.apply(0, {p, q}); };
    for (auto const& r : t.rows) {
      std::vector<Elem> expect;
      for (Elem x = 0; x < n; ++x) {
        if (m(m(r.b, r.a), x) == m(m(r.a, r.b), r.c)
            && m(m(r.b, r.c), x) == m(m(r.c, r.b), r.a)) {
          expect.push_back(x);
        }
      }
      CHECK(r.solutions == expect);
      CHECK(&t.at(r.a, r.b, r.c) == &r);
    }
  }
}

TEST_CASE("maltsev: reference tables in the printed layout", "[maltsev]") {
  auto const A  = lib::implication_a();
  auto const B  = lib::implication_b();
  auto const w1 = parse_ternary("(mul (mul z y) x)", A.signature());
  auto const w2 = parse_ternary("(mul (mul x y) z)", A.signature());
  auto render = [&](FiniteAlgebra const& alg, bool swap_bc) {
    auto const  t = wm_solution_table(alg, w1, w2);
    std::string s;
    for (auto const& k : printed_column_order(alg.size())) {
      auto const& row = swap_bc ? t.at(k[0], k[2], k[1]) : t.at(k[2], k[1], k[0]);
      s += (s.empty() ? "" : " ") + render_solutions(alg, row.solutions);
    }
    return s;
  };
  CHECK(render(A, true) == "1 2 1 1 2 - 1 2");
  CHECK(render(B, true)
        == "1 2 3 1 1 3 1 2 1 2 - - 1 2 3 2 - 2 3 - - 3 3 - 1 2 3");
  // Exchanging a and c leaves the system unchanged, so it cannot account for
  // the printed layout.
  CHECK(render(A, false) != "1 2 1 1 2 - 1 2");
  auto const t = wm_solution_table(B, w1, w2);
  for (Elem a = 0; a < 3; ++a) {
    for (Elem b = 0; b < 3; ++b) {
      for (Elem c = 0; c < 3; ++c) {
        CHECK(t.at(a, b, c).solutions == t.at(c, b, a).solutions);
      }
    }
  }
}

TEST_CASE("maltsev: printed column order", "[maltsev]") {
  auto const cols = printed_column_order(2);
  REQUIRE(cols.size() == 8);
  CHECK(cols[0] == std::array<Elem, 3>{0, 0, 0});
  CHECK(cols[1] == std::array<Elem, 3>{1, 0, 0});
  CHECK(cols[2] == std::array<Elem, 3>{0, 0, 1});
  CHECK(cols[4] == std::array<Elem, 3>{0, 1, 0});
}

TEST_CASE("property: joint epicity when E is generated by the sections",
          "[property]") {
  test::Rng  rng(41);
  auto const sig = test::small_signature();
  int        generated = 0, checked = 0;
  for (int round = 0; round < 120 && checked < 60; ++round) {
    auto const b  = test::random_algebra(rng, sig, test::uniform(rng, 1, 2), "B");
    auto const x  = test::random_algebra(rng, sig, test::uniform(rng, 1, 2), "X");
    auto const y  = test::random_algebra(rng, sig, test::uniform(rng, 1, 2), "Y");
    auto const hx = enumerate_homomorphisms(b, x);
    auto const hy = enumerate_homomorphisms(b, y);
    if (hx.empty() || hy.empty()) {
      continue;
    }
    auto const& h = hx[test::uniform(rng, 0, hx.size() - 1)];
    auto const& k = hy[test::uniform(rng, 0, hy.size() - 1)];
    // A = B x X with f the projection and r = <1, h>; likewise C = B x Y.
    auto side = [&](FiniteAlgebra const& other, Homomorphism const& m) {
      std::vector<FiniteAlgebra> fs{b, other};
      auto const P = product(fs);
      Mapping    sec(b.size());
      for (Elem e = 0; e < b.size(); ++e) {
        sec[e] = encode_product(fs, std::vector<Elem>{e, m(e)});
      }
      return std::pair{product_projection(P, fs, 0),
                       Homomorphism{b, P, sec}};
    };
    auto const [f, r] = side(x, h);
    auto const [g, s] = side(y, k);
    auto const spd    = split_pullback(f, r, g, s);
    auto const& E     = spd.E();
    std::vector<Elem> gens;
    for (auto e : spd.e1.map) {
      gens.push_back(e);
    }
    for (auto e : spd.e2.map) {
      gens.push_back(e);
    }
    bool const is_generated = subalgebra_generated(E, gens).size() == E.size();
    auto const d = test::random_algebra(rng, sig, test::uniform(rng, 1, 3), "D");
    for (auto const& target : {E, spd.A(), d}) {
      auto const je = joint_epicity_check(spd, target);
      if (is_generated) {
        CHECK(je.holds);
      }
      // Oracle: two homomorphisms agreeing on the images, found by brute force.
      std::map<std::vector<Elem>, Mapping> seen;
      bool                                 oracle = true;
      for (auto const& hom : enumerate_homomorphisms(E, target)) {
        std::vector<Elem> key;
        for (auto e : gens) {
          key.push_back(hom(e));
        }
        if (!seen.emplace(key, hom.map).second) {
          oracle = false;
        }
      }
      CHECK(je.holds == oracle);
      if (!je.holds) {
        REQUIRE(je.phi1.has_value());
        CHECK(*je.phi1 != *je.phi2);
      }
      ++checked;
    }
    generated += is_generated;
  }
  CHECK(generated > 0);
  CHECK(checked > 0);
}
