#pragma once

// Random instances and brute-force oracles shared by the test files. The
// oracles deliberately avoid the library's own machinery: they work on plain
// vectors and sets so that a bug in the library cannot hide in both sides.

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/relation.hpp"
#include "ualg/term.hpp"

namespace test {

  using ualg::Elem;
  using ualg::FiniteAlgebra;

  using Rng = std::mt19937_64;

  inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  }

  // Signature with one binary and one unary operation.
  inline ualg::Signature small_signature() {
    return ualg::Signature({{"f", 2}, {"g", 1}});
  }

  inline FiniteAlgebra random_algebra(Rng& rng, ualg::Signature const& sig,
                                      std::size_t n, std::string name = "R") {
    std::vector<std::vector<Elem>> tables;
    for (auto const& op : sig.ops()) {
      std::size_t len = 1;
      for (std::size_t i = 0; i < op.arity; ++i) {
        len *= n;
      }
      std::vector<Elem> t(len);
      for (auto& v : t) {
        v = static_cast<Elem>(uniform(rng, 0, n - 1));
      }
      tables.push_back(std::move(t));
    }
    return FiniteAlgebra(std::move(name), sig, n, std::move(tables));
  }

  inline ualg::Term random_term(Rng& rng, ualg::Signature const& sig,
                                std::size_t vars, std::size_t depth) {
    if (depth == 0 || uniform(rng, 0, 3) == 0) {
      return ualg::Term::var(uniform(rng, 0, vars - 1));
    }
    auto const        op = uniform(rng, 0, sig.size() - 1);
    std::vector<ualg::Term> args;
    for (std::size_t i = 0; i < sig[op].arity; ++i) {
      args.push_back(random_term(rng, sig, vars, depth - 1));
    }
    return ualg::Term::apply(sig, op, std::move(args));
  }

  using PairSet = std::set<std::pair<Elem, Elem>>;

  inline PairSet pair_set(ualg::Relation const& r) {
    PairSet out;
    for (auto p : r.pairs()) {
      out.insert(p);
    }
    return out;
  }

  inline ualg::Relation random_relation(Rng& rng, FiniteAlgebra const& a,
                                        double density) {
    ualg::Relation                   r(a, a);
    std::bernoulli_distribution      coin(density);
    for (Elem x = 0; x < a.size(); ++x) {
      for (Elem y = 0; y < a.size(); ++y) {
        if (coin(rng)) {
          r.insert(x, y);
        }
      }
    }
    return r;
  }

  inline PairSet compose_sets(PairSet const& r, PairSet const& s) {
    PairSet out;
    for (auto [x, y] : r) {
      for (auto [y2, z] : s) {
        if (y == y2) {
          out.insert({x, z});
        }
      }
    }
    return out;
  }

  // Warshall on a boolean matrix.
  inline PairSet warshall(PairSet const& r, std::size_t n) {
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (auto [x, y] : r) {
      m[x][y] = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (m[i][k] && m[k][j]) {
            m[i][j] = true;
          }
        }
      }
    }
    PairSet out;
    for (Elem i = 0; i < n; ++i) {
      for (Elem j = 0; j < n; ++j) {
        if (m[i][j]) {
          out.insert({i, j});
        }
      }
    }
    return out;
  }

  // Naive closure of a pair set under the operations of `a` acting
  // coordinatewise, by repeated sweeps until nothing changes.
  inline PairSet naive_compatible_closure(FiniteAlgebra const& a,
                                          PairSet              r) {
    auto const& sig     = a.signature();
    bool        changed = true;
    while (changed) {
      changed = false;
      std::vector<std::pair<Elem, Elem>> cur(r.begin(), r.end());
      for (std::size_t op = 0; op < sig.size(); ++op) {
        auto const               k = sig[op].arity;
        std::vector<std::size_t> idx(k, 0);
        if (k > 0 && cur.empty()) {
          continue;
        }
        while (true) {
          std::vector<Elem> xs(k), ys(k);
          for (std::size_t i = 0; i < k; ++i) {
            xs[i] = cur[idx[i]].first;
            ys[i] = cur[idx[i]].second;
          }
          auto const p = std::pair{a.apply(op, xs), a.apply(op, ys)};
          changed      = r.insert(p).second || changed;
          std::size_t j = k;
          while (j > 0 && ++idx[j - 1] == cur.size()) {
            idx[j - 1] = 0;
            --j;
          }
          if (j == 0) {
            break;
          }
        }
      }
    }
    return r;
  }

  // Brute-force homomorphism test on a plain map.
  inline bool map_is_hom(FiniteAlgebra const& a, FiniteAlgebra const& b,
                         std::vector<Elem> const& h) {
    auto const& sig = a.signature();
    for (std::size_t op = 0; op < sig.size(); ++op) {
      auto const        k = sig[op].arity;
      std::vector<Elem> xs(k, 0);
      while (true) {
        std::vector<Elem> hx(k);
        for (std::size_t i = 0; i < k; ++i) {
          hx[i] = h[xs[i]];
        }
        if (h[a.apply(op, xs)] != b.apply(op, hx)) {
          return false;
        }
        std::size_t j = k;
        while (j > 0 && ++xs[j - 1] == a.size()) {
          xs[j - 1] = 0;
          --j;
        }
        if (j == 0) {
          break;
        }
      }
    }
    return true;
  }

  // Every map a -> b, in lexicographic order, handed to visit.
  inline void for_each_map(std::size_t n, std::size_t m,
                           std::function<void(std::vector<Elem> const&)> const& visit) {
    std::vector<Elem> h(n, 0);
    while (true) {
      visit(h);
      std::size_t j = n;
      while (j > 0 && ++h[j - 1] == m) {
        h[j - 1] = 0;
        --j;
      }
      if (j == 0) {
        break;
      }
    }
  }

  // Size of the free algebra on k generators of the quasivariety generated by
  // `algs`, as the number of distinct k-ary term operations, computed by
  // closing the projections under the operations on raw value vectors.
  inline std::size_t term_operation_count(std::vector<FiniteAlgebra> const& algs,
                                          std::size_t                       k) {
    // Coordinates: (algebra, assignment) with the first generator most
    // significant.
    std::vector<std::pair<std::size_t, std::vector<Elem>>> coords;
    for (std::size_t i = 0; i < algs.size(); ++i) {
      for_each_map(k, algs[i].size(), [&](std::vector<Elem> const& a) {
        coords.emplace_back(i, a);
      });
    }
    std::set<std::vector<Elem>> seen;
    for (std::size_t g = 0; g < k; ++g) {
      std::vector<Elem> v;
      for (auto const& [i, a] : coords) {
        v.push_back(a[g]);
      }
      seen.insert(v);
    }
    auto const& sig = algs[0].signature();
    bool        grew = true;
    while (grew) {
      grew = false;
      std::vector<std::vector<Elem>> cur(seen.begin(), seen.end());
      for (std::size_t op = 0; op < sig.size(); ++op) {
        auto const               ar = sig[op].arity;
        std::vector<std::size_t> idx(ar, 0);
        while (true) {
          std::vector<Elem> v;
          for (std::size_t c = 0; c < coords.size(); ++c) {
            std::vector<Elem> args;
            for (auto j : idx) {
              args.push_back(cur[j][c]);
            }
            v.push_back(algs[coords[c].first].apply(op, args));
          }
          grew = seen.insert(v).second || grew;
          std::size_t j = ar;
          while (j > 0 && ++idx[j - 1] == cur.size()) {
            idx[j - 1] = 0;
            --j;
          }
          if (j == 0) {
            break;
          }
        }
      }
    }
    return seen.size();
  }

}  // namespace test
