#include "ualg/maltsev.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace ualg {

  std::vector<Identity> hm_chain_identities(std::vector<Term> const& terms) {
    if (terms.empty()) {
      throw Error("hm_chain_identities: need at least one term");
    }
    std::vector<std::string> names{"x", "y", "z"};
    auto const x = Term::var(0), z = Term::var(2);
    auto xzz = [&](Term const& w) {
      std::vector<Term> s{x, z, z};
      return w.substitute(s);
    };
    auto xxz = [&](Term const& w) {
      std::vector<Term> s{x, x, z};
      return w.substitute(s);
    };
    for (auto const& w : terms) {
      if (w.var_bound() > 3) {
        throw Error("hm_chain_identities: terms must be ternary");
      }
    }
    std::vector<Identity> ids;
    ids.push_back(make_identity(xzz(terms.front()), x, names));
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
      ids.push_back(make_identity(xxz(terms[i]), xzz(terms[i + 1]), names));
    }
    ids.push_back(make_identity(xxz(terms.back()), z, names));
    return ids;
  }

  std::vector<ChainVerification> verify_hm_terms(
      std::vector<Term> const& terms, std::vector<FiniteAlgebra> const& algs) {
    auto const                     ids = hm_chain_identities(terms);
    std::vector<ChainVerification> out;
    for (auto const& a : algs) {
      ChainVerification v{a.name(), ids, {}, true};
      for (auto const& id : ids) {
        v.checks.push_back(check_identity(id, a));
        v.holds = v.holds && v.checks.back().holds;
      }
      out.push_back(std::move(v));
    }
    return out;
  }

  namespace {
    // Elements reachable from `from` in exactly j steps, j = 0..k.
    std::vector<std::vector<bool>> layers(Relation const& r, Elem from,
                                          std::size_t k) {
      auto const                     n = r.left().size();
      std::vector<std::vector<bool>> out(k + 1, std::vector<bool>(n, false));
      out[0][from] = true;
      for (std::size_t j = 0; j < k; ++j) {
        for (Elem u = 0; u < n; ++u) {
          if (!out[j][u]) {
            continue;
          }
          for (Elem v = 0; v < n; ++v) {
            if (r.contains(u, v)) {
              out[j + 1][v] = true;
            }
          }
        }
      }
      return out;
    }
  }  // namespace

  PermutabilityVerdict find_hm_terms(VarietySpec const& spec,
                                     std::size_t        max_n,
                                     Limits const&      limits) {
    PermutabilityVerdict v;
    if (!spec.is_generated()) {
      v.note = "identity-presented class: no finite free algebra to search";
      return v;
    }
    if (max_n < 2) {
      throw Error("find_hm_terms: max_n must be at least 2");
    }
    try {
      auto const F = free_algebra(spec, 2, limits);
      v.free_size  = F.algebra.size();
      Elem const x = F.generators[0];
      Elem const z = F.generators[1];
      std::vector<Pair> seeds{{x, x}, {x, z}, {z, z}};
      auto const wr = compatible_closure_with_witnesses(F.algebra, F.algebra,
                                                        seeds, limits);
      auto const& R = wr.relation;

      Relation    power = R;
      std::size_t k     = 1;
      while (true) {
        v.power_sizes.push_back(power.count());
        if (power.contains(z, x)) {
          break;
        }
        Relation next = compose(power, R);
        if (next == power) {
          v.outcome        = PermOutcome::NotPermutable;
          v.fixpoint_power = k;
          return v;
        }
        power = std::move(next);
        ++k;
      }
      if (k + 1 > max_n) {
        v.note = "(z,x) first appears in R^" + std::to_string(k)
                 + ", beyond the bound n <= " + std::to_string(max_n);
        return v;
      }

      auto const        reach = layers(R, z, k);
      std::vector<Elem> chain(k + 1);
      chain[k] = x;
      for (std::size_t j = k; j-- > 0;) {
        Elem u = 0;
        while (!(reach[j][u] && R.contains(u, chain[j + 1]))) {
          ++u;
        }
        chain[j] = u;
      }
      std::vector<Term> terms;
      for (std::size_t j = 1; j <= k; ++j) {
        auto const i = k - j;
        terms.push_back(wr.witness(chain[i], chain[i + 1]));
      }
      v.verification = verify_hm_terms(terms, spec.generators);
      for (auto const& cv : v.verification) {
        if (!cv.holds) {
          throw Error("find_hm_terms: extracted terms fail on " + cv.algebra);
        }
      }
      v.outcome = PermOutcome::NPermutable;
      v.n       = k + 1;
      v.terms   = std::move(terms);
      std::vector<std::string> xz{"x", "z"};
      for (auto u : chain) {
        v.chain_labels.push_back(F.witnesses[u].render(xz));
      }
      v.chain = std::move(chain);
      return v;
    } catch (ResourceError const& e) {
      v.outcome = PermOutcome::Unknown;
      v.note    = std::string(e.what()) + " (partial size "
               + std::to_string(e.partial_size()) + ")";
      return v;
    }
  }

  std::vector<Relation> candidate_congruences(
      FiniteAlgebra const& alg, std::vector<FiniteAlgebra> const& targets) {
    std::vector<Relation>                              out;
    std::unordered_set<Relation, RelationHash> seen;
    auto add = [&](Relation r) {
      if (seen.insert(r).second) {
        out.push_back(std::move(r));
      }
    };
    std::vector<FiniteAlgebra> cods{alg};
    cods.insert(cods.end(), targets.begin(), targets.end());
    for (auto const& cod : cods) {
      require_same_signature(alg, cod, "candidate_congruences");
      HomSearch search;
      for_each_homomorphism(alg, cod, search, [&](Mapping const& m) {
        add(kernel_pair(Homomorphism{alg, cod, m}));
        return true;
      });
    }
    for (Elem a = 0; a < alg.size(); ++a) {
      for (Elem b = a + 1; b < alg.size(); ++b) {
        std::vector<Pair> p{{a, b}};
        add(congruence_generated(alg, p));
      }
    }
    return out;
  }

  std::optional<PermutabilityCounterexample> chains_differ(Relation const& r,
                                                           Relation const& s,
                                                           std::size_t     n) {
    auto const rs = alternating_chain(r, s, n);
    auto const sr = alternating_chain(s, r, n);
    if (rs == sr) {
      return std::nullopt;
    }
    auto const size = r.left().size();
    for (Elem a = 0; a < size; ++a) {
      for (Elem b = 0; b < size; ++b) {
        if (rs.contains(a, b) != sr.contains(a, b)) {
          return PermutabilityCounterexample{r, s, {a, b}, rs.contains(a, b)};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<PermutabilityCounterexample> permutability_counterexample(
      FiniteAlgebra const& alg, std::size_t n,
      std::vector<FiniteAlgebra> const& targets) {
    if (n < 2) {
      throw Error("permutability_counterexample: n must be at least 2");
    }
    auto const cands = candidate_congruences(alg, targets);
    for (std::size_t i = 0; i < cands.size(); ++i) {
      for (std::size_t j = i + 1; j < cands.size(); ++j) {
        if (auto w = chains_differ(cands[i], cands[j], n)) {
          return w;
        }
      }
    }
    return std::nullopt;
  }

  PreorderScan preorder_symmetry_scan(FiniteAlgebra const& alg,
                                      std::size_t          max_carrier) {
    if (alg.size() > max_carrier) {
      throw ResourceError("preorder_symmetry_scan: carrier of size "
                              + std::to_string(alg.size())
                              + " exceeds the seed bound",
                          0);
    }
    PreorderScan                              scan;
    std::unordered_set<Relation, RelationHash> seen;
    std::vector<Pair>                         seed;
    for (Elem x = 0; x < alg.size(); ++x) {
      seed.emplace_back(x, x);
    }
    seed.emplace_back(0, 0);
    for (Elem a = 0; a < alg.size(); ++a) {
      for (Elem b = 0; b < alg.size(); ++b) {
        if (a == b) {
          continue;
        }
        ++scan.seeds;
        seed.back() = {a, b};
        auto pre    = transitive_closure(compatible_closure(alg, alg, seed))
                       .closure;
        if (!seen.insert(pre).second) {
          continue;
        }
        ++scan.preorders;
        if (!scan.counterexample && !pre.contains(b, a)) {
          scan.counterexample = PreorderCounterexample{std::move(pre), {a, b}};
          return scan;
        }
      }
    }
    return scan;
  }

  WmRow const& WmTable::at(Elem a, Elem b, Elem c) const {
    auto const n = algebra.size();
    return rows[(a * n + b) * n + c];
  }

  WmTable wm_solution_table(FiniteAlgebra const& alg, Term const& w1,
                            Term const& w2) {
    if (w1.var_bound() > 3 || w2.var_bound() > 3) {
      throw Error("wm_solution_table: terms must be ternary");
    }
    WmTable     t{alg, {}, true};
    auto const  n = static_cast<Elem>(alg.size());
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          WmRow row{a, b, c, {}};
          std::vector<Elem> abc{a, b, c};
          auto const        rhs1 = eval_term(w2, alg, abc);
          auto const        rhs2 = eval_term(w1, alg, abc);
          for (Elem x = 0; x < n; ++x) {
            std::vector<Elem> xab{x, a, b}, bcx{b, c, x};
            if (eval_term(w1, alg, xab) == rhs1
                && eval_term(w2, alg, bcx) == rhs2) {
              row.solutions.push_back(x);
            }
          }
          t.member = t.member && row.solutions.size() <= 1;
          t.rows.push_back(std::move(row));
        }
      }
    }
    return t;
  }

  std::string render_solutions(FiniteAlgebra const&     alg,
                               std::vector<Elem> const& sols) {
    if (sols.empty()) {
      return "-";
    }
    std::string out;
    for (auto x : sols) {
      out += (out.empty() ? "" : "/") + alg.label(x);
    }
    return out;
  }

  std::vector<std::array<Elem, 3>> printed_column_order(std::size_t n) {
    std::vector<std::array<Elem, 3>> cols;
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        for (Elem a = 0; a < n; ++a) {
          cols.push_back({a, b, c});
        }
      }
    }
    return cols;
  }

  JointEpicity joint_epicity_check(SplitPullback const& spd,
                                   FiniteAlgebra const& d,
                                   std::size_t          max_nodes) {
    auto const& E = spd.E();
    require_same_signature(E, d, "joint_epicity_check");
    std::vector<Elem> image;
    for (auto x : spd.e1.map) {
      image.push_back(x);
    }
    for (auto x : spd.e2.map) {
      image.push_back(x);
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());

    JointEpicity                           out;
    std::map<std::vector<Elem>, Mapping>   by_restriction;
    HomSearch                              search;
    search.max_nodes = max_nodes;
    std::vector<Elem> key(image.size());
    for_each_homomorphism(E, d, search, [&](Mapping const& m) {
      ++out.homs;
      for (std::size_t i = 0; i < image.size(); ++i) {
        key[i] = m[image[i]];
      }
      auto [it, fresh] = by_restriction.emplace(key, m);
      if (!fresh) {
        out.holds = false;
        out.phi1  = it->second;
        out.phi2  = m;
        return false;
      }
      return true;
    });
    return out;
  }

}  // namespace ualg
