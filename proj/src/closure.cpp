#include "ualg/closure.hpp"

#include <string>

namespace ualg {

  std::size_t VecHash::operator()(std::vector<Elem> const& v) const noexcept {
    // FNV-1a over the entries.
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }

  std::optional<std::size_t> Closure::find(std::vector<Elem> const& p) const {
    auto it = index.find(p);
    if (it == index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Closure generate_closure(std::vector<FiniteAlgebra>            coordinates,
                           std::vector<std::vector<Elem>> const& seeds,
                           Limits const&                         limits) {
    Closure cl;
    cl.coordinates = std::move(coordinates);
    auto const& coords = cl.coordinates;
    auto const  dim    = coords.size();
    if (dim == 0) {
      throw Error("generate_closure: no coordinates");
    }
    for (auto const& c : coords) {
      require_same_signature(coords[0], c, "generate_closure");
    }
    auto const& sig = coords[0].signature();

    auto add = [&](std::vector<Elem> p, Term w, std::size_t d) {
      if (cl.index.contains(p)) {
        return;
      }
      if (cl.points.size() >= limits.max_elements) {
        throw ResourceError("closure exceeded "
                                + std::to_string(limits.max_elements)
                                + " elements",
                            cl.points.size());
      }
      cl.index.emplace(p, cl.points.size());
      cl.points.push_back(std::move(p));
      cl.witnesses.push_back(std::move(w));
      cl.depth.push_back(d);
    };

    for (std::size_t i = 0; i < seeds.size(); ++i) {
      if (seeds[i].size() != dim) {
        throw Error("generate_closure: seed has wrong dimension");
      }
      for (std::size_t j = 0; j < dim; ++j) {
        if (seeds[i][j] >= coords[j].size()) {
          throw Error("generate_closure: seed entry out of range");
        }
      }
      add(seeds[i], Term::var(i), 0);
    }

    std::size_t       frontier = 0;
    std::size_t       round    = 1;
    std::vector<Elem> fargs, result(dim);
    while (true) {
      std::size_t const count = cl.points.size();
      for (std::size_t op = 0; op < sig.size(); ++op) {
        auto const k = sig[op].arity;
        fargs.assign(k, 0);
        if (k == 0) {
          if (round == 1) {
            for (std::size_t j = 0; j < dim; ++j) {
              result[j] = coords[j].apply(op, std::span<Elem const>{});
            }
            add(result, Term::apply(sig, op, {}), 1);
          }
          continue;
        }
        if (count == 0) {
          continue;
        }
        std::vector<std::size_t> pos(k, 0);
        while (true) {
          bool fresh = false;
          for (auto p : pos) {
            fresh = fresh || p >= frontier;
          }
          if (fresh) {
            for (std::size_t j = 0; j < dim; ++j) {
              for (std::size_t a = 0; a < k; ++a) {
                fargs[a] = cl.points[pos[a]][j];
              }
              result[j] = coords[j].apply(op, fargs);
            }
            if (!cl.index.contains(result)) {
              std::vector<Term> args;
              args.reserve(k);
              for (auto p : pos) {
                args.push_back(cl.witnesses[p]);
              }
              add(result, Term::apply(sig, op, std::move(args)), round);
            }
          }
          std::size_t j = k;
          while (j > 0 && ++pos[j - 1] == count) {
            pos[j - 1] = 0;
            --j;
          }
          if (j == 0) {
            break;
          }
        }
      }
      if (cl.points.size() == count) {
        break;
      }
      frontier = count;
      ++round;
    }
    return cl;
  }

  FiniteAlgebra closure_algebra(Closure const& cl, std::string name,
                                Limits const& limits) {
    auto const& sig = cl.coordinates[0].signature();
    auto const  n   = cl.size();
    auto const  dim = cl.coordinates.size();
    if (n == 0) {
      throw Error("closure_algebra: empty closure");
    }
    std::vector<std::vector<Elem>> tables(sig.size());
    std::vector<Elem>              fargs, result(dim);
    for (std::size_t op = 0; op < sig.size(); ++op) {
      auto const k       = sig[op].arity;
      auto const entries = checked_pow(n, k);
      if (entries > limits.max_table_entries) {
        throw ResourceError("closure_algebra: table of '" + sig[op].name
                                + "' would have too many entries",
                            n);
      }
      tables[op].resize(entries);
      std::vector<std::size_t> pos(k, 0);
      fargs.assign(k, 0);
      for (std::size_t idx = 0; idx < entries; ++idx) {
        std::size_t rest = idx;
        for (std::size_t a = k; a-- > 0;) {
          pos[a] = rest % n;
          rest /= n;
        }
        for (std::size_t j = 0; j < dim; ++j) {
          for (std::size_t a = 0; a < k; ++a) {
            fargs[a] = cl.points[pos[a]][j];
          }
          result[j] = cl.coordinates[j].apply(op, fargs);
        }
        tables[op][idx] = static_cast<Elem>(cl.index.at(result));
      }
    }
    return FiniteAlgebra(std::move(name), sig, n, std::move(tables));
  }

  std::optional<Elem> Subproduct::find(std::vector<Elem> const& t) const {
    auto it = index.find(t);
    if (it == index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Elem Subproduct::at(std::vector<Elem> const& t) const {
    auto r = find(t);
    if (!r) {
      throw Error("tuple is not an element of '" + algebra.name() + "'");
    }
    return *r;
  }

  Homomorphism Subproduct::projection(std::size_t i) const {
    Mapping m(tuples.size());
    for (std::size_t x = 0; x < tuples.size(); ++x) {
      m[x] = tuples[x][i];
    }
    return Homomorphism{algebra, factors[i], std::move(m)};
  }

  Subproduct make_subproduct(std::string                    name,
                             std::vector<FiniteAlgebra>     factors,
                             std::vector<std::vector<Elem>> tuples,
                             Limits const&                  limits) {
    if (factors.empty()) {
      throw Error("make_subproduct: no factors");
    }
    for (auto const& f : factors) {
      require_same_signature(factors[0], f, "make_subproduct");
    }
    if (tuples.empty()) {
      throw Error("make_subproduct: '" + name + "' would be empty");
    }
    std::unordered_map<std::vector<Elem>, Elem, VecHash> index;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      if (tuples[i].size() != factors.size()) {
        throw Error("make_subproduct: tuple of wrong length");
      }
      index.emplace(tuples[i], static_cast<Elem>(i));
    }
    if (index.size() != tuples.size()) {
      throw Error("make_subproduct: duplicate tuples");
    }
    auto const& sig = factors[0].signature();
    auto const  n   = tuples.size();
    auto const  dim = factors.size();
    std::vector<std::vector<Elem>> tables(sig.size());
    std::vector<Elem>              fargs, result(dim);
    for (std::size_t op = 0; op < sig.size(); ++op) {
      auto const k       = sig[op].arity;
      auto const entries = checked_pow(n, k);
      if (entries > limits.max_table_entries) {
        throw ResourceError("make_subproduct: table of '" + sig[op].name
                                + "' would have too many entries",
                            n);
      }
      tables[op].resize(entries);
      std::vector<std::size_t> pos(k, 0);
      fargs.assign(k, 0);
      for (std::size_t idx = 0; idx < entries; ++idx) {
        std::size_t rest = idx;
        for (std::size_t a = k; a-- > 0;) {
          pos[a] = rest % n;
          rest /= n;
        }
        for (std::size_t j = 0; j < dim; ++j) {
          for (std::size_t a = 0; a < k; ++a) {
            fargs[a] = tuples[pos[a]][j];
          }
          result[j] = factors[j].apply(op, fargs);
        }
        auto it = index.find(result);
        if (it == index.end()) {
          throw Error("make_subproduct: '" + name
                      + "' is not closed under '" + sig[op].name + "'");
        }
        tables[op][idx] = it->second;
      }
    }
    std::vector<std::string> labels;
    bool any = false;
    for (auto const& f : factors) {
      any = any || f.has_labels();
    }
    if (any) {
      for (auto const& t : tuples) {
        std::string s = "(";
        for (std::size_t j = 0; j < dim; ++j) {
          s += (j ? "," : "") + factors[j].label(t[j]);
        }
        labels.push_back(s + ")");
      }
    }
    FiniteAlgebra alg(std::move(name), sig, n, std::move(tables),
                      std::move(labels));
    return Subproduct{std::move(alg), std::move(factors), std::move(tuples),
                      std::move(index)};
  }

}  // namespace ualg
