#include "ualg/free_algebra.hpp"

#include <string>

namespace ualg {

  VarietySpec VarietySpec::generated_by(std::vector<FiniteAlgebra> algs) {
    if (algs.empty()) {
      throw Error("a generated quasivariety needs at least one algebra");
    }
    for (auto const& a : algs) {
      require_same_signature(algs[0], a, "VarietySpec");
    }
    VarietySpec spec;
    spec.signature  = algs[0].signature();
    spec.generators = std::move(algs);
    return spec;
  }

  VarietySpec VarietySpec::axiomatised_by(Signature                  sig,
                                          std::vector<QuasiIdentity> axioms,
                                          std::size_t depth_bound) {
    VarietySpec spec;
    spec.signature   = std::move(sig);
    spec.axioms      = std::move(axioms);
    spec.depth_bound = depth_bound;
    return spec;
  }

  std::optional<Elem> FreeAlgebra::find(std::vector<Elem> const& v) const {
    auto r = closure.find(v);
    if (!r) {
      return std::nullopt;
    }
    return static_cast<Elem>(*r);
  }

  std::vector<Elem> FreeAlgebra::evaluate(Term const& t) const {
    std::vector<Elem> out;
    out.reserve(closure.coordinates.size());
    for (auto const& a : spec.generators) {
      auto const        count = checked_pow(a.size(), rank);
      std::vector<Elem> asg(rank, 0);
      for (std::size_t s = 0; s < count; ++s) {
        std::size_t rest = s;
        for (std::size_t j = rank; j-- > 0;) {
          asg[j] = static_cast<Elem>(rest % a.size());
          rest /= a.size();
        }
        out.push_back(eval_term(t, a, asg));
      }
    }
    return out;
  }

  FreeAlgebra free_algebra(VarietySpec const& spec, std::size_t k,
                           Limits const& limits) {
    if (!spec.is_generated()) {
      throw Error("free_algebra: only quasivarieties generated by finite "
                  "algebras have computable free algebras");
    }
    if (k == 0) {
      throw Error("free_algebra: need at least one generator");
    }
    std::vector<FiniteAlgebra> coords;
    std::size_t                dim = 0;
    for (auto const& a : spec.generators) {
      auto const count = checked_pow(a.size(), k);
      if (count > limits.max_elements || dim + count > limits.max_elements) {
        throw ResourceError("free_algebra: evaluation space too large", 0);
      }
      dim += count;
    }
    coords.reserve(dim);
    std::vector<std::vector<Elem>> gens(k);
    for (auto const& a : spec.generators) {
      auto const count = checked_pow(a.size(), k);
      for (std::size_t s = 0; s < count; ++s) {
        coords.push_back(a);
        std::size_t rest = s;
        for (std::size_t j = k; j-- > 0;) {
          gens[j].push_back(static_cast<Elem>(rest % a.size()));
          rest /= a.size();
        }
      }
    }
    FreeAlgebra fa{spec, k, spec.generators[0], {}, {}, {}, {}};
    fa.closure = generate_closure(std::move(coords), gens, limits);
    std::string name = "F" + std::to_string(k) + "(";
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
      name += (i ? "," : "") + spec.generators[i].name();
    }
    name += ")";
    auto alg = closure_algebra(fa.closure, name, limits);
    std::vector<std::string> labels;
    auto names = default_var_names(k);
    for (auto const& w : fa.closure.witnesses) {
      labels.push_back(w.render(names));
    }
    fa.algebra   = alg.with_labels(std::move(labels));
    fa.vectors   = fa.closure.points;
    fa.witnesses = fa.closure.witnesses;
    for (std::size_t j = 0; j < k; ++j) {
      fa.generators.push_back(static_cast<Elem>(*fa.closure.find(gens[j])));
    }
    return fa;
  }

}  // namespace ualg
