#pragma once

// One function per CLI subcommand. Each returns a Report carrying the exit
// code; malformed input surfaces as ualg::Error (exit 2) and exhausted
// resource bounds as ualg::ResourceError (exit 3).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/internal.hpp"
#include "ualg/relation.hpp"
#include "ualg/report.hpp"

namespace ualg {

  // "ker:HOM" (kernel of a homomorphism file or @f/@g), "diag", "full", or
  // pairs of element labels "a,b;c,d".
  Relation parse_relation_arg(FiniteAlgebra const& alg, std::string const& arg);

  std::string render_pair(FiniteAlgebra const& alg, Pair p);
  std::string render_relation(Relation const& r);

  Report cmd_classify(std::vector<FiniteAlgebra> const& algs,
                      std::size_t                       max_n);

  Report cmd_demo_mitschke();

  // The identities share one variable set, so each is checked over
  // |A|^(total variables) assignments.
  Report cmd_check_identities(std::vector<FiniteAlgebra> const& algs,
                              std::vector<std::string> const&   identities);

  // Either explicit quasi-identities or the one built from (w1, w2).
  Report cmd_quasi_check(std::vector<FiniteAlgebra> const& algs,
                         std::vector<std::string> const&   quasi,
                         std::optional<std::string> const& w1,
                         std::optional<std::string> const& w2);

  Report cmd_rel_compose(FiniteAlgebra const& alg, std::string const& r,
                         std::string const& s);
  Report cmd_rel_closure(FiniteAlgebra const& alg, std::string const& seed);
  Report cmd_rel_classify(FiniteAlgebra const& alg, std::string const& r);
  Report cmd_rel_chain(FiniteAlgebra const& alg, std::string const& r,
                       std::string const& s, std::size_t n);

  Report cmd_scan_preorders(std::vector<FiniteAlgebra> const& algs);

  Report cmd_wm_table(FiniteAlgebra const& alg, std::string const& w1,
                      std::string const& w2);

  enum class InternalKind { Pair, Discrete, Relation, Monoid };

  struct InternalRequest {
    InternalKind                 kind = InternalKind::Pair;
    std::optional<FiniteAlgebra> algebra;   // pair, discrete, relation
    std::string                  relation;  // relation
    std::size_t                  monoid_size = 0;
    std::vector<Elem>            monoid_table;
    Elem                         monoid_unit = 0;
  };
  Report cmd_internal_analyze(InternalRequest const& req);

  Report cmd_condition_v(FiniteAlgebra const& alg, SpanFlavor flavor,
                         std::size_t per_span, std::uint64_t seed);

  Report cmd_pushout_sections(FiniteAlgebra const&              alg,
                              std::vector<FiniteAlgebra> const& battery);

}  // namespace ualg
