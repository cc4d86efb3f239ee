// Command-line front end. Algebras are given as @name (built-in) or as a path
// to a JSON algebra file; see `ualg --help`.

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "ualg/commands.hpp"
#include "ualg/io.hpp"
#include "ualg/library.hpp"

namespace {

  using ualg::FiniteAlgebra;

  std::vector<FiniteAlgebra> load_all(std::vector<std::string> const& refs) {
    std::vector<FiniteAlgebra> out;
    for (auto const& r : refs) {
      out.push_back(ualg::load_algebra(r));
    }
    return out;
  }

  std::vector<ualg::Elem> parse_table(std::string const& text) {
    std::istringstream      in(text);
    std::vector<ualg::Elem> out;
    long                    v = 0;
    while (in >> v) {
      if (v < 0) {
        throw ualg::Error("monoid table entries must be non-negative");
      }
      out.push_back(static_cast<ualg::Elem>(v));
      if (in.peek() == ',') {
        in.get();
      }
    }
    if (!in.eof()) {
      throw ualg::Error("monoid table: expected integers, got '" + text + "'");
    }
    return out;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite universal algebra workbench"};
  app.require_subcommand(1);
  bool rows = false;
  app.add_flag("--rows", rows, "print tab-separated rows instead of text");

  std::string builtins;
  for (auto const& n : ualg::lib::builtin_names()) {
    builtins += " @" + n;
  }
  app.footer("Built-in algebras:" + builtins);

  std::function<ualg::Report()> run;

  // classify
  std::vector<std::string> classify_algs;
  std::size_t              max_n = 6;
  auto* classify = app.add_subcommand(
      "classify", "least n for n-permutability of the generated quasivariety");
  classify->add_option("algebras", classify_algs)->required();
  classify->add_option("--max-n", max_n, "largest n to search")
      ->check(CLI::Range(2, 64));
  classify->callback([&] {
    run = [&] { return ualg::cmd_classify(load_all(classify_algs), max_n); };
  });

  // demo
  auto* demo = app.add_subcommand("demo", "built-in worked examples");
  demo->require_subcommand(1);
  demo->add_subcommand("mitschke", "implication algebras A and B end to end")
      ->callback([&] { run = [] { return ualg::cmd_demo_mitschke(); }; });

  // check-identities
  std::vector<std::string> ci_algs, ci_ids;
  auto* ci = app.add_subcommand("check-identities",
                                "check identities s = t exhaustively");
  ci->add_option("algebras", ci_algs)->required();
  ci->add_option("-i,--identity", ci_ids, "identity \"s = t\"")->required();
  ci->callback([&] {
    run = [&] { return ualg::cmd_check_identities(load_all(ci_algs), ci_ids); };
  });

  // quasi-check
  std::vector<std::string>   qc_algs, qc_quasi;
  std::optional<std::string> qc_w1, qc_w2;
  auto* qc = app.add_subcommand(
      "quasi-check", "check quasi-identities, or the one built from w1, w2");
  qc->add_option("algebras", qc_algs)->required();
  qc->add_option("-q,--quasi", qc_quasi,
                 "quasi-identity \"s1 = t1 ; s2 = t2 => s = t\"");
  qc->add_option("--w1", qc_w1, "ternary term");
  qc->add_option("--w2", qc_w2, "ternary term");
  qc->callback([&] {
    run = [&] {
      return ualg::cmd_quasi_check(load_all(qc_algs), qc_quasi, qc_w1, qc_w2);
    };
  });

  // rel
  auto* rel = app.add_subcommand("rel", "binary relations on one algebra");
  rel->require_subcommand(1);
  rel->footer(
      "Relations: ker:HOM (HOM = @f, @g or a homomorphism file), diag, full, "
      "or label pairs \"a,b;c,d\"");
  std::string rel_alg, rel_r, rel_s;
  std::size_t rel_n = 2;
  auto* rc = rel->add_subcommand("compose", "R;S and S;R");
  rc->add_option("algebra", rel_alg)->required();
  rc->add_option("R", rel_r)->required();
  rc->add_option("S", rel_s)->required();
  rc->callback([&] {
    run = [&] {
      return ualg::cmd_rel_compose(ualg::load_algebra(rel_alg), rel_r, rel_s);
    };
  });
  auto* rcl = rel->add_subcommand("closure", "compatible and transitive closure");
  rcl->add_option("algebra", rel_alg)->required();
  rcl->add_option("seed", rel_r)->required();
  rcl->callback([&] {
    run = [&] {
      return ualg::cmd_rel_closure(ualg::load_algebra(rel_alg), rel_r);
    };
  });
  auto* rcf = rel->add_subcommand("classify", "relation properties");
  rcf->add_option("algebra", rel_alg)->required();
  rcf->add_option("R", rel_r)->required();
  rcf->callback([&] {
    run = [&] {
      return ualg::cmd_rel_classify(ualg::load_algebra(rel_alg), rel_r);
    };
  });
  auto* rch = rel->add_subcommand("chain", "(R,S)_n against (S,R)_n");
  rch->add_option("algebra", rel_alg)->required();
  rch->add_option("R", rel_r)->required();
  rch->add_option("S", rel_s)->required();
  rch->add_option("n", rel_n)->required()->check(CLI::Range(1, 1000));
  rch->callback([&] {
    run = [&] {
      return ualg::cmd_rel_chain(ualg::load_algebra(rel_alg), rel_r, rel_s,
                                 rel_n);
    };
  });

  // scan-preorders
  std::vector<std::string> sp_algs;
  auto* sp = app.add_subcommand("scan-preorders",
                                "search for a non-symmetric compatible preorder");
  sp->add_option("algebras", sp_algs)->required();
  sp->callback([&] {
    run = [&] { return ualg::cmd_scan_preorders(load_all(sp_algs)); };
  });

  // wm-table
  std::string wm_alg, wm_w1, wm_w2;
  auto* wm = app.add_subcommand("wm-table",
                                "solution sets of the weakly Mal'tsev system");
  wm->add_option("algebra", wm_alg)->required();
  wm->add_option("w1", wm_w1)->required();
  wm->add_option("w2", wm_w2)->required();
  wm->callback([&] {
    run = [&] {
      return ualg::cmd_wm_table(ualg::load_algebra(wm_alg), wm_w1, wm_w2);
    };
  });

  // internal analyze
  auto* internal = app.add_subcommand("internal", "internal structures");
  internal->require_subcommand(1);
  std::string in_kind = "pair", in_alg, in_rel, in_table;
  ualg::Elem  in_unit = 0;
  auto* ia = internal->add_subcommand(
      "analyze", "category and groupoid dossier of a reflexive graph");
  ia->add_option("--kind", in_kind, "pair, discrete, relation or monoid")
      ->check(CLI::IsMember({"pair", "discrete", "relation", "monoid"}));
  ia->add_option("--algebra", in_alg, "object algebra (pair/discrete/relation)");
  ia->add_option("--relation", in_rel, "congruence (relation kind)");
  ia->add_option("--table", in_table,
                 "monoid table, n*n entries, row = left factor");
  ia->add_option("--unit", in_unit, "monoid identity");
  ia->callback([&] {
    run = [&] {
      ualg::InternalRequest req;
      static std::map<std::string, ualg::InternalKind> const kinds{
          {"pair", ualg::InternalKind::Pair},
          {"discrete", ualg::InternalKind::Discrete},
          {"relation", ualg::InternalKind::Relation},
          {"monoid", ualg::InternalKind::Monoid}};
      req.kind = kinds.at(in_kind);
      if (req.kind == ualg::InternalKind::Monoid) {
        req.monoid_table = parse_table(in_table);
        auto const n     = static_cast<std::size_t>(
            std::lround(std::sqrt(double(req.monoid_table.size()))));
        if (n == 0 || n * n != req.monoid_table.size()) {
          throw ualg::Error("--table needs n*n entries for some n >= 1");
        }
        req.monoid_size = n;
        req.monoid_unit = in_unit;
      } else {
        if (in_alg.empty()) {
          throw ualg::Error("--algebra is required for kind " + in_kind);
        }
        req.algebra = ualg::load_algebra(in_alg);
        if (req.kind == ualg::InternalKind::Relation) {
          if (in_rel.empty()) {
            throw ualg::Error("--relation is required for kind relation");
          }
          req.relation = in_rel;
        }
      }
      return ualg::cmd_internal_analyze(req);
    };
  });

  // condition-v
  std::string   cv_alg, cv_flavor = "relation";
  std::size_t   cv_per_span = 8;
  std::uint64_t cv_seed     = 1;
  auto* cv = app.add_subcommand(
      "condition-v", "fill-ins for spans over the diagonal split pullback");
  cv->add_option("algebra", cv_alg)->required();
  cv->add_option("--flavor", cv_flavor)
      ->check(CLI::IsMember({"span", "relation", "strong-relation"}));
  cv->add_option("--per-span", cv_per_span, "instances sampled per span");
  cv->add_option("--seed", cv_seed);
  cv->callback([&] {
    run = [&] {
      auto const flavor = cv_flavor == "span"       ? ualg::SpanFlavor::Span
                          : cv_flavor == "relation" ? ualg::SpanFlavor::Relation
                                                    : ualg::SpanFlavor::StrongRelation;
      return ualg::cmd_condition_v(ualg::load_algebra(cv_alg), flavor,
                                   cv_per_span, cv_seed);
    };
  });

  // pushout-sections
  std::string              ps_alg;
  std::vector<std::string> ps_battery;
  auto* ps = app.add_subcommand(
      "pushout-sections",
      "unique fill-ins from the sections of the diagonal split pullback");
  ps->add_option("algebra", ps_alg)->required();
  ps->add_option("--battery", ps_battery, "target algebras")->required();
  ps->callback([&] {
    run = [&] {
      return ualg::cmd_pushout_sections(ualg::load_algebra(ps_alg),
                                        load_all(ps_battery));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return ualg::kUsage;
  } catch (ualg::Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ualg::kUsage;
  }

  try {
    auto const rep = run();
    if (rows) {
      rep.render_rows(std::cout);
    } else {
      rep.render_text(std::cout);
    }
    return rep.exit_code();
  } catch (ualg::ResourceError const& e) {
    std::cerr << "resource bound exceeded: " << e.what() << '\n';
    return ualg::kResource;
  } catch (ualg::Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ualg::kUsage;
  }
}
