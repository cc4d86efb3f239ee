#include "ualg/commands.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ualg/free_algebra.hpp"
#include "ualg/io.hpp"
#include "ualg/library.hpp"
#include "ualg/maltsev.hpp"
#include "ualg/term.hpp"

namespace ualg {

  namespace {
    std::string join(std::vector<std::string> const& parts,
                     std::string const&              sep) {
      std::string out;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i ? sep : "") + parts[i];
      }
      return out;
    }

    std::string names_of(std::vector<FiniteAlgebra> const& algs) {
      std::vector<std::string> n;
      for (auto const& a : algs) {
        n.push_back(a.name());
      }
      return join(n, " ");
    }

    std::string render_assignment(FiniteAlgebra const&            alg,
                                  std::vector<std::string> const& names,
                                  std::vector<Elem> const&        values) {
      std::vector<std::string> parts;
      for (std::size_t i = 0; i < values.size(); ++i) {
        auto n = i < names.size() ? display_var_name(names[i])
                                  : "v" + std::to_string(i);
        parts.push_back(n + "=" + alg.label(values[i]));
      }
      return join(parts, ", ");
    }

    std::string verdict_text(IdentityCheck const& c, FiniteAlgebra const& alg,
                             std::vector<std::string> const& names) {
      if (c.holds) {
        return "ok";
      }
      return "FAILS at " + render_assignment(alg, names, *c.counter);
    }

    std::string render_map(Homomorphism const& h) {
      std::vector<std::string> parts;
      for (Elem x = 0; x < h.dom.size(); ++x) {
        parts.push_back(h.dom.label(x) + "->" + h.cod.label(h.map[x]));
      }
      return join(parts, " ");
    }

    std::string render_partition(Relation const& r) {
      auto const&              a = r.left();
      std::vector<bool>        done(a.size(), false);
      std::vector<std::string> blocks;
      for (Elem x = 0; x < a.size(); ++x) {
        if (done[x]) {
          continue;
        }
        std::vector<std::string> block;
        for (Elem y = x; y < a.size(); ++y) {
          if (r.contains(x, y)) {
            done[y] = true;
            block.push_back(a.label(y));
          }
        }
        blocks.push_back("{" + join(block, ",") + "}");
      }
      return "{" + join(blocks, ",") + "}";
    }

    std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    char const* perm_name(std::size_t n) {
      switch (n) {
        case 2:
          return " (Mal'tsev)";
        case 3:
          return " (Goursat)";
        default:
          return "";
      }
    }

    Elem parse_label(FiniteAlgebra const& alg, std::string const& text) {
      if (auto e = alg.element(text)) {
        return *e;
      }
      throw Error("'" + text + "' is not an element of " + alg.name());
    }

    std::string trim(std::string s) {
      auto const b = s.find_first_not_of(" \t");
      auto const e = s.find_last_not_of(" \t");
      return b == std::string::npos ? "" : s.substr(b, e - b + 1);
    }

    void add_relation_rows(Report& rep, std::string const& name,
                           Relation const& r) {
      rep.line(name + " = " + render_relation(r) + "  (" + std::to_string(r.count())
               + " pairs)");
      for (auto p : r.pairs()) {
        rep.row("pair", {name, r.left().label(p.first),
                         r.right().label(p.second)});
      }
    }

    void add_classification(Report& rep, std::string const& name,
                            Relation const& r) {
      auto const c  = classify_relation(r);
      auto const cv = check_compatible(r);
      auto const& L = r.left();
      auto const& R = r.right();
      auto flag = [&](std::string const& what, bool v, std::string witness) {
        rep.row("flag", {name, what, yes_no(v), witness});
      };
      flag("compatible", !cv,
           cv ? "op " + L.signature()[cv->op].name + " leaves the relation at "
                    + render_pair(L, cv->result)
              : "");
      if (c.square) {
        flag("reflexive", c.reflexive,
             c.not_reflexive ? "missing " + render_pair(L, {*c.not_reflexive,
                                                            *c.not_reflexive})
                             : "");
        flag("symmetric", c.symmetric,
             c.not_symmetric
                 ? render_pair(L, *c.not_symmetric) + " in, "
                       + render_pair(L, {c.not_symmetric->second,
                                         c.not_symmetric->first})
                       + " not"
                 : "");
        flag("transitive", c.transitive,
             c.not_transitive
                 ? render_pair(L, {(*c.not_transitive)[0], (*c.not_transitive)[1]})
                       + ", "
                       + render_pair(L, {(*c.not_transitive)[1],
                                         (*c.not_transitive)[2]})
                       + " in, "
                       + render_pair(L, {(*c.not_transitive)[0],
                                         (*c.not_transitive)[2]})
                       + " not"
                 : "");
      }
      std::string dw;
      if (c.not_difunctional) {
        auto const& w = *c.not_difunctional;
        dw = render_pair(L, {w[0], w[1]}) + ", " + render_pair(L, {w[2], w[1]})
             + ", " + render_pair(L, {w[2], w[3]}) + " in, "
             + render_pair(L, {w[0], w[3]}) + " not";
      }
      (void)R;
      flag("difunctional", c.difunctional, dw);
      if (c.square) {
        flag("preorder", c.preorder, "");
        flag("equivalence", c.equivalence, "");
      }
    }

    FiniteAlgebra require_one_signature(std::vector<FiniteAlgebra> const& algs) {
      if (algs.empty()) {
        throw Error("at least one algebra is required");
      }
      for (auto const& a : algs) {
        require_same_signature(algs[0], a, "algebras");
      }
      return algs[0];
    }
  }  // namespace

  std::string render_pair(FiniteAlgebra const& alg, Pair p) {
    return "(" + alg.label(p.first) + "," + alg.label(p.second) + ")";
  }

  std::string render_relation(Relation const& r) {
    std::vector<std::string> parts;
    for (auto [x, y] : r.pairs()) {
      parts.push_back("(" + r.left().label(x) + "," + r.right().label(y) + ")");
    }
    return "{" + join(parts, ", ") + "}";
  }

  Relation parse_relation_arg(FiniteAlgebra const& alg,
                              std::string const&   arg) {
    if (arg.rfind("ker:", 0) == 0) {
      auto h = load_hom(arg.substr(4));
      if (!h.dom.same_structure(alg)) {
        throw Error("relation '" + arg + "': homomorphism domain is "
                    + h.dom.name() + ", not " + alg.name());
      }
      auto k = kernel_pair(h);
      return Relation::from_pairs(alg, alg, k.pairs());
    }
    if (arg == "diag") {
      return Relation::diagonal(alg);
    }
    if (arg == "full") {
      return Relation::full(alg, alg);
    }
    Relation           r(alg, alg);
    std::istringstream in(arg);
    std::string        item;
    while (std::getline(in, item, ';')) {
      item = trim(item);
      if (item.empty()) {
        continue;
      }
      auto comma = item.find(',');
      if (comma == std::string::npos) {
        throw Error("relation pair '" + item + "' is not of the form a,b");
      }
      r.insert(parse_label(alg, trim(item.substr(0, comma))),
               parse_label(alg, trim(item.substr(comma + 1))));
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // classify
  ////////////////////////////////////////////////////////////////////////

  Report cmd_classify(std::vector<FiniteAlgebra> const& algs,
                      std::size_t                       max_n) {
    require_one_signature(algs);
    Report rep("classify " + names_of(algs) + " --max-n "
               + std::to_string(max_n));
    auto const v = find_hm_terms(VarietySpec::generated_by(algs), max_n);
    rep.line("quasivariety generated by " + names_of(algs));
    if (v.free_size) {
      rep.line("free algebra on {x, z}: " + std::to_string(v.free_size)
               + " elements");
      rep.row("free", {"elements", std::to_string(v.free_size)});
    }
    for (std::size_t k = 0; k < v.power_sizes.size(); ++k) {
      rep.row("power", {"R^" + std::to_string(k + 1),
                        std::to_string(v.power_sizes[k]) + " pairs"});
    }
    std::vector<std::string> const xyz{"x", "y", "z"};
    switch (v.outcome) {
      case PermOutcome::NPermutable: {
        rep.line("verdict: " + std::to_string(v.n) + "-permutable"
                 + perm_name(v.n) + ", least n = " + std::to_string(v.n));
        rep.row("verdict", {"permutable", std::to_string(v.n)});
        for (std::size_t i = 0; i < v.terms.size(); ++i) {
          rep.row("term", {"w" + std::to_string(i + 1) + "(x,y,z)",
                           v.terms[i].render(xyz)});
        }
        rep.line("chain in the free algebra, z = u0 R u1 R ... R u"
                 + std::to_string(v.n - 1) + " = x:");
        for (std::size_t i = 0; i < v.chain_labels.size(); ++i) {
          rep.row("chain", {"u" + std::to_string(i), v.chain_labels[i]});
        }
        rep.line("chain identities:");
        for (auto const& cv : v.verification) {
          for (std::size_t i = 0; i < cv.identities.size(); ++i) {
            rep.row("check", {cv.algebra, cv.identities[i].render(),
                              std::to_string(cv.checks[i].assignments)
                                  + " assignments",
                              verdict_text(cv.checks[i], algs[0], xyz)});
          }
        }
        rep.set_exit(kHolds);
        break;
      }
      case PermOutcome::NotPermutable:
        rep.line("verdict: not n-permutable for any n (fixpoint at power "
                 + std::to_string(v.fixpoint_power) + ": R^"
                 + std::to_string(v.fixpoint_power) + " = R^"
                 + std::to_string(v.fixpoint_power + 1)
                 + " and (z,x) is not in it)");
        rep.row("verdict", {"not-permutable", "fixpoint",
                            std::to_string(v.fixpoint_power)});
        rep.set_exit(kCounterexample);
        break;
      case PermOutcome::Unknown:
        rep.line("verdict: unknown (" + v.note + ")");
        rep.row("verdict", {"unknown", v.note});
        rep.set_exit(kResource);
        break;
    }
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // demo mitschke
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Reference solution tables for the implication algebras, columns ordered
    // with b slowest, then c, then a.
    constexpr char const* kReferenceA = "1 2 1 1 2 - 1 2";
    constexpr char const* kReferenceB =
        "1 2 3 1 1 3 1 2 1 2 - - 1 2 3 2 - 2 3 - - 3 3 - 1 2 3";

    std::vector<std::string> split_ws(std::string const& s) {
      std::istringstream       in(s);
      std::vector<std::string> out;
      std::string              w;
      while (in >> w) {
        out.push_back(w);
      }
      return out;
    }

    struct LayoutCompare {
      std::string              reading;
      std::vector<std::string> cells;
      std::size_t              mismatches = 0;
    };

    // Cells of the computed table in reference column order, reading the
    // reference column (a,b,c) as computed entry perm(a,b,c).
    LayoutCompare compare_layout(WmTable const& t, std::string reading,
                                 std::array<int, 3> perm,
                                 std::vector<std::string> const& ref) {
      LayoutCompare out{std::move(reading), {}, 0};
      auto const    cols = printed_column_order(t.algebra.size());
      for (std::size_t i = 0; i < cols.size(); ++i) {
        auto const& k = cols[i];
        auto const& row = t.at(k[perm[0]], k[perm[1]], k[perm[2]]);
        out.cells.push_back(render_solutions(t.algebra, row.solutions));
        if (out.cells.back() != ref[i]) {
          ++out.mismatches;
        }
      }
      return out;
    }
  }  // namespace

  Report cmd_demo_mitschke() {
    Report      rep("demo mitschke");
    bool        ok = true;
    auto const  A  = lib::implication_a();
    auto const  B  = lib::implication_b();
    auto const& sig = A.signature();
    std::vector<std::string> const xyz{"x", "y", "z"};

    // (a) identities
    rep.section("implication algebra identities");
    std::vector<std::string> const axioms{
        "(mul (mul x y) x) = x", "(mul (mul x y) y) = (mul (mul y x) x)",
        "(mul x (mul y z)) = (mul y (mul x z))"};
    auto const ids = parse_identity_system(axioms, sig);
    for (auto const& alg : {A, B}) {
      for (auto const& id : ids) {
        auto const c = check_identity(id, alg);
        ok           = ok && c.holds;
        rep.row("identity", {alg.name(), id.render(),
                             std::to_string(c.assignments) + " assignments",
                             verdict_text(c, alg, id.names)});
      }
    }

    // (b) solution tables
    auto const w1 = parse_ternary("(mul (mul z y) x)", sig);
    auto const w2 = parse_ternary("(mul (mul x y) z)", sig);
    rep.section("solution tables for w1 = " + w1.render(xyz)
                + ", w2 = " + w2.render(xyz));
    rep.line("x solves w1(x,a,b) = w2(a,b,c) and w2(b,c,x) = w1(a,b,c), i.e. "
             "(ba)x = (ab)c and (bc)x = (cb)a");
    for (auto const& [alg, ref_text] :
         {std::pair{A, kReferenceA}, std::pair{B, kReferenceB}}) {
      auto const t   = wm_solution_table(alg, w1, w2);
      auto const ref = split_ws(ref_text);
      std::size_t most = 0;
      rep.line();
      rep.line(alg.name() + ", computed in (a,b,c) order:");
      for (auto const& r : t.rows) {
        most = std::max(most, r.solutions.size());
        rep.row("wm", {alg.name(), alg.label(r.a), alg.label(r.b),
                       alg.label(r.c),
                       render_solutions(alg, r.solutions)});
      }
      ok = ok && t.member;
      rep.line(alg.name() + ": " + std::to_string(t.rows.size())
               + " triples, largest solution set has "
               + std::to_string(most) + " element(s)");

      auto const cols = printed_column_order(alg.size());
      std::vector<std::string> ra, rb, rc;
      for (auto const& k : cols) {
        ra.push_back(alg.label(k[0]));
        rb.push_back(alg.label(k[1]));
        rc.push_back(alg.label(k[2]));
      }
      auto const swap_bc = compare_layout(t, "(a,c,b)", {0, 2, 1}, ref);
      auto const swap_ac = compare_layout(t, "(c,b,a)", {2, 1, 0}, ref);
      rep.line(alg.name() + ", reference layout (b slowest, then c, then a):");
      rep.row("layout", {alg.name(), "a", join(ra, " ")});
      rep.row("layout", {alg.name(), "b", join(rb, " ")});
      rep.row("layout", {alg.name(), "c", join(rc, " ")});
      rep.row("layout", {alg.name(), "reference", join(ref, " ")});
      for (auto const* lc : {&swap_bc, &swap_ac}) {
        rep.row("layout", {alg.name(), "computed at " + lc->reading,
                           join(lc->cells, " "),
                           std::to_string(lc->mismatches) + " mismatches"});
      }
      for (std::size_t i = 0; i < cols.size(); ++i) {
        if (swap_ac.cells[i] != ref[i]) {
          rep.row("diff", {alg.name(),
                           "column (a,b,c) = (" + ra[i] + "," + rb[i] + ","
                               + rc[i] + ")",
                           "reference " + ref[i],
                           "computed at (c,b,a) " + swap_ac.cells[i]});
        }
      }
      rep.line(alg.name() + ": the reference table equals the computed one "
               "read at (a,c,b) (b and c exchanged) with "
               + std::to_string(swap_bc.mismatches) + " mismatches; read at "
               "(c,b,a) (a and c exchanged) it has "
               + std::to_string(swap_ac.mismatches)
               + " mismatches, since the system is symmetric in a and c");
      ok = ok && swap_bc.mismatches == 0;
    }

    // (c) homomorphisms and kernels
    rep.section("kernels of f, g: B -> A");
    auto const f = lib::example_f();
    auto const g = lib::example_g();
    for (auto const& [name, h] : {std::pair{"f", f}, std::pair{"g", g}}) {
      auto const v = check_homomorphism(h);
      ok           = ok && !v;
      rep.row("hom", {name, render_map(h),
                      v ? "NOT a homomorphism: " + describe(h, *v)
                        : "homomorphism"});
    }
    auto const R = kernel_pair(f);
    auto const S = kernel_pair(g);
    rep.line("R = ker f = " + render_partition(R) + ", S = ker g = "
             + render_partition(S));
    auto const rs = compose(R, S);
    auto const sr = compose(S, R);
    rep.line("composition x (R;S) z means x R y and y S z for some y");
    add_relation_rows(rep, "R;S", rs);
    add_relation_rows(rep, "S;R", sr);
    Pair const p23{1, 2}, p32{2, 1};
    for (auto const& [name, rel] : {std::pair{"R;S", rs}, std::pair{"S;R", sr}}) {
      rep.row("member", {name, "(2,3)", yes_no(rel.contains(1, 2)), "(3,2)",
                         yes_no(rel.contains(2, 1))});
    }
    bool const split = rs.contains(p23.first, p23.second)
                       && !rs.contains(p32.first, p32.second)
                       && sr.contains(p32.first, p32.second)
                       && !sr.contains(p23.first, p23.second);
    ok = ok && split;
    rep.line("left-to-right: (2,3) is in R;S only, (3,2) is in S;R only");
    rep.line("right-to-left (RS = first S, then R): RS = S;R contains (3,2) "
             "but not (2,3), which is in SR = R;S");
    rep.line("R and S do not commute: " + yes_no(rs != sr));

    // (d) conclusions
    rep.section("conclusions");
    auto const qi = build_wm_quasi_identity(w1, w2);
    rep.line("weakly Mal'tsev quasi-identity: " + qi.render());
    bool wm_ok = true;
    for (auto const& alg : {A, B}) {
      auto const c = check_quasi_identity(qi, alg);
      wm_ok        = wm_ok && c.holds;
      rep.row("quasi", {alg.name(), std::to_string(c.assignments)
                                        + " assignments",
                        verdict_text(c, alg, qi.names)});
    }
    auto const chain = verify_hm_terms({w1, w2}, {A, B});
    bool       chain_ok = true;
    for (auto const& cv : chain) {
      chain_ok = chain_ok && cv.holds;
    }
    auto const v = find_hm_terms(VarietySpec::generated_by({A, B}), 6);
    ok = ok && wm_ok && chain_ok && v.outcome == PermOutcome::NPermutable
         && v.n == 3;
    rep.row("conclusion", {"weakly Mal'tsev",
                           wm_ok ? "quasi-identity holds on A and B"
                                 : "quasi-identity FAILS"});
    rep.row("conclusion", {"Goursat",
                           std::string(chain_ok ? "(zy)x, (xy)z pass"
                                                : "(zy)x, (xy)z FAIL")
                               + " the 3-permutability chain on A and B"});
    rep.row("conclusion",
            {"least n", v.outcome == PermOutcome::NPermutable
                            ? std::to_string(v.n) + " for the quasivariety "
                                                    "generated by A and B"
                            : "not found"});
    rep.row("conclusion", {"not Mal'tsev", split
                                               ? "ker f and ker g on B do not "
                                                 "commute"
                                               : "kernels unexpectedly commute"});
    rep.set_exit(ok ? kHolds : kCounterexample);
    rep.line(ok ? "all checks passed" : "SOME CHECKS FAILED");
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // identities and quasi-identities
  ////////////////////////////////////////////////////////////////////////

  Report cmd_check_identities(std::vector<FiniteAlgebra> const& algs,
                              std::vector<std::string> const&   identities) {
    auto const base = require_one_signature(algs);
    if (identities.empty()) {
      throw Error("check-identities: no identities given");
    }
    Report rep("check-identities " + names_of(algs) + " ("
               + std::to_string(identities.size()) + " identities)");
    auto const ids = parse_identity_system(identities, base.signature());
    for (auto const& alg : algs) {
      for (auto const& id : ids) {
        auto const c = check_identity(id, alg);
        rep.row("identity", {alg.name(), id.render(),
                             std::to_string(c.assignments) + " assignments",
                             verdict_text(c, alg, id.names)});
        rep.set_exit(c.holds ? kHolds : kCounterexample);
      }
    }
    return rep;
  }

  Report cmd_quasi_check(std::vector<FiniteAlgebra> const& algs,
                         std::vector<std::string> const&   quasi,
                         std::optional<std::string> const& w1,
                         std::optional<std::string> const& w2) {
    auto const base = require_one_signature(algs);
    Report     rep("quasi-check " + names_of(algs));
    std::vector<QuasiIdentity> qis;
    for (auto const& q : quasi) {
      qis.push_back(parse_quasi_identity(q, base.signature()));
    }
    if (w1 || w2) {
      if (!w1 || !w2) {
        throw Error("quasi-check: --w1 and --w2 go together");
      }
      qis.push_back(build_wm_quasi_identity(
          parse_ternary(*w1, base.signature()),
          parse_ternary(*w2, base.signature())));
    }
    if (qis.empty()) {
      throw Error("quasi-check: nothing to check");
    }
    for (auto const& qi : qis) {
      rep.line(qi.render());
      for (auto const& alg : algs) {
        auto const c = check_quasi_identity(qi, alg);
        rep.row("quasi", {alg.name(), std::to_string(c.assignments)
                                          + " assignments",
                          verdict_text(c, alg, qi.names)});
        rep.set_exit(c.holds ? kHolds : kCounterexample);
      }
    }
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // relations
  ////////////////////////////////////////////////////////////////////////

  Report cmd_rel_compose(FiniteAlgebra const& alg, std::string const& r_arg,
                         std::string const& s_arg) {
    Report     rep("rel compose " + alg.name() + " " + r_arg + " " + s_arg);
    auto const R = parse_relation_arg(alg, r_arg);
    auto const S = parse_relation_arg(alg, s_arg);
    add_relation_rows(rep, "R", R);
    add_relation_rows(rep, "S", S);
    rep.line("x (R;S) z iff x R y and y S z for some y");
    auto const rs = compose(R, S);
    auto const sr = compose(S, R);
    add_relation_rows(rep, "R;S", rs);
    add_relation_rows(rep, "S;R", sr);
    for (auto [x, y] : rs.pairs()) {
      if (!sr.contains(x, y)) {
        rep.row("only", {"R;S", render_pair(alg, {x, y})});
      }
    }
    for (auto [x, y] : sr.pairs()) {
      if (!rs.contains(x, y)) {
        rep.row("only", {"S;R", render_pair(alg, {x, y})});
      }
    }
    rep.line(rs == sr ? "R;S = S;R" : "R;S != S;R");
    rep.set_exit(rs == sr ? kHolds : kCounterexample);
    return rep;
  }

  Report cmd_rel_closure(FiniteAlgebra const& alg, std::string const& seed) {
    Report     rep("rel closure " + alg.name() + " " + seed);
    auto const S  = parse_relation_arg(alg, seed);
    auto const ps = S.pairs();
    auto const C  = compatible_closure(alg, alg, ps);
    add_relation_rows(rep, "Sg(seed)", C);
    if (classify_relation(C).reflexive) {
      auto const t = transitive_closure(C);
      add_relation_rows(rep, "transitive closure", t.closure);
      rep.line("stabilises at R^" + std::to_string(t.exponent));
      rep.row("exponent", {std::to_string(t.exponent)});
    } else {
      rep.line("not reflexive; add diagonal pairs for a transitive closure");
    }
    return rep;
  }

  Report cmd_rel_classify(FiniteAlgebra const& alg, std::string const& r) {
    Report     rep("rel classify " + alg.name() + " " + r);
    auto const R = parse_relation_arg(alg, r);
    add_relation_rows(rep, "R", R);
    add_classification(rep, "R", R);
    return rep;
  }

  Report cmd_rel_chain(FiniteAlgebra const& alg, std::string const& r_arg,
                       std::string const& s_arg, std::size_t n) {
    Report rep("rel chain " + alg.name() + " " + r_arg + " " + s_arg + " "
               + std::to_string(n));
    auto const R  = parse_relation_arg(alg, r_arg);
    auto const S  = parse_relation_arg(alg, s_arg);
    auto const rs = alternating_chain(R, S, n);
    auto const sr = alternating_chain(S, R, n);
    auto const nn = std::to_string(n);
    add_relation_rows(rep, "(R,S)_" + nn, rs);
    add_relation_rows(rep, "(S,R)_" + nn, sr);
    if (auto w = chains_differ(R, S, n)) {
      rep.line("differ at " + render_pair(alg, w->witness) + ", in "
               + (w->in_rs ? "(R,S)_" : "(S,R)_") + nn + " only");
      rep.row("witness", {render_pair(alg, w->witness),
                          w->in_rs ? "(R,S)" : "(S,R)"});
      rep.set_exit(kCounterexample);
    } else {
      rep.line("(R,S)_" + nn + " = (S,R)_" + nn);
    }
    return rep;
  }

  Report cmd_scan_preorders(std::vector<FiniteAlgebra> const& algs) {
    Report rep("scan-preorders " + names_of(algs));
    for (auto const& alg : algs) {
      auto const scan = preorder_symmetry_scan(alg);
      if (scan.counterexample) {
        auto const& ce = *scan.counterexample;
        rep.line(alg.name() + ": non-symmetric compatible preorder "
                 + render_relation(ce.preorder) + ", "
                 + render_pair(alg, ce.asymmetric) + " in, reverse not");
        rep.row("preorder", {alg.name(), "counterexample",
                             render_relation(ce.preorder),
                             render_pair(alg, ce.asymmetric)});
        rep.set_exit(kCounterexample);
      } else {
        rep.line(alg.name() + ": every compatible preorder is symmetric ("
                 + std::to_string(scan.seeds) + " seeds, "
                 + std::to_string(scan.preorders) + " distinct preorders)");
        rep.row("preorder", {alg.name(), "none", std::to_string(scan.seeds),
                             std::to_string(scan.preorders)});
      }
    }
    return rep;
  }

  Report cmd_wm_table(FiniteAlgebra const& alg, std::string const& w1s,
                      std::string const& w2s) {
    Report rep("wm-table " + alg.name() + " " + w1s + " " + w2s);
    auto const w1 = parse_ternary(w1s, alg.signature());
    auto const w2 = parse_ternary(w2s, alg.signature());
    auto const t  = wm_solution_table(alg, w1, w2);
    for (auto const& r : t.rows) {
      rep.row("wm", {alg.label(r.a), alg.label(r.b), alg.label(r.c),
                     render_solutions(alg, r.solutions)});
    }
    auto const qi = check_quasi_identity(build_wm_quasi_identity(w1, w2), alg);
    rep.line(t.member ? "every solution set has at most one element"
                      : "some triple has several solutions");
    rep.line(std::string("quasi-identity ") + (qi.holds ? "holds" : "fails"));
    rep.set_exit(t.member ? kHolds : kCounterexample);
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // internal structures
  ////////////////////////////////////////////////////////////////////////

  Report cmd_internal_analyze(InternalRequest const& req) {
    std::optional<InternalCategory> ic;
    ReflexiveGraph const*           graph = nullptr;
    std::optional<ReflexiveGraph>   g;
    std::string                     what;
    switch (req.kind) {
      case InternalKind::Pair:
      case InternalKind::Discrete:
      case InternalKind::Relation: {
        if (!req.algebra) {
          throw Error("internal analyze: an algebra is required");
        }
        auto const& X = *req.algebra;
        if (req.kind == InternalKind::Pair) {
          g    = pair_graph(X);
          what = "pair graph on " + X.name();
        } else if (req.kind == InternalKind::Discrete) {
          g    = discrete_graph(X);
          what = "discrete graph on " + X.name();
        } else {
          g    = relation_graph(parse_relation_arg(X, req.relation));
          what = "relation graph of " + req.relation + " on " + X.name();
        }
        break;
      }
      case InternalKind::Monoid:
        ic = one_object_category("M", req.monoid_size, req.monoid_table,
                                 req.monoid_unit);
        g  = ic->graph;
        what = "one-object category of a " + std::to_string(req.monoid_size)
               + "-element monoid";
        break;
    }
    graph = &*g;
    Report rep("internal analyze " + what);
    bool   groupoid = true;

    auto const pairs = composable_pairs(*graph);
    rep.line(what + ": |C0| = " + std::to_string(graph->c0.size())
             + ", |C1| = " + std::to_string(graph->c1.size())
             + ", |C2| = " + std::to_string(pairs.E().size()));
    auto const ms = find_multiplications(*graph);
    rep.row("step", {"multiplications", std::to_string(ms.found.size())
                                            + (ms.complete ? "" : " (budget hit)")});
    auto const je = joint_epicity_check(pairs, graph->c1);
    rep.row("step", {"(e1, e2) jointly epic against C1", yes_no(je.holds)});
    if (!ic) {
      if (ms.found.empty()) {
        rep.line("no multiplication: not an internal category");
        rep.set_exit(kCounterexample);
        return rep;
      }
      ic = make_internal_category(*graph, ms.found.front());
      if (ms.found.size() > 1) {
        rep.line("using the first of " + std::to_string(ms.found.size())
                 + " multiplications");
      }
    }
    if (auto bad = check_multiplicative_graph(*ic)) {
      rep.row("step", {"multiplicative graph", "FAILS " + *bad});
      rep.set_exit(kCounterexample);
      return rep;
    }
    rep.row("step", {"multiplicative graph", "ok"});
    auto const& C1 = graph->c1;
    // Arrows of a relation graph are named by their (codomain, domain) pair.
    bool const by_ends = req.kind == InternalKind::Pair
                         || req.kind == InternalKind::Relation;
    auto arrow = [&](Elem u) {
      if (!by_ends) {
        return C1.label(u);
      }
      auto const& C0 = graph->c0;
      return "(" + C0.label(graph->c(u)) + "," + C0.label(graph->d(u)) + ")";
    };
    if (auto t = check_category(*ic)) {
      rep.row("step", {"associativity", "FAILS at (" + C1.label((*t)[0]) + ","
                                            + C1.label((*t)[1]) + ","
                                            + C1.label((*t)[2]) + ")"});
      rep.set_exit(kCounterexample);
      return rep;
    }
    rep.row("step", {"associativity", "ok"});
    auto const cc = cancellability_check(*ic);
    auto pairs_text = [&](std::array<Elem, 4> const& w) {
      return "m(" + arrow(w[0]) + "," + arrow(w[1]) + ") = m(" + arrow(w[2])
             + "," + arrow(w[3]) + ")";
    };
    rep.row("step", {"left cancellable", cc.left ? "yes"
                                                 : "no, " + pairs_text(
                                                       *cc.left_witness)});
    rep.row("step", {"right cancellable", cc.right ? "yes"
                                                   : "no, " + pairs_text(
                                                         *cc.right_witness)});
    auto const direct = groupoid_inverse_direct(*ic);
    auto const route  = groupoid_inverse_by_relation(*ic);
    auto render_t = [&](std::optional<Mapping> const& t) {
      if (!t) {
        return std::string("none");
      }
      std::vector<std::string> parts;
      for (Elem u = 0; u < C1.size(); ++u) {
        parts.push_back(arrow(u) + "->" + arrow((*t)[u]));
      }
      return join(parts, " ");
    };
    rep.row("step", {"inverse (direct search)", render_t(direct)});
    rep.row("step", {"relation {(u, m(u,v))}",
                     std::string(route.jointly_monic ? "jointly monic"
                                                     : "not jointly monic")
                         + ", " + (route.symmetric ? "symmetric"
                                                   : "not symmetric")});
    rep.row("step", {"inverse (via the relation)", render_t(route.t)});
    bool const agree = direct.has_value() == route.t.has_value()
                       && (!direct || *direct == *route.t);
    rep.row("step", {"both routes agree", yes_no(agree)});
    groupoid = cc.left && cc.right && direct && agree;
    rep.line(groupoid ? "internal groupoid" : "internal category, not a groupoid");
    rep.set_exit(groupoid ? kHolds : kCounterexample);
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // fill-ins
  ////////////////////////////////////////////////////////////////////////

  Report cmd_condition_v(FiniteAlgebra const& alg, SpanFlavor flavor,
                         std::size_t per_span, std::uint64_t seed) {
    char const* fname = flavor == SpanFlavor::Span       ? "span"
                        : flavor == SpanFlavor::Relation ? "relation"
                                                         : "strong-relation";
    Report rep("condition-v " + alg.name() + " --flavor " + fname);
    auto const spd = diagonal_split_pullback(alg);
    rep.line("split pullback: A = C = " + alg.name() + "^2, B = " + alg.name()
             + ", f = g = first projection, r = s = diagonal; |E| = "
             + std::to_string(spd.E().size()));
    std::vector<FiniteAlgebra> sq{alg, alg};
    auto spans = kernel_pair_spans(product(sq).with_name(alg.name() + "^2"));
    if (flavor == SpanFlavor::Span) {
      spans.push_back(trivial_span(alg));
      spans.push_back(pair_span(alg));
    }
    auto const insts = condition_v_instances(spd, spans, per_span, seed);
    std::map<FillCount, std::size_t> counts;
    for (std::size_t i = 0; i < insts.size(); ++i) {
      auto const& in = insts[i];
      auto const  r  = condition_v_check(spd, in.span, in.alpha, in.beta,
                                         in.gamma, flavor);
      ++counts[r.outcome];
      if (r.outcome != FillCount::Unique) {
        rep.row("instance", {std::to_string(i), "|D| = "
                                                    + std::to_string(
                                                        in.span.D().size()),
                             r.outcome == FillCount::None ? "no phi"
                                                          : "multiple phi"});
      }
    }
    rep.row("count", {"instances", std::to_string(insts.size())});
    rep.row("count", {"unique phi", std::to_string(counts[FillCount::Unique])});
    rep.row("count", {"no phi", std::to_string(counts[FillCount::None])});
    rep.row("count",
            {"multiple phi", std::to_string(counts[FillCount::Multiple])});
    bool const all_unique = counts[FillCount::Unique] == insts.size();
    rep.line(all_unique ? "every instance has a unique fill-in"
                        : "some instance lacks a unique fill-in");
    rep.set_exit(all_unique ? kHolds : kCounterexample);
    return rep;
  }

  Report cmd_pushout_sections(FiniteAlgebra const&              alg,
                              std::vector<FiniteAlgebra> const& battery) {
    Report rep("pushout-sections " + alg.name() + " --battery "
               + names_of(battery));
    auto const spd = diagonal_split_pullback(alg);
    auto const r   = pushout_of_sections_check(spd, battery);
    rep.row("checked", {"(alpha, gamma) pairs", std::to_string(r.pairs)});
    if (r.holds) {
      rep.line("every pair has exactly one fill-in: consistent with the "
               "square of sections being a pushout, relative to the battery");
      return rep;
    }
    auto const& f = *r.failure;
    rep.line("fails in " + f.algebra + " with "
             + std::to_string(f.fills.size()) + " fill-ins");
    std::vector<std::string> a, c;
    for (auto x : f.alpha) {
      a.push_back(std::to_string(x));
    }
    for (auto x : f.gamma) {
      c.push_back(std::to_string(x));
    }
    rep.row("failure", {f.algebra, "alpha " + join(a, " "),
                        "gamma " + join(c, " "),
                        std::to_string(f.fills.size()) + " fill-ins"});
    rep.set_exit(kCounterexample);
    return rep;
  }

}  // namespace ualg
