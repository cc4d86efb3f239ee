#include "ualg/internal.hpp"

#include <map>
#include <random>
#include <unordered_set>

#include "ualg/library.hpp"

namespace ualg {

  namespace {
    bool is_identity_map(Mapping const& m) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] != i) {
          return false;
        }
      }
      return true;
    }

    void require_hom(Homomorphism const& h, std::string const& what) {
      if (h.map.size() != h.dom.size()) {
        throw Error(what + ": map has " + std::to_string(h.map.size())
                    + " entries for a domain of size "
                    + std::to_string(h.dom.size()));
      }
      if (auto v = check_homomorphism(h)) {
        throw Error(what + " is not a homomorphism: " + describe(h, *v));
      }
    }

    std::optional<Mapping> first_hom(FiniteAlgebra const& dom,
                                     FiniteAlgebra const& cod,
                                     HomSearch const&     search) {
      std::optional<Mapping> out;
      for_each_homomorphism(dom, cod, search, [&](Mapping const& m) {
        out = m;
        return false;
      });
      return out;
    }
  }  // namespace

  std::optional<std::string> check_reflexive_graph(ReflexiveGraph const& g) {
    for (auto const* h : {&g.d, &g.c, &g.e}) {
      if (h->map.size() != h->dom.size() || !is_homomorphism(*h)) {
        return std::string("structure map is not a homomorphism");
      }
    }
    if (!g.d.dom.same_structure(g.c1) || !g.c.dom.same_structure(g.c1)
        || !g.e.cod.same_structure(g.c1) || !g.d.cod.same_structure(g.c0)
        || !g.c.cod.same_structure(g.c0) || !g.e.dom.same_structure(g.c0)) {
      return std::string("structure maps have the wrong (co)domains");
    }
    if (!is_identity_map(compose(g.d, g.e).map)) {
      return std::string("de = 1");
    }
    if (!is_identity_map(compose(g.c, g.e).map)) {
      return std::string("ce = 1");
    }
    return std::nullopt;
  }

  ReflexiveGraph discrete_graph(FiniteAlgebra const& x) {
    auto id = identity_hom(x);
    return ReflexiveGraph{x, x, id, id, id};
  }

  ReflexiveGraph relation_graph(Relation const& r) {
    auto const cls = classify_relation(r);
    if (!cls.square || !cls.reflexive) {
      throw Error("relation_graph: relation must be reflexive");
    }
    if (auto v = check_compatible(r)) {
      throw Error("relation_graph: relation is not compatible");
    }
    auto const&                    x = r.left();
    std::vector<std::vector<Elem>> tuples;
    for (auto [a, b] : r.pairs()) {
      tuples.push_back({a, b});
    }
    auto    sp = make_subproduct(x.name() + "^2", {x, x}, std::move(tuples));
    Mapping e(x.size());
    for (Elem a = 0; a < x.size(); ++a) {
      e[a] = sp.at({a, a});
    }
    ReflexiveGraph g{sp.algebra, x, sp.projection(1), sp.projection(0),
                     Homomorphism{x, sp.algebra, std::move(e)}};
    return g;
  }

  ReflexiveGraph pair_graph(FiniteAlgebra const& x) {
    return relation_graph(Relation::full(x, x));
  }

  SplitPullback composable_pairs(ReflexiveGraph const& g) {
    if (auto bad = check_reflexive_graph(g)) {
      throw Error("composable_pairs: reflexive graph law fails: " + *bad);
    }
    return split_pullback(g.d, g.e, g.c, g.e);
  }

  Multiplications find_multiplications(ReflexiveGraph const& g,
                                       std::size_t           max_nodes) {
    auto const  pairs = composable_pairs(g);
    auto const& E     = pairs.E();
    auto const& C1    = g.c1;
    HomSearch   search;
    search.max_nodes = max_nodes;
    search.pinned.assign(E.size(), std::nullopt);
    search.allowed.assign(E.size(), {});
    Multiplications out;
    for (Elem u = 0; u < C1.size(); ++u) {
      for (auto idx : {pairs.e1(u), pairs.e2(u)}) {
        if (search.pinned[idx] && *search.pinned[idx] != u) {
          return out;
        }
        search.pinned[idx] = u;
      }
    }
    for (Elem i = 0; i < E.size(); ++i) {
      auto const& t = pairs.pullback.tuples[i];
      for (Elem w = 0; w < C1.size(); ++w) {
        if (g.d(w) == g.d(t[1]) && g.c(w) == g.c(t[0])) {
          search.allowed[i].push_back(w);
        }
      }
    }
    try {
      for_each_homomorphism(E, C1, search, [&](Mapping const& m) {
        out.found.push_back(m);
        return true;
      });
    } catch (ResourceError const&) {
      out.complete = false;
    }
    return out;
  }

  InternalCategory make_internal_category(ReflexiveGraph g, Mapping m) {
    auto pairs = composable_pairs(g);
    if (m.size() != pairs.E().size()) {
      throw Error("make_internal_category: multiplication has "
                  + std::to_string(m.size()) + " entries for "
                  + std::to_string(pairs.E().size()) + " composable pairs");
    }
    for (auto w : m) {
      if (w >= g.c1.size()) {
        throw Error("make_internal_category: multiplication value out of "
                    "range");
      }
    }
    return InternalCategory{std::move(g), std::move(pairs), std::move(m)};
  }

  InternalCategory make_internal_category(
      ReflexiveGraph g, std::function<Elem(Elem, Elem)> const& mul) {
    auto    pairs = composable_pairs(g);
    Mapping m(pairs.E().size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      auto const& t = pairs.pullback.tuples[i];
      m[i]          = mul(t[0], t[1]);
    }
    return make_internal_category(std::move(g), std::move(m));
  }

  std::optional<std::string> check_multiplicative_graph(
      InternalCategory const& ic) {
    Homomorphism const mh{ic.pairs.E(), ic.graph.c1, ic.m};
    if (auto v = check_homomorphism(mh)) {
      return "m is not a homomorphism: " + describe(mh, *v);
    }
    if (!is_identity_map(compose(mh, ic.pairs.e1).map)) {
      return std::string("m e1 = 1");
    }
    if (!is_identity_map(compose(mh, ic.pairs.e2).map)) {
      return std::string("m e2 = 1");
    }
    if (!same_map(compose(ic.graph.d, mh), compose(ic.graph.d, ic.pairs.p2))) {
      return std::string("dm = d pi2");
    }
    if (!same_map(compose(ic.graph.c, mh), compose(ic.graph.c, ic.pairs.p1))) {
      return std::string("cm = c pi1");
    }
    return std::nullopt;
  }

  Subproduct composable_triples(InternalCategory const& ic) {
    auto const& g      = ic.graph;
    auto        tuples = filter_tuples(
        {g.c1, g.c1, g.c1}, [&](std::vector<Elem> const& t) {
          return g.d(t[0]) == g.c(t[1]) && g.d(t[1]) == g.c(t[2]);
        });
    return make_subproduct("C3", {g.c1, g.c1, g.c1}, std::move(tuples));
  }

  std::optional<std::array<Elem, 3>> check_category(InternalCategory const& ic) {
    auto const& g  = ic.graph;
    auto const  n  = static_cast<Elem>(g.c1.size());
    for (Elem u = 0; u < n; ++u) {
      for (Elem v = 0; v < n; ++v) {
        if (!ic.composable(u, v)) {
          continue;
        }
        for (Elem w = 0; w < n; ++w) {
          if (!ic.composable(v, w)) {
            continue;
          }
          if (ic.mul(ic.mul(u, v), w) != ic.mul(u, ic.mul(v, w))) {
            return std::array<Elem, 3>{u, v, w};
          }
        }
      }
    }
    return std::nullopt;
  }

  Cancellability cancellability_check(InternalCategory const& ic) {
    Cancellability                  out;
    std::map<std::pair<Elem, Elem>, Elem> left, right;
    for (auto const& t : ic.pairs.pullback.tuples) {
      Elem const u = t[0], v = t[1], w = ic.mul(u, v);
      if (out.left) {
        auto [it, fresh] = left.emplace(std::pair{u, w}, v);
        if (!fresh) {
          out.left         = false;
          out.left_witness = std::array<Elem, 4>{u, it->second, u, v};
        }
      }
      if (out.right) {
        auto [it, fresh] = right.emplace(std::pair{w, v}, u);
        if (!fresh) {
          out.right         = false;
          out.right_witness = std::array<Elem, 4>{it->second, v, u, v};
        }
      }
    }
    return out;
  }

  std::optional<std::string> check_groupoid_inverse(InternalCategory const& ic,
                                                    Mapping const&          t) {
    auto const& g = ic.graph;
    if (t.size() != g.c1.size()) {
      return std::string("t has the wrong size");
    }
    for (auto x : t) {
      if (x >= g.c1.size()) {
        return std::string("t value out of range");
      }
    }
    if (!is_homomorphism(Homomorphism{g.c1, g.c1, t})) {
      return std::string("t is not a homomorphism");
    }
    for (Elem u = 0; u < g.c1.size(); ++u) {
      if (g.c(t[u]) != g.d(u)) {
        return std::string("ct = d");
      }
      if (g.d(t[u]) != g.c(u)) {
        return std::string("dt = c");
      }
      if (ic.mul(u, t[u]) != g.e(g.c(u))) {
        return std::string("m<1,t> = ec");
      }
      if (ic.mul(t[u], u) != g.e(g.d(u))) {
        return std::string("m<t,1> = ed");
      }
    }
    return std::nullopt;
  }

  std::optional<Mapping> groupoid_inverse_direct(InternalCategory const& ic) {
    auto const& g = ic.graph;
    auto const  n = static_cast<Elem>(g.c1.size());
    HomSearch   search;
    search.allowed.assign(n, {});
    for (Elem u = 0; u < n; ++u) {
      for (Elem q = 0; q < n; ++q) {
        if (g.c(q) == g.d(u) && g.d(q) == g.c(u) && ic.mul(u, q) == g.e(g.c(u))
            && ic.mul(q, u) == g.e(g.d(u))) {
          search.allowed[u].push_back(q);
        }
      }
    }
    auto t = first_hom(g.c1, g.c1, search);
    if (t && check_groupoid_inverse(ic, *t)) {
      throw Error("groupoid_inverse_direct: search returned an invalid t");
    }
    return t;
  }

  InverseByRelation groupoid_inverse_by_relation(InternalCategory const& ic) {
    auto const&       g = ic.graph;
    auto const        n = static_cast<Elem>(g.c1.size());
    InverseByRelation out{Relation(g.c1, g.c1), false, false, std::nullopt};
    for (auto const& t : ic.pairs.pullback.tuples) {
      out.q.insert(t[0], ic.mul(t[0], t[1]));
    }
    out.jointly_monic = cancellability_check(ic).left;
    out.symmetric     = classify_relation(out.q).symmetric;
    if (!out.symmetric) {
      return out;
    }
    Mapping t(n);
    for (Elem u = 0; u < n; ++u) {
      bool found = false;
      for (Elem q = 0; q < n && !found; ++q) {
        if (ic.composable(u, q) && ic.mul(u, q) == g.e(g.c(u))) {
          t[u]  = q;
          found = true;
        }
      }
      if (!found) {
        return out;
      }
    }
    if (!check_groupoid_inverse(ic, t)) {
      out.t = std::move(t);
    }
    return out;
  }

  InternalCategory relation_groupoid(Relation const& congruence) {
    auto const cls = classify_relation(congruence);
    if (!cls.equivalence) {
      throw Error("relation_groupoid: relation must be an equivalence");
    }
    auto g = relation_graph(congruence);
    // C1 elements are the relation's pairs in lexicographic order.
    auto const     ps = congruence.pairs();
    std::map<Pair, Elem> index;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      index.emplace(ps[i], static_cast<Elem>(i));
    }
    return make_internal_category(std::move(g), [&](Elem u, Elem v) {
      return index.at({ps[u].first, ps[v].second});
    });
  }

  InternalCategory pair_groupoid(FiniteAlgebra const& x) {
    return relation_groupoid(Relation::full(x, x));
  }

  InternalCategory one_object_category(std::string       name,
                                       std::size_t       n,
                                       std::vector<Elem> table,
                                       Elem              unit) {
    if (table.size() != n * n || unit >= n) {
      throw Error("one_object_category: bad monoid table");
    }
    FiniteAlgebra c1(std::move(name), Signature{}, n, {});
    auto          point = lib::plain_set(1);
    Homomorphism  to_point{c1, point, Mapping(n, 0)};
    ReflexiveGraph g{c1, point, to_point, to_point,
                     Homomorphism{point, c1, {unit}}};
    return make_internal_category(std::move(g), [&](Elem u, Elem v) {
      return table[u * n + v];
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Pregroupoids
  ////////////////////////////////////////////////////////////////////////

  Span make_span(Homomorphism d, Homomorphism c) {
    if (!d.dom.same_structure(c.dom)) {
      throw Error("make_span: legs have different domains");
    }
    require_hom(d, "span leg d");
    require_hom(c, "span leg c");
    return Span{std::move(d), std::move(c)};
  }

  Span trivial_span(FiniteAlgebra const& x) {
    auto one = lib::trivial_algebra(x.signature());
    Homomorphism h{x, one, Mapping(x.size(), 0)};
    return make_span(h, h);
  }

  Span pair_span(FiniteAlgebra const& x) {
    std::vector<FiniteAlgebra> f{x, x};
    auto sq = product(f).with_name(x.name() + "^2");
    return make_span(product_projection(sq, f, 1),
                     product_projection(sq, f, 0));
  }

  bool jointly_injective(Span const& s) {
    std::map<std::pair<Elem, Elem>, Elem> seen;
    for (Elem x = 0; x < s.D().size(); ++x) {
      if (!seen.emplace(std::pair{s.d(x), s.c(x)}, x).second) {
        return false;
      }
    }
    return true;
  }

  Subproduct span_triples(Span const& s) {
    auto const& D = s.D();
    auto tuples = filter_tuples({D, D, D}, [&](std::vector<Elem> const& t) {
      return s.d(t[0]) == s.d(t[1]) && s.c(t[1]) == s.c(t[2]);
    });
    return make_subproduct("T(" + D.name() + ")", {D, D, D},
                           std::move(tuples));
  }

  Pregroupoid make_pregroupoid(
      Span s, std::function<Elem(Elem, Elem, Elem)> const& p) {
    auto    triples = span_triples(s);
    Mapping m(triples.tuples.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      auto const& t = triples.tuples[i];
      m[i]          = p(t[0], t[1], t[2]);
      if (m[i] >= s.D().size()) {
        throw Error("make_pregroupoid: p value out of range");
      }
    }
    return Pregroupoid{std::move(s), std::move(triples), std::move(m)};
  }

  std::optional<PregroupoidViolation> check_pregroupoid(Pregroupoid const& pg) {
    Homomorphism const ph{pg.triples.algebra, pg.span.D(), pg.p};
    if (auto v = check_homomorphism(ph)) {
      auto const& t = pg.triples.tuples[v->args.empty() ? 0 : v->args[0]];
      return PregroupoidViolation{"p is a homomorphism (" + describe(ph, *v)
                                      + ")",
                                  {t[0], t[1], t[2]}};
    }
    auto const& s = pg.span;
    for (std::size_t i = 0; i < pg.p.size(); ++i) {
      auto const&         t = pg.triples.tuples[i];
      std::array<Elem, 3> tr{t[0], t[1], t[2]};
      auto const          r = pg.p[i];
      if (t[1] == t[2] && r != t[0]) {
        return PregroupoidViolation{"p(x,y,y) = x", tr};
      }
      if (t[0] == t[1] && r != t[2]) {
        return PregroupoidViolation{"p(x,x,y) = y", tr};
      }
      if (s.d(r) != s.d(t[2])) {
        return PregroupoidViolation{"dp(x,y,z) = dz", tr};
      }
      if (s.c(r) != s.c(t[0])) {
        return PregroupoidViolation{"cp(x,y,z) = cx", tr};
      }
    }
    return std::nullopt;
  }

  InterchangeResult interchange_check(Pregroupoid const& pg) {
    auto const& s = pg.span;
    auto const& T = pg.triples.tuples;
    auto const  p = [&](Elem x, Elem y, Elem z) {
      auto i = pg.triples.find({x, y, z});
      if (!i) {
        throw Error("interchange_check: composite triple is not composable; "
                    "check_pregroupoid first");
      }
      return pg.p[*i];
    };
    InterchangeResult out;
    for (auto const& r1 : T) {
      for (auto const& r2 : T) {
        if (s.d(r1[0]) != s.d(r2[0]) || s.d(r1[1]) != s.d(r2[1])
            || s.d(r1[2]) != s.d(r2[2])) {
          continue;
        }
        for (auto const& r3 : T) {
          if (s.c(r2[0]) != s.c(r3[0]) || s.c(r2[1]) != s.c(r3[1])
              || s.c(r2[2]) != s.c(r3[2])) {
            continue;
          }
          ++out.configurations;
          auto const vert = p(p(r1[0], r2[0], r3[0]), p(r1[1], r2[1], r3[1]),
                              p(r1[2], r2[2], r3[2]));
          auto const horiz = p(p(r1[0], r1[1], r1[2]), p(r2[0], r2[1], r2[2]),
                               p(r3[0], r3[1], r3[2]));
          if (vert != horiz && out.holds) {
            out.holds   = false;
            out.witness = std::array<Elem, 9>{r1[0], r1[1], r1[2], r2[0], r2[1],
                                              r2[2], r3[0], r3[1], r3[2]};
          }
        }
      }
    }
    return out;
  }

  std::optional<PerturbedPregroupoid> perturb_for_interchange_failure(
      Pregroupoid const& pg) {
    auto const n = static_cast<Elem>(pg.span.D().size());
    for (std::size_t i = 0; i < pg.p.size(); ++i) {
      auto const& t = pg.triples.tuples[i];
      if (t[0] == t[1] || t[1] == t[2]) {
        continue;
      }
      for (Elem w = 0; w < n; ++w) {
        if (w == pg.p[i]) {
          continue;
        }
        Pregroupoid cand = pg;
        cand.p[i]        = w;
        if (check_pregroupoid(cand)) {
          continue;
        }
        auto ic = interchange_check(cand);
        if (!ic.holds) {
          return PerturbedPregroupoid{std::move(cand), {t[0], t[1], t[2]},
                                      pg.p[i], w, std::move(ic)};
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Fill-ins
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // phi: E -> D agreeing with alpha on Im e1 and gamma on Im e2, optionally
    // restricted pointwise; stops after `limit` results.
    std::vector<Mapping> fill_ins(SplitPullback const& spd,
                                  FiniteAlgebra const& d, Mapping const& alpha,
                                  Mapping const&                        gamma,
                                  std::vector<std::vector<Elem>> allowed,
                                  std::size_t limit, std::size_t max_nodes) {
      auto const& E = spd.E();
      HomSearch   search;
      search.max_nodes = max_nodes;
      search.allowed   = std::move(allowed);
      search.pinned.assign(E.size(), std::nullopt);
      auto pin = [&](Elem at, Elem value) {
        auto& slot = search.pinned[at];
        if (slot && *slot != value) {
          return false;
        }
        slot = value;
        return true;
      };
      for (Elem a = 0; a < spd.A().size(); ++a) {
        if (!pin(spd.e1(a), alpha[a])) {
          return {};
        }
      }
      for (Elem c = 0; c < spd.C().size(); ++c) {
        if (!pin(spd.e2(c), gamma[c])) {
          return {};
        }
      }
      std::vector<Mapping> out;
      for_each_homomorphism(E, d, search, [&](Mapping const& m) {
        out.push_back(m);
        return out.size() < limit;
      });
      return out;
    }

    void require_maps(Homomorphism const& h, FiniteAlgebra const& dom,
                      FiniteAlgebra const& cod, std::string const& name) {
      if (!h.dom.same_structure(dom) || !h.cod.same_structure(cod)) {
        throw Error(name + " has the wrong domain or codomain");
      }
      require_hom(h, name);
    }
  }  // namespace

  FillIn condition_v_check(SplitPullback const& spd, Span const& span,
                           Homomorphism const& alpha, Homomorphism const& beta,
                           Homomorphism const& gamma, SpanFlavor flavor,
                           std::size_t max_nodes) {
    auto const& D = span.D();
    require_maps(alpha, spd.A(), D, "alpha");
    require_maps(beta, spd.B(), D, "beta");
    require_maps(gamma, spd.C(), D, "gamma");
    if (!same_map(compose(alpha, spd.r), beta)) {
      throw Error("precondition alpha r = beta fails");
    }
    if (!same_map(compose(gamma, spd.s), beta)) {
      throw Error("precondition gamma s = beta fails");
    }
    if (!same_map(compose(span.d, alpha),
                  compose(compose(span.d, beta), spd.f))) {
      throw Error("precondition d alpha = d beta f fails");
    }
    if (!same_map(compose(span.c, gamma),
                  compose(compose(span.c, beta), spd.g))) {
      throw Error("precondition c gamma = c beta g fails");
    }
    if (flavor != SpanFlavor::Span && !jointly_injective(span)) {
      throw Error("precondition: the legs (d, c) are not jointly injective, "
                  "so the span is not a relation");
    }
    auto const&                    E = spd.E();
    std::vector<std::vector<Elem>> allowed(E.size());
    for (Elem i = 0; i < E.size(); ++i) {
      auto const& t = spd.pullback.tuples[i];
      for (Elem w = 0; w < D.size(); ++w) {
        if (span.d(w) == span.d(gamma(t[1]))
            && span.c(w) == span.c(alpha(t[0]))) {
          allowed[i].push_back(w);
        }
      }
    }
    FillIn out;
    out.fills = fill_ins(spd, D, alpha.map, gamma.map, std::move(allowed), 2,
                         max_nodes);
    out.outcome = out.fills.empty()       ? FillCount::None
                  : out.fills.size() == 1 ? FillCount::Unique
                                          : FillCount::Multiple;
    return out;
  }

  PushoutCheck pushout_of_sections_check(
      SplitPullback const& spd, std::vector<FiniteAlgebra> const& battery,
      std::size_t max_nodes) {
    PushoutCheck out;
    for (auto const& D : battery) {
      require_same_signature(spd.E(), D, "pushout_of_sections_check");
      HomSearch any;
      any.max_nodes = max_nodes;
      std::vector<Mapping> alphas;
      for_each_homomorphism(spd.A(), D, any, [&](Mapping const& m) {
        alphas.push_back(m);
        return true;
      });
      for (auto const& alpha : alphas) {
        HomSearch gs;
        gs.max_nodes = max_nodes;
        gs.pinned.assign(spd.C().size(), std::nullopt);
        for (Elem b = 0; b < spd.B().size(); ++b) {
          gs.pinned[spd.s(b)] = alpha[spd.r(b)];
        }
        std::vector<Mapping> gammas;
        for_each_homomorphism(spd.C(), D, gs, [&](Mapping const& m) {
          gammas.push_back(m);
          return true;
        });
        for (auto const& gamma : gammas) {
          ++out.pairs;
          auto fills = fill_ins(spd, D, alpha, gamma, {}, 2, max_nodes);
          if (fills.size() != 1) {
            out.holds   = false;
            out.failure = PushoutFailure{D.name(), alpha, gamma,
                                         std::move(fills)};
            return out;
          }
        }
      }
    }
    return out;
  }

}  // namespace ualg

namespace ualg {

  SplitPullback diagonal_split_pullback(FiniteAlgebra const& x) {
    std::vector<FiniteAlgebra> f{x, x};
    auto    sq = product(f).with_name(x.name() + "^2");
    auto    p0 = product_projection(sq, f, 0);
    Mapping diag(x.size());
    for (Elem b = 0; b < x.size(); ++b) {
      std::vector<Elem> t{b, b};
      diag[b] = encode_product(f, t);
    }
    Homomorphism r{x, sq, std::move(diag)};
    return split_pullback(p0, r, p0, r);
  }

  std::vector<Span> kernel_pair_spans(FiniteAlgebra const& y) {
    std::vector<Span>                         out;
    std::unordered_set<Relation, RelationHash> seen;
    HomSearch                                 all;
    for_each_homomorphism(y, y, all, [&](Mapping const& m) {
      auto k = kernel_pair(Homomorphism{y, y, m});
      if (!seen.insert(k).second) {
        return true;
      }
      std::vector<std::vector<Elem>> tuples;
      for (auto [a, b] : k.pairs()) {
        tuples.push_back({a, b});
      }
      auto sp = make_subproduct("ker" + std::to_string(out.size()), {y, y},
                                std::move(tuples));
      out.push_back(make_span(sp.projection(1), sp.projection(0)));
      return true;
    });
    return out;
  }

  std::vector<ConditionVInstance> condition_v_instances(
      SplitPullback const& spd, std::vector<Span> const& spans,
      std::size_t per_span, std::uint64_t seed) {
    std::mt19937_64                 rng(seed);
    std::vector<ConditionVInstance> out;
    auto pick = [&](std::vector<Mapping> const& v) -> Mapping const& {
      return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
    };
    for (auto const& span : spans) {
      auto const&          D = span.D();
      std::vector<Mapping> betas;
      HomSearch            any;
      for_each_homomorphism(spd.B(), D, any, [&](Mapping const& m) {
        betas.push_back(m);
        return true;
      });
      if (betas.empty()) {
        continue;
      }
      // Homs out of `dom` agreeing with beta through the section and with
      // the leg condition leg(h(x)) = leg(beta(proj(x))).
      auto extensions = [&](FiniteAlgebra const& dom, Homomorphism const& sec,
                            Homomorphism const& proj, Homomorphism const& leg,
                            Mapping const& beta) {
        HomSearch s;
        s.pinned.assign(dom.size(), std::nullopt);
        for (Elem b = 0; b < spd.B().size(); ++b) {
          s.pinned[sec(b)] = beta[b];
        }
        s.allowed.assign(dom.size(), {});
        for (Elem x = 0; x < dom.size(); ++x) {
          for (Elem w = 0; w < D.size(); ++w) {
            if (leg(w) == leg(beta[proj(x)])) {
              s.allowed[x].push_back(w);
            }
          }
        }
        std::vector<Mapping> found;
        for_each_homomorphism(dom, D, s, [&](Mapping const& m) {
          found.push_back(m);
          return true;
        });
        return found;
      };
      for (std::size_t k = 0; k < per_span; ++k) {
        auto const& beta   = pick(betas);
        auto const  alphas = extensions(spd.A(), spd.r, spd.f, span.d, beta);
        auto const  gammas = extensions(spd.C(), spd.s, spd.g, span.c, beta);
        if (alphas.empty() || gammas.empty()) {
          continue;
        }
        out.push_back(ConditionVInstance{
            span, Homomorphism{spd.A(), D, pick(alphas)},
            Homomorphism{spd.B(), D, beta},
            Homomorphism{spd.C(), D, pick(gammas)}});
      }
    }
    return out;
  }

}  // namespace ualg
