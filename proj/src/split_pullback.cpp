#include "ualg/split_pullback.hpp"

namespace ualg {

  namespace {
    bool is_identity(Homomorphism const& h) {
      for (std::size_t i = 0; i < h.map.size(); ++i) {
        if (h.map[i] != i) {
          return false;
        }
      }
      return true;
    }

    bool same(Homomorphism const& a, Homomorphism const& b) {
      return a.map == b.map;
    }
  }  // namespace

  SplitPullback split_pullback(Homomorphism const& f, Homomorphism const& r,
                               Homomorphism const& g, Homomorphism const& s) {
    if (!f.cod.same_structure(g.cod) || !r.dom.same_structure(f.cod)
        || !s.dom.same_structure(g.cod) || !r.cod.same_structure(f.dom)
        || !s.cod.same_structure(g.dom)) {
      throw Error("split_pullback: the four maps do not form a cospan of "
                  "split epimorphisms over one B");
    }
    for (auto const* h : {&f, &r, &g, &s}) {
      if (auto v = check_homomorphism(*h)) {
        throw Error("split_pullback: not a homomorphism: " + describe(*h, *v));
      }
    }
    if (!is_identity(compose(f, r))) {
      throw Error("split_pullback: fr != 1_B");
    }
    if (!is_identity(compose(g, s))) {
      throw Error("split_pullback: gs != 1_B");
    }
    auto const& A = f.dom;
    auto const& C = g.dom;
    auto tuples = filter_tuples({A, C}, [&](std::vector<Elem> const& t) {
      return f.map[t[0]] == g.map[t[1]];
    });
    auto pb = make_subproduct("(" + A.name() + ")x_(" + f.cod.name() + ")("
                                  + C.name() + ")",
                              {A, C}, std::move(tuples));
    auto const& E = pb.algebra;
    Mapping     e1(A.size()), e2(C.size());
    for (Elem a = 0; a < A.size(); ++a) {
      e1[a] = pb.at({a, s.map[f.map[a]]});
    }
    for (Elem c = 0; c < C.size(); ++c) {
      e2[c] = pb.at({r.map[g.map[c]], c});
    }
    SplitPullback spd{f,
                      r,
                      g,
                      s,
                      pb.projection(0),
                      pb.projection(1),
                      Homomorphism{A, E, std::move(e1)},
                      Homomorphism{C, E, std::move(e2)},
                      std::move(pb)};
    if (auto bad = check_split_pullback(spd)) {
      throw Error("split_pullback: internal check failed: " + *bad);
    }
    return spd;
  }

  std::optional<std::string> check_split_pullback(SplitPullback const& spd) {
    for (auto const* h : {&spd.p1, &spd.p2, &spd.e1, &spd.e2}) {
      if (!is_homomorphism(*h)) {
        return std::string("structure map is not a homomorphism");
      }
    }
    if (!is_identity(compose(spd.f, spd.r))) {
      return std::string("fr = 1_B");
    }
    if (!is_identity(compose(spd.g, spd.s))) {
      return std::string("gs = 1_B");
    }
    if (!is_identity(compose(spd.p1, spd.e1))) {
      return std::string("p1 e1 = 1_A");
    }
    if (!is_identity(compose(spd.p2, spd.e2))) {
      return std::string("p2 e2 = 1_C");
    }
    if (!same(compose(spd.g, spd.p2), compose(spd.f, spd.p1))) {
      return std::string("g p2 = f p1");
    }
    if (!same(compose(spd.p1, spd.e2), compose(spd.r, spd.g))) {
      return std::string("p1 e2 = r g");
    }
    if (!same(compose(spd.e1, spd.r), compose(spd.e2, spd.s))) {
      return std::string("e1 r = e2 s");
    }
    if (!same(compose(spd.p2, spd.e1), compose(spd.s, spd.f))) {
      return std::string("p2 e1 = s f");
    }
    return std::nullopt;
  }

}  // namespace ualg
