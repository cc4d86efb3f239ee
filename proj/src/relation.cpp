#include "ualg/relation.hpp"

#include <algorithm>
#include <bit>

namespace ualg {

  Relation::Relation(FiniteAlgebra left, FiniteAlgebra right)
      : _left(std::move(left)),
        _right(std::move(right)),
        _words((_right.size() + 63) / 64),
        _bits(_left.size() * _words, 0) {}

  Relation Relation::from_pairs(FiniteAlgebra left, FiniteAlgebra right,
                                std::span<Pair const> pairs) {
    Relation r(std::move(left), std::move(right));
    for (auto [x, y] : pairs) {
      r.insert(x, y);
    }
    return r;
  }

  Relation Relation::diagonal(FiniteAlgebra const& alg) {
    Relation r(alg, alg);
    for (Elem x = 0; x < alg.size(); ++x) {
      r.insert(x, x);
    }
    return r;
  }

  Relation Relation::full(FiniteAlgebra const& left,
                          FiniteAlgebra const& right) {
    Relation r(left, right);
    for (Elem x = 0; x < left.size(); ++x) {
      for (Elem y = 0; y < right.size(); ++y) {
        r.insert(x, y);
      }
    }
    return r;
  }

  void Relation::insert(Elem x, Elem y) {
    if (x >= _left.size() || y >= _right.size()) {
      throw Error("relation pair (" + std::to_string(x) + ","
                  + std::to_string(y) + ") out of range");
    }
    _bits[x * _words + (y >> 6)] |= std::uint64_t{1} << (y & 63);
  }

  std::size_t Relation::count() const noexcept {
    std::size_t n = 0;
    for (auto w : _bits) {
      n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
  }

  std::vector<Pair> Relation::pairs() const {
    std::vector<Pair> out;
    for (Elem x = 0; x < _left.size(); ++x) {
      for (Elem y = 0; y < _right.size(); ++y) {
        if (contains(x, y)) {
          out.emplace_back(x, y);
        }
      }
    }
    return out;
  }

  Relation Relation::inverse() const {
    Relation r(_right, _left);
    for (Elem x = 0; x < _left.size(); ++x) {
      for (Elem y = 0; y < _right.size(); ++y) {
        if (contains(x, y)) {
          r.insert(y, x);
        }
      }
    }
    return r;
  }

  bool Relation::subset_of(Relation const& other) const {
    if (_bits.size() != other._bits.size()) {
      return false;
    }
    for (std::size_t i = 0; i < _bits.size(); ++i) {
      if (_bits[i] & ~other._bits[i]) {
        return false;
      }
    }
    return true;
  }

  Relation Relation::operator|(Relation const& other) const {
    if (_left.size() != other._left.size()
        || _right.size() != other._right.size()) {
      throw Error("union of relations with different carriers");
    }
    Relation r = *this;
    for (std::size_t i = 0; i < _bits.size(); ++i) {
      r._bits[i] |= other._bits[i];
    }
    return r;
  }

  bool Relation::operator==(Relation const& other) const {
    return _left.size() == other._left.size()
           && _right.size() == other._right.size() && _bits == other._bits;
  }

  std::size_t Relation::hash() const noexcept {
    std::size_t h = _left.size() * 31 + _right.size();
    for (auto w : _bits) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

  Relation compose(Relation const& r, Relation const& s) {
    if (!r.right().same_structure(s.left())) {
      throw Error("compose: middle algebras '" + r.right().name() + "' and '"
                  + s.left().name() + "' differ");
    }
    Relation out(r.left(), s.right());
    for (Elem x = 0; x < r.left().size(); ++x) {
      auto dst = out._bits.data() + x * out._words;
      for (Elem y = 0; y < r.right().size(); ++y) {
        if (r.contains(x, y)) {
          auto src = s.row(y);
          for (std::size_t w = 0; w < out._words; ++w) {
            dst[w] |= src[w];
          }
        }
      }
    }
    return out;
  }

  std::optional<CompatibilityViolation> check_compatible(Relation const& r) {
    auto const& L   = r.left();
    auto const& R   = r.right();
    require_same_signature(L, R, "check_compatible");
    auto const  ps  = r.pairs();
    auto const& sig = L.signature();
    auto const  m   = ps.size();
    std::vector<Elem> la, ra;
    for (std::size_t op = 0; op < sig.size(); ++op) {
      auto const k = sig[op].arity;
      if (k > 0 && m == 0) {
        continue;
      }
      std::vector<std::size_t> pos(k, 0);
      la.assign(k, 0);
      ra.assign(k, 0);
      while (true) {
        for (std::size_t j = 0; j < k; ++j) {
          la[j] = ps[pos[j]].first;
          ra[j] = ps[pos[j]].second;
        }
        Pair res{L.apply(op, la), R.apply(op, ra)};
        if (!r.contains(res.first, res.second)) {
          std::vector<Pair> args;
          for (auto p : pos) {
            args.push_back(ps[p]);
          }
          return CompatibilityViolation{op, std::move(args), res};
        }
        std::size_t j = k;
        while (j > 0 && ++pos[j - 1] == m) {
          pos[j - 1] = 0;
          --j;
        }
        if (j == 0) {
          break;
        }
      }
    }
    return std::nullopt;
  }

  bool is_compatible(Relation const& r) {
    return !check_compatible(r).has_value();
  }

  namespace {
    std::vector<std::vector<Elem>> pair_seeds(FiniteAlgebra const& left,
                                              FiniteAlgebra const& right,
                                              std::span<Pair const> seed) {
      require_same_signature(left, right, "compatible_closure");
      std::vector<std::vector<Elem>> seeds;
      for (auto [x, y] : seed) {
        if (x >= left.size() || y >= right.size()) {
          throw Error("compatible_closure: seed pair out of range");
        }
        seeds.push_back({x, y});
      }
      return seeds;
    }
  }  // namespace

  Term const& WitnessedRelation::witness(Elem x, Elem y) const {
    auto i = closure.find({x, y});
    if (!i) {
      throw Error("pair not in relation");
    }
    return closure.witnesses[*i];
  }

  WitnessedRelation compatible_closure_with_witnesses(
      FiniteAlgebra const& left, FiniteAlgebra const& right,
      std::span<Pair const> seed, Limits const& limits) {
    auto     seeds = pair_seeds(left, right, seed);
    Relation rel(left, right);
    if (seeds.empty() && !left.signature().has_constants()) {
      return WitnessedRelation{std::move(rel), Closure{{left, right}, {}, {}, {}, {}}};
    }
    auto cl = generate_closure({left, right}, seeds, limits);
    for (auto const& p : cl.points) {
      rel.insert(p[0], p[1]);
    }
    return WitnessedRelation{std::move(rel), std::move(cl)};
  }

  Relation compatible_closure(FiniteAlgebra const& left,
                              FiniteAlgebra const& right,
                              std::span<Pair const> seed,
                              Limits const&         limits) {
    auto     seeds = pair_seeds(left, right, seed);
    Relation rel(left, right);
    // Plain fixpoint on the bit matrix; no witnesses needed.
    std::vector<Pair> elems;
    for (auto [x, y] : seed) {
      if (!rel.contains(x, y)) {
        rel.insert(x, y);
        elems.emplace_back(x, y);
      }
    }
    auto const&       sig      = left.signature();
    std::size_t       frontier = 0;
    bool              first    = true;
    std::vector<Elem> la, ra;
    while (true) {
      std::size_t const count = elems.size();
      for (std::size_t op = 0; op < sig.size(); ++op) {
        auto const k = sig[op].arity;
        if (k == 0) {
          if (first) {
            Elem a = left.apply(op, std::span<Elem const>{});
            Elem b = right.apply(op, std::span<Elem const>{});
            if (!rel.contains(a, b)) {
              rel.insert(a, b);
              elems.emplace_back(a, b);
            }
          }
          continue;
        }
        if (count == 0) {
          continue;
        }
        std::vector<std::size_t> pos(k, 0);
        la.assign(k, 0);
        ra.assign(k, 0);
        while (true) {
          bool fresh = false;
          for (std::size_t j = 0; j < k; ++j) {
            fresh = fresh || pos[j] >= frontier;
            la[j] = elems[pos[j]].first;
            ra[j] = elems[pos[j]].second;
          }
          if (fresh) {
            Elem a = left.apply(op, la);
            Elem b = right.apply(op, ra);
            if (!rel.contains(a, b)) {
              rel.insert(a, b);
              elems.emplace_back(a, b);
              if (elems.size() > limits.max_elements) {
                throw ResourceError("compatible_closure exceeded the element "
                                    "bound",
                                    elems.size());
              }
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
      first = false;
      if (elems.size() == count) {
        break;
      }
      frontier = count;
    }
    return rel;
  }

  TransitiveClosure transitive_closure(Relation const& r) {
    auto cls = classify_relation(r);
    if (!cls.square || !cls.reflexive) {
      throw Error("transitive_closure: relation must be reflexive");
    }
    Relation    power    = r;
    std::size_t exponent = 1;
    while (true) {
      Relation next = compose(power, r);
      if (next == power) {
        return TransitiveClosure{std::move(power), exponent};
      }
      power = std::move(next);
      ++exponent;
    }
  }

  Relation alternating_chain(Relation const& r, Relation const& s,
                             std::size_t n) {
    if (!r.is_square() || !s.is_square()
        || !r.left().same_structure(s.left())) {
      throw Error("alternating_chain: relations must live on one algebra");
    }
    Relation out = Relation::diagonal(r.left());
    for (std::size_t i = 0; i < n; ++i) {
      out = compose(out, i % 2 == 0 ? r : s);
    }
    return out;
  }

  RelationClass classify_relation(Relation const& r) {
    RelationClass c;
    auto const    n = r.left().size();
    auto const    m = r.right().size();
    c.square        = r.is_square();
    if (c.square) {
      c.reflexive = true;
      for (Elem x = 0; x < n && c.reflexive; ++x) {
        if (!r.contains(x, x)) {
          c.reflexive     = false;
          c.not_reflexive = x;
        }
      }
      c.symmetric = true;
      for (Elem x = 0; x < n && c.symmetric; ++x) {
        for (Elem y = 0; y < n; ++y) {
          if (r.contains(x, y) && !r.contains(y, x)) {
            c.symmetric     = false;
            c.not_symmetric = Pair{x, y};
            break;
          }
        }
      }
      c.transitive = true;
      for (Elem x = 0; x < n && c.transitive; ++x) {
        for (Elem y = 0; y < n && c.transitive; ++y) {
          if (!r.contains(x, y)) {
            continue;
          }
          for (Elem z = 0; z < n; ++z) {
            if (r.contains(y, z) && !r.contains(x, z)) {
              c.transitive     = false;
              c.not_transitive = std::array<Elem, 3>{x, y, z};
              break;
            }
          }
        }
      }
    }
    c.difunctional = true;
    for (Elem x = 0; x < n && c.difunctional; ++x) {
      for (Elem y = 0; y < m && c.difunctional; ++y) {
        if (!r.contains(x, y)) {
          continue;
        }
        for (Elem z = 0; z < n && c.difunctional; ++z) {
          if (!r.contains(z, y)) {
            continue;
          }
          for (Elem u = 0; u < m; ++u) {
            if (r.contains(z, u) && !r.contains(x, u)) {
              c.difunctional     = false;
              c.not_difunctional = std::array<Elem, 4>{x, y, z, u};
              break;
            }
          }
        }
      }
    }
    c.preorder    = c.reflexive && c.transitive;
    c.equivalence = c.preorder && c.symmetric;
    return c;
  }

  Relation kernel_pair(Homomorphism const& h) {
    if (auto v = check_homomorphism(h)) {
      throw Error("kernel_pair: not a homomorphism: " + describe(h, *v));
    }
    Relation r(h.dom, h.dom);
    for (Elem x = 0; x < h.dom.size(); ++x) {
      for (Elem y = 0; y < h.dom.size(); ++y) {
        if (h.map[x] == h.map[y]) {
          r.insert(x, y);
        }
      }
    }
    return r;
  }

  Relation congruence_generated(FiniteAlgebra const& alg,
                                std::span<Pair const> pairs) {
    std::vector<Pair> seed(pairs.begin(), pairs.end());
    for (Elem x = 0; x < alg.size(); ++x) {
      seed.emplace_back(x, x);
    }
    Relation r = compatible_closure(alg, alg, seed);
    while (true) {
      Relation sym  = r | r.inverse();
      Relation next = transitive_closure(sym).closure;
      if (next == r) {
        return r;
      }
      auto ps = next.pairs();
      r       = compatible_closure(alg, alg, ps);
    }
  }

}  // namespace ualg
