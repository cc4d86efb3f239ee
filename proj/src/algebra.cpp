#include "ualg/algebra.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace ualg {

  ////////////////////////////////////////////////////////////////////////
  // Signature
  ////////////////////////////////////////////////////////////////////////

  Signature::Signature(std::vector<Operation> ops) : _ops(std::move(ops)) {
    std::set<std::string> seen;
    for (auto const& op : _ops) {
      if (op.name.empty()) {
        throw Error("operation names must be non-empty");
      }
      if (!seen.insert(op.name).second) {
        throw Error("duplicate operation name '" + op.name + "'");
      }
    }
  }

  std::optional<std::size_t> Signature::find(std::string_view name) const {
    for (std::size_t i = 0; i < _ops.size(); ++i) {
      if (_ops[i].name == name) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::size_t Signature::max_arity() const noexcept {
    std::size_t m = 0;
    for (auto const& op : _ops) {
      m = std::max(m, op.arity);
    }
    return m;
  }

  bool Signature::has_constants() const noexcept {
    return std::any_of(
        _ops.begin(), _ops.end(), [](auto const& op) { return op.arity == 0; });
  }

  std::size_t checked_pow(std::size_t n, std::size_t k) noexcept {
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (n != 0 && r > std::numeric_limits<std::size_t>::max() / n) {
        return std::numeric_limits<std::size_t>::max();
      }
      r *= n;
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteAlgebra
  ////////////////////////////////////////////////////////////////////////

  FiniteAlgebra::FiniteAlgebra(std::string                    name,
                               Signature                      signature,
                               std::size_t                    size,
                               std::vector<std::vector<Elem>> tables,
                               std::vector<std::string>       labels) {
    if (size == 0) {
      throw Error("algebra '" + name + "' must have a non-empty carrier");
    }
    if (tables.size() != signature.size()) {
      throw Error("algebra '" + name + "': expected "
                  + std::to_string(signature.size()) + " tables, got "
                  + std::to_string(tables.size()));
    }
    for (std::size_t i = 0; i < tables.size(); ++i) {
      auto const& op       = signature[i];
      auto const  expected = checked_pow(size, op.arity);
      if (tables[i].size() != expected) {
        throw Error("algebra '" + name + "', operation '" + op.name
                    + "': table has " + std::to_string(tables[i].size())
                    + " entries, expected " + std::to_string(expected)
                    + " (size^arity)");
      }
      for (std::size_t j = 0; j < tables[i].size(); ++j) {
        if (tables[i][j] >= size) {
          throw Error("algebra '" + name + "', operation '" + op.name
                      + "': entry " + std::to_string(j) + " = "
                      + std::to_string(tables[i][j]) + " out of range [0, "
                      + std::to_string(size) + ")");
        }
      }
    }
    if (!labels.empty()) {
      if (labels.size() != size) {
        throw Error("algebra '" + name + "': " + std::to_string(labels.size())
                    + " labels for " + std::to_string(size) + " elements");
      }
      std::set<std::string> seen(labels.begin(), labels.end());
      if (seen.size() != labels.size()) {
        throw Error("algebra '" + name + "': labels must be distinct");
      }
    }
    _data = std::make_shared<Data const>(Data{std::move(name),
                                              std::move(signature),
                                              size,
                                              std::move(tables),
                                              std::move(labels)});
  }

  Elem FiniteAlgebra::apply(std::size_t op, std::span<Elem const> args) const {
    std::size_t idx = 0;
    auto const  n   = _data->size;
    for (auto a : args) {
      idx = idx * n + a;
    }
    return _data->tables[op][idx];
  }

  std::string FiniteAlgebra::label(Elem x) const {
    if (_data->labels.empty() || x >= _data->labels.size()) {
      return std::to_string(x);
    }
    return _data->labels[x];
  }

  std::optional<Elem> FiniteAlgebra::element(std::string_view text) const {
    for (std::size_t i = 0; i < _data->labels.size(); ++i) {
      if (_data->labels[i] == text) {
        return static_cast<Elem>(i);
      }
    }
    if (!_data->labels.empty() || text.empty()) {
      return std::nullopt;
    }
    std::size_t value = 0;
    for (char ch : text) {
      if (ch < '0' || ch > '9') {
        return std::nullopt;
      }
      value = value * 10 + static_cast<std::size_t>(ch - '0');
      if (value >= _data->size) {
        return std::nullopt;
      }
    }
    return static_cast<Elem>(value);
  }

  FiniteAlgebra FiniteAlgebra::with_name(std::string name) const {
    auto copy = *_data;
    copy.name = std::move(name);
    return FiniteAlgebra(std::make_shared<Data const>(std::move(copy)));
  }

  FiniteAlgebra FiniteAlgebra::with_labels(
      std::vector<std::string> labels) const {
    return FiniteAlgebra(
        _data->name, _data->signature, _data->size, _data->tables, labels);
  }

  bool FiniteAlgebra::same_structure(FiniteAlgebra const& other) const {
    return _data == other._data
           || (_data->size == other._data->size
               && _data->signature == other._data->signature
               && _data->tables == other._data->tables);
  }

  bool FiniteAlgebra::operator==(FiniteAlgebra const& other) const {
    return same_structure(other) && _data->name == other._data->name
           && _data->labels == other._data->labels;
  }

  void require_same_signature(FiniteAlgebra const& a,
                              FiniteAlgebra const& b,
                              std::string_view     context) {
    if (a.signature() != b.signature()) {
      throw Error(std::string(context) + ": signature mismatch between '"
                  + a.name() + "' and '" + b.name() + "'");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms
  ////////////////////////////////////////////////////////////////////////

  Homomorphism compose(Homomorphism const& g, Homomorphism const& f) {
    if (!f.cod.same_structure(g.dom)) {
      throw Error("compose: codomain of first map is not the domain of the "
                  "second");
    }
    Mapping m(f.map.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      m[i] = g.map[f.map[i]];
    }
    return Homomorphism{f.dom, g.cod, std::move(m)};
  }

  Homomorphism identity_hom(FiniteAlgebra const& alg) {
    Mapping m(alg.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      m[i] = static_cast<Elem>(i);
    }
    return Homomorphism{alg, alg, std::move(m)};
  }

  bool same_map(Homomorphism const& a, Homomorphism const& b) {
    return a.map == b.map;
  }

  std::optional<HomViolation> check_homomorphism(Homomorphism const& h) {
    auto const& dom = h.dom;
    auto const& cod = h.cod;
    require_same_signature(dom, cod, "check_homomorphism");
    if (h.map.size() != dom.size()) {
      throw Error("check_homomorphism: map has " + std::to_string(h.map.size())
                  + " entries but the domain has "
                  + std::to_string(dom.size()) + " elements");
    }
    for (auto v : h.map) {
      if (v >= cod.size()) {
        throw Error("check_homomorphism: image " + std::to_string(v)
                    + " outside the codomain");
      }
    }
    auto const        n = dom.size();
    std::vector<Elem> args, images;
    for (std::size_t op = 0; op < dom.signature().size(); ++op) {
      auto const k     = dom.signature()[op].arity;
      auto const table = dom.table(op);
      args.assign(k, 0);
      images.assign(k, 0);
      for (std::size_t idx = 0; idx < table.size(); ++idx) {
        std::size_t rest = idx;
        for (std::size_t j = k; j-- > 0;) {
          args[j] = static_cast<Elem>(rest % n);
          rest /= n;
          images[j] = h.map[args[j]];
        }
        Elem lhs = h.map[table[idx]];
        Elem rhs = cod.apply(op, images);
        if (lhs != rhs) {
          return HomViolation{op, args, lhs, rhs};
        }
      }
    }
    return std::nullopt;
  }

  bool is_homomorphism(Homomorphism const& h) {
    return !check_homomorphism(h).has_value();
  }

  std::string describe(Homomorphism const& h, HomViolation const& v) {
    auto const&        op = h.dom.signature()[v.op];
    std::ostringstream os;
    os << "h(" << op.name << "(";
    for (std::size_t i = 0; i < v.args.size(); ++i) {
      os << (i ? "," : "") << h.dom.label(v.args[i]);
    }
    os << ")) = " << h.cod.label(v.image_of_result) << " but " << op.name
       << "(";
    for (std::size_t i = 0; i < v.args.size(); ++i) {
      os << (i ? "," : "") << h.cod.label(h.map[v.args[i]]);
    }
    os << ") = " << h.cod.label(v.result_of_images);
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Products
  ////////////////////////////////////////////////////////////////////////

  std::vector<Elem> decode_product(std::span<FiniteAlgebra const> algs,
                                   Elem                           x) {
    std::vector<Elem> coords(algs.size());
    std::size_t       rest = x;
    for (std::size_t i = algs.size(); i-- > 0;) {
      coords[i] = static_cast<Elem>(rest % algs[i].size());
      rest /= algs[i].size();
    }
    return coords;
  }

  Elem encode_product(std::span<FiniteAlgebra const> algs,
                      std::span<Elem const>          coords) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < algs.size(); ++i) {
      x = x * algs[i].size() + coords[i];
    }
    return static_cast<Elem>(x);
  }

  FiniteAlgebra product(std::span<FiniteAlgebra const> algs,
                        Limits const&                  limits) {
    if (algs.empty()) {
      throw Error("product: need at least one factor");
    }
    for (auto const& a : algs) {
      require_same_signature(algs[0], a, "product");
    }
    std::size_t size = 1;
    for (auto const& a : algs) {
      if (size > limits.max_elements / a.size()) {
        throw ResourceError("product: carrier exceeds "
                                + std::to_string(limits.max_elements)
                                + " elements",
                            0);
      }
      size *= a.size();
    }
    auto const&                    sig = algs[0].signature();
    std::vector<std::vector<Elem>> tables(sig.size());
    std::vector<Elem>              args, coords(algs.size()), fargs;
    for (std::size_t op = 0; op < sig.size(); ++op) {
      auto const k       = sig[op].arity;
      auto const entries = checked_pow(size, k);
      if (entries > limits.max_table_entries) {
        throw ResourceError("product: table for '" + sig[op].name
                                + "' exceeds the table bound",
                            size);
      }
      tables[op].resize(entries);
      std::vector<std::vector<Elem>> decoded(k);
      args.assign(k, 0);
      for (std::size_t idx = 0; idx < entries; ++idx) {
        std::size_t rest = idx;
        for (std::size_t j = k; j-- > 0;) {
          args[j] = static_cast<Elem>(rest % size);
          rest /= size;
          decoded[j] = decode_product(algs, args[j]);
        }
        fargs.assign(k, 0);
        for (std::size_t i = 0; i < algs.size(); ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            fargs[j] = decoded[j][i];
          }
          coords[i] = algs[i].apply(op, fargs);
        }
        tables[op][idx] = encode_product(algs, coords);
      }
    }
    std::vector<std::string> labels;
    bool any_labels = std::any_of(
        algs.begin(), algs.end(), [](auto const& a) { return a.has_labels(); });
    if (any_labels) {
      labels.reserve(size);
      for (std::size_t x = 0; x < size; ++x) {
        auto        c = decode_product(algs, static_cast<Elem>(x));
        std::string s = "(";
        for (std::size_t i = 0; i < c.size(); ++i) {
          s += (i ? "," : "") + algs[i].label(c[i]);
        }
        labels.push_back(s + ")");
      }
    }
    std::string name;
    for (std::size_t i = 0; i < algs.size(); ++i) {
      name += (i ? "x" : "") + algs[i].name();
    }
    return FiniteAlgebra(
        std::move(name), sig, size, std::move(tables), std::move(labels));
  }

  Homomorphism product_projection(FiniteAlgebra const&           prod,
                                  std::span<FiniteAlgebra const> algs,
                                  std::size_t                    i) {
    Mapping m(prod.size());
    for (std::size_t x = 0; x < prod.size(); ++x) {
      m[x] = decode_product(algs, static_cast<Elem>(x))[i];
    }
    return Homomorphism{prod, algs[i], std::move(m)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Generated subalgebras
  ////////////////////////////////////////////////////////////////////////

  std::vector<Elem> subalgebra_generated(FiniteAlgebra const&  alg,
                                         std::span<Elem const> seed) {
    auto const        n = alg.size();
    std::vector<char> in(n, 0);
    std::vector<Elem> elems;
    for (auto x : seed) {
      if (x >= n) {
        throw Error("subalgebra_generated: seed element " + std::to_string(x)
                    + " outside the carrier of '" + alg.name() + "'");
      }
      if (!in[x]) {
        in[x] = 1;
        elems.push_back(x);
      }
    }
    auto const&       sig = alg.signature();
    std::size_t       frontier = 0;  // elements before this index are "old"
    bool              first    = true;
    std::vector<Elem> args;
    while (true) {
      std::size_t const count = elems.size();
      for (std::size_t op = 0; op < sig.size(); ++op) {
        auto const k = sig[op].arity;
        if (k == 0) {
          if (first) {
            Elem r = alg.apply(op, std::span<Elem const>{});
            if (!in[r]) {
              in[r] = 1;
              elems.push_back(r);
            }
          }
          continue;
        }
        if (count == 0) {
          continue;
        }
        std::vector<std::size_t> pos(k, 0);
        args.assign(k, 0);
        while (true) {
          bool fresh = false;
          for (std::size_t j = 0; j < k; ++j) {
            fresh = fresh || pos[j] >= frontier;
            args[j] = elems[pos[j]];
          }
          if (fresh) {
            Elem r = alg.apply(op, args);
            if (!in[r]) {
              in[r] = 1;
              elems.push_back(r);
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
    std::sort(elems.begin(), elems.end());
    return elems;
  }

  Subalgebra make_subalgebra(FiniteAlgebra const&  alg,
                             std::span<Elem const> closed_subset,
                             std::string           name) {
    std::vector<Elem> elems(closed_subset.begin(), closed_subset.end());
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    std::vector<std::optional<Elem>> index(alg.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      index[elems[i]] = static_cast<Elem>(i);
    }
    auto const&                    sig = alg.signature();
    auto const                     m   = elems.size();
    std::vector<std::vector<Elem>> tables(sig.size());
    std::vector<Elem>              args;
    for (std::size_t op = 0; op < sig.size(); ++op) {
      auto const k = sig[op].arity;
      tables[op].resize(checked_pow(m, k));
      args.assign(k, 0);
      for (std::size_t idx = 0; idx < tables[op].size(); ++idx) {
        std::size_t rest = idx;
        for (std::size_t j = k; j-- > 0;) {
          args[j] = elems[rest % m];
          rest /= m;
        }
        auto r = index[alg.apply(op, args)];
        if (!r) {
          throw Error("make_subalgebra: subset of '" + alg.name()
                      + "' is not closed under '" + sig[op].name + "'");
        }
        tables[op][idx] = *r;
      }
    }
    std::vector<std::string> labels;
    if (alg.has_labels()) {
      for (auto x : elems) {
        labels.push_back(alg.label(x));
      }
    }
    if (name.empty()) {
      name = "Sub(" + alg.name() + ")";
    }
    return Subalgebra{
        FiniteAlgebra(std::move(name), sig, m, std::move(tables), labels),
        elems};
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphism enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Every (operation, argument tuple) of the domain, indexed by the elements
    // occurring in it, so that assigning an element only revisits the tuples
    // it can complete.
    struct Watches {
      struct Entry {
        std::uint32_t op;
        std::size_t   tuple;
      };
      std::vector<std::vector<Entry>> by_elem;
      std::vector<Entry>              nullary;

      explicit Watches(FiniteAlgebra const& dom) : by_elem(dom.size()) {
        auto const  n   = dom.size();
        auto const& sig = dom.signature();
        for (std::size_t op = 0; op < sig.size(); ++op) {
          auto const k = sig[op].arity;
          if (k == 0) {
            nullary.push_back({static_cast<std::uint32_t>(op), 0});
            continue;
          }
          auto const        entries = checked_pow(n, k);
          std::vector<Elem> seen;
          for (std::size_t idx = 0; idx < entries; ++idx) {
            std::size_t rest = idx;
            seen.clear();
            for (std::size_t j = 0; j < k; ++j) {
              Elem a = static_cast<Elem>(rest % n);
              rest /= n;
              if (std::find(seen.begin(), seen.end(), a) == seen.end()) {
                seen.push_back(a);
                by_elem[a].push_back({static_cast<std::uint32_t>(op), idx});
              }
            }
          }
        }
      }
    };

    class HomSearcher {
     public:
      HomSearcher(FiniteAlgebra const&                        dom,
                  FiniteAlgebra const&                        cod,
                  HomSearch const&                            search,
                  std::function<bool(Mapping const&)> const& visit)
          : _dom(dom),
            _cod(cod),
            _search(search),
            _visit(visit),
            _watches(dom),
            _allowed(dom.size()) {
        auto const n = dom.size();
        auto const m = cod.size();
        for (std::size_t x = 0; x < n; ++x) {
          _allowed[x].assign(m, 1);
          if (!search.allowed.empty()) {
            std::fill(_allowed[x].begin(), _allowed[x].end(), 0);
            for (auto v : search.allowed[x]) {
              if (v < m) {
                _allowed[x][v] = 1;
              }
            }
          }
        }
      }

      std::size_t run() {
        auto const        n = _dom.size();
        std::vector<long> assign(n, -1);
        std::vector<Elem> queue;
        // Nullary operations force the images of constants.
        for (auto const& w : _watches.nullary) {
          Elem r = _dom.table(w.op)[0];
          Elem v = _cod.table(w.op)[0];
          if (!set(assign, queue, r, v)) {
            return 0;
          }
        }
        if (!_search.pinned.empty()) {
          for (std::size_t x = 0; x < n; ++x) {
            auto const& p = _search.pinned[x];
            if (p && !set(assign, queue, static_cast<Elem>(x), *p)) {
              return 0;
            }
          }
        }
        if (!propagate(assign, queue)) {
          return 0;
        }
        recurse(assign);
        return _count;
      }

     private:
      bool set(std::vector<long>& assign,
               std::vector<Elem>& queue,
               Elem               x,
               Elem               v) {
        if (v >= _cod.size() || !_allowed[x][v]) {
          return false;
        }
        if (assign[x] >= 0) {
          return assign[x] == static_cast<long>(v);
        }
        assign[x] = v;
        queue.push_back(x);
        return true;
      }

      bool propagate(std::vector<long>& assign, std::vector<Elem>& queue) {
        auto const        n = _dom.size();
        std::vector<Elem> args, images;
        while (!queue.empty()) {
          Elem x = queue.back();
          queue.pop_back();
          for (auto const& w : _watches.by_elem[x]) {
            auto const k    = _dom.signature()[w.op].arity;
            std::size_t rest = w.tuple;
            bool        full = true;
            images.assign(k, 0);
            for (std::size_t j = k; j-- > 0;) {
              Elem a = static_cast<Elem>(rest % n);
              rest /= n;
              if (assign[a] < 0) {
                full = false;
                break;
              }
              images[j] = static_cast<Elem>(assign[a]);
            }
            if (!full) {
              continue;
            }
            Elem r = _dom.table(w.op)[w.tuple];
            Elem v = _cod.apply(w.op, images);
            if (!set(assign, queue, r, v)) {
              return false;
            }
          }
        }
        return true;
      }

      bool recurse(std::vector<long> const& assign) {
        if (++_nodes > _search.max_nodes) {
          throw ResourceError("homomorphism search exceeded "
                                  + std::to_string(_search.max_nodes)
                                  + " nodes",
                              _count);
        }
        auto const n    = _dom.size();
        std::size_t next = n;
        for (std::size_t x = 0; x < n; ++x) {
          if (assign[x] < 0) {
            next = x;
            break;
          }
        }
        if (next == n) {
          Mapping m(assign.begin(), assign.end());
          ++_count;
          return _visit(m);
        }
        for (Elem v = 0; v < _cod.size(); ++v) {
          if (!_allowed[next][v]) {
            continue;
          }
          auto              trial = assign;
          std::vector<Elem> queue;
          if (set(trial, queue, static_cast<Elem>(next), v)
              && propagate(trial, queue)) {
            if (!recurse(trial)) {
              return false;
            }
          }
        }
        return true;
      }

      FiniteAlgebra const&                        _dom;
      FiniteAlgebra const&                        _cod;
      HomSearch const&                            _search;
      std::function<bool(Mapping const&)> const& _visit;
      Watches                                     _watches;
      std::vector<std::vector<char>>              _allowed;
      std::size_t                                 _count = 0;
      std::size_t                                 _nodes = 0;
    };

  }  // namespace

  std::size_t for_each_homomorphism(
      FiniteAlgebra const&                        dom,
      FiniteAlgebra const&                        cod,
      HomSearch const&                            search,
      std::function<bool(Mapping const&)> const& visit) {
    require_same_signature(dom, cod, "enumerate_homomorphisms");
    if (!search.pinned.empty() && search.pinned.size() != dom.size()) {
      throw Error("enumerate_homomorphisms: pinned assignment has wrong size");
    }
    if (!search.allowed.empty() && search.allowed.size() != dom.size()) {
      throw Error("enumerate_homomorphisms: allowed sets have wrong size");
    }
    for (auto const& p : search.pinned) {
      if (p && *p >= cod.size()) {
        throw Error("enumerate_homomorphisms: pinned image out of range");
      }
    }
    HomSearcher searcher(dom, cod, search, visit);
    return searcher.run();
  }

  std::vector<Homomorphism> enumerate_homomorphisms(
      FiniteAlgebra const&                    dom,
      FiniteAlgebra const&                    cod,
      std::vector<std::optional<Elem>> const& pinned,
      std::size_t                             limit) {
    std::vector<Homomorphism> out;
    HomSearch                 search;
    search.pinned = pinned;
    for_each_homomorphism(dom, cod, search, [&](Mapping const& m) {
      out.push_back(Homomorphism{dom, cod, m});
      return out.size() < limit;
    });
    return out;
  }

}  // namespace ualg
