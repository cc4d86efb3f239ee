#include "ualg/term.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace ualg {

  namespace {
    constexpr std::array<std::string_view, 7> reserved_names
        = {"x", "y", "z", "a", "b", "c", "x2"};

    std::optional<std::size_t> numbered_var(std::string_view name) {
      if (name.size() < 2 || name[0] != 'v') {
        return std::nullopt;
      }
      std::size_t n = 0;
      for (char ch : name.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
          return std::nullopt;
        }
        n = n * 10 + static_cast<std::size_t>(ch - '0');
      }
      return n;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Term
  ////////////////////////////////////////////////////////////////////////

  Term Term::var(std::size_t index) {
    auto n       = std::make_shared<Node>();
    n->var       = index;
    n->var_bound = index + 1;
    return Term(std::move(n));
  }

  Term Term::apply(Signature const& sig, std::size_t op,
                   std::vector<Term> args) {
    if (op >= sig.size()) {
      throw Error("unknown operation index " + std::to_string(op));
    }
    if (args.size() != sig[op].arity) {
      throw Error("operation '" + sig[op].name + "' has arity "
                  + std::to_string(sig[op].arity) + " but was given "
                  + std::to_string(args.size()) + " arguments");
    }
    auto n   = std::make_shared<Node>();
    n->op    = op;
    n->name  = sig[op].name;
    n->depth = 1;
    for (auto const& a : args) {
      n->depth     = std::max(n->depth, a.depth() + 1);
      n->var_bound = std::max(n->var_bound, a.var_bound());
    }
    n->args = std::move(args);
    return Term(std::move(n));
  }

  Term Term::apply(Signature const& sig, std::string_view op,
                   std::vector<Term> args) {
    auto i = sig.find(op);
    if (!i) {
      throw Error("unknown operation '" + std::string(op) + "'");
    }
    return apply(sig, *i, std::move(args));
  }

  Term Term::substitute(std::span<Term const> subst) const {
    if (is_var()) {
      if (var_index() >= subst.size()) {
        throw Error("substitute: no replacement for variable "
                    + std::to_string(var_index()));
      }
      return subst[var_index()];
    }
    auto n   = std::make_shared<Node>(*_node);
    n->depth = 1;
    n->var_bound = 0;
    for (auto& a : n->args) {
      a            = a.substitute(subst);
      n->depth     = std::max(n->depth, a.depth() + 1);
      n->var_bound = std::max(n->var_bound, a.var_bound());
    }
    return Term(std::move(n));
  }

  std::string Term::render(std::span<std::string const> names) const {
    if (is_var()) {
      if (var_index() < names.size()) {
        return display_var_name(names[var_index()]);
      }
      if (names.empty() && var_index() < 3) {
        return std::string(reserved_names[var_index()]);
      }
      return "v" + std::to_string(var_index());
    }
    std::string s = "(" + op_name();
    for (auto const& a : args()) {
      s += " " + a.render(names);
    }
    return s + ")";
  }

  bool Term::operator==(Term const& other) const {
    if (_node == other._node) {
      return true;
    }
    if (is_var() != other.is_var()) {
      return false;
    }
    if (is_var()) {
      return var_index() == other.var_index();
    }
    return op_name() == other.op_name() && args() == other.args();
  }

  std::vector<std::string> default_var_names(std::size_t count) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < count; ++i) {
      names.push_back(count <= 3 ? std::string(reserved_names[i])
                                 : "v" + std::to_string(i));
    }
    return names;
  }

  std::string display_var_name(std::string const& name) {
    return name == "x2" ? "x′" : name;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class SexprParser {
     public:
      SexprParser(std::string_view text, Signature const& sig,
                  std::function<std::size_t(std::string_view, std::size_t)>
                      resolve)
          : _text(text), _sig(sig), _resolve(std::move(resolve)) {}

      Term parse_all() {
        Term t = parse();
        skip_ws();
        if (_pos != _text.size()) {
          fail("trailing input");
        }
        return t;
      }

     private:
      [[noreturn]] void fail(std::string const& msg) const {
        throw Error("term parse error at offset " + std::to_string(_pos)
                    + " in \"" + std::string(_text) + "\": " + msg);
      }

      void skip_ws() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      std::string_view atom() {
        skip_ws();
        auto start = _pos;
        while (_pos < _text.size() && _text[_pos] != '(' && _text[_pos] != ')'
               && !std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
        if (start == _pos) {
          fail("expected a name");
        }
        return _text.substr(start, _pos - start);
      }

      Term parse() {
        skip_ws();
        if (_pos >= _text.size()) {
          fail("unexpected end of input");
        }
        if (_text[_pos] == ')') {
          fail("unexpected ')'");
        }
        if (_text[_pos] != '(') {
          auto        at   = _pos;
          auto        name = atom();
          std::size_t idx  = _resolve(name, at);
          return Term::var(idx);
        }
        ++_pos;
        auto opname = atom();
        auto op     = _sig.find(opname);
        if (!op) {
          fail("unknown operation '" + std::string(opname) + "'");
        }
        std::vector<Term> args;
        while (true) {
          skip_ws();
          if (_pos >= _text.size()) {
            fail("missing ')'");
          }
          if (_text[_pos] == ')') {
            ++_pos;
            break;
          }
          args.push_back(parse());
        }
        if (args.size() != _sig[*op].arity) {
          fail("operation '" + std::string(opname) + "' expects "
               + std::to_string(_sig[*op].arity) + " arguments, got "
               + std::to_string(args.size()));
        }
        return Term::apply(_sig, *op, std::move(args));
      }

      std::string_view _text;
      Signature const& _sig;
      std::function<std::size_t(std::string_view, std::size_t)> _resolve;
      std::size_t _pos = 0;
    };

    std::string normalise_var(std::string_view name) {
      if (name == "x'" || name == "x′") {
        return "x2";
      }
      return std::string(name);
    }

    // Canonical rank for identity variable numbering.
    std::optional<std::pair<int, std::size_t>> var_rank(
        std::string const& name) {
      for (std::size_t i = 0; i < reserved_names.size(); ++i) {
        if (reserved_names[i] == name) {
          return std::pair<int, std::size_t>{0, i};
        }
      }
      if (auto n = numbered_var(name)) {
        return std::pair<int, std::size_t>{1, *n};
      }
      return std::nullopt;
    }

    // Collects variable names of several s-expressions without building terms.
    std::vector<std::string> collect_vars(std::span<std::string const> texts,
                                          Signature const&             sig) {
      std::vector<std::string> found;
      for (auto const& text : texts) {
        SexprParser p(text, sig, [&](std::string_view name, std::size_t) {
          auto n = normalise_var(name);
          if (!var_rank(n)) {
            throw Error("unknown variable '" + std::string(name) + "' in \""
                        + text + "\" (use x y z a b c x2 or v<N>)");
          }
          if (std::find(found.begin(), found.end(), n) == found.end()) {
            found.push_back(n);
          }
          return std::size_t{0};
        });
        p.parse_all();
      }
      std::sort(found.begin(), found.end(), [](auto const& l, auto const& r) {
        return *var_rank(l) < *var_rank(r);
      });
      return found;
    }

    std::pair<std::string, std::string> split_equation(std::string_view text) {
      auto eq = text.find('=');
      if (eq == std::string_view::npos
          || text.find('=', eq + 1) != std::string_view::npos) {
        throw Error("expected exactly one '=' in \"" + std::string(text)
                    + "\"");
      }
      return {std::string(text.substr(0, eq)),
              std::string(text.substr(eq + 1))};
    }

    std::string trim(std::string_view s) {
      auto b = s.find_first_not_of(" \t\n\r");
      if (b == std::string_view::npos) {
        return {};
      }
      auto e = s.find_last_not_of(" \t\n\r");
      return std::string(s.substr(b, e - b + 1));
    }

    std::vector<std::string> split(std::string_view s, char sep) {
      std::vector<std::string> out;
      std::size_t              start = 0;
      while (true) {
        auto p = s.find(sep, start);
        out.push_back(trim(s.substr(start, p - start)));
        if (p == std::string_view::npos) {
          break;
        }
        start = p + 1;
      }
      return out;
    }

  }  // namespace

  Term parse_term(std::string_view text, Signature const& sig,
                  std::span<std::string const> names) {
    SexprParser p(text, sig, [&](std::string_view raw, std::size_t) {
      auto name = normalise_var(raw);
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) {
          return i;
        }
      }
      if (auto n = numbered_var(name)) {
        return *n;
      }
      throw Error("unknown variable '" + std::string(raw) + "' in \""
                  + std::string(text) + "\"");
    });
    return p.parse_all();
  }

  Term parse_ternary(std::string_view text, Signature const& sig) {
    auto names = default_var_names(3);
    return parse_term(text, sig, names);
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Elem eval_rec(Term const& t, FiniteAlgebra const& alg,
                  std::span<Elem const> asg) {
      if (t.is_var()) {
        if (t.var_index() >= asg.size()) {
          throw Error("eval_term: variable " + std::to_string(t.var_index())
                      + " is unbound");
        }
        return asg[t.var_index()];
      }
      auto const& sig = alg.signature();
      std::size_t op  = t.op();
      if (op >= sig.size() || sig[op].name != t.op_name()) {
        auto found = sig.find(t.op_name());
        if (!found) {
          throw Error("eval_term: algebra '" + alg.name()
                      + "' has no operation '" + t.op_name() + "'");
        }
        op = *found;
      }
      auto const&                  args = t.args();
      std::array<Elem, 8>          small{};
      std::vector<Elem>            big;
      std::span<Elem>              vals;
      if (args.size() <= small.size()) {
        vals = std::span<Elem>(small.data(), args.size());
      } else {
        big.resize(args.size());
        vals = big;
      }
      for (std::size_t i = 0; i < args.size(); ++i) {
        vals[i] = eval_rec(args[i], alg, asg);
      }
      return alg.apply(op, vals);
    }
  }  // namespace

  Elem eval_term(Term const& t, FiniteAlgebra const& alg,
                 std::span<Elem const> assignment) {
    for (auto v : assignment) {
      if (v >= alg.size()) {
        throw Error("eval_term: assigned value outside the carrier");
      }
    }
    return eval_rec(t, alg, assignment);
  }

  ////////////////////////////////////////////////////////////////////////
  // Identities
  ////////////////////////////////////////////////////////////////////////

  std::string Identity::render() const {
    return lhs.render(names) + " = " + rhs.render(names);
  }

  std::string QuasiIdentity::render() const {
    std::string s;
    for (std::size_t i = 0; i < premises.size(); ++i) {
      s += (i ? " ; " : "") + premises[i].render();
    }
    return s + (premises.empty() ? "" : " ") + "=> " + conclusion.render();
  }

  Identity make_identity(Term lhs, Term rhs, std::vector<std::string> names) {
    auto vars = names.size();
    if (lhs.var_bound() > vars || rhs.var_bound() > vars) {
      throw Error("identity uses undeclared variables");
    }
    return Identity{std::move(lhs), std::move(rhs), vars, std::move(names)};
  }

  std::vector<Identity> parse_identity_system(
      std::span<std::string const> texts, Signature const& sig) {
    std::vector<std::string> sides;
    for (auto const& t : texts) {
      auto [l, r] = split_equation(t);
      sides.push_back(l);
      sides.push_back(r);
    }
    auto                  names = collect_vars(sides, sig);
    std::vector<Identity> out;
    for (std::size_t i = 0; i < sides.size(); i += 2) {
      out.push_back(make_identity(parse_term(sides[i], sig, names),
                                  parse_term(sides[i + 1], sig, names),
                                  names));
    }
    return out;
  }

  Identity parse_identity(std::string_view text, Signature const& sig) {
    std::string s(text);
    return parse_identity_system(std::span<std::string const>(&s, 1), sig)[0];
  }

  QuasiIdentity parse_quasi_identity(std::string_view text,
                                     Signature const& sig) {
    auto arrow = text.find("=>");
    if (arrow == std::string_view::npos) {
      throw Error("quasi-identity needs '=>' in \"" + std::string(text)
                  + "\"");
    }
    std::vector<std::string> eqs;
    auto premises = trim(text.substr(0, arrow));
    if (!premises.empty()) {
      eqs = split(premises, ';');
    }
    eqs.push_back(trim(text.substr(arrow + 2)));
    auto ids = parse_identity_system(eqs, sig);
    QuasiIdentity qi{{}, ids.back(), ids.back().vars, ids.back().names};
    ids.pop_back();
    qi.premises = std::move(ids);
    return qi;
  }

  namespace {
    // Iterates all assignments in lexicographic order; f returns false to stop.
    template <typename F>
    void for_each_assignment(std::size_t vars, std::size_t n, F&& f) {
      std::vector<Elem> asg(vars, 0);
      while (true) {
        if (!f(asg)) {
          return;
        }
        std::size_t j = vars;
        while (j > 0 && ++asg[j - 1] == n) {
          asg[j - 1] = 0;
          --j;
        }
        if (j == 0) {
          return;
        }
      }
    }
  }  // namespace

  IdentityCheck check_identity(Identity const& id, FiniteAlgebra const& alg) {
    IdentityCheck out;
    for_each_assignment(id.vars, alg.size(), [&](auto const& asg) {
      ++out.assignments;
      if (eval_term(id.lhs, alg, asg) != eval_term(id.rhs, alg, asg)) {
        out.holds   = false;
        out.counter = asg;
        return false;
      }
      return true;
    });
    return out;
  }

  IdentityCheck check_quasi_identity(QuasiIdentity const& qi,
                                     FiniteAlgebra const& alg) {
    IdentityCheck out;
    for_each_assignment(qi.vars, alg.size(), [&](auto const& asg) {
      ++out.assignments;
      for (auto const& p : qi.premises) {
        if (eval_term(p.lhs, alg, asg) != eval_term(p.rhs, alg, asg)) {
          return true;
        }
      }
      if (eval_term(qi.conclusion.lhs, alg, asg)
          != eval_term(qi.conclusion.rhs, alg, asg)) {
        out.holds   = false;
        out.counter = asg;
        return false;
      }
      return true;
    });
    return out;
  }

  QuasiIdentity build_wm_quasi_identity(Term const& w1, Term const& w2) {
    if (w1.var_bound() > 3 || w2.var_bound() > 3) {
      throw Error("build_wm_quasi_identity: terms must be ternary");
    }
    std::vector<std::string> names = {"x", "x2", "a", "b", "c"};
    auto const x = Term::var(0), x2 = Term::var(1), a = Term::var(2),
               b = Term::var(3), c = Term::var(4);
    auto at = [](Term const& w, Term const& p, Term const& q, Term const& r) {
      std::array<Term, 3> s = {p, q, r};
      return w.substitute(s);
    };
    QuasiIdentity qi{{}, make_identity(x, x2, names), 5, names};
    qi.premises.push_back(make_identity(at(w1, x, a, b), at(w2, a, b, c), names));
    qi.premises.push_back(make_identity(at(w1, x2, a, b), at(w2, a, b, c), names));
    qi.premises.push_back(make_identity(at(w2, b, c, x), at(w1, a, b, c), names));
    qi.premises.push_back(make_identity(at(w2, b, c, x2), at(w1, a, b, c), names));
    return qi;
  }

  std::vector<Term> enumerate_terms(Signature const& sig, std::size_t vars,
                                    std::size_t depth, std::size_t limit) {
    std::vector<Term>        all;
    for (std::size_t i = 0; i < vars; ++i) {
      all.push_back(Term::var(i));
    }
    std::size_t prev_end = 0;  // terms before this index have depth < d-1
    for (std::size_t d = 1; d <= depth; ++d) {
      std::size_t const count = all.size();
      for (std::size_t op = 0; op < sig.size(); ++op) {
        auto const k = sig[op].arity;
        if (k == 0) {
          if (d == 1) {
            all.push_back(Term::apply(sig, op, {}));
          }
          continue;
        }
        std::vector<std::size_t> pos(k, 0);
        while (count > 0) {
          bool fresh = false;
          for (auto p : pos) {
            fresh = fresh || p >= prev_end;
          }
          if (fresh) {
            std::vector<Term> args;
            for (auto p : pos) {
              args.push_back(all[p]);
            }
            all.push_back(Term::apply(sig, op, std::move(args)));
            if (all.size() > limit) {
              throw ResourceError("enumerate_terms: more than "
                                      + std::to_string(limit) + " terms",
                                  all.size());
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
      prev_end = count;
    }
    return all;
  }

}  // namespace ualg
