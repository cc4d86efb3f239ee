#pragma once

// Terms over a signature, their evaluation in finite algebras, and exhaustive
// checking of identities and quasi-identities.
//
// Concrete syntax is s-expressions: `(mul (mul z y) x)`. A ternary term such
// as w(x,y,z) uses x, y, z for variables 0, 1, 2. The reserved names
// x y z a b c x2 cover the quasi-identities we build; anything else is
// spelled v0, v1, ....

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ualg/algebra.hpp"

namespace ualg {

  class Term {
   public:
    static Term var(std::size_t index);
    // Validates the arity against the signature; throws Error otherwise.
    static Term apply(Signature const& sig, std::string_view op,
                      std::vector<Term> args);
    static Term apply(Signature const& sig, std::size_t op,
                      std::vector<Term> args);

    bool is_var() const noexcept {
      return _node->op == npos;
    }
    std::size_t var_index() const noexcept {
      return _node->var;
    }
    std::size_t op() const noexcept {
      return _node->op;
    }
    std::string const& op_name() const noexcept {
      return _node->name;
    }
    std::vector<Term> const& args() const noexcept {
      return _node->args;
    }

    // Variables have depth 0, constants depth 1.
    std::size_t depth() const noexcept {
      return _node->depth;
    }
    // One more than the largest variable index occurring (0 for ground terms).
    std::size_t var_bound() const noexcept {
      return _node->var_bound;
    }

    // Replaces variable i by subst[i].
    Term substitute(std::span<Term const> subst) const;

    std::string render(std::span<std::string const> names = {}) const;

    bool operator==(Term const& other) const;

   private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    struct Node {
      std::size_t       op  = npos;
      std::size_t       var = 0;
      std::string       name;
      std::vector<Term> args;
      std::size_t       depth     = 0;
      std::size_t       var_bound = 0;
    };
    explicit Term(std::shared_ptr<Node const> n) : _node(std::move(n)) {}
    std::shared_ptr<Node const> _node;
  };

  // Default display names: x, y, z for up to three variables, v0.. beyond.
  std::vector<std::string> default_var_names(std::size_t count);
  // Display name of the reserved variable x2 is x′.
  std::string display_var_name(std::string const& name);

  // Parses an s-expression. Variables are looked up in names; `v<N>` always
  // denotes index N. Throws Error with the offending position.
  Term parse_term(std::string_view text, Signature const& sig,
                  std::span<std::string const> names);
  // Ternary convenience: names x, y, z.
  Term parse_ternary(std::string_view text, Signature const& sig);

  Elem eval_term(Term const& t, FiniteAlgebra const& alg,
                 std::span<Elem const> assignment);

  struct Identity {
    Term                     lhs;
    Term                     rhs;
    std::size_t              vars = 0;
    std::vector<std::string> names;

    std::string render() const;
  };

  struct QuasiIdentity {
    std::vector<Identity>    premises;
    Identity                 conclusion;
    std::size_t              vars = 0;
    std::vector<std::string> names;

    std::string render() const;
  };

  Identity make_identity(Term lhs, Term rhs, std::vector<std::string> names);

  // `lhs = rhs`. Variables are collected in canonical order
  // (x y z a b c x2, then v<N> by N) and numbered contiguously from 0.
  Identity parse_identity(std::string_view text, Signature const& sig);
  // Several identities sharing one variable set (assignments range over all of
  // them, as when checking an axiom system).
  std::vector<Identity> parse_identity_system(
      std::span<std::string const> texts, Signature const& sig);
  // `p1 = q1 ; p2 = q2 => l = r` (premises separated by ';').
  QuasiIdentity parse_quasi_identity(std::string_view text,
                                     Signature const& sig);

  struct IdentityCheck {
    bool                             holds = true;
    std::size_t                      assignments = 0;
    std::optional<std::vector<Elem>> counter;  // first failing assignment
  };

  // Exhaustive over all |alg|^vars assignments in lexicographic order (first
  // variable most significant).
  IdentityCheck check_identity(Identity const& id, FiniteAlgebra const& alg);
  IdentityCheck check_quasi_identity(QuasiIdentity const& qi,
                                     FiniteAlgebra const& alg);

  // The quasi-identity over (x, x2, a, b, c):
  //   w1(x,a,b) = w2(a,b,c),  w1(x2,a,b) = w2(a,b,c),
  //   w2(b,c,x) = w1(a,b,c),  w2(b,c,x2) = w1(a,b,c)   =>  x = x2
  QuasiIdentity build_wm_quasi_identity(Term const& w1, Term const& w2);

  // All terms over `vars` variables of depth <= depth, ordered by depth, then
  // operation index, then arguments.
  std::vector<Term> enumerate_terms(Signature const& sig, std::size_t vars,
                                    std::size_t depth,
                                    std::size_t limit = 1'000'000);

}  // namespace ualg
