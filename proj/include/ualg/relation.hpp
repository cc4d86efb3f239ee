#pragma once

// Binary relations between finite algebras stored as dense bit matrices.
//
// A Relation is just a set of pairs; it is *compatible* when it is a
// subalgebra of left x right (see is_compatible). Every operation here that
// starts from compatible relations returns compatible relations.
//
// Composition is left to right: x (R;S) z iff x R y and y S z for some y.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/closure.hpp"

namespace ualg {

  using Pair = std::pair<Elem, Elem>;

  class Relation {
   public:
    Relation(FiniteAlgebra left, FiniteAlgebra right);

    static Relation from_pairs(FiniteAlgebra left, FiniteAlgebra right,
                               std::span<Pair const> pairs);
    static Relation diagonal(FiniteAlgebra const& alg);
    static Relation full(FiniteAlgebra const& left, FiniteAlgebra const& right);

    FiniteAlgebra const& left() const noexcept {
      return _left;
    }
    FiniteAlgebra const& right() const noexcept {
      return _right;
    }
    bool is_square() const noexcept {
      return _left.same_structure(_right);
    }

    bool contains(Elem x, Elem y) const noexcept {
      return (_bits[x * _words + (y >> 6)] >> (y & 63)) & 1u;
    }
    void insert(Elem x, Elem y);

    std::size_t       count() const noexcept;
    std::vector<Pair> pairs() const;

    Relation inverse() const;
    bool     subset_of(Relation const& other) const;
    Relation operator|(Relation const& other) const;

    bool        operator==(Relation const& other) const;
    std::size_t hash() const noexcept;

    // Rows as sets: the y's related to x.
    std::span<std::uint64_t const> row(Elem x) const noexcept {
      return {_bits.data() + x * _words, _words};
    }

    friend Relation compose(Relation const& r, Relation const& s);

   private:
    FiniteAlgebra              _left;
    FiniteAlgebra              _right;
    std::size_t                _words;
    std::vector<std::uint64_t> _bits;
  };

  struct RelationHash {
    std::size_t operator()(Relation const& r) const noexcept {
      return r.hash();
    }
  };

  struct CompatibilityViolation {
    std::size_t       op;
    std::vector<Pair> args;
    Pair              result;
  };

  // nullopt iff the pair set is closed under every operation coordinatewise.
  std::optional<CompatibilityViolation> check_compatible(Relation const& r);
  bool is_compatible(Relation const& r);

  // Least compatible relation containing the seed pairs.
  Relation compatible_closure(FiniteAlgebra const& left,
                              FiniteAlgebra const& right,
                              std::span<Pair const> seed,
                              Limits const&         limits = {});

  // Same, also returning the closure so that every pair carries a term over
  // the seed pairs producing it.
  struct WitnessedRelation {
    Relation relation;
    Closure  closure;

    Term const& witness(Elem x, Elem y) const;
  };
  WitnessedRelation compatible_closure_with_witnesses(
      FiniteAlgebra const& left, FiniteAlgebra const& right,
      std::span<Pair const> seed, Limits const& limits = {});

  // Throws Error if the middle algebras differ.
  Relation compose(Relation const& r, Relation const& s);

  struct TransitiveClosure {
    Relation    closure;
    // Least k >= 1 with R^k = R^(k+1).
    std::size_t exponent;
  };
  // Throws Error unless r is a reflexive square relation.
  TransitiveClosure transitive_closure(Relation const& r);

  // (R,S)_n: the n-th term of Delta, R, RS, RSR, ...
  Relation alternating_chain(Relation const& r, Relation const& s,
                             std::size_t n);

  struct RelationClass {
    bool square       = false;
    bool reflexive    = false;
    bool symmetric    = false;
    bool transitive   = false;
    bool difunctional = false;
    bool preorder     = false;
    bool equivalence  = false;

    std::optional<Elem>                          not_reflexive;   // (x,x) missing
    std::optional<Pair>                          not_symmetric;   // (x,y) in, (y,x) not
    std::optional<std::array<Elem, 3>>           not_transitive;  // xRy, yRz, not xRz
    std::optional<std::array<Elem, 4>>           not_difunctional;  // xRy, zRy, zRu, not xRu
  };

  // difunctional: x R y, z R y, z R u imply x R u.
  RelationClass classify_relation(Relation const& r);

  // {(x, y) : h(x) = h(y)}.
  Relation kernel_pair(Homomorphism const& h);

  // Smallest congruence containing the given pairs.
  Relation congruence_generated(FiniteAlgebra const& alg,
                                std::span<Pair const> pairs);

}  // namespace ualg
