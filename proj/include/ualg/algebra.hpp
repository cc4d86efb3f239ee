#pragma once

// Finite algebras over a finitary signature, homomorphisms between them, and
// the constructions the rest of the library is built from.
//
// Carriers are always {0, ..., n-1}. An operation of arity k is stored as a
// flat table of n^k entries, row-major with the first argument most
// significant: the entry for (a_0, ..., a_{k-1}) lives at
// ((a_0 * n + a_1) * n + ...) + a_{k-1}.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ualg/error.hpp"

namespace ualg {

  using Elem    = std::uint32_t;
  using Mapping = std::vector<Elem>;

  struct Operation {
    std::string name;
    std::size_t arity = 0;

    bool operator==(Operation const&) const = default;
  };

  class Signature {
   public:
    Signature() = default;
    explicit Signature(std::vector<Operation> ops);

    std::size_t size() const noexcept {
      return _ops.size();
    }
    bool empty() const noexcept {
      return _ops.empty();
    }
    Operation const& operator[](std::size_t i) const {
      return _ops[i];
    }
    std::span<Operation const> ops() const noexcept {
      return _ops;
    }
    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t                max_arity() const noexcept;
    bool                       has_constants() const noexcept;

    bool operator==(Signature const&) const = default;

   private:
    std::vector<Operation> _ops;
  };

  // Saturating n^k; returns SIZE_MAX on overflow.
  std::size_t checked_pow(std::size_t n, std::size_t k) noexcept;

  // Immutable, cheap to copy (shared storage).
  class FiniteAlgebra {
   public:
    FiniteAlgebra(std::string                     name,
                  Signature                       signature,
                  std::size_t                     size,
                  std::vector<std::vector<Elem>>  tables,
                  std::vector<std::string>        labels = {});

    std::string const& name() const noexcept {
      return _data->name;
    }
    Signature const& signature() const noexcept {
      return _data->signature;
    }
    std::size_t size() const noexcept {
      return _data->size;
    }
    std::span<Elem const> table(std::size_t op) const {
      return _data->tables[op];
    }
    std::vector<std::string> const& labels() const noexcept {
      return _data->labels;
    }
    bool has_labels() const noexcept {
      return !_data->labels.empty();
    }

    Elem apply(std::size_t op, std::span<Elem const> args) const;
    Elem apply(std::size_t op, std::initializer_list<Elem> args) const {
      return apply(op, std::span<Elem const>(args.begin(), args.size()));
    }

    // Display name of an element: its label if present, else its index.
    std::string label(Elem x) const;
    // Inverse of label(); accepts labels or decimal indices.
    std::optional<Elem> element(std::string_view text) const;

    FiniteAlgebra with_name(std::string name) const;
    FiniteAlgebra with_labels(std::vector<std::string> labels) const;

    // Same signature, size and tables; names and labels are ignored.
    bool same_structure(FiniteAlgebra const& other) const;
    bool operator==(FiniteAlgebra const& other) const;

   private:
    struct Data {
      std::string                    name;
      Signature                      signature;
      std::size_t                    size;
      std::vector<std::vector<Elem>> tables;
      std::vector<std::string>       labels;
    };
    explicit FiniteAlgebra(std::shared_ptr<Data const> data)
        : _data(std::move(data)) {}
    std::shared_ptr<Data const> _data;
  };

  void require_same_signature(FiniteAlgebra const& a,
                              FiniteAlgebra const& b,
                              std::string_view     context);

  struct Homomorphism {
    FiniteAlgebra dom;
    FiniteAlgebra cod;
    Mapping       map;

    Elem operator()(Elem x) const {
      return map[x];
    }
  };

  // g after f.
  Homomorphism compose(Homomorphism const& g, Homomorphism const& f);
  Homomorphism identity_hom(FiniteAlgebra const& alg);
  bool         same_map(Homomorphism const& a, Homomorphism const& b);

  struct HomViolation {
    std::size_t       op;
    std::vector<Elem> args;
    Elem              image_of_result;   // h(op(args))
    Elem              result_of_images;  // op(h(args))
  };

  // nullopt when h preserves every operation. Throws Error on size mismatch or
  // out-of-range map entries.
  std::optional<HomViolation> check_homomorphism(Homomorphism const& h);
  bool is_homomorphism(Homomorphism const& h);
  std::string describe(Homomorphism const& h, HomViolation const& v);

  // Carrier is the cartesian product, encoded mixed-radix with the first
  // factor most significant; operations act coordinatewise.
  FiniteAlgebra product(std::span<FiniteAlgebra const> algs,
                        Limits const&                  limits = {});
  std::vector<Elem> decode_product(std::span<FiniteAlgebra const> algs,
                                   Elem                           x);
  Elem encode_product(std::span<FiniteAlgebra const> algs,
                      std::span<Elem const>          coords);
  Homomorphism product_projection(FiniteAlgebra const&           prod,
                                  std::span<FiniteAlgebra const> algs,
                                  std::size_t                    i);

  // Least operation-closed superset of seed, sorted ascending.
  std::vector<Elem> subalgebra_generated(FiniteAlgebra const&  alg,
                                         std::span<Elem const> seed);

  // A subset closed under the operations, re-indexed as an algebra in its own
  // right; the inclusion is elements[i].
  struct Subalgebra {
    FiniteAlgebra     algebra;
    std::vector<Elem> elements;
  };
  Subalgebra make_subalgebra(FiniteAlgebra const&  alg,
                             std::span<Elem const> closed_subset,
                             std::string           name = {});

  ////////////////////////////////////////////////////////////////////////
  // Homomorphism enumeration
  ////////////////////////////////////////////////////////////////////////

  struct HomSearch {
    // pinned[x] fixes the image of x; empty vector = nothing pinned.
    std::vector<std::optional<Elem>> pinned;
    // allowed[x] lists the admissible images of x; an empty outer vector
    // means no restriction, an empty inner vector means x has no image.
    std::vector<std::vector<Elem>> allowed;
    std::size_t                    max_nodes = Limits{}.max_search_nodes;
  };

  // Calls visit once for each homomorphism dom -> cod compatible with the
  // search constraints, in lexicographic order of the image vector. Stops early
  // when visit returns false. Returns the number of homomorphisms visited.
  std::size_t for_each_homomorphism(
      FiniteAlgebra const&                        dom,
      FiniteAlgebra const&                        cod,
      HomSearch const&                            search,
      std::function<bool(Mapping const&)> const& visit);

  std::vector<Homomorphism> enumerate_homomorphisms(
      FiniteAlgebra const&                    dom,
      FiniteAlgebra const&                    cod,
      std::vector<std::optional<Elem>> const& pinned = {},
      std::size_t                             limit  = SIZE_MAX);

}  // namespace ualg
