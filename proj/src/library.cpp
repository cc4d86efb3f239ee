#include "ualg/library.hpp"

#include <charconv>

namespace ualg::lib {

  namespace {
    std::vector<std::string> numeric_labels(std::size_t n) {
      std::vector<std::string> out;
      for (std::size_t i = 1; i <= n; ++i) {
        out.push_back(std::to_string(i));
      }
      return out;
    }

    Signature mul_signature() {
      return Signature({{"mul", 2}});
    }
  }  // namespace

  FiniteAlgebra implication_a() {
    return FiniteAlgebra("A", mul_signature(), 2, {{0, 1, 0, 0}},
                         numeric_labels(2));
  }

  FiniteAlgebra implication_b() {
    return FiniteAlgebra("B", mul_signature(), 3,
                         {{0, 1, 2, 0, 0, 2, 0, 1, 0}}, numeric_labels(3));
  }

  FiniteAlgebra cyclic_group(std::size_t n) {
    if (n == 0) {
      throw Error("cyclic_group: n must be positive");
    }
    std::vector<Elem> add(n * n), neg(n);
    for (std::size_t a = 0; a < n; ++a) {
      neg[a] = static_cast<Elem>((n - a) % n);
      for (std::size_t b = 0; b < n; ++b) {
        add[a * n + b] = static_cast<Elem>((a + b) % n);
      }
    }
    return FiniteAlgebra("Z" + std::to_string(n),
                         Signature({{"add", 2}, {"neg", 1}, {"zero", 0}}), n,
                         {std::move(add), std::move(neg), {0}});
  }

  FiniteAlgebra chain_semilattice() {
    return FiniteAlgebra("SL2", Signature({{"meet", 2}}), 2, {{0, 0, 0, 1}});
  }

  FiniteAlgebra plain_set(std::size_t n) {
    return FiniteAlgebra("set" + std::to_string(n), Signature{}, n, {});
  }

  FiniteAlgebra trivial_algebra(Signature const& sig, std::string name) {
    std::vector<std::vector<Elem>> tables(sig.size());
    for (std::size_t op = 0; op < sig.size(); ++op) {
      tables[op].assign(1, 0);
    }
    return FiniteAlgebra(std::move(name), sig, 1, std::move(tables));
  }

  Homomorphism example_f() {
    return Homomorphism{implication_b(), implication_a(), {0, 0, 1}};
  }

  Homomorphism example_g() {
    return Homomorphism{implication_b(), implication_a(), {0, 1, 0}};
  }

  std::vector<std::string> builtin_names() {
    std::vector<std::string> out{"A", "B", "Z2", "Z3", "SL2"};
    for (int n = 1; n <= 9; ++n) {
      out.push_back("set" + std::to_string(n));
    }
    return out;
  }

  std::optional<FiniteAlgebra> builtin(std::string_view name) {
    if (name == "A") {
      return implication_a();
    }
    if (name == "B") {
      return implication_b();
    }
    if (name == "Z2") {
      return cyclic_group(2);
    }
    if (name == "Z3") {
      return cyclic_group(3);
    }
    if (name == "SL2") {
      return chain_semilattice();
    }
    if (name.size() == 4 && name.substr(0, 3) == "set") {
      int n = 0;
      auto [p, ec] = std::from_chars(name.data() + 3, name.data() + 4, n);
      if (ec == std::errc{} && n >= 1) {
        return plain_set(static_cast<std::size_t>(n));
      }
    }
    return std::nullopt;
  }

}  // namespace ualg::lib
