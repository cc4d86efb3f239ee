#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ualg {

  // Malformed input, mismatched signatures, violated preconditions.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A configured resource bound was hit. Carries how far the computation got
  // so callers can report it instead of pretending the result is complete.
  class ResourceError : public Error {
   public:
    ResourceError(std::string const& what, std::size_t partial)
        : Error(what), _partial(partial) {}

    std::size_t partial_size() const noexcept {
      return _partial;
    }

   private:
    std::size_t _partial;
  };

  struct Limits {
    // Largest number of elements any closure may produce.
    std::size_t max_elements = 1'000'000;
    // Largest number of entries a materialised operation table may have.
    std::size_t max_table_entries = 50'000'000;
    // Search nodes visited by homomorphism enumeration before giving up.
    std::size_t max_search_nodes = 50'000'000;
  };

}  // namespace ualg
