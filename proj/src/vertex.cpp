#include "hlvir/vertex.hpp"

#include <cstdlib>
#include <string>

namespace hlvir {

CacheOptions CacheOptions::from_environment() {
  CacheOptions options;
  if (const char* env = std::getenv("HLVIR_CACHE_SIZE")) {
    try {
      const long long n = std::stoll(env);
      if (n <= 0) {
        options.enabled = false;
      } else {
        options.max_entries = static_cast<std::size_t>(n);
      }
    } catch (const std::exception&) {
      throw InvalidArgument("HLVIR_CACHE_SIZE must be an integer, got '" + std::string(env) + "'");
    }
  }
  return options;
}

}  // namespace hlvir
