#include "schurlab/caps.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace schurlab {

Caps caps_from_env() {
  Caps caps;
  if (const char* env = std::getenv("SCHURLAB_MAX_N")) {
    int v = std::stoi(env);
    if (v < 1 || v > 30) throw std::invalid_argument("SCHURLAB_MAX_N must be in [1,30]");
    caps.max_enum_n = v;
  }
  return caps;
}

void require_enumerable(int n, const Caps& caps) {
  if (n > caps.max_enum_n)
    throw std::length_error("n=" + std::to_string(n) + " exceeds enumeration cap " +
                            std::to_string(caps.max_enum_n));
}

}  // namespace schurlab
