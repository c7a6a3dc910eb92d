#pragma once

#include <cstddef>

namespace schurlab {

/// Enumeration limits. Operations that would scan 2^n words or materialize a
/// large closure check these first and throw instead of degrading.
struct Caps {
  int max_enum_n = 24;                              //< largest n for full 2^n scans
  std::size_t max_group_size = 1000000;             //< explicit group closure bound
  std::size_t max_subgroup_size = std::size_t{1} << 24;
};

/// Default caps, with SCHURLAB_MAX_N (if set) overriding max_enum_n.
Caps caps_from_env();

/// Throws std::length_error when 2^n enumeration exceeds the cap.
void require_enumerable(int n, const Caps& caps);

}  // namespace schurlab
