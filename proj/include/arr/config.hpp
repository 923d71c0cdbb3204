#pragma once

#include <cstddef>

namespace arr {

/// Size caps and worker count shared by every engine. The CLI fills this
/// from flags; only the worker count may also come from ARR_THREADS.
struct EngineConfig {
  std::size_t whitney_cap = 22;    // max hyperplanes for subset sums
  std::size_t geometric_cap = 18;  // max hyperplanes for sign-vector insertion
  std::size_t central_subsets_cap = 22;
  std::size_t ff_max_dim = 4;
  unsigned ff_max_prime = 64;
  unsigned threads = 1;
};

/// Worker count taken from ARR_THREADS when set and positive, else 1.
unsigned threads_from_environment();

}  // namespace arr
