// Copyright 2026 The Choicelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>

namespace choicelab {

// Sentinel returned by first_index_where when no index satisfies the
// predicate.
inline constexpr std::size_t kScanNone = static_cast<std::size_t>(-1);

// Least index in [0, count) satisfying pred, or kScanNone. The parallel path
// scans fixed-size chunks with a min-index merge per chunk, so it returns
// exactly the serial answer while exiting early between chunks; the serial
// path is the reference implementation. pred must be pure. An exception is
// rethrown only when no strictly earlier index satisfies pred, matching what
// the serial scan would have observed.
template <class Pred>
std::size_t first_index_where(std::size_t count, const Pred& pred, bool parallel) {
#ifdef _OPENMP
  if (parallel && count >= 64) {
    constexpr std::size_t kChunk = 256;
    for (std::size_t lo = 0; lo < count; lo += kChunk) {
      const std::size_t hi = std::min(count, lo + kChunk);
      std::size_t found = kScanNone;
      std::size_t err_at = kScanNone;
      std::exception_ptr err;
#pragma omp parallel
      {
        std::size_t local = kScanNone;
        std::size_t local_err_at = kScanNone;
        std::exception_ptr local_err;
#pragma omp for schedule(dynamic, 8) nowait
        for (long long raw = static_cast<long long>(lo); raw < static_cast<long long>(hi);
             ++raw) {
          const std::size_t i = static_cast<std::size_t>(raw);
          if (local < i) continue;
          try {
            if (pred(i)) local = std::min(local, i);
          } catch (...) {
            if (i < local_err_at) {
              local_err_at = i;
              local_err = std::current_exception();
            }
          }
        }
#pragma omp critical
        {
          found = std::min(found, local);
          if (local_err_at < err_at) {
            err_at = local_err_at;
            err = local_err;
          }
        }
      }
      if (err && err_at < found) std::rethrow_exception(err);
      if (found != kScanNone) return found;
    }
    return kScanNone;
  }
#endif
  (void)parallel;
  for (std::size_t i = 0; i < count; ++i) {
    if (pred(i)) return i;
  }
  return kScanNone;
}

}  // namespace choicelab
