// Copyright 2026 The Chief Authors
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

#ifndef CHIEF_PARALLEL_HPP_
#define CHIEF_PARALLEL_HPP_

#include <omp.h>

#include <exception>
#include <mutex>

namespace chief {

// Thread-count control shared by every OpenMP kernel. A value of 0 means
// "use the OpenMP default" (all available hardware threads).
inline void SetNumThreads(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

inline int MaxThreads() { return omp_get_max_threads(); }

inline int ThreadIndex() { return omp_get_thread_num(); }

// Exceptions must not leave an OpenMP region. Run loop bodies through
// Capture() and call Rethrow() after the region ends.
class ExceptionSlot {
 public:
  template <typename Fn>
  void Capture(Fn&& fn) {
    try {
      fn();
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu_);
      if (!error_) error_ = std::current_exception();
    }
  }

  void Rethrow() {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mu_;
  std::exception_ptr error_;
};

}  // namespace chief

#endif  // CHIEF_PARALLEL_HPP_
