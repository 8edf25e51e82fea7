// Copyright 2026 The Authors.
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

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gcmb {

// jobs <= 0 means "all available cores".
inline int resolve_jobs(int jobs) {
#ifdef _OPENMP
  if (jobs <= 0) return omp_get_num_procs();
#else
  if (jobs <= 0) return 1;
#endif
  return jobs;
}

// Runs f(i) for i in [0, count). Iterations must write only to their own slots.
template <typename F>
void parallel_for(std::int64_t count, int jobs, F&& f) {
  jobs = resolve_jobs(jobs);
  if (jobs == 1 || count < 2) {
    for (std::int64_t i = 0; i < count; ++i) f(i);
    return;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (std::int64_t i = 0; i < count; ++i) f(i);
#else
  for (std::int64_t i = 0; i < count; ++i) f(i);
#endif
}

}  // namespace gcmb
