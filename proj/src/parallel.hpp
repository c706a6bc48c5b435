// Copyright 2026 sumkern developers
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

#ifndef SUMKERN_PARALLEL_HPP
#define SUMKERN_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace sumkern {

// Worker count: min(hardware_concurrency, KERNEL_EXTEND_THREADS when set).
unsigned thread_budget();

// Runs fn(i) for i in [0, n). Work is split into contiguous index blocks;
// results must be written to disjoint slots so the outcome is
// schedule-independent. Falls back to a serial loop for small n.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace sumkern

#endif
