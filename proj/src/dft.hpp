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

#ifndef SUMKERN_DFT_HPP
#define SUMKERN_DFT_HPP

#include <vector>

#include "common.hpp"

namespace sumkern {

// In-place radix-2 FFT; size must be a power of two.
// forward: X[k] = sum_j x[j] exp(-2 pi i jk/n). Inverse includes the 1/n.
void fft(std::vector<cplx>& data, bool inverse);

}  // namespace sumkern

#endif
