// Copyright 2026 The properclock developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <vector>

namespace properclock {

/// In-place radix-2 DFT, x_j -> sum_a x_a exp(sign * 2 pi i a j / n),
/// unnormalized. n must be a power of two.
void fft_pow2(std::vector<std::complex<double>>& x, int sign);

}  // namespace properclock
