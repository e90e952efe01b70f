// Copyright 2026 The spectral-moore Authors
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

#include "smoore/polynomial.hpp"

namespace smoore {

// Polynomial families attached to the degree parameter k >= 2. All are
// memoized per (k, family, parity) and safe to call from several threads.

/// F_0 = 1, F_1 = x, F_2 = x^2 - k, F_i = x F_{i-1} - (k-1) F_{i-2}.
Polynomial f_poly(long k, int i);

/// G_i = sum_j F_{i-2j}. G_{-1} is the zero polynomial by convention.
Polynomial g_poly(long k, int i);

/// Partial sums F_0 + ... + F_j.
Polynomial calg_poly(long k, int j);

/// The even/odd halves: x^eps * scrF(eps, i)(x^2) = F_{2i+eps}(x).
Polynomial scrF_poly(long k, int eps, int i);

/// scrF(eps, 0) + ... + scrF(eps, i).
Polynomial scrG_poly(long k, int eps, int i);

/// P_0 = 1 - eps, P_{1,1} = 1, P_{1,0} = z - 1, P_i = (z-2) P_{i-1} - P_{i-2}.
Polynomial p_poly(int i, int eps);

/// 2 sqrt(k-1) cos(pi/(j+1)), the largest zero of G_j.
double lambda_j(long k, int j);

}  // namespace smoore
