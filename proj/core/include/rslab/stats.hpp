// Copyright 2026 The rslab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace rslab {

struct Interval {
  double lo = 0.0, hi = 1.0;
};

/// Exact two-sided Clopper-Pearson interval for x successes in n trials.
Interval clopper_pearson(std::uint64_t x, std::uint64_t n, double confidence = 0.99);

/// sqrt(p (1 - p) / n), the standard deviation of a frequency.
double binomial_sigma(double p, std::uint64_t n);

/// Smallest c with P[Binomial(n, p) <= c] >= level.
std::uint64_t binomial_upper_quantile(std::uint64_t n, double p, double level = 0.99);

}  // namespace rslab
