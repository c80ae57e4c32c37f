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

#include "rslab/stats.hpp"

#include <cmath>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/special_functions/beta.hpp>

#include "rslab/error.hpp"

namespace rslab {

Interval clopper_pearson(std::uint64_t x, std::uint64_t n, double confidence) {
  if (n == 0) raise(Errc::InvalidArgument, "interval needs at least one trial");
  if (x > n) raise(Errc::InvalidArgument, "more successes than trials");
  if (!(confidence > 0.0 && confidence < 1.0)) raise(Errc::InvalidArgument, "confidence must lie in (0, 1)");
  const double alpha = 1.0 - confidence;
  const auto xd = static_cast<double>(x), nd = static_cast<double>(n);
  Interval out;
  out.lo = x == 0 ? 0.0 : boost::math::ibeta_inv(xd, nd - xd + 1.0, alpha / 2.0);
  out.hi = x == n ? 1.0 : boost::math::ibeta_inv(xd + 1.0, nd - xd, 1.0 - alpha / 2.0);
  return out;
}

double binomial_sigma(double p, std::uint64_t n) {
  if (n == 0) raise(Errc::InvalidArgument, "sigma needs at least one trial");
  return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

std::uint64_t binomial_upper_quantile(std::uint64_t n, double p, double level) {
  if (!(p >= 0.0 && p <= 1.0)) raise(Errc::InvalidArgument, "p must lie in [0, 1]");
  if (p == 0.0) return 0;
  if (p == 1.0) return n;
  const boost::math::binomial_distribution<double> dist(static_cast<double>(n), p);
  for (std::uint64_t c = 0; c < n; ++c) {
    if (boost::math::cdf(dist, static_cast<double>(c)) >= level) return c;
  }
  return n;
}

}  // namespace rslab
