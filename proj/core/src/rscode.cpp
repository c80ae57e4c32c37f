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

#include "rslab/rscode.hpp"

#include <algorithm>

#include "rslab/rng.hpp"

namespace rslab {
namespace {

void check_distinct(std::span<const std::uint64_t> points) {
  Vec sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    raise(Errc::RepeatedPoints, "evaluation points must be distinct");
  }
}

}  // namespace

PuncturedRSCode::PuncturedRSCode(FieldPtr field, std::size_t k, Vec points)
    : field_(std::move(field)), k_(k), points_(std::move(points)) {
  if (!field_) raise(Errc::InvalidArgument, "code needs a field");
  if (k_ < 1 || k_ > points_.size()) raise(Errc::InvalidArgument, "need 1 <= k <= n");
  if (points_.size() > field_->order()) raise(Errc::NTooLarge, "n exceeds the field order");
  for (auto x : points_) {
    if (x >= field_->order()) raise(Errc::InvalidArgument, "point outside the field");
  }
  check_distinct(points_);
}

Rational PuncturedRSCode::rate() const {
  return Rational(static_cast<std::int64_t>(k_), static_cast<std::int64_t>(n()));
}

Rational PuncturedRSCode::design_distance() const {
  return Rational(static_cast<std::int64_t>(n() - k_ + 1), static_cast<std::int64_t>(n()));
}

FieldMatrix PuncturedRSCode::generator() const { return vandermonde(field_, points_, k_); }

Vec PuncturedRSCode::encode(std::span<const std::uint64_t> message) const {
  if (message.size() != k_) raise(Errc::LengthMismatch, "message length must equal k");
  const Field& f = *field_;
  for (auto c : message) {
    if (c >= f.order()) raise(Errc::InvalidArgument, "message symbol outside the field");
  }
  Vec word(n(), 0);
  for (std::size_t i = 0; i < n(); ++i) {
    std::uint64_t acc = 0;  // Horner
    for (std::size_t j = k_; j-- > 0;) acc = f.add(f.mul(acc, points_[i]), message[j]);
    word[i] = acc;
  }
  return word;
}

nlohmann::json field_to_json(const Field& field) {
  nlohmann::json j;
  j["p"] = field.characteristic();
  j["m"] = field.degree();
  j["modulus"] = field.degree() > 1 ? nlohmann::json(field.modulus()) : nlohmann::json(nullptr);
  return j;
}

FieldPtr field_from_json(const nlohmann::json& j) {
  const auto p = j.at("p").get<std::uint64_t>();
  const auto m = j.value("m", 1u);
  std::optional<std::vector<std::uint64_t>> modulus;
  if (j.contains("modulus") && !j.at("modulus").is_null()) modulus = j.at("modulus").get<std::vector<std::uint64_t>>();
  return Field::make(p, m, modulus);
}

nlohmann::json PuncturedRSCode::to_json() const {
  nlohmann::json j = field_to_json(*field_);
  j["n"] = n();
  j["k"] = k_;
  j["points"] = points_;
  return j;
}

PuncturedRSCode PuncturedRSCode::from_json(const nlohmann::json& j) {
  FieldPtr f = field_from_json(j);
  auto points = j.at("points").get<Vec>();
  if (j.contains("n") && j.at("n").get<std::size_t>() != points.size()) {
    raise(Errc::LengthMismatch, "n disagrees with the number of points");
  }
  return PuncturedRSCode(f, j.at("k").get<std::size_t>(), std::move(points));
}

FieldMatrix vandermonde(const FieldPtr& field, std::span<const std::uint64_t> points, std::size_t k) {
  if (k < 1) raise(Errc::InvalidArgument, "k must be positive");
  const Field& f = *field;
  FieldMatrix v(field, points.size(), k);
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::uint64_t x = 1;
    for (std::size_t j = 0; j < k; ++j) {
      v(i, j) = x;
      x = f.mul(x, points[i]);
    }
  }
  return v;
}

PolyMatrix symbolic_vandermonde(std::size_t n, std::size_t k, const FieldPtr& field) {
  if (k < 1) raise(Errc::InvalidArgument, "k must be positive");
  if (n > kMaxVariables) raise(Errc::IndexOutOfRange, "too many variables for a symbolic matrix");
  const auto nv = static_cast<unsigned>(n);
  PolyMatrix v(field, nv, n, k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      v.set(i, j, MultiPoly::variable(field, nv, static_cast<unsigned>(i), static_cast<unsigned>(j)));
    }
  }
  return v;
}

PuncturedRSCode random_puncture(const FieldPtr& field, std::size_t n, std::size_t k, Rng& rng) {
  if (k < 1 || k > n) raise(Errc::InvalidArgument, "need 1 <= k <= n");
  return PuncturedRSCode(field, k, field->sample_distinct_raw(n, rng));
}

Vec dual_diag(const Field& f, std::span<const std::uint64_t> points) {
  check_distinct(points);
  Vec v(points.size(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::uint64_t prod = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j != i) prod = f.mul(prod, f.sub(points[i], points[j]));
    }
    v[i] = f.inv(prod);
  }
  return v;
}

FieldMatrix duality_product(const FieldPtr& field, std::span<const std::uint64_t> points, std::size_t k) {
  const std::size_t n = points.size();
  if (k < 1 || k + 1 > n) raise(Errc::InvalidArgument, "duality needs 1 <= k <= n-1");
  const Field& f = *field;
  const Vec d = dual_diag(f, points);
  FieldMatrix h = vandermonde(field, points, n - k).transpose();
  for (std::size_t r = 0; r < h.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) h(r, c) = f.mul(h(r, c), d[c]);
  }
  return h * vandermonde(field, points, k);
}

bool check_duality(const FieldPtr& field, std::span<const std::uint64_t> points, std::size_t k) {
  return duality_product(field, points, k).is_zero();
}

}  // namespace rslab
