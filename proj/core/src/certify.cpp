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

#include "rslab/certify.hpp"

#include <cmath>
#include <cstdio>

namespace rslab {

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Success:
      return "SUCCESS";
    case Outcome::Fail:
      return "FAIL";
    case Outcome::FaultyTuple:
      return "FAULTY_TUPLE";
  }
  return "?";
}

std::string fingerprint(const MultiPoly& p) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : p.to_string()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

nlohmann::json one_based(const std::vector<std::size_t>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t x : v) out.push_back(x + 1);
  return out;
}

nlohmann::json mask_list(Mask m) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < 64; ++i) {
    if ((m >> i) & 1) out.push_back(i + 1);
  }
  return out;
}

bool test_zero(const MultiPoly& p, const ZeroTestOptions& zt) {
  if (zt.strategy == ZeroTest::Symbolic) return p.is_zero();
  return is_zero_poly(p, zt).is_zero;
}

// First prefix length i+1 whose partial assignment makes det vanish.
std::optional<std::size_t> scan_prefixes(const MultiPoly& det, std::span<const std::uint64_t> point,
                                         const ZeroTestOptions& zt) {
  MultiPoly cur = det;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (cur.degree_in(static_cast<unsigned>(i)) <= 0) continue;  // X_i absent: zeroness unchanged
    cur = cur.partial_assign(Assignment{{static_cast<unsigned>(i), point[i]}});
    if (test_zero(cur, zt)) return i;
  }
  return std::nullopt;
}

int max_degree(const MultiPoly& p) {
  int d = 0;
  for (unsigned v = 0; v < p.nvars(); ++v) d = std::max(d, p.degree_in(v));
  return d;
}

}  // namespace

nlohmann::json CertificationOutcome::to_json() const {
  nlohmann::json j;
  j["outcome"] = outcome_name(tag);
  j["faulty"] = one_based(faulty);
  j["certificate"] = one_based(certificate);
  nlohmann::json rs = nlohmann::json::array();
  for (const RoundEvidence& e : rounds) {
    nlohmann::json r;
    r["deleted"] = mask_list(e.deleted);
    r["full_rank"] = e.full_rank;
    r["selection"] = one_based(e.selection);
    r["det_fingerprint"] = e.det_fingerprint;
    r["faulty"] = e.faulty ? nlohmann::json(*e.faulty + 1) : nlohmann::json(nullptr);
    rs.push_back(std::move(r));
  }
  j["rounds"] = std::move(rs);
  return j;
}

std::optional<std::size_t> faulty_index_of(const MultiPoly& det, std::span<const std::uint64_t> point,
                                           const ZeroTestOptions& zero_test) {
  if (det.is_zero()) raise(Errc::SymbolicallySingular, "determinant is identically zero");
  if (point.size() != det.nvars()) raise(Errc::LengthMismatch, "point dimension differs from nvars");
  if (det.evaluate(point) != 0) return std::nullopt;
  ZeroTestOptions zt = zero_test;
  if (zt.strategy == ZeroTest::Grid && zt.degree_bound < 0) zt.degree_bound = max_degree(det);
  auto i = scan_prefixes(det, point, zt);
  // The full prefix is the constant det(point) = 0, so a zero prefix exists.
  if (!i) raise(Errc::MethodMismatch, "prefix scan disagrees with full evaluation");
  return i;
}

std::optional<std::size_t> faulty_index(const PolyMatrix& a, std::span<const std::uint64_t> point,
                                        const RowSelection& m, const ZeroTestOptions& zero_test) {
  if (m.size() != a.cols()) raise(Errc::NotSquare, "row selection must have cols() rows");
  return faulty_index_of(det_poly(a.select_rows(m)), point, zero_test);
}

// ---- Certifier ------------------------------------------------------------------

Certifier::Certifier(SetSystem sys, std::size_t k, FieldPtr field, CertifyOptions options)
    : sys_(std::move(sys)), k_(k), field_(std::move(field)), options_(options) {
  if (sys_.t() < 2) raise(Errc::TDegenerate, "certification needs t >= 2");
  rim_ = ReducedIntersectionMatrix::symbolic(sys_, k_, field_);
  powers_.assign(sys_.n() * k_, 0);
}

const Certifier::RoundData& Certifier::round_data(Mask b) {
  auto it = cache_.find(b);
  if (it != cache_.end()) return it->second;
  RoundData d;
  const ReducedIntersectionMatrix sub = rim_.delete_rows(b);
  const std::size_t l = rim_.cols();
  RankOptions ro;
  ro.strategy = RankStrategy::Certified;
  ro.seed = options_.seed;
  d.full_rank = sub.rows() >= l && rank_symbolic(sub.poly(), ro) == l;
  if (d.full_rank) {
    RowSelection local = lex_min_nonsingular_rows(sub.poly(), options_.seed);
    d.det = det_poly(sub.poly().select_rows(local));
    if (d.det.is_zero()) raise(Errc::SymbolicallySingular, "lex-min selection has zero determinant");
    ++dets_built_;
    if (max_degree(d.det) > static_cast<int>(degree_bound())) ++degree_violations_;
    RowSelection keep;
    for (std::size_t r = 0; r < rim_.rows(); ++r) {
      if (!((b >> rim_.row_info()[r].element) & 1)) keep.push_back(r);
    }
    for (std::size_t x : local) d.selection.push_back(keep[x]);
    if (options_.record_evidence) d.det_fingerprint = fingerprint(d.det);
  }
  return cache_.emplace(b, std::move(d)).first->second;
}

std::uint64_t Certifier::evaluated_det(const RowSelection& rows, std::span<const std::uint64_t>) {
  const Field& f = *field_;
  const std::size_t l = rim_.cols();
  scratch_.assign(l * l, 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const RimRow& meta = rim_.row_info()[rows[r]];
    const std::uint64_t* pw = powers_.data() + meta.element * k_;
    std::uint64_t* out = scratch_.data() + r * l;
    for (std::size_t c = 0; c < k_; ++c) {
      out[meta.plus_block * k_ + c] = pw[c];
      if (meta.minus_block) out[*meta.minus_block * k_ + c] = f.neg(pw[c]);
    }
  }
  return detail::det_inplace(f, scratch_.data(), l);
}

CertificationOutcome Certifier::run(std::span<const std::uint64_t> points, std::size_t r) {
  if (r < 1) raise(Errc::InvalidArgument, "r must be at least 1");
  if (points.size() != sys_.n()) raise(Errc::LengthMismatch, "need one point per ground element");
  const Field& f = *field_;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::uint64_t x = 1;
    for (std::size_t c = 0; c < k_; ++c) {
      powers_[i * k_ + c] = x;
      x = f.mul(x, points[i]);
    }
  }
  ZeroTestOptions zt;
  zt.strategy = options_.zero_test;
  zt.degree_bound = static_cast<int>(degree_bound());
  zt.trials = options_.randomized_trials;
  zt.seed = options_.seed;

  CertificationOutcome out;
  Mask b = 0;
  for (std::size_t round = 0; round < r; ++round) {
    const RoundData& d = round_data(b);
    RoundEvidence ev;
    ev.deleted = b;
    ev.full_rank = d.full_rank;
    if (!d.full_rank) {
      out.tag = Outcome::Fail;
      if (options_.record_evidence) out.rounds.push_back(std::move(ev));
      return out;
    }
    ev.selection = d.selection;
    ev.det_fingerprint = d.det_fingerprint;
    if (evaluated_det(d.selection, points) != 0) {
      out.tag = Outcome::Success;
      out.certificate = d.selection;
      if (options_.record_evidence) out.rounds.push_back(std::move(ev));
      return out;
    }
    auto i = scan_prefixes(d.det, points, zt);
    if (!i) raise(Errc::MethodMismatch, "prefix scan disagrees with the evaluated determinant");
    ev.faulty = *i;
    out.faulty.push_back(*i);
    b |= Mask{1} << *i;
    if (options_.record_evidence) out.rounds.push_back(std::move(ev));
  }
  out.tag = Outcome::FaultyTuple;
  return out;
}

CertificationOutcome certify_full_column_rank(const SetSystem& sys, std::size_t k, const FieldPtr& field,
                                              std::span<const std::uint64_t> points, std::size_t r,
                                              const CertifyOptions& options) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) raise(Errc::RepeatedPoints, "evaluation points must be distinct");
    }
  }
  Certifier c(sys, k, field, options);
  return c.run(points, r);
}

// ---- bounds ---------------------------------------------------------------------

double to_double(const BigRational& r) {
  return boost::multiprecision::numerator(r).convert_to<double>() /
         boost::multiprecision::denominator(r).convert_to<double>();
}

namespace {

BigRational big_pow(const BigRational& base, std::size_t e) {
  BigRational out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

BigInt ipow(BigInt base, std::uint64_t e) {
  BigInt out = 1;
  while (e != 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

nlohmann::json rational_json(const BigRational& r) {
  return {{"exact", to_string(r)}, {"value", to_double(r)}};
}

}  // namespace

nlohmann::json BoundReport::to_json() const {
  nlohmann::json j = {{"t", t}, {"n", n}, {"k", k}, {"q", q}, {"r", r},
                      {"per_tuple", rational_json(per_tuple)}, {"union", rational_json(union_bound)}};
  if (L) {
    j["global"] = {{"L", *L}, {"eps", eps->to_string()},
                   {"exact", global_exact ? nlohmann::json(to_string(*global_exact)) : nlohmann::json(nullptr)},
                   {"log2", global_log2 ? nlohmann::json(*global_log2) : nlohmann::json(nullptr)}};
  }
  return j;
}

BoundReport failure_bound(std::size_t t, std::size_t n, std::size_t k, std::uint64_t q, std::size_t r,
                          std::optional<GlobalBoundInput> global) {
  if (r < 1) raise(Errc::InvalidArgument, "r must be at least 1");
  if (t < 2) raise(Errc::TDegenerate, "t must be at least 2");
  if (q < n) raise(Errc::QTooSmall, "q must be at least n");
  BoundReport rep;
  rep.t = t;
  rep.n = n;
  rep.k = k;
  rep.q = q;
  rep.r = r;
  const BigInt denom = BigInt(q) - BigInt(n) + 1;
  rep.per_tuple = big_pow(BigRational(BigInt((t - 1) * (k - 1)), denom), r);
  rep.union_bound = big_pow(BigRational(BigInt((t - 1) * n * (k - 1)), denom), r);
  if (global) {
    rep.L = global->L;
    rep.eps = global->eps;
    const Rational e = global->eps * Rational(static_cast<std::int64_t>(n)) /
                       Rational(static_cast<std::int64_t>(global->L));
    const BigInt base_num = BigInt(global->L * n * (k - 1));
    const double lead = static_cast<double>((global->L + 2) * n);
    if (base_num == 0) {
      rep.global_log2 = e.num() == 0 ? lead : -INFINITY;
      if (e.is_integer()) rep.global_exact = e.num() == 0 ? BigRational(ipow(2, (global->L + 2) * n)) : BigRational(0);
    } else {
      rep.global_log2 = lead + e.to_double() * (std::log2(base_num.convert_to<double>()) -
                                                std::log2(denom.convert_to<double>()));
      if (e.is_integer()) {
        rep.global_exact = BigRational(ipow(2, (global->L + 2) * n)) *
                           BigRational(ipow(base_num, static_cast<std::uint64_t>(e.num())),
                                       ipow(denom, static_cast<std::uint64_t>(e.num())));
      }
    }
  }
  return rep;
}

// ---- theorem parameters ---------------------------------------------------------

BigInt ceil_pow2_times(const BigInt& num, const BigInt& den, const BigInt& x) {
  if (den < 1 || num < 0 || x < 0) raise(Errc::InvalidArgument, "ceil_pow2_times needs den >= 1, num, x >= 0");
  if (x == 0) return 0;
  const auto d = den.convert_to<std::uint64_t>();
  const BigInt target = ipow(2, num.convert_to<std::uint64_t>()) * ipow(x, d);
  // Smallest N with N^d >= target.
  BigInt lo = 0, hi = 1;
  while (ipow(hi, d) < target) hi <<= 1;
  while (lo < hi) {
    BigInt mid = (lo + hi) >> 1;
    if (ipow(mid, d) >= target) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

nlohmann::json TheoremParams::to_json() const {
  nlohmann::json rs = nlohmann::json::array();
  for (auto [t, r] : r_by_t) rs.push_back({{"t", t}, {"r", r}});
  return {{"mode", mode == ParamMode::Main ? "main" : "capacity"},
          {"L", L},
          {"eps_effective", eps_effective.to_string()},
          {"lambda", lambda.to_string()},
          {"r", std::move(rs)},
          {"required_q", required_q ? nlohmann::json(required_q->str()) : nlohmann::json(nullptr)},
          {"radius", radius.to_string()}};
}

TheoremParams theorem_params(const ParamInput& in) {
  if (in.eps < Rational(0) || in.eps >= Rational(1)) raise(Errc::BadEpsilon, "eps must lie in [0, 1)");
  if (in.c <= Rational(2)) raise(Errc::BadC, "c must exceed 2");
  if (in.k < 1 || in.k > in.n) raise(Errc::InvalidArgument, "need 1 <= k <= n");
  const Rational n(static_cast<std::int64_t>(in.n)), k(static_cast<std::int64_t>(in.k));
  const Rational rate = k / n;
  TheoremParams p;
  p.mode = in.mode;
  if (in.mode == ParamMode::Main) {
    if (in.L < 1) raise(Errc::InvalidArgument, "L must be positive");
    p.L = in.L;
    p.eps_effective = in.eps;
    const Rational l(static_cast<std::int64_t>(p.L));
    p.radius = l / (l + 1) * (Rational(1) - rate - in.eps);
  } else {
    if (in.eps == Rational(0)) raise(Errc::BadEpsilon, "capacity mode needs eps > 0");
    if (in.delta <= Rational(0) || in.delta >= Rational(1)) raise(Errc::BadDelta, "delta must lie in (0, 1)");
    const std::int64_t l = ((Rational(1) - rate) / ((Rational(1) - in.delta) * in.eps)).ceil() - 1;
    p.L = static_cast<std::size_t>(std::max<std::int64_t>(l, 1));
    p.eps_effective = in.delta * in.eps;
    p.radius = Rational(1) - rate - in.eps;
  }
  p.lambda = p.eps_effective * n / k;
  for (std::size_t t = 2; t <= p.L + 1; ++t) {
    const Rational x = p.lambda * k / Rational(static_cast<std::int64_t>(t - 1)) + Rational(1);
    p.r_by_t.emplace_back(t, static_cast<std::size_t>(x.floor()));
  }
  if (p.eps_effective.num() != 0) {
    // Exponent L(L+c)/eps as an exact fraction.
    const BigRational expo = BigRational(BigInt(p.L)) * (BigRational(BigInt(p.L)) + in.c.to_big()) /
                             p.eps_effective.to_big();
    const BigInt x = BigInt(p.L) * BigInt(in.n) * BigInt(in.k - 1);
    p.required_q = ceil_pow2_times(boost::multiprecision::numerator(expo), boost::multiprecision::denominator(expo), x) +
                   BigInt(in.n);
  }
  return p;
}

}  // namespace rslab
