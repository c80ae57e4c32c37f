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

#include "rslab/oracle.hpp"

#include <algorithm>
#include <limits>

#include "rslab/error.hpp"
#include "rslab/rng.hpp"

namespace rslab {

Vec plurality_center(const std::vector<Vec>& words) {
  if (words.empty()) raise(Errc::EmptyList, "plurality center of an empty list");
  const std::size_t n = words[0].size();
  for (const Vec& w : words) {
    if (w.size() != n) raise(Errc::LengthMismatch, "words differ in length");
  }
  Vec y(n, 0);
  std::vector<std::uint64_t> column(words.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) column[j] = words[j][i];
    std::sort(column.begin(), column.end());
    // Runs in increasing order, so strict > keeps the smallest symbol on ties.
    std::size_t best = 0;
    for (std::size_t a = 0; a < column.size();) {
      std::size_t b = a;
      while (b < column.size() && column[b] == column[a]) ++b;
      if (b - a > best) {
        best = b - a;
        y[i] = column[a];
      }
      a = b;
    }
  }
  return y;
}

std::uint64_t total_distance(const std::vector<Vec>& words, std::span<const std::uint64_t> y) {
  std::uint64_t d = 0;
  for (const Vec& w : words) {
    if (w.size() != y.size()) raise(Errc::LengthMismatch, "word and center differ in length");
    for (std::size_t i = 0; i < y.size(); ++i) d += w[i] != y[i];
  }
  return d;
}

Rational average_relative_distance(const std::vector<Vec>& words, std::span<const std::uint64_t> y) {
  if (words.empty()) raise(Errc::EmptyList, "average over an empty list");
  if (y.empty()) raise(Errc::InvalidArgument, "zero-length words");
  return Rational(static_cast<std::int64_t>(total_distance(words, y)),
                  static_cast<std::int64_t>(words.size() * y.size()));
}

// ---- JSON -----------------------------------------------------------------------

nlohmann::json Violation::to_json() const {
  return {{"center", center}, {"indices", indices}, {"messages", messages},
          {"words", words}, {"average", average.to_string()}};
}

Violation Violation::from_json(const nlohmann::json& j) {
  Violation v;
  v.center = j.at("center").get<Vec>();
  v.indices = j.at("indices").get<std::vector<std::uint64_t>>();
  v.messages = j.at("messages").get<std::vector<Vec>>();
  v.words = j.at("words").get<std::vector<Vec>>();
  v.average = Rational::parse(j.at("average").get<std::string>());
  return v;
}

nlohmann::json Verdict::to_json() const {
  return {{"decodable", decodable}, {"rho", rho.to_string()}, {"L", L}, {"tuples_checked", tuples_checked},
          {"violation", violation ? violation->to_json() : nlohmann::json(nullptr)}};
}

Verdict Verdict::from_json(const nlohmann::json& j) {
  Verdict v;
  v.decodable = j.at("decodable").get<bool>();
  v.rho = Rational::parse(j.at("rho").get<std::string>());
  v.L = j.at("L").get<std::size_t>();
  v.tuples_checked = j.at("tuples_checked").get<std::uint64_t>();
  if (!j.at("violation").is_null()) v.violation = Violation::from_json(j.at("violation"));
  return v;
}

// ---- enumeration ----------------------------------------------------------------

namespace {

std::uint64_t codeword_count(const PuncturedRSCode& code, const OracleCaps& caps) {
  const std::uint64_t q = code.field()->order();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < code.k(); ++i) {
    if (count > caps.max_codewords / q) {
      raise(Errc::EnumerationCapExceeded, "q^k exceeds the codeword cap " + std::to_string(caps.max_codewords));
    }
    count *= q;
  }
  if (count > caps.max_codewords) {
    raise(Errc::EnumerationCapExceeded, "q^k exceeds the codeword cap " + std::to_string(caps.max_codewords));
  }
  return count;
}

void check_rho(const Rational& rho) {
  if (rho < Rational(0)) raise(Errc::InvalidArgument, "rho must be nonnegative");
}

// sum/(n m) <= rho, i.e. sum * den <= num * n * m.
bool within(std::uint64_t sum, const Rational& rho, std::size_t n, std::size_t m) {
  __extension__ typedef unsigned __int128 u128;
  return static_cast<u128>(sum) * static_cast<u128>(rho.den()) <=
         static_cast<u128>(rho.num()) * n * m;
}

Violation make_violation(const PuncturedRSCode& code, const std::vector<Vec>& all,
                         const std::vector<std::uint64_t>& idx, Vec center, std::uint64_t sum) {
  Violation v;
  v.center = std::move(center);
  v.indices = idx;
  for (std::uint64_t i : idx) {
    v.messages.push_back(message_of(code, i));
    v.words.push_back(all[i]);
  }
  v.average = Rational(static_cast<std::int64_t>(sum), static_cast<std::int64_t>(code.n() * idx.size()));
  return v;
}

// Scans (L+1)-subsets in lexicographic order; `hit` returns false to stop.
template <typename Hit>
std::uint64_t scan(const PuncturedRSCode& code, const Rational& rho, std::size_t L, const OracleCaps& caps,
                   Hit&& hit) {
  check_rho(rho);
  if (L < 1) raise(Errc::InvalidArgument, "L must be positive");
  const std::uint64_t count = codeword_count(code, caps);
  const std::size_t m = L + 1;
  if (binomial_saturating(count, m) > caps.max_tuples) {
    raise(Errc::EnumerationCapExceeded, "C(q^k, L+1) exceeds the tuple cap " + std::to_string(caps.max_tuples));
  }
  const std::vector<Vec> all = all_codewords(code, caps);
  if (count < m) return 0;
  const std::size_t n = code.n();
  std::vector<std::uint64_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  std::vector<Vec> words(m);
  std::uint64_t checked = 0;
  for (;;) {
    ++checked;
    for (std::size_t i = 0; i < m; ++i) words[i] = all[idx[i]];
    Vec y = plurality_center(words);
    const std::uint64_t sum = total_distance(words, y);
    if (within(sum, rho, n, m)) {
      if (!hit(all, idx, std::move(y), sum)) return checked;
    }
    // Next combination.
    std::size_t p = m;
    while (p > 0 && idx[p - 1] == count - m + (p - 1)) --p;
    if (p == 0) break;
    ++idx[p - 1];
    for (std::size_t i = p; i < m; ++i) idx[i] = idx[i - 1] + 1;
  }
  return checked;
}

}  // namespace

Vec message_of(const PuncturedRSCode& code, std::uint64_t m) {
  const std::uint64_t q = code.field()->order();
  Vec msg(code.k(), 0);
  for (std::size_t c = 0; c < code.k(); ++c) {
    msg[c] = m % q;
    m /= q;
  }
  return msg;
}

std::vector<Vec> all_codewords(const PuncturedRSCode& code, const OracleCaps& caps) {
  const std::uint64_t count = codeword_count(code, caps);
  std::vector<Vec> out;
  out.reserve(count);
  for (std::uint64_t m = 0; m < count; ++m) out.push_back(code.encode(message_of(code, m)));
  return out;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t r) noexcept {
  if (r > n) return 0;
  r = std::min(r, n - r);
  __extension__ typedef unsigned __int128 u128;
  u128 acc = 1;
  constexpr u128 cap = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;  // exact: a product of i consecutive integers over i!
    if (acc > cap) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

Verdict is_avg_list_decodable(const PuncturedRSCode& code, const Rational& rho, std::size_t L,
                              const OracleCaps& caps) {
  Verdict v;
  v.rho = rho;
  v.L = L;
  v.tuples_checked = scan(code, rho, L, caps,
                          [&](const std::vector<Vec>& all, const std::vector<std::uint64_t>& idx, Vec y,
                              std::uint64_t sum) {
                            v.violation = make_violation(code, all, idx, std::move(y), sum);
                            return false;
                          });
  v.decodable = !v.violation;
  return v;
}

std::uint64_t for_each_violation(const PuncturedRSCode& code, const Rational& rho, std::size_t L,
                                 const std::function<bool(const Violation&)>& visit, const OracleCaps& caps) {
  std::uint64_t found = 0;
  scan(code, rho, L, caps,
       [&](const std::vector<Vec>& all, const std::vector<std::uint64_t>& idx, Vec y, std::uint64_t sum) {
         ++found;
         return visit(make_violation(code, all, idx, std::move(y), sum));
       });
  return found;
}

std::optional<Violation> check_tuple(const PuncturedRSCode& code, const std::vector<std::uint64_t>& indices,
                                     const Rational& rho) {
  check_rho(rho);
  std::vector<Vec> words;
  for (std::uint64_t i : indices) words.push_back(code.encode(message_of(code, i)));
  Vec y = plurality_center(words);
  const std::uint64_t sum = total_distance(words, y);
  if (!within(sum, rho, code.n(), words.size())) return std::nullopt;
  Violation v;
  v.center = std::move(y);
  v.indices = indices;
  for (std::uint64_t i : indices) v.messages.push_back(message_of(code, i));
  v.words = std::move(words);
  v.average = Rational(static_cast<std::int64_t>(sum), static_cast<std::int64_t>(code.n() * indices.size()));
  return v;
}

std::optional<MaxRadiusHit> max_radius_spot_check(const PuncturedRSCode& code, const Rational& rho, std::size_t L,
                                                  Rng& rng, std::uint64_t samples, std::uint64_t center_cap,
                                                  const OracleCaps& caps) {
  check_rho(rho);
  const std::vector<Vec> all = all_codewords(code, caps);
  const std::size_t n = code.n();
  const std::uint64_t q = code.field()->order();
  std::uint64_t space = 1;
  bool exhaustive = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (space > center_cap / q) {
      exhaustive = false;
      break;
    }
    space *= q;
  }
  exhaustive = exhaustive && space <= center_cap;
  const std::uint64_t rounds = exhaustive ? space : samples;
  Vec y(n);
  for (std::uint64_t s = 0; s < rounds; ++s) {
    if (exhaustive) {
      std::uint64_t x = s;
      for (std::size_t i = 0; i < n; ++i) {
        y[i] = x % q;
        x /= q;
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) y[i] = code.field()->random_raw(rng);
    }
    MaxRadiusHit hit;
    for (std::uint64_t c = 0; c < all.size(); ++c) {
      std::uint64_t d = 0;
      for (std::size_t i = 0; i < n; ++i) d += all[c][i] != y[i];
      if (within(d, rho, n, 1)) hit.indices.push_back(c);
    }
    if (hit.indices.size() > L) {
      hit.center = y;
      return hit;
    }
  }
  return std::nullopt;
}

Rational min_distance(const PuncturedRSCode& code, const OracleCaps& caps) {
  const std::vector<Vec> all = all_codewords(code, caps);
  if (all.size() < 2) raise(Errc::InvalidArgument, "code has no nonzero codeword");
  std::size_t best = code.n();
  for (std::size_t m = 1; m < all.size(); ++m) {
    const auto w = static_cast<std::size_t>(std::count_if(all[m].begin(), all[m].end(), [](std::uint64_t v) { return v != 0; }));
    best = std::min(best, w);
  }
  return Rational(static_cast<std::int64_t>(best), static_cast<std::int64_t>(code.n()));
}

}  // namespace rslab
