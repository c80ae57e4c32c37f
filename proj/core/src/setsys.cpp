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

#include "rslab/setsys.hpp"

#include "rslab/error.hpp"

namespace rslab {
namespace {

__extension__ typedef __int128 i128;

// Sign of w*den - (den+num)*m*k, i.e. of w - (1+lambda)mk.
int compare_weight(std::uint64_t w, const Rational& lambda, std::uint64_t m, std::size_t k) {
  if (lambda.num() < 0) raise(Errc::InvalidArgument, "lambda must be nonnegative");
  const i128 lhs = static_cast<i128>(w) * lambda.den();
  const i128 rhs = (static_cast<i128>(lambda.den()) + lambda.num()) * static_cast<i128>(m) * static_cast<i128>(k);
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

Mask reverse_low_bits(Mask x, std::size_t bits) {
  Mask r = 0;
  for (std::size_t i = 0; i < bits; ++i) {
    r = (r << 1) | (x & 1);
    x >>= 1;
  }
  return r;
}

}  // namespace

SetSystem::SetSystem(std::size_t n, std::vector<Mask> sets) : n_(n), sets_(std::move(sets)) {
  if (n_ > kMaxGround) raise(Errc::IndexOutOfRange, "ground set larger than 64");
  if (sets_.size() < 2) raise(Errc::TDegenerate, "a set system needs t >= 2");
  if (sets_.size() > kMaxBlocks) raise(Errc::IndexOutOfRange, "too many blocks");
  for (Mask s : sets_) {
    if ((s & ~ground()) != 0) raise(Errc::IndexOutOfRange, "set element outside [n]");
  }
}

SetSystem SetSystem::from_lists(std::size_t n, const std::vector<std::vector<std::size_t>>& lists) {
  std::vector<Mask> sets;
  for (const auto& l : lists) {
    Mask m = 0;
    for (std::size_t e : l) {
      if (e < 1 || e > n) raise(Errc::IndexOutOfRange, "set element outside [n]");
      m |= Mask{1} << (e - 1);
    }
    sets.push_back(m);
  }
  return SetSystem(n, std::move(sets));
}

Mask SetSystem::union_mask() const noexcept {
  Mask u = 0;
  for (Mask s : sets_) u |= s;
  return u;
}

std::uint64_t SetSystem::weight(std::uint32_t blocks) const {
  if (blocks == 0) raise(Errc::EmptyJ, "weight needs a nonempty J");
  if ((blocks & ~all_blocks()) != 0) raise(Errc::IndexOutOfRange, "J refers to a missing block");
  std::uint64_t sum = 0;
  Mask u = 0;
  for (std::size_t j = 0; j < t(); ++j) {
    if ((blocks >> j) & 1) {
      sum += static_cast<std::uint64_t>(std::popcount(sets_[j]));
      u |= sets_[j];
    }
  }
  return sum - static_cast<std::uint64_t>(std::popcount(u));
}

std::vector<std::uint32_t> SetSystem::derive_J() const {
  std::vector<std::uint32_t> js(n_, 0);
  for (std::size_t j = 0; j < t(); ++j) {
    for (std::size_t i = 0; i < n_; ++i) {
      if ((sets_[j] >> i) & 1) js[i] |= std::uint32_t{1} << j;
    }
  }
  return js;
}

SetSystem SetSystem::from_J(std::size_t n, std::size_t t, const std::vector<std::uint32_t>& js) {
  if (js.size() != n) raise(Errc::LengthMismatch, "need one J_i per ground element");
  std::vector<Mask> sets(t, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      if ((js[i] >> j) & 1) sets[j] |= Mask{1} << i;
    }
  }
  return SetSystem(n, std::move(sets));
}

SetSystem SetSystem::without(Mask b) const {
  SetSystem s = *this;
  for (Mask& m : s.sets_) m &= ~b;
  return s;
}

SetSystem SetSystem::restrict_blocks(std::uint32_t blocks) const {
  std::vector<Mask> sets;
  for (std::size_t j = 0; j < t(); ++j) {
    if ((blocks >> j) & 1) sets.push_back(sets_[j]);
  }
  return SetSystem(n_, std::move(sets));
}

nlohmann::json SetSystem::to_json() const {
  nlohmann::json sets = nlohmann::json::array();
  for (Mask m : sets_) {
    nlohmann::json s = nlohmann::json::array();
    for (std::size_t i = 0; i < n_; ++i) {
      if ((m >> i) & 1) s.push_back(i + 1);
    }
    sets.push_back(std::move(s));
  }
  return {{"n", n_}, {"t", t()}, {"sets", std::move(sets)}};
}

SetSystem SetSystem::from_json(const nlohmann::json& j) {
  auto lists = j.at("sets").get<std::vector<std::vector<std::size_t>>>();
  if (j.contains("t") && j.at("t").get<std::size_t>() != lists.size()) {
    raise(Errc::LengthMismatch, "t disagrees with the number of sets");
  }
  return from_lists(j.at("n").get<std::size_t>(), lists);
}

std::string SetSystem::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < t(); ++j) {
    out += j == 0 ? "{" : " {";
    bool first = true;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!((sets_[j] >> i) & 1)) continue;
      if (!first) out += ",";
      out += std::to_string(i + 1);
      first = false;
    }
    out += "}";
  }
  return out;
}

bool weight_at_least(std::uint64_t w, const Rational& lambda, std::uint64_t m, std::size_t k) {
  return compare_weight(w, lambda, m, k) >= 0;
}

AdmissibilityReport check_admissible(const SetSystem& sys, std::size_t k, const Rational& lambda) {
  AdmissibilityReport rep;
  const std::size_t t = sys.t();
  rep.weight = sys.weight();
  rep.weight_condition = compare_weight(rep.weight, lambda, t - 1, k) >= 0;
  rep.subset_condition = true;
  const std::uint32_t all = sys.all_blocks();
  for (std::uint32_t jm = 1; jm < all; ++jm) {
    const auto size = static_cast<std::uint64_t>(std::popcount(jm));
    if (size < 2) continue;  // wt of a single block is 0
    if (compare_weight(sys.weight(jm), lambda, size - 1, k) > 0) {
      rep.subset_condition = false;
      rep.violating_J = jm;
      break;
    }
  }
  return rep;
}

std::uint64_t canonical_index(const SetSystem& sys) {
  std::uint64_t idx = 0;
  for (Mask m : sys.sets()) idx = (idx << sys.n()) | reverse_low_bits(m, sys.n());
  return idx;
}

SetSystem system_from_index(std::size_t n, std::size_t t, std::uint64_t index) {
  std::vector<Mask> sets(t, 0);
  const Mask chunk = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (std::size_t j = t; j-- > 0;) {
    sets[j] = reverse_low_bits(index & chunk, n);
    index = n == 64 ? 0 : index >> n;
  }
  return SetSystem(n, std::move(sets));
}

void for_each_admissible(std::size_t n, std::size_t k, std::size_t t, const Rational& lambda,
                         const std::function<bool(const SetSystem&)>& visit,
                         std::optional<std::pair<std::uint64_t, std::uint64_t>> range) {
  if (t < 2) raise(Errc::TDegenerate, "a set system needs t >= 2");
  if (n * t > kMaxEnumerationBits) {
    raise(Errc::SearchSpaceTooLarge, "enumeration needs n*t <= 24, got " + std::to_string(n * t));
  }
  const std::uint64_t total = std::uint64_t{1} << (n * t);
  std::uint64_t begin = 0, end = total;
  if (range) {
    begin = std::min(range->first, total);
    end = std::min(range->second, total);
  }
  // Cheap prefilter on the total weight before building the system.
  std::vector<Mask> rev(std::size_t{1} << n);
  std::vector<std::uint8_t> pop(std::size_t{1} << n);
  for (Mask x = 0; x < rev.size(); ++x) {
    rev[x] = reverse_low_bits(x, n);
    pop[x] = static_cast<std::uint8_t>(std::popcount(x));
  }
  const Mask chunk = (Mask{1} << n) - 1;
  std::vector<Mask> sets(t);
  std::uint64_t w_min = 0;  // least weight passing the total-weight condition
  while (compare_weight(w_min, lambda, t - 1, k) < 0) ++w_min;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    std::uint64_t rest = idx;
    std::uint64_t sum = 0;
    Mask u = 0;
    for (std::size_t j = t; j-- > 0;) {
      sum += pop[rest & chunk];
      sets[j] = rev[rest & chunk];
      rest >>= n;
      u |= sets[j];
    }
    const std::uint64_t w = sum - pop[u];
    if (w < w_min) continue;
    SetSystem sys(n, sets);
    if (!check_admissible(sys, k, lambda).admissible()) continue;
    if (!visit(sys)) return;
  }
}

std::vector<SetSystem> enumerate_admissible(std::size_t n, std::size_t k, std::size_t t, const Rational& lambda) {
  std::vector<SetSystem> out;
  for_each_admissible(n, k, t, lambda, [&](const SetSystem& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace rslab
