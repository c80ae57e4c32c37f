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

#include "rslab/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>
#include <utility>

#include "rslab/rng.hpp"

namespace rslab {
namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;
using Poly = std::vector<u64>;  // dense, low-degree first, over GF(p)

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g, g monic.
Poly poly_mod(Poly f, const Poly& g, u64 p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const u64 lead_inv = invmod(g.back(), p);
  while (f.size() > dg) {
    u64 c = mulmod(f.back(), lead_inv, p);
    std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + p - mulmod(c, g[i], p)) % p;
    }
    trim(f);
  }
  return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& g, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
  }
  return poly_mod(std::move(r), g, p);
}

Poly poly_powmod(Poly base, u64 e, const Poly& g, u64 p) {
  Poly r{1};
  base = poly_mod(std::move(base), g, p);
  while (e != 0) {
    if (e & 1) r = poly_mulmod(r, base, g, p);
    base = poly_mulmod(base, base, g, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic for poly_mod
    u64 li = invmod(b.back(), p);
    for (auto& c : b) c = mulmod(c, li, p);
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: a monic f of degree m is irreducible iff gcd(x^{p^i} - x, f) = 1
// for i = 1..floor(m/2).
bool is_irreducible(const Poly& f, u64 p) {
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  if (f[0] == 0) return false;
  Poly x{0, 1};
  Poly h = x;
  for (std::size_t i = 1; i <= m / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    Poly d = h;
    d.resize(std::max<std::size_t>(d.size(), 2), 0);
    d[1] = (d[1] + p - 1) % p;
    Poly g = poly_gcd(f, d, p);
    if (g.size() > 1) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldPtr Field::make(std::uint64_t p, unsigned m, std::optional<std::vector<std::uint64_t>> modulus) {
  if (!is_prime(p)) raise(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (m == 0) raise(Errc::DegreeMismatch, "extension degree must be at least 1");
  u64 q = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (q > kMaxFieldOrder / p) raise(Errc::FieldTooLarge, "field order exceeds 2^62");
    q *= p;
  }
  if (q > kMaxFieldOrder) raise(Errc::FieldTooLarge, "field order exceeds 2^62");

  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->m_ = m;
  f->q_ = q;

  if (modulus) {
    if (modulus->size() != m + 1 || modulus->back() != 1) {
      raise(Errc::DegreeMismatch, "modulus must be monic of degree " + std::to_string(m));
    }
    for (u64 c : *modulus) {
      if (c >= p) raise(Errc::InvalidArgument, "modulus coefficient not reduced mod p");
    }
    if (m > 1) {
      if (!is_irreducible(*modulus, p)) raise(Errc::ReducibleModulus, "modulus is reducible");
      f->modulus_ = *modulus;
    }
  } else if (m > 1) {
    const u64 count = q;  // all choices of the m non-leading coefficients
    for (u64 code = 0; code < count; ++code) {
      Poly cand(m + 1, 0);
      u64 c = code;
      for (unsigned i = 0; i < m; ++i) {
        cand[i] = c % p;
        c /= p;
      }
      cand[m] = 1;
      if (cand[0] == 0) continue;
      if (is_irreducible(cand, p)) {
        f->modulus_ = std::move(cand);
        break;
      }
    }
    if (f->modulus_.empty()) raise(Errc::ReducibleModulus, "no irreducible modulus found");
  }
  if (p == 2 && m > 1) {
    for (unsigned i = 0; i <= m; ++i) {
      if (f->modulus_[i]) f->modulus_bits_ |= u64{1} << i;
    }
  }
  if (q <= (u64{1} << 20) && q > 2) f->build_tables();
  return f;
}

void Field::build_tables() {
  const u64 order = q_ - 1;
  const auto factors = prime_factors(order);
  u64 gen = 0;
  for (u64 g = 1; g < q_; ++g) {
    bool primitive = true;
    for (u64 f : factors) {
      if (pow(g, static_cast<std::int64_t>(order / f)) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = g;
      break;
    }
  }
  std::vector<std::uint32_t> log(q_, 0);
  std::vector<std::uint32_t> exp(2 * order, 0);
  u64 x = 1;
  for (u64 i = 0; i < order; ++i) {
    exp[i] = static_cast<std::uint32_t>(x);
    exp[i + order] = static_cast<std::uint32_t>(x);
    log[x] = static_cast<std::uint32_t>(i);
    x = (m_ == 1) ? mulmod(x, gen, p_) : mul_slow(x, gen);
  }
  log_ = std::move(log);
  exp_ = std::move(exp);
}

std::string Field::describe() const {
  if (m_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
}

bool Field::same_as(const Field& other) const noexcept {
  return this == &other || (p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_);
}

FieldElement Field::element(std::uint64_t index) const {
  if (index >= q_) raise(Errc::InvalidArgument, "element index out of range for " + describe());
  return FieldElement(this, index);
}

std::uint64_t Field::raw_from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return static_cast<u64>(r);
}

std::vector<std::uint64_t> Field::digits(std::uint64_t index) const {
  std::vector<u64> out(m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    out[i] = index % p_;
    index /= p_;
  }
  return out;
}

std::uint64_t Field::from_digits(std::span<const std::uint64_t> coeffs) const {
  if (coeffs.size() > m_) raise(Errc::DegreeMismatch, "too many coefficients for " + describe());
  u64 v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * p_ + coeffs[i] % p_;
  return v;
}

std::uint64_t Field::add_digits(std::uint64_t a, std::uint64_t b, bool subtract) const {
  u64 out = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    u64 da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    u64 d = subtract ? (da >= db ? da - db : da + p_ - db) : (da + db >= p_ ? da + db - p_ : da + db);
    out += d * scale;
    scale *= p_;
  }
  return out;
}

std::uint64_t Field::mul_slow(std::uint64_t a, std::uint64_t b) const {
  if (m_ == 1) return mulmod(a, b, p_);
  if (p_ == 2) {
    u128 prod = 0;
    for (unsigned i = 0; i < m_; ++i) {
      if ((b >> i) & 1) prod ^= static_cast<u128>(a) << i;
    }
    for (int bit = 2 * static_cast<int>(m_) - 2; bit >= static_cast<int>(m_); --bit) {
      if ((prod >> bit) & 1) prod ^= static_cast<u128>(modulus_bits_) << (bit - static_cast<int>(m_));
    }
    return static_cast<u64>(prod);
  }
  // Odd p, so m <= 39 and p < 2^31: schoolbook on stack buffers.
  const unsigned m = m_;
  u64 da[40], db[40], prod[80] = {};
  for (unsigned i = 0; i < m; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  for (unsigned i = 0; i < m; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  for (unsigned d = 2 * m - 2; d >= m; --d) {  // modulus is monic
    const u64 c = prod[d];
    if (c == 0) continue;
    for (unsigned i = 0; i < m; ++i) {
      prod[d - m + i] = (prod[d - m + i] + (p_ - c) * modulus_[i]) % p_;
    }
  }
  u64 v = 0;
  for (unsigned i = m; i-- > 0;) v = v * p_ + prod[i];
  return v;
}

std::uint64_t Field::inv_slow(std::uint64_t a) const {
  if (m_ == 1) return invmod(a, p_);
  return pow(a, static_cast<std::int64_t>(q_ - 2));
}

std::uint64_t Field::inv(std::uint64_t a) const {
  if (a == 0) raise(Errc::DivisionByZero, "inverse of zero in " + describe());
  if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return inv_slow(a);
}

std::uint64_t Field::pow(std::uint64_t a, std::int64_t e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  if (a == 0) return e == 0 ? 1 : 0;
  u64 ue = static_cast<u64>(e) % (q_ - 1);
  if (!exp_.empty()) return exp_[static_cast<u64>(mulmod(log_[a], ue, q_ - 1))];
  u64 r = 1;
  while (ue != 0) {
    if (ue & 1) r = (m_ == 1) ? mulmod(r, a, p_) : mul_slow(r, a);
    a = (m_ == 1) ? mulmod(a, a, p_) : mul_slow(a, a);
    ue >>= 1;
  }
  return r;
}

std::uint64_t Field::random_raw(Rng& rng) const { return rng.uniform(q_); }

std::vector<std::uint64_t> Field::sample_distinct_raw(std::size_t n, Rng& rng) const {
  if (n > q_) {
    raise(Errc::NTooLarge, "cannot draw " + std::to_string(n) + " distinct elements from " + describe());
  }
  std::vector<u64> out;
  out.reserve(n);
  if (2 * n <= q_) {
    // Sequential rejection: each draw is uniform over the not-yet-chosen set.
    if (n <= 64) {
      while (out.size() < n) {
        u64 x = rng.uniform(q_);
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
      }
    } else {
      std::unordered_set<u64> seen;
      while (out.size() < n) {
        u64 x = rng.uniform(q_);
        if (seen.insert(x).second) out.push_back(x);
      }
    }
    return out;
  }
  // Dense case: partial Fisher-Yates over the element enumeration.
  std::vector<u64> pool(q_);
  for (u64 i = 0; i < q_; ++i) pool[i] = i;
  for (std::size_t i = 0; i < n; ++i) {
    u64 j = i + rng.uniform(q_ - i);
    std::swap(pool[i], pool[j]);
    out.push_back(pool[i]);
  }
  return out;
}

std::vector<FieldElement> Field::sample_distinct(std::size_t n, Rng& rng) const {
  std::vector<FieldElement> out;
  for (u64 v : sample_distinct_raw(n, rng)) out.emplace_back(this, v);
  return out;
}

FieldPtr prime_extension(std::uint64_t p, std::uint64_t min_order) {
  static std::mutex mu;
  static std::map<std::pair<u64, unsigned>, FieldPtr> cache;
  unsigned e = 1;
  u64 q = p;
  while (q < min_order) {
    if (q > kMaxFieldOrder / p) break;
    q *= p;
    ++e;
  }
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, e);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  FieldPtr f = Field::make(p, e);
  cache.emplace(key, f);
  return f;
}

// ---- FieldElement -------------------------------------------------------------

namespace {

const Field& common(const FieldElement& a, const FieldElement& b) {
  if (a.field_ptr() == nullptr || b.field_ptr() == nullptr ||
      !a.field().same_as(b.field())) {
    raise(Errc::MixedFields, "operands belong to different fields");
  }
  return a.field();
}

}  // namespace

FieldElement FieldElement::operator-() const { return FieldElement(field_, field_->neg(value_)); }

FieldElement FieldElement::inverse() const { return FieldElement(field_, field_->inv(value_)); }

FieldElement FieldElement::pow(std::int64_t exponent) const {
  return FieldElement(field_, field_->pow(value_, exponent));
}

std::vector<std::uint64_t> FieldElement::coefficients() const { return field_->digits(value_); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const Field& f = common(a, b);
  return FieldElement(a.field_, f.add(a.value_, b.value_));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const Field& f = common(a, b);
  return FieldElement(a.field_, f.sub(a.value_, b.value_));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const Field& f = common(a, b);
  return FieldElement(a.field_, f.mul(a.value_, b.value_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  const Field& f = common(a, b);
  return FieldElement(a.field_, f.div(a.value_, b.value_));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  common(a, b);
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  common(a, b);
  return a.value_ <=> b.value_;
}

}  // namespace rslab
