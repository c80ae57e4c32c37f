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

#include "rslab/mpoly.hpp"

#include <algorithm>
#include <cmath>

#include "rslab/rng.hpp"

namespace rslab {
namespace {

constexpr std::uint64_t kHighBits = 0x8080808080808080ULL;

bool by_mono_desc(const Term& a, const Term& b) { return b.mono < a.mono; }

}  // namespace

// ---- Monomial -------------------------------------------------------------------

void Monomial::set_exponent(unsigned var, unsigned e) {
  if (var >= kMaxVariables) raise(Errc::IndexOutOfRange, "variable index exceeds kMaxVariables");
  if (e > kMaxExponent) raise(Errc::ExponentOverflow, "exponent exceeds kMaxExponent");
  const unsigned old = exponent(var);
  std::uint64_t& w = words_[var / 8];
  w &= ~(std::uint64_t{0xFF} << shift(var));
  w |= std::uint64_t{e} << shift(var);
  degree_ = degree_ - old + e;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  // Byte-wise other >= this without cross-byte borrows (exponents <= 127).
  for (int i = 0; i < 2; ++i) {
    std::uint64_t d = (other.words_[i] | kHighBits) - words_[i];
    if ((d & kHighBits) != kHighBits) return false;
  }
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial r;
  r.words_[0] = words_[0] + other.words_[0];
  r.words_[1] = words_[1] + other.words_[1];
  if (((r.words_[0] | r.words_[1]) & kHighBits) != 0) {
    raise(Errc::ExponentOverflow, "monomial exponent exceeds kMaxExponent");
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::over(const Monomial& divisor) const {
  Monomial r;
  r.words_[0] = words_[0] - divisor.words_[0];
  r.words_[1] = words_[1] - divisor.words_[1];
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

// ---- MultiPoly ------------------------------------------------------------------

MultiPoly::MultiPoly(FieldPtr field, unsigned nvars) : field_(std::move(field)), nvars_(nvars) {
  if (!field_) raise(Errc::InvalidArgument, "polynomial needs a field");
  if (nvars_ > kMaxVariables) raise(Errc::IndexOutOfRange, "too many variables");
}

MultiPoly MultiPoly::constant(FieldPtr field, unsigned nvars, std::uint64_t value) {
  MultiPoly p(std::move(field), nvars);
  if (value >= p.field_->order()) raise(Errc::InvalidArgument, "coefficient out of range");
  if (value != 0) p.terms_.push_back(Term{Monomial(), value});
  return p;
}

MultiPoly MultiPoly::variable(FieldPtr field, unsigned nvars, unsigned var, unsigned power,
                              std::uint64_t coef) {
  MultiPoly p(std::move(field), nvars);
  if (var >= nvars) raise(Errc::IndexOutOfRange, "variable index out of range");
  if (coef >= p.field_->order()) raise(Errc::InvalidArgument, "coefficient out of range");
  if (coef == 0) return p;
  Monomial m;
  m.set_exponent(var, power);
  p.terms_.push_back(Term{m, coef});
  return p;
}

MultiPoly MultiPoly::from_terms(FieldPtr field, unsigned nvars, std::vector<Term> terms) {
  MultiPoly p(std::move(field), nvars);
  for (const Term& t : terms) {
    if (t.coef >= p.field_->order()) raise(Errc::InvalidArgument, "coefficient out of range");
    for (unsigned v = nvars; v < kMaxVariables; ++v) {
      if (t.mono.exponent(v) != 0) raise(Errc::IndexOutOfRange, "term uses a variable beyond nvars");
    }
  }
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void MultiPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), by_mono_desc);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    Term acc = terms_[i];
    std::size_t j = i + 1;
    while (j < terms_.size() && terms_[j].mono == acc.mono) {
      acc.coef = field_->add(acc.coef, terms_[j].coef);
      ++j;
    }
    if (acc.coef != 0) terms_[out++] = acc;
    i = j;
  }
  terms_.resize(out);
}

void MultiPoly::check_compatible(const MultiPoly& g) const {
  if (!field_ || !g.field_ || nvars_ != g.nvars_ || !field_->same_as(*g.field_)) {
    raise(Errc::MixedContexts, "polynomials differ in field or variable count");
  }
}

std::uint64_t MultiPoly::constant_value() const {
  if (!is_constant()) raise(Errc::InvalidArgument, "polynomial is not constant");
  return terms_.empty() ? 0 : terms_[0].coef;
}

int MultiPoly::degree_in(unsigned var) const {
  if (var >= nvars_) raise(Errc::IndexOutOfRange, "variable index out of range");
  if (terms_.empty()) return -1;
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.exponent(var));
  return static_cast<int>(d);
}

int MultiPoly::total_degree() const noexcept {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.front().mono.total_degree());
}

std::vector<unsigned> MultiPoly::support() const {
  std::vector<unsigned> out;
  for (unsigned v = 0; v < nvars_; ++v) {
    for (const Term& t : terms_) {
      if (t.mono.exponent(v) != 0) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (Term& t : r.terms_) t.coef = field_->neg(t.coef);
  return r;
}

namespace {

MultiPoly merge(const MultiPoly& f, const MultiPoly& g, bool subtract) {
  const Field& F = *f.field();
  std::vector<Term> out;
  auto a = f.terms(), b = g.terms();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && b[j].mono < a[i].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || a[i].mono < b[j].mono) {
      Term t = b[j++];
      if (subtract) t.coef = F.neg(t.coef);
      out.push_back(t);
    } else {
      std::uint64_t c = subtract ? F.sub(a[i].coef, b[j].coef) : F.add(a[i].coef, b[j].coef);
      if (c != 0) out.push_back(Term{a[i].mono, c});
      ++i;
      ++j;
    }
  }
  // Already sorted and combined: bypass normalize.
  MultiPoly r(f.field(), f.nvars());
  return MultiPoly::from_terms(f.field(), f.nvars(), std::move(out));
}

}  // namespace

MultiPoly operator+(const MultiPoly& f, const MultiPoly& g) {
  f.check_compatible(g);
  return merge(f, g, false);
}

MultiPoly operator-(const MultiPoly& f, const MultiPoly& g) {
  f.check_compatible(g);
  return merge(f, g, true);
}

MultiPoly operator*(const MultiPoly& f, const MultiPoly& g) {
  f.check_compatible(g);
  MultiPoly r(f.field_, f.nvars_);
  if (f.is_zero() || g.is_zero()) return r;
  const Field& F = *f.field_;
  r.terms_.reserve(f.terms_.size() * g.terms_.size());
  for (const Term& a : f.terms_) {
    for (const Term& b : g.terms_) {
      r.terms_.push_back(Term{a.mono.times(b.mono), F.mul(a.coef, b.coef)});
    }
  }
  r.normalize();
  return r;
}

MultiPoly MultiPoly::scale(std::uint64_t c) const {
  MultiPoly r(field_, nvars_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (Term& t : r.terms_) t.coef = field_->mul(t.coef, c);
  return r;
}

MultiPoly MultiPoly::scale(const FieldElement& c) const {
  if (c.field_ptr() == nullptr || !c.field().same_as(*field_)) {
    raise(Errc::MixedContexts, "scalar from a different field");
  }
  return scale(c.value());
}

MultiPoly MultiPoly::partial_assign(const Assignment& bindings) const {
  std::vector<std::uint64_t> value(nvars_, 0);
  std::vector<char> bound(nvars_, 0);
  for (auto [var, v] : bindings) {
    if (var >= nvars_) raise(Errc::IndexOutOfRange, "bound variable index out of range");
    if (v >= field_->order()) raise(Errc::InvalidArgument, "binding value out of range");
    bound[var] = 1;
    value[var] = v;
  }
  MultiPoly r(field_, nvars_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    Term nt = t;
    for (unsigned v = 0; v < nvars_ && nt.coef != 0; ++v) {
      if (!bound[v]) continue;
      unsigned e = t.mono.exponent(v);
      if (e == 0) continue;
      nt.coef = field_->mul(nt.coef, field_->pow(value[v], e));
      nt.mono.set_exponent(v, 0);
    }
    if (nt.coef != 0) r.terms_.push_back(nt);
  }
  r.normalize();
  return r;
}

MultiPoly MultiPoly::partial_assign(const std::map<unsigned, FieldElement>& bindings) const {
  Assignment raw;
  for (const auto& [var, value] : bindings) {
    if (value.field_ptr() == nullptr || !value.field().same_as(*field_)) {
      raise(Errc::MixedContexts, "binding from a different field");
    }
    raw.emplace_back(var, value.value());
  }
  return partial_assign(raw);
}

std::uint64_t MultiPoly::evaluate(std::span<const std::uint64_t> point) const {
  return evaluate_in(*field_, point);
}

std::uint64_t MultiPoly::evaluate_in(const Field& target, std::span<const std::uint64_t> point) const {
  if (point.size() != nvars_) raise(Errc::LengthMismatch, "point dimension differs from nvars");
  if (!target.same_as(*field_) &&
      !(field_->degree() == 1 && target.characteristic() == field_->characteristic())) {
    raise(Errc::MixedContexts, "target field does not contain the coefficient field");
  }
  std::uint64_t acc = 0;
  for (const Term& t : terms_) {
    std::uint64_t term = t.coef;
    for (unsigned v = 0; v < nvars_ && term != 0; ++v) {
      unsigned e = t.mono.exponent(v);
      if (e != 0) term = target.mul(term, target.pow(point[v], e));
    }
    acc = target.add(acc, term);
  }
  return acc;
}

bool operator==(const MultiPoly& f, const MultiPoly& g) {
  if (f.nvars_ != g.nvars_) return false;
  if (f.field_ && g.field_ && !f.field_->same_as(*g.field_)) return false;
  if (f.terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < f.terms_.size(); ++i) {
    if (f.terms_[i].mono != g.terms_[i].mono || f.terms_[i].coef != g.terms_[i].coef) return false;
  }
  return true;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    if (i > 0) out += " + ";
    std::string body;
    for (unsigned v = 0; v < nvars_; ++v) {
      unsigned e = t.mono.exponent(v);
      if (e == 0) continue;
      if (!body.empty()) body += "*";
      body += "X" + std::to_string(v + 1);
      if (e > 1) body += "^" + std::to_string(e);
    }
    if (body.empty()) {
      out += std::to_string(t.coef);
    } else if (t.coef == 1) {
      out += body;
    } else {
      out += std::to_string(t.coef) + "*" + body;
    }
  }
  return out;
}

MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g) {
  f.check_compatible(g);
  if (g.is_zero()) raise(Errc::DivisionByZero, "division by the zero polynomial");
  const Field& F = *f.field_;
  MultiPoly quotient(f.field_, f.nvars_);
  if (g.terms_.size() == 1) {
    const Term& lead = g.terms_[0];
    const std::uint64_t inv = F.inv(lead.coef);
    quotient.terms_.reserve(f.terms_.size());
    for (const Term& t : f.terms_) {
      if (!lead.mono.divides(t.mono)) raise(Errc::NotDivisible, "monomial divisor does not divide");
      quotient.terms_.push_back(Term{t.mono.over(lead.mono), F.mul(t.coef, inv)});
    }
    return quotient;  // division by a monomial preserves the order
  }
  const Term& lead = g.terms_[0];
  const std::uint64_t inv = F.inv(lead.coef);
  MultiPoly rem = f;
  std::vector<Term> qterms;
  while (!rem.is_zero()) {
    const Term& top = rem.terms_[0];
    if (!lead.mono.divides(top.mono)) raise(Errc::NotDivisible, "polynomial division is not exact");
    Term qt{top.mono.over(lead.mono), F.mul(top.coef, inv)};
    qterms.push_back(qt);
    MultiPoly step(f.field_, f.nvars_);
    step.terms_.reserve(g.terms_.size());
    for (const Term& b : g.terms_) step.terms_.push_back(Term{b.mono.times(qt.mono), F.mul(b.coef, qt.coef)});
    rem = merge(rem, step, true);
  }
  quotient.terms_ = std::move(qterms);  // emitted in decreasing order
  return quotient;
}

// ---- zero testing ---------------------------------------------------------------

ZeroTestResult is_zero_poly(const MultiPoly& f, const ZeroTestOptions& options) {
  ZeroTestResult res;
  const Field& F = *f.field();
  switch (options.strategy) {
    case ZeroTest::Symbolic:
      res.is_zero = f.is_zero();
      return res;
    case ZeroTest::Grid: {
      if (options.degree_bound < 0) raise(Errc::InvalidArgument, "grid test needs a degree bound");
      const auto d = static_cast<std::uint64_t>(options.degree_bound);
      if (d + 1 > F.order()) raise(Errc::GridTooLargeForField, "degree bound + 1 exceeds the field order");
      const std::vector<unsigned> vars = f.support();
      for (unsigned v : vars) {
        if (f.degree_in(v) > options.degree_bound) {
          raise(Errc::InvalidArgument, "polynomial exceeds the stated per-variable degree bound");
        }
      }
      std::uint64_t points = 1;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        points *= d + 1;
        if (points > (std::uint64_t{1} << 24)) raise(Errc::GridTooLarge, "grid exceeds 2^24 points");
      }
      std::vector<std::uint64_t> idx(vars.size(), 0);
      std::vector<std::uint64_t> point(f.nvars(), 0);
      res.is_zero = true;
      for (std::uint64_t n = 0; n < points; ++n) {
        for (std::size_t i = 0; i < vars.size(); ++i) point[vars[i]] = idx[i];
        ++res.evaluations;
        if (f.evaluate(point) != 0) {
          res.is_zero = false;
          break;
        }
        for (std::size_t i = 0; i < idx.size(); ++i) {
          if (++idx[i] <= d) break;
          idx[i] = 0;
        }
      }
      return res;
    }
    case ZeroTest::Randomized: {
      if (options.trials < 1) raise(Errc::InvalidArgument, "randomized test needs at least one trial");
      FieldPtr lifted;
      const Field* target = &F;
      if (F.order() < (std::uint64_t{1} << 20) && F.degree() == 1) {
        lifted = prime_extension(F.characteristic(), std::uint64_t{1} << 20);
        target = lifted.get();
      }
      res.exact = false;
      res.eval_field_order = target->order();
      Rng rng(options.seed);
      std::vector<std::uint64_t> point(f.nvars(), 0);
      for (unsigned trial = 0; trial < options.trials; ++trial) {
        for (auto& x : point) x = target->random_raw(rng);
        ++res.evaluations;
        if (f.evaluate_in(*target, point) != 0) {
          res.is_zero = false;
          res.exact = true;
          return res;
        }
      }
      res.is_zero = true;
      const double per_trial =
          std::min(1.0, std::max(0, f.total_degree()) / static_cast<double>(target->order()));
      res.error_bound = f.is_zero() ? 0.0 : std::pow(per_trial, options.trials);
      if (f.is_zero()) res.error_bound = 0.0;
      return res;
    }
  }
  return res;
}

}  // namespace rslab
