#include "hecke/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "hecke/error.hpp"

namespace hecke {

LaurentPoly LaurentPoly::monomial(Coeff c, int exponent) {
  LaurentPoly p;
  if (c != 0) {
    p.low_ = exponent;
    p.coeffs_ = {c};
  }
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(int low, std::vector<Coeff> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.coeffs_ = std::move(coeffs);
  p.normalize();
  return p;
}

LaurentPoly LaurentPoly::quantum_integer(int a) {
  if (a <= 0) return {};
  // v^(1-a) + v^(3-a) + ... + v^(a-1)
  std::vector<Coeff> c(static_cast<std::size_t>(2 * a - 1), 0);
  for (std::size_t k = 0; k < c.size(); k += 2) c[k] = 1;
  return from_coeffs(1 - a, std::move(c));
}

LaurentPoly LaurentPoly::quantum_factorial(int a) {
  LaurentPoly out = constant(1);
  for (int j = 2; j <= a; ++j) out *= quantum_integer(j);
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError(ErrorCode::SyntaxError, 0, "empty polynomial");
  LaurentPoly out;
  std::size_t pos = 0;
  auto read_digits = [&](long& value) {
    // Leaves `value` alone when no digit follows, so a bare "v" keeps coefficient 1.
    const std::size_t start = pos;
    long read = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      read = read * 10 + (s[pos] - '0');
      ++pos;
    }
    if (pos > start) value = read;
    return pos > start;
  };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw ParseError(ErrorCode::SyntaxError, pos, "expected '+' or '-' in '" + s + "'");
    }
    long coeff = 1;
    const bool has_coeff = read_digits(coeff);
    int exponent = 0;
    if (pos < s.size() && s[pos] == 'v') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        int exp_sign = 1;
        if (pos < s.size() && s[pos] == '-') {
          exp_sign = -1;
          ++pos;
        }
        long e = 0;
        if (!read_digits(e)) throw ParseError(ErrorCode::SyntaxError, pos, "expected exponent");
        exponent = exp_sign * static_cast<int>(e);
      }
    } else if (!has_coeff) {
      throw ParseError(ErrorCode::SyntaxError, pos, "expected term in '" + s + "'");
    }
    out += monomial(sign * coeff, exponent);
  }
  return out;
}

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const noexcept {
  const int idx = exponent - low_;
  if (idx < 0 || idx >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(idx)];
}

LaurentPoly LaurentPoly::bar() const {
  if (is_zero()) return {};
  LaurentPoly p;
  p.low_ = -high_degree();
  p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return p;
}

bool LaurentPoly::is_bar_symmetric() const { return *this == bar(); }

bool LaurentPoly::in_v_lattice() const { return is_zero() || low_ >= 1; }

bool LaurentPoly::in_nonneg_polys() const {
  if (is_zero()) return true;
  if (low_ < 0) return false;
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c >= 0; });
}

bool LaurentPoly::in_nonneg_symmetric() const {
  if (!is_bar_symmetric()) return false;
  // Peel off c * (v + v^-1)^k from the top degree down; every c must be >= 0.
  LaurentPoly rest = *this;
  const LaurentPoly base = from_coeffs(-1, {1, 0, 1});
  while (!rest.is_zero()) {
    const int k = rest.high_degree();
    const Coeff c = rest.coeff(k);
    if (c < 0 || k < 0) return false;
    LaurentPoly power = constant(1);
    for (int j = 0; j < k; ++j) power *= base;
    rest -= constant(c) * power;
  }
  return true;
}

LaurentPoly::Coeff LaurentPoly::eval_at_one() const {
  Coeff sum = 0;
  for (Coeff c : coeffs_) sum += c;
  return sum;
}

LaurentPoly::Coeff LaurentPoly::derivative_at_one() const {
  Coeff sum = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    sum += coeffs_[k] * (low_ + static_cast<Coeff>(k));
  }
  return sum;
}

bool LaurentPoly::divide_exact(const LaurentPoly& divisor, LaurentPoly& quotient) const {
  if (divisor.is_zero()) return false;
  if (is_zero()) {
    quotient = {};
    return true;
  }
  std::vector<Coeff> rem = coeffs_;
  const auto& d = divisor.coeffs_;
  if (rem.size() < d.size()) return false;
  const std::size_t q_len = rem.size() - d.size() + 1;
  std::vector<Coeff> q(q_len, 0);
  const Coeff lead = d.back();
  for (std::size_t step = q_len; step-- > 0;) {
    const Coeff top = rem[step + d.size() - 1];
    if (top % lead != 0) return false;
    const Coeff factor = top / lead;
    q[step] = factor;
    if (factor == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) rem[step + j] -= factor * d[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](Coeff c) { return c != 0; })) return false;
  quotient = from_coeffs(low_ - divisor.low_, std::move(q));
  return true;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int lo = std::min(low_, other.low_);
  const int hi = std::max(high_degree(), other.high_degree());
  if (lo < low_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), 0);
  low_ = lo;
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
    coeffs_[static_cast<std::size_t>(other.low_ - lo) + k] += other.coeffs_[k];
  }
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<LaurentPoly::Coeff> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly::from_coeffs(a.low_ + b.low_, std::move(c));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

void LaurentPoly::normalize() {
  std::size_t lead_zeros = 0;
  while (lead_zeros < coeffs_.size() && coeffs_[lead_zeros] == 0) ++lead_zeros;
  if (lead_zeros == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead_zeros));
  low_ += static_cast<int>(lead_zeros);
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.high_degree(); k >= p.low_degree(); --k) {
    const auto c = p.coeff(k);
    if (c == 0) continue;
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    const auto mag = std::llabs(c);
    if (k == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "v";
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace hecke
