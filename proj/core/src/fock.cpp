#include "hecke/fock.hpp"

#include "hecke/error.hpp"

namespace hecke {

FockVector FockVector::basis(const Partition& lambda) {
  FockVector x;
  x.terms_.emplace(lambda, LaurentPoly::constant(1));
  return x;
}

LaurentPoly FockVector::coefficient(const Partition& lambda) const {
  const auto it = terms_.find(lambda);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void FockVector::add(const Partition& lambda, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FockVector& FockVector::operator+=(const FockVector& other) {
  for (const auto& [lambda, c] : other.terms_) add(lambda, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
  for (const auto& [lambda, c] : other.terms_) add(lambda, -c);
  return *this;
}

void FockVector::add_scaled(const FockVector& other, const LaurentPoly& scale) {
  if (scale.is_zero()) return;
  for (const auto& [lambda, c] : other.terms_) add(lambda, c * scale);
}

void FockVector::divide_exact(const LaurentPoly& divisor) {
  for (auto& [lambda, c] : terms_) {
    LaurentPoly q;
    if (!c.divide_exact(divisor, q)) {
      throw Error(ErrorCode::NonExactDivision, "coefficient " + to_string(c) + " of s(" +
                                                   to_string(lambda) + ") is not divisible by " +
                                                   to_string(divisor));
    }
    c = std::move(q);
  }
}

namespace {

int mod(int a, int e) { return ((a % e) + e) % e; }

}  // namespace

FockVector f_apply(const FockVector& x, int residue, int e, int r) {
  FockVector out;
  const int k = mod(residue + r, e);
  const int from_runner = mod(k - 1, e);
  for (const auto& [lambda, c] : x.terms()) {
    if (r < lambda.length()) {
      throw Error(ErrorCode::BeadCountTooSmall,
                  "bead count " + std::to_string(r) + " too small for " + to_string(lambda));
    }
    // Walk rows top to bottom; row j's bead sits at λ_j + r - j. Beads in
    // earlier rows are exactly the beads below (at larger positions than)
    // the one in row j.
    int below_from = 0;
    int below_to = 0;
    const int len = lambda.length();
    for (int j = 1; j <= len + 1; ++j) {
      const int part = lambda[static_cast<std::size_t>(j - 1)];
      const int runner = mod(part + r - j, e);
      const bool addable = j == 1 || lambda[static_cast<std::size_t>(j - 2)] > part;
      if (addable && runner == from_runner) {
        std::vector<int> parts = lambda.vec();
        if (j == len + 1) {
          parts.push_back(1);
        } else {
          ++parts[static_cast<std::size_t>(j - 1)];
        }
        out.add(Partition(std::move(parts)), c.shifted(below_from - below_to));
      }
      if (runner == from_runner) ++below_from;
      if (runner == k) ++below_to;
    }
  }
  return out;
}

FockVector f_divided(const FockVector& x, int residue, int a, int e, int r) {
  if (a < 1) throw Error(ErrorCode::InvalidArgument, "divided power needs a >= 1");
  FockVector y = x;
  for (int step = 0; step < a; ++step) y = f_apply(y, residue, e, r);
  if (a > 1) y.divide_exact(LaurentPoly::quantum_factorial(a));
  return y;
}

std::vector<std::pair<int, int>> ladder_sequence(const Partition& mu, int e) {
  if (!is_e_regular(mu, e)) {
    throw Error(ErrorCode::NotERegular, to_string(mu) + " is not " + std::to_string(e) + "-regular");
  }
  // Node (a, b) (1-based row, column) lies on ladder (a-1) + (e-1)(b-1).
  std::map<int, std::pair<int, int>> ladders;
  for (int a = 1; a <= mu.length(); ++a) {
    for (int b = 1; b <= mu[static_cast<std::size_t>(a - 1)]; ++b) {
      const int ladder = (a - 1) + (e - 1) * (b - 1);
      auto& slot = ladders[ladder];
      slot.first = mod(b - a, e);
      ++slot.second;
    }
  }
  std::vector<std::pair<int, int>> out;
  out.reserve(ladders.size());
  for (const auto& [ladder, entry] : ladders) out.push_back(entry);
  return out;
}

}  // namespace hecke
