#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "hecke/laurent.hpp"
#include "hecke/partition.hpp"

namespace hecke {

/// Finitely supported element of the Fock space: Σ c_λ(v) s(λ).
///
/// Terms are kept in descending lexicographic order of partitions, so the
/// first term is always dominance-maximal within the support.
class FockVector {
 public:
  using Terms = std::map<Partition, LaurentPoly, std::greater<>>;

  FockVector() = default;
  /// The basis vector s(λ).
  static FockVector basis(const Partition& lambda);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t support_size() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }
  LaurentPoly coefficient(const Partition& lambda) const;

  /// Adds c·s(λ), dropping the term if it cancels.
  void add(const Partition& lambda, const LaurentPoly& c);
  FockVector& operator+=(const FockVector& other);
  FockVector& operator-=(const FockVector& other);
  /// Adds scale · other.
  void add_scaled(const FockVector& other, const LaurentPoly& scale);
  /// Divides every coefficient exactly; throws NonExactDivision.
  void divide_exact(const LaurentPoly& divisor);

  friend bool operator==(const FockVector&, const FockVector&) = default;

 private:
  Terms terms_;
};

/// f_i on the Fock space, computed on an abacus with r beads; runner k with
/// k ≡ i + r (mod e) receives the moved bead.
FockVector f_apply(const FockVector& x, int residue, int e, int r);

/// Divided power f_i^{(a)} = f_i^a / [a]!; throws NonExactDivision.
FockVector f_divided(const FockVector& x, int residue, int a, int e, int r);

/// (residue, node count) for each nonempty ladder of μ, ladder through (1,1) first.
std::vector<std::pair<int, int>> ladder_sequence(const Partition& mu, int e);

}  // namespace hecke
