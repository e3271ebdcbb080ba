#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// Values are immutable once constructed. Ordering is lexicographic on the
/// parts (missing parts count as zero), which refines dominance order.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Builds a partition from a sequence that may carry trailing zeros.
  static Partition from_parts_trimmed(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  const std::vector<int>& vec() const noexcept { return parts_; }

  /// λ_i for 0-based i; zero beyond the last part.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  bool empty() const noexcept { return parts_.empty(); }
  /// Number of parts, λ'_1.
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  /// Largest part, λ_1 (0 for the empty partition).
  int first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  int size() const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

enum class Dominance { Less, Greater, Equal, Incomparable };

Partition conjugate(const Partition& lambda);

/// Compares λ against μ in dominance order; throws SizeMismatch.
Dominance dominance_cmp(const Partition& lambda, const Partition& mu);

/// True iff λ ⊵ μ (sizes must agree).
bool dominates(const Partition& lambda, const Partition& mu);

bool is_e_regular(const Partition& lambda, int e);

/// Drops the first row; throws EmptyPartition.
Partition remove_first_row(const Partition& lambda);

/// All partitions of n in descending lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Text form "5,3,1", "2^2,1", "-" for the empty partition.
Partition parse_partition(std::string_view text);
/// Plain comma list, "-" for the empty partition.
std::string to_string(const Partition& lambda);
/// Comma list with exponent shorthand for repeated parts ("2^2,1").
std::string to_compact_string(const Partition& lambda);

}  // namespace hecke

template <>
struct std::hash<hecke::Partition> {
  std::size_t operator()(const hecke::Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : p.parts()) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
