#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hecke/partition.hpp"

namespace hecke {

/// Bead configuration on an e-runner abacus.
///
/// Position p sits on runner p mod e, row p / e. Positions below zero are
/// treated as occupied, so the display behaves like a truncated Maya diagram:
/// moving the virtual bead at -1 to 0 adds a new part of size one.
class AbacusDisplay {
 public:
  AbacusDisplay(int e, std::vector<int> beads);

  int e() const noexcept { return e_; }
  int bead_count() const noexcept { return static_cast<int>(beads_.size()); }
  /// Bead positions, strictly decreasing.
  std::span<const int> beads() const noexcept { return beads_; }
  bool occupied(int position) const noexcept;
  int runner(int position) const noexcept { return ((position % e_) + e_) % e_; }
  int row(int position) const noexcept {
    return position >= 0 ? position / e_ : -((-position + e_ - 1) / e_);
  }
  int max_position() const noexcept { return beads_.empty() ? -1 : beads_.front(); }
  /// Beads on each runner.
  std::vector<int> runner_counts() const;
  /// Number of vacant positions above the bead at `position` on its runner.
  int bead_weight(int position) const;

  friend bool operator==(const AbacusDisplay&, const AbacusDisplay&) = default;

 private:
  int e_;
  std::vector<int> beads_;
  std::vector<bool> occupancy_;
};

/// Display with beads λ_i + r - i, 1 ≤ i ≤ r; throws BeadCountTooSmall.
AbacusDisplay to_abacus(const Partition& lambda, int e, int r);
Partition from_abacus(const AbacusDisplay& display);

/// Nakayama block label: per-runner bead counts of the core display, plus weight.
struct BlockId {
  int e = 2;
  std::vector<int> core_beads;
  int weight = 0;

  int bead_count() const;
  friend bool operator==(const BlockId&, const BlockId&) = default;
};

std::string to_string(const BlockId& block);

/// Bead count used when no context fixes one: the least positive multiple of
/// e that is at least n. At n = 5e this gives five beads per runner.
int default_bead_count(int n, int e);

std::pair<Partition, int> e_core_and_weight(const Partition& lambda, int e);
BlockId block_of(const Partition& lambda, int e);
BlockId block_of(const Partition& lambda, int e, int r);

/// Core partition of a block (beads pushed to the top of every runner).
Partition core_of(const BlockId& block);
/// Size n of the partitions lying in the block.
int block_size(const BlockId& block);
/// Principal block of H_{we} with w beads per runner (core empty).
BlockId principal_block(int e, int weight);
/// Block with the given core and weight at bead count r (default when r < 0).
BlockId make_block(const Partition& core, int e, int weight, int r = -1);

/// Builds the partition whose runner i carries the single-runner partition
/// `runner_partitions[i]` (missing entries are empty).
Partition from_runner_partitions(const BlockId& block, std::span<const Partition> runner_partitions);
/// Inverse of from_runner_partitions; throws BlockMismatch if λ is not in the block.
std::vector<Partition> runner_partitions(const Partition& lambda, const BlockId& block);

struct BlockEntry {
  Partition partition;
  bool e_regular = false;
};

/// All partitions of the block in descending lexicographic order.
std::vector<BlockEntry> enumerate_block(const BlockId& block);
/// Only the e-regular members, descending lexicographic.
std::vector<Partition> e_regular_members(const BlockId& block);

using ESequence = std::vector<int>;

/// s(λ)_N: for every bead a of weight w, the terms a, a-e, ..., a-(w-1)e,
/// merged into one weakly decreasing sequence.
ESequence induced_e_sequence(const Partition& lambda, int e, int n_beads);

enum class ProductOrder { Leq, Geq, Equal, Incomparable, DifferentBlock };

ProductOrder product_order_cmp(const Partition& lambda, const Partition& mu, int e);
/// λ <_P μ strictly.
bool product_less(const Partition& lambda, const Partition& mu, int e);

std::string to_string(ProductOrder order);

}  // namespace hecke
