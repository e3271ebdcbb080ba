#pragma once

// Brute-force reference implementations that work on Young diagrams rather
// than abacus displays. They share nothing with the library beyond Partition.

#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "hecke/partition.hpp"

namespace oracle {

using hecke::Partition;

/// Hook length of node (row, col), 0-based.
int hook_length(const Partition& lambda, int row, int col);

struct RimHook {
  Partition rest;  ///< λ with the hook removed
  int top_row = 0;
  int leg = 0;  ///< rows spanned minus one
};

/// Every rim hook of length h removable from λ.
std::vector<RimHook> removable_rim_hooks(const Partition& lambda, int h);

/// e-core by stripping rim e-hooks; asserts every stripping order agrees
/// when `all_orders` is set (exponential, keep n small).
std::pair<Partition, int> core_by_rim_hooks(const Partition& lambda, int e, bool all_orders = false);

/// All partitions of n with the given e-core.
std::vector<Partition> block_members(int n, const Partition& core, int e);

/// (σ, τ, i, l_λσ, l_τσ) for every hook move λ → τ through σ, computed by
/// removing a rim ie-hook from λ and adding one to σ whose top bead sits
/// further right than the removed one.
using Move = std::tuple<Partition, Partition, int, int, int>;
std::multiset<Move> hook_moves(const Partition& lambda, int e, int r);

/// Runner partitions read straight off the bead positions λ_i + r - i.
std::vector<Partition> runner_partitions(const Partition& lambda, int e, int r);

}  // namespace oracle
