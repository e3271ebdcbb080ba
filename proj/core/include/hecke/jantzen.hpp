#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "hecke/abacus.hpp"
#include "hecke/llt.hpp"
#include "hecke/partition.hpp"

namespace hecke {

/// λ →σ τ: the bead at a rises to a - i e giving σ, then the bead at
/// b - i e falls to b giving τ, with a < b.
struct HookMove {
  Partition source;
  Partition mid;
  Partition target;
  int a = 0;
  int b = 0;
  int i = 0;
  int l_lambda_sigma = 0;  ///< beads strictly between a - i e and a
  int l_tau_sigma = 0;     ///< beads strictly between b - i e and b
};

std::vector<HookMove> hook_moves(const Partition& lambda, int e, int r);

/// v_p(x); zero for p = 0.
int p_valuation(std::int64_t x, int p);

/// [S^τ : D^μ] supplier for the bound.
using DecompOracle = std::function<std::int64_t(const Partition& tau)>;

/// Signed hook-move sum J_F(λ, μ) for characteristic p (0 or prime).
std::int64_t js_bound(const Partition& lambda, const Partition& mu, int e, int p, const DecompOracle& decomp);

/// λ ≤_J σ by search over hook moves; throws DifferentBlock.
bool jantzen_leq(const Partition& lambda, const Partition& sigma, int e);

/// Precomputed Jantzen order on one block.
class JantzenOrder {
 public:
  explicit JantzenOrder(const BlockId& block);

  const BlockId& block() const { return block_; }
  const std::vector<Partition>& members() const { return members_; }
  bool contains(const Partition& lambda) const { return index_.count(lambda) != 0; }
  /// Throws DifferentBlock for non-members.
  bool leq(const Partition& lambda, const Partition& sigma) const;
  bool less(const Partition& lambda, const Partition& sigma) const { return lambda != sigma && leq(lambda, sigma); }

 private:
  std::size_t index_of(const Partition& lambda) const;

  BlockId block_;
  std::vector<Partition> members_;  ///< descending lexicographic
  std::unordered_map<Partition, std::size_t> index_;
  std::vector<std::vector<std::uint64_t>> reach_;  ///< reach_[i] has bit j iff members_[i] ≤_J members_[j]
};

struct RyomHansenMismatch {
  int e = 0;
  Partition lambda;
  Partition mu;
  std::int64_t js = 0;  ///< J_F at p = 0 with the char-0 oracle
  std::int64_t jc = 0;  ///< d'_{λμ}(1)
};

struct RyomHansenSummary {
  std::size_t pairs = 0;
  std::vector<RyomHansenMismatch> mismatches;
  /// Pairs where J_F = 0 but d(1) ≠ 0 or the reverse (off the diagonal).
  std::size_t zero_mismatches = 0;
};

/// Compares js_bound (p = 0, LLT oracle) with jc_bound over every pair
/// (λ, μ), μ e-regular, in every block of H_n for n ≤ max_n.
RyomHansenSummary ryom_hansen_sweep(int max_n, const std::vector<int>& e_values, CanonicalCache& cache);

}  // namespace hecke
