#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hecke/abacus.hpp"
#include "hecke/branching.hpp"
#include "hecke/laurent.hpp"
#include "hecke/llt.hpp"
#include "hecke/partition.hpp"

namespace hecke {

// Adjustment-matrix bookkeeping for the principal block of H_{5e}, drawn with
// 5 beads per runner.

enum class Status : std::uint8_t { Pending, DiagonalOne, Zero, Unknown };

enum class Justification : std::uint8_t {
  None,
  Lowerable,
  ProductOrder,
  RowRemoval,
  MullineuxTransfer,
  Cor217,
  Prop33,
  PaperUnresolved,
};

std::string to_string(Status status);
std::string to_string(Justification justification);

using PartitionPair = std::pair<Partition, Partition>;

struct AdjStatus {
  Partition lambda;
  Partition mu;
  Status status = Status::Pending;
  Justification justification = Justification::None;
  bool via_dual = false;  ///< Cor217 applied to (λ◇, μ◇)
  std::optional<LaurentPoly> d;       ///< d_{λμ}(v) when computed
  std::optional<LaurentPoly> d_dual;  ///< d_{λ◇μ◇}(v) when computed
};

BlockId principal_5e(int e);

/// True if λ = <i_5> for some runner i.
bool is_single_runner_five(const Partition& lambda, const BlockId& block);

/// e-regular λ in B with a κ = 1 restriction of normal count ≥ 2.
std::vector<Partition> classify_reducible(int e);

/// (λ, μ) with λ reducible, λ ≠ μ, and no runner j where μ has a normal bead
/// while λ has at most one.
std::vector<PartitionPair> lowerable_scan(int e);

struct PruneResult {
  std::vector<PartitionPair> remaining;
  std::vector<std::pair<PartitionPair, Justification>> eliminated;
};

/// Row removal, product order, then both tests on the Mullineux duals.
PruneResult prune_candidates(int e, const std::vector<PartitionPair>& survivors);

/// Status of (ν, μ) entries consulted by cor217.
using StatusLookup = std::function<Status(const Partition& nu, const Partition& mu)>;

struct Cor217Outcome {
  Status status = Status::Unknown;
  bool via_dual = false;
  LaurentPoly d;
  LaurentPoly d_dual;
};

class JantzenOrder;

/// Zero when d ∈ {0, v} for (λ, μ) or for the dual pair and every e-regular ν
/// strictly between (in the Jantzen order) is already Zero. Throws
/// HypothesisUnmet if some intermediate entry is still Pending; returns
/// Unknown if an intermediate is Unknown or neither d qualifies.
Cor217Outcome cor217(const PartitionPair& pair, int e, CanonicalCache& cache, const JantzenOrder& order,
                     const StatusLookup& lookup);

struct Prop33Setup {
  BlockId b;
  BlockId d;
  RunnerMove restrict_move;  ///< B to D along runners (e-2, e-1)
  Partition lambda;
  Partition mu;
  Partition mu_tilde;
  Partition lambda0;
  Partition lambda1;
};

Prop33Setup prop33_setup(int e);

struct Prop33Result {
  Prop33Setup setup;
  std::vector<std::pair<Partition, LaurentPoly>> expansion;  ///< a_ν for f_{e-1} G(μ̃)
  bool positivity = false;     ///< every a_ν in N_0[v + v^{-1}]
  bool a_lambda_zero = false;
  bool induce_recovers_mu = false;
  bool f_lambda1_unit = false;  ///< s(λ) occurs in f_{e-1} s(λ̃₁) with coefficient 1
  LaurentPoly d_lambda0_mutilde;
  LaurentPoly d_lambda1_mutilde;  ///< must lie in vN_0[v]
  // Restriction chain D = D^(e-2) → ... → D^(0) → E.
  std::vector<BlockId> chain;
  bool chain_ok = false;
  Partition lambda0_hat;
  Partition mu_hat;
  bool hat_product_leq = false;  ///< μ̂ ≤_P λ̂₀
  LaurentPoly d_hat;             ///< d_{λ̂₀ μ̂}(v)

  bool ok() const;
};

Prop33Result prop33_check(int e, CanonicalCache& cache);

struct VerifyOptions {
  bool run_prop33 = true;
};

/// Full adjustment-matrix status table for the principal block of H_{5e}.
class VerifierReport {
 public:
  int e = 0;
  BlockId block;
  std::vector<Partition> regular;    ///< e-regular members, descending lexicographic
  std::vector<Partition> reducible;
  std::vector<PartitionPair> survivors;  ///< after the lowerable scan
  std::vector<PartitionPair> candidates;  ///< after pruning
  std::optional<Prop33Result> prop33;

  Status status(std::size_t i, std::size_t j) const;
  Justification justification(std::size_t i, std::size_t j) const;
  AdjStatus entry(std::size_t i, std::size_t j) const;
  AdjStatus entry(const Partition& lambda, const Partition& mu) const;
  std::size_t index(const Partition& lambda) const;

  std::map<Justification, std::size_t> zero_counts() const;
  std::vector<PartitionPair> unknown_entries() const;
  bool identity() const { return unknown_entries().empty(); }
  /// Expected verdict: identity except the two e = 4 entries.
  bool matches_expectation() const;

  // Mutation, used while building.
  void init(int e_, BlockId block_, std::vector<Partition> regular_);
  void set(std::size_t i, std::size_t j, Status status, Justification justification);
  void annotate(const PartitionPair& pair, AdjStatus detail);

 private:
  std::vector<std::uint8_t> codes_;
  std::map<Partition, std::size_t> index_;
  std::map<PartitionPair, AdjStatus> details_;
};

/// The two pairs left open (e = 4 only).
std::vector<PartitionPair> expected_unknowns(int e);

VerifierReport report(int e, CanonicalCache& cache, const VerifyOptions& options = {});

}  // namespace hecke
