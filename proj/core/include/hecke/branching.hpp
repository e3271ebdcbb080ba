#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hecke/abacus.hpp"
#include "hecke/partition.hpp"

namespace hecke {

enum class Direction { Restrict, Induce };

/// Moving `kappa` beads between runners (runner-1, runner) of a display with
/// the source block's bead count. Restriction moves beads from `runner` to
/// `runner - 1`; induction the other way. Runner indices are cyclic, so for
/// runner 0 the left neighbour of position p is p - 1 on runner e - 1.
struct RunnerMove {
  BlockId source_block;
  BlockId target_block;
  int runner = 0;
  int kappa = 1;
  Direction direction = Direction::Restrict;

  int left_runner() const { return (runner + source_block.e - 1) % source_block.e; }
};

/// Builds the move and its target block; nullopt when the target would have
/// negative weight or the source runner lacks beads.
std::optional<RunnerMove> make_move(const BlockId& source, int runner, int kappa, Direction direction);

/// All κ-bead moves out of B, one per runner with a valid target.
std::vector<RunnerMove> neighbor_blocks(const BlockId& block, Direction direction, int kappa = 1);

enum class Sign { Plus, Minus };

struct SignatureEntry {
  Sign sign;
  int row;  ///< abacus row of the bead on `runner` (Minus) or its left slot (Plus)

  friend bool operator==(const SignatureEntry&, const SignatureEntry&) = default;
};

struct Signature {
  std::vector<SignatureEntry> raw;
  std::vector<SignatureEntry> reduced;
  std::vector<int> normal_rows;    ///< top to bottom
  std::vector<int> conormal_rows;  ///< top to bottom
};

/// i-signature for the runner pair (runner-1, runner) of λ's display with r beads.
Signature signature(const Partition& lambda, int e, int r, int runner);
/// Pair form; `pair.first` must equal `pair.second - 1` modulo e.
Signature signature(const Partition& lambda, int e, int r, std::pair<int, int> runner_pair);

/// Cancels adjacent "- +" pairs until none remain.
std::vector<SignatureEntry> reduce_signature(std::vector<SignatureEntry> raw);

enum class BranchOutcome { Zero, Simple, Reducible };

/// Restriction or induction of D^λ along a move.
struct SimpleBranch {
  BranchOutcome outcome = BranchOutcome::Zero;
  /// λ⁻ / λ⁺; the socle (restriction) or head (induction) label when Reducible.
  std::optional<Partition> label;
  int normal_count = 0;  ///< normal (restriction) or conormal (induction) beads
};

SimpleBranch simple_restrict(const Partition& lambda, const RunnerMove& move);
SimpleBranch simple_induce(const Partition& lambda, const RunnerMove& move);

/// Specht filtration factors; each occurs `multiplicity` = κ! times.
struct SpechtBranch {
  std::vector<Partition> factors;  ///< descending lexicographic
  int multiplicity = 1;
};

SpechtBranch specht_restrict_list(const Partition& lambda, const RunnerMove& move);
SpechtBranch specht_induce_list(const Partition& lambda, const RunnerMove& move);

/// Crystal moves: the good node (highest normal bead on `runner`) removed,
/// or the cogood node (lowest conormal bead) added. No block checks.
std::optional<Partition> remove_good(const Partition& lambda, int e, int r, int runner);
std::optional<Partition> add_good(const Partition& lambda, int e, int r, int runner);

/// Normal-bead count for every runner (κ = 1 restriction), at bead count r.
std::vector<int> normal_counts(const Partition& lambda, int e, int r);

/// True if some κ = 1 restriction of D^λ is nonzero and not simple.
bool has_reducible_restriction(const Partition& lambda, int e, int r);

std::string to_string(const Signature& sig, bool reduced = false);

}  // namespace hecke
