#include "hecke/branching.hpp"

#include <algorithm>
#include <functional>

#include "hecke/error.hpp"

namespace hecke {

namespace {

int mod(int a, int e) { return ((a % e) + e) % e; }

// Internally every display carries one extra row of beads on top, so the
// slot pairing position -1 with 0 (runner 0) is an ordinary pair of
// positions (e-1, e). Reported rows subtract that row again.
struct PaddedDisplay {
  AbacusDisplay display;
  int e;

  PaddedDisplay(const Partition& lambda, int e_, int r)
      : display(to_abacus(lambda, e_, r + e_)), e(e_) {}

  // Positions (left, right) = (R e + runner - 1, R e + runner) for padded row R.
  int right(int padded_row, int runner) const { return padded_row * e + runner; }
  int rows() const { return display.max_position() / e + 2; }
};

void check_bead_count(const Partition& lambda, int r) {
  if (r < lambda.length()) {
    throw Error(ErrorCode::BeadCountTooSmall, "bead count " + std::to_string(r) + " too small for " +
                                                  to_string(lambda));
  }
}

Partition move_beads(const PaddedDisplay& pd, const std::vector<std::pair<int, int>>& moves) {
  std::vector<int> beads(pd.display.beads().begin(), pd.display.beads().end());
  for (const auto& [from, to] : moves) {
    auto it = std::find(beads.begin(), beads.end(), from);
    *it = to;
  }
  return from_abacus(AbacusDisplay(pd.e, std::move(beads)));
}

void check_source(const Partition& lambda, const RunnerMove& move) {
  const int r = move.source_block.bead_count();
  check_bead_count(lambda, r);
  if (block_of(lambda, move.source_block.e, r) != move.source_block) {
    throw Error(ErrorCode::WrongBlock, to_string(lambda) + " is not in " + to_string(move.source_block));
  }
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(idx.size()) == k) {
      fn(idx);
      return;
    }
    for (int i = start; i < n; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
}

int factorial(int k) {
  int f = 1;
  for (int j = 2; j <= k; ++j) f *= j;
  return f;
}

}  // namespace

std::optional<RunnerMove> make_move(const BlockId& source, int runner, int kappa, Direction direction) {
  const int e = source.e;
  if (runner < 0 || runner >= e || kappa < 1) {
    throw Error(ErrorCode::InvalidArgument, "runner or kappa out of range");
  }
  const int left = mod(runner - 1, e);
  auto beads = source.core_beads;
  const int from = direction == Direction::Restrict ? runner : left;
  const int to = direction == Direction::Restrict ? left : runner;
  if (beads[static_cast<std::size_t>(from)] < kappa) return std::nullopt;
  beads[static_cast<std::size_t>(from)] -= kappa;
  beads[static_cast<std::size_t>(to)] += kappa;
  BlockId target{e, beads, 0};
  const int n = block_size(source) + (direction == Direction::Restrict ? -kappa : kappa);
  const int core_size = core_of(target).size();
  if (n < core_size || (n - core_size) % e != 0) return std::nullopt;
  target.weight = (n - core_size) / e;
  return RunnerMove{source, target, runner, kappa, direction};
}

std::vector<RunnerMove> neighbor_blocks(const BlockId& block, Direction direction, int kappa) {
  std::vector<RunnerMove> out;
  for (int i = 0; i < block.e; ++i) {
    if (auto move = make_move(block, i, kappa, direction)) out.push_back(std::move(*move));
  }
  return out;
}

std::vector<SignatureEntry> reduce_signature(std::vector<SignatureEntry> raw) {
  // Stack-based cancellation: a '+' cancels the nearest uncancelled '-' to its left.
  std::vector<SignatureEntry> out;
  for (const auto& entry : raw) {
    if (entry.sign == Sign::Plus && !out.empty() && out.back().sign == Sign::Minus) {
      out.pop_back();
    } else {
      out.push_back(entry);
    }
  }
  return out;
}

Signature signature(const Partition& lambda, int e, int r, int runner) {
  check_bead_count(lambda, r);
  if (runner < 0 || runner >= e) throw Error(ErrorCode::InvalidArgument, "runner out of range");
  const PaddedDisplay pd(lambda, e, r);
  Signature sig;
  for (int row = 0; row < pd.rows(); ++row) {
    const int right = pd.right(row, runner);
    const bool has_right = pd.display.occupied(right);
    const bool has_left = pd.display.occupied(right - 1);
    if (has_right && !has_left) sig.raw.push_back({Sign::Minus, row - 1});
    if (has_left && !has_right) sig.raw.push_back({Sign::Plus, row - 1});
  }
  sig.reduced = reduce_signature(sig.raw);
  for (const auto& entry : sig.reduced) {
    (entry.sign == Sign::Minus ? sig.normal_rows : sig.conormal_rows).push_back(entry.row);
  }
  return sig;
}

Signature signature(const Partition& lambda, int e, int r, std::pair<int, int> runner_pair) {
  if (mod(runner_pair.first + 1, e) != mod(runner_pair.second, e)) {
    throw Error(ErrorCode::InvalidArgument, "runner pair must be (i-1, i)");
  }
  return signature(lambda, e, r, mod(runner_pair.second, e));
}

SimpleBranch simple_restrict(const Partition& lambda, const RunnerMove& move) {
  if (move.direction != Direction::Restrict) throw Error(ErrorCode::InvalidArgument, "expected a restriction move");
  const int e = move.source_block.e;
  if (!is_e_regular(lambda, e)) throw Error(ErrorCode::NotERegular, to_string(lambda));
  check_source(lambda, move);
  const int r = move.source_block.bead_count();
  const auto sig = signature(lambda, e, r, move.runner);
  SimpleBranch out;
  out.normal_count = static_cast<int>(sig.normal_rows.size());
  if (out.normal_count < move.kappa) return out;
  const PaddedDisplay pd(lambda, e, r);
  std::vector<std::pair<int, int>> moves;
  for (int k = 0; k < move.kappa; ++k) {
    const int pos = pd.right(sig.normal_rows[static_cast<std::size_t>(k)] + 1, move.runner);
    moves.emplace_back(pos, pos - 1);
  }
  out.label = move_beads(pd, moves);
  out.outcome = out.normal_count == move.kappa ? BranchOutcome::Simple : BranchOutcome::Reducible;
  return out;
}

SimpleBranch simple_induce(const Partition& lambda, const RunnerMove& move) {
  if (move.direction != Direction::Induce) throw Error(ErrorCode::InvalidArgument, "expected an induction move");
  const int e = move.source_block.e;
  if (!is_e_regular(lambda, e)) throw Error(ErrorCode::NotERegular, to_string(lambda));
  check_source(lambda, move);
  const int r = move.source_block.bead_count();
  const auto sig = signature(lambda, e, r, move.runner);
  SimpleBranch out;
  out.normal_count = static_cast<int>(sig.conormal_rows.size());
  if (out.normal_count < move.kappa) return out;
  const PaddedDisplay pd(lambda, e, r);
  std::vector<std::pair<int, int>> moves;
  const auto n = sig.conormal_rows.size();
  for (int k = 0; k < move.kappa; ++k) {
    const int right = pd.right(sig.conormal_rows[n - 1 - static_cast<std::size_t>(k)] + 1, move.runner);
    moves.emplace_back(right - 1, right);
  }
  out.label = move_beads(pd, moves);
  out.outcome = out.normal_count == move.kappa ? BranchOutcome::Simple : BranchOutcome::Reducible;
  return out;
}

namespace {

SpechtBranch specht_list(const Partition& lambda, const RunnerMove& move, bool restrict) {
  check_source(lambda, move);
  const int e = move.source_block.e;
  const int r = move.source_block.bead_count();
  const PaddedDisplay pd(lambda, e, r);
  std::vector<std::pair<int, int>> candidates;
  for (int row = 0; row < pd.rows(); ++row) {
    const int right = pd.right(row, move.runner);
    const bool has_right = pd.display.occupied(right);
    const bool has_left = pd.display.occupied(right - 1);
    if (restrict && has_right && !has_left) candidates.emplace_back(right, right - 1);
    if (!restrict && has_left && !has_right) candidates.emplace_back(right - 1, right);
  }
  SpechtBranch out;
  out.multiplicity = factorial(move.kappa);
  for_each_subset(static_cast<int>(candidates.size()), move.kappa, [&](const std::vector<int>& idx) {
    std::vector<std::pair<int, int>> moves;
    for (int k : idx) moves.push_back(candidates[static_cast<std::size_t>(k)]);
    out.factors.push_back(move_beads(pd, moves));
  });
  std::sort(out.factors.begin(), out.factors.end(), std::greater<>());
  return out;
}

}  // namespace

SpechtBranch specht_restrict_list(const Partition& lambda, const RunnerMove& move) {
  if (move.direction != Direction::Restrict) throw Error(ErrorCode::InvalidArgument, "expected a restriction move");
  return specht_list(lambda, move, true);
}

SpechtBranch specht_induce_list(const Partition& lambda, const RunnerMove& move) {
  if (move.direction != Direction::Induce) throw Error(ErrorCode::InvalidArgument, "expected an induction move");
  return specht_list(lambda, move, false);
}

std::optional<Partition> remove_good(const Partition& lambda, int e, int r, int runner) {
  const auto sig = signature(lambda, e, r, runner);
  if (sig.normal_rows.empty()) return std::nullopt;
  const PaddedDisplay pd(lambda, e, r);
  const int pos = pd.right(sig.normal_rows.front() + 1, runner);
  return move_beads(pd, {{pos, pos - 1}});
}

std::optional<Partition> add_good(const Partition& lambda, int e, int r, int runner) {
  const auto sig = signature(lambda, e, r, runner);
  if (sig.conormal_rows.empty()) return std::nullopt;
  const PaddedDisplay pd(lambda, e, r);
  const int right = pd.right(sig.conormal_rows.back() + 1, runner);
  return move_beads(pd, {{right - 1, right}});
}

std::vector<int> normal_counts(const Partition& lambda, int e, int r) {
  std::vector<int> counts;
  counts.reserve(static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i) counts.push_back(static_cast<int>(signature(lambda, e, r, i).normal_rows.size()));
  return counts;
}

bool has_reducible_restriction(const Partition& lambda, int e, int r) {
  const auto counts = normal_counts(lambda, e, r);
  return std::any_of(counts.begin(), counts.end(), [](int c) { return c >= 2; });
}

std::string to_string(const Signature& sig, bool reduced) {
  std::string out;
  for (const auto& entry : reduced ? sig.reduced : sig.raw) out.push_back(entry.sign == Sign::Plus ? '+' : '-');
  return out;
}

}  // namespace hecke
