#include "hecke/abacus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hecke/error.hpp"

namespace hecke {

AbacusDisplay::AbacusDisplay(int e, std::vector<int> beads) : e_(e), beads_(std::move(beads)) {
  if (e_ < 2) throw Error(ErrorCode::InvalidArgument, "abacus needs at least two runners");
  std::sort(beads_.begin(), beads_.end(), std::greater<>());
  if (std::adjacent_find(beads_.begin(), beads_.end()) != beads_.end()) {
    throw Error(ErrorCode::InvalidArgument, "bead positions must be distinct");
  }
  if (!beads_.empty() && beads_.back() < 0) {
    throw Error(ErrorCode::InvalidArgument, "bead positions must be non-negative");
  }
  occupancy_.assign(static_cast<std::size_t>(max_position() + 1), false);
  for (int b : beads_) occupancy_[static_cast<std::size_t>(b)] = true;
}

bool AbacusDisplay::occupied(int position) const noexcept {
  if (position < 0) return true;
  if (position > max_position()) return false;
  return occupancy_[static_cast<std::size_t>(position)];
}

std::vector<int> AbacusDisplay::runner_counts() const {
  std::vector<int> counts(static_cast<std::size_t>(e_), 0);
  for (int b : beads_) ++counts[static_cast<std::size_t>(runner(b))];
  return counts;
}

int AbacusDisplay::bead_weight(int position) const {
  int vacant = 0;
  for (int p = position - e_; p >= 0; p -= e_) {
    if (!occupied(p)) ++vacant;
  }
  return vacant;
}

AbacusDisplay to_abacus(const Partition& lambda, int e, int r) {
  if (r < lambda.length()) {
    throw Error(ErrorCode::BeadCountTooSmall, "bead count " + std::to_string(r) +
                                                  " is below the number of parts of " +
                                                  to_string(lambda));
  }
  std::vector<int> beads;
  beads.reserve(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) beads.push_back(lambda[static_cast<std::size_t>(i - 1)] + r - i);
  return AbacusDisplay(e, std::move(beads));
}

Partition from_abacus(const AbacusDisplay& display) {
  const auto beads = display.beads();
  const int r = display.bead_count();
  std::vector<int> parts;
  parts.reserve(beads.size());
  for (int i = 1; i <= r; ++i) parts.push_back(beads[static_cast<std::size_t>(i - 1)] - r + i);
  return Partition::from_parts_trimmed(std::move(parts));
}

int BlockId::bead_count() const { return std::accumulate(core_beads.begin(), core_beads.end(), 0); }

std::string to_string(const BlockId& block) {
  std::string out = "<";
  for (std::size_t i = 0; i < block.core_beads.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(block.core_beads[i]);
  }
  out += "> e=" + std::to_string(block.e) + " w=" + std::to_string(block.weight);
  return out;
}

int default_bead_count(int n, int e) {
  const int rows = std::max(1, (n + e - 1) / e);
  return rows * e;
}

namespace {

// Beads pushed to the top of each runner, keeping per-runner counts.
AbacusDisplay core_display(const AbacusDisplay& display) {
  const auto counts = display.runner_counts();
  std::vector<int> beads;
  const int e = display.e();
  for (int i = 0; i < e; ++i) {
    for (int k = 0; k < counts[static_cast<std::size_t>(i)]; ++k) beads.push_back(k * e + i);
  }
  return AbacusDisplay(e, std::move(beads));
}

int total_weight(const AbacusDisplay& display) {
  int w = 0;
  for (int b : display.beads()) w += display.bead_weight(b);
  return w;
}

}  // namespace

std::pair<Partition, int> e_core_and_weight(const Partition& lambda, int e) {
  if (e < 2) throw Error(ErrorCode::InvalidArgument, "e must be at least 2");
  const auto display = to_abacus(lambda, e, lambda.length());
  return {from_abacus(core_display(display)), total_weight(display)};
}

BlockId block_of(const Partition& lambda, int e) {
  return block_of(lambda, e, default_bead_count(lambda.size(), e));
}

BlockId block_of(const Partition& lambda, int e, int r) {
  if (e < 2) throw Error(ErrorCode::InvalidArgument, "e must be at least 2");
  const auto display = to_abacus(lambda, e, r);
  return BlockId{e, display.runner_counts(), total_weight(display)};
}

Partition core_of(const BlockId& block) {
  std::vector<int> beads;
  for (int i = 0; i < block.e; ++i) {
    for (int k = 0; k < block.core_beads[static_cast<std::size_t>(i)]; ++k) {
      beads.push_back(k * block.e + i);
    }
  }
  return from_abacus(AbacusDisplay(block.e, std::move(beads)));
}

int block_size(const BlockId& block) { return core_of(block).size() + block.e * block.weight; }

BlockId principal_block(int e, int weight) {
  return BlockId{e, std::vector<int>(static_cast<std::size_t>(e), weight), weight};
}

BlockId make_block(const Partition& core, int e, int weight, int r) {
  if (r < 0) r = default_bead_count(core.size() + e * weight, e);
  auto block = block_of(core, e, r);
  if (block.weight != 0) {
    throw Error(ErrorCode::InvalidArgument, to_string(core) + " is not an e-core");
  }
  block.weight = weight;
  return block;
}

Partition from_runner_partitions(const BlockId& block, std::span<const Partition> runner_parts) {
  if (runner_parts.size() > block.core_beads.size()) {
    throw Error(ErrorCode::BlockMismatch, "more runner partitions than runners");
  }
  std::vector<int> beads;
  for (std::size_t i = 0; i < block.core_beads.size(); ++i) {
    const int b = block.core_beads[i];
    const Partition empty;
    const Partition& rp = i < runner_parts.size() ? runner_parts[i] : empty;
    if (rp.length() > b) {
      throw Error(ErrorCode::BlockMismatch, "runner " + std::to_string(i) + " holds only " +
                                                std::to_string(b) + " beads, cannot carry " +
                                                to_string(rp));
    }
    for (int j = 1; j <= b; ++j) {
      const int row = rp[static_cast<std::size_t>(j - 1)] + b - j;
      beads.push_back(row * block.e + static_cast<int>(i));
    }
  }
  return from_abacus(AbacusDisplay(block.e, std::move(beads)));
}

std::vector<Partition> runner_partitions(const Partition& lambda, const BlockId& block) {
  const int r = block.bead_count();
  if (r < lambda.length()) {
    throw Error(ErrorCode::BlockMismatch, to_string(lambda) + " has more parts than the block's beads");
  }
  const auto display = to_abacus(lambda, block.e, r);
  if (display.runner_counts() != block.core_beads) {
    throw Error(ErrorCode::BlockMismatch, to_string(lambda) + " is not in block " + to_string(block));
  }
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(block.e));
  for (int p : display.beads()) {
    rows[static_cast<std::size_t>(display.runner(p))].push_back(display.row(p));
  }
  std::vector<Partition> out;
  out.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int b = block.core_beads[i];
    std::vector<int> parts;
    for (int j = 1; j <= b; ++j) parts.push_back(rows[i][static_cast<std::size_t>(j - 1)] - (b - j));
    out.push_back(Partition::from_parts_trimmed(std::move(parts)));
  }
  return out;
}

std::vector<BlockEntry> enumerate_block(const BlockId& block) {
  std::vector<std::vector<Partition>> by_size(static_cast<std::size_t>(block.weight + 1));
  for (int k = 0; k <= block.weight; ++k) by_size[static_cast<std::size_t>(k)] = partitions_of(k);

  std::vector<Partition> members;
  std::vector<Partition> current(static_cast<std::size_t>(block.e));
  std::function<void(int, int)> place = [&](int runner, int remaining) {
    if (runner == block.e - 1) {
      for (const auto& p : by_size[static_cast<std::size_t>(remaining)]) {
        if (p.length() > block.core_beads[static_cast<std::size_t>(runner)]) continue;
        current[static_cast<std::size_t>(runner)] = p;
        members.push_back(from_runner_partitions(block, current));
      }
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      for (const auto& p : by_size[static_cast<std::size_t>(k)]) {
        if (p.length() > block.core_beads[static_cast<std::size_t>(runner)]) continue;
        current[static_cast<std::size_t>(runner)] = p;
        place(runner + 1, remaining - k);
      }
    }
  };
  place(0, block.weight);

  std::sort(members.begin(), members.end(), std::greater<>());
  std::vector<BlockEntry> out;
  out.reserve(members.size());
  for (auto& p : members) {
    const bool regular = is_e_regular(p, block.e);
    out.push_back(BlockEntry{std::move(p), regular});
  }
  return out;
}

std::vector<Partition> e_regular_members(const BlockId& block) {
  std::vector<Partition> out;
  for (auto& entry : enumerate_block(block)) {
    if (entry.e_regular) out.push_back(std::move(entry.partition));
  }
  return out;
}

ESequence induced_e_sequence(const Partition& lambda, int e, int n_beads) {
  const auto display = to_abacus(lambda, e, n_beads);
  ESequence seq;
  for (int a : display.beads()) {
    const int w = display.bead_weight(a);
    for (int k = 0; k < w; ++k) seq.push_back(a - k * e);
  }
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

ProductOrder product_order_cmp(const Partition& lambda, const Partition& mu, int e) {
  if (lambda.size() != mu.size()) return ProductOrder::DifferentBlock;
  if (e_core_and_weight(lambda, e) != e_core_and_weight(mu, e)) return ProductOrder::DifferentBlock;
  // Both sequences shift uniformly with the bead count, so any common N
  // covering both partitions gives the same comparison.
  const int n_beads = std::max(lambda.length(), mu.length());
  const auto s_l = induced_e_sequence(lambda, e, n_beads);
  const auto s_m = induced_e_sequence(mu, e, n_beads);
  bool le = true;
  bool ge = true;
  for (std::size_t k = 0; k < s_l.size(); ++k) {
    if (s_l[k] > s_m[k]) le = false;
    if (s_l[k] < s_m[k]) ge = false;
  }
  if (le && ge) return ProductOrder::Equal;
  if (le) return ProductOrder::Leq;
  if (ge) return ProductOrder::Geq;
  return ProductOrder::Incomparable;
}

bool product_less(const Partition& lambda, const Partition& mu, int e) {
  return lambda != mu && product_order_cmp(lambda, mu, e) == ProductOrder::Leq;
}

std::string to_string(ProductOrder order) {
  switch (order) {
    case ProductOrder::Leq: return "Leq";
    case ProductOrder::Geq: return "Geq";
    case ProductOrder::Equal: return "Equal";
    case ProductOrder::Incomparable: return "Incomparable";
    case ProductOrder::DifferentBlock: return "DifferentBlock";
  }
  return "?";
}

}  // namespace hecke
