#include "hecke/jantzen.hpp"

#include <algorithm>
#include <set>

#include "hecke/error.hpp"

namespace hecke {

namespace {

int beads_between(const AbacusDisplay& d, int lo, int hi) {
  int count = 0;
  for (int p = lo + 1; p < hi; ++p) count += d.occupied(p) ? 1 : 0;
  return count;
}

Partition with_move(std::vector<int> beads, int from, int to, int e) {
  *std::find(beads.begin(), beads.end(), from) = to;
  return from_abacus(AbacusDisplay(e, std::move(beads)));
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

std::vector<HookMove> hook_moves(const Partition& lambda, int e, int r) {
  const AbacusDisplay display = to_abacus(lambda, e, r);
  const std::vector<int> beads(display.beads().begin(), display.beads().end());
  std::vector<HookMove> out;
  for (int a : beads) {
    for (int i = 1; a - i * e >= 0; ++i) {
      const int up = a - i * e;
      if (display.occupied(up)) continue;
      std::vector<int> mid_beads = beads;
      *std::find(mid_beads.begin(), mid_beads.end(), a) = up;
      const AbacusDisplay mid(e, mid_beads);
      const Partition sigma = from_abacus(mid);
      const int l1 = beads_between(display, up, a);
      // b - i e must hold a bead of σ and b must be vacant in σ.
      for (int b = a + 1; b - i * e <= mid.max_position(); ++b) {
        if (mid.occupied(b) || !mid.occupied(b - i * e)) continue;
        HookMove move;
        move.source = lambda;
        move.mid = sigma;
        move.target = with_move(mid_beads, b - i * e, b, e);
        move.a = a;
        move.b = b;
        move.i = i;
        move.l_lambda_sigma = l1;
        move.l_tau_sigma = beads_between(mid, b - i * e, b);
        out.push_back(std::move(move));
      }
    }
  }
  return out;
}

int p_valuation(std::int64_t x, int p) {
  if (p == 0 || x == 0) return 0;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

std::int64_t js_bound(const Partition& lambda, const Partition& mu, int e, int p, const DecompOracle& decomp) {
  if (!is_e_regular(mu, e)) throw Error(ErrorCode::NotERegular, to_string(mu));
  if (p != 0 && !is_prime(p)) throw Error(ErrorCode::InvalidArgument, "p must be 0 or prime");
  if (lambda.size() != mu.size()) throw Error(ErrorCode::SizeMismatch, "partitions of different sizes");
  const int r = default_bead_count(lambda.size(), e);
  std::int64_t total = 0;
  for (const auto& move : hook_moves(lambda, e, r)) {
    const std::int64_t m = decomp(move.target);
    if (m == 0) continue;
    const int sign = (move.l_lambda_sigma + move.l_tau_sigma + 1) % 2 == 0 ? 1 : -1;
    total += sign * (1 + p_valuation(move.i, p)) * m;
  }
  return total;
}

bool jantzen_leq(const Partition& lambda, const Partition& sigma, int e) {
  if (lambda.size() != sigma.size() || block_of(lambda, e) != block_of(sigma, e)) {
    throw Error(ErrorCode::DifferentBlock, to_string(lambda) + " and " + to_string(sigma));
  }
  const int r = default_bead_count(lambda.size(), e);
  std::set<Partition> seen{lambda};
  std::vector<Partition> stack{lambda};
  while (!stack.empty()) {
    const Partition current = stack.back();
    stack.pop_back();
    if (current == sigma) return true;
    // Moves only go up in dominance, hence in lexicographic order.
    for (const auto& move : hook_moves(current, e, r)) {
      if (move.target <= sigma && seen.insert(move.target).second) stack.push_back(move.target);
    }
  }
  return false;
}

JantzenOrder::JantzenOrder(const BlockId& block) : block_(block) {
  for (auto& entry : enumerate_block(block)) members_.push_back(std::move(entry.partition));
  for (std::size_t k = 0; k < members_.size(); ++k) index_.emplace(members_[k], k);
  const std::size_t words = (members_.size() + 63) / 64;
  reach_.assign(members_.size(), std::vector<std::uint64_t>(words, 0));
  const int r = block.bead_count();
  // Targets of hook moves are lexicographically larger, i.e. earlier.
  for (std::size_t k = 0; k < members_.size(); ++k) {
    auto& row = reach_[k];
    row[k / 64] |= std::uint64_t{1} << (k % 64);
    for (const auto& move : hook_moves(members_[k], block.e, r)) {
      const auto& other = reach_[index_of(move.target)];
      for (std::size_t w = 0; w < words; ++w) row[w] |= other[w];
    }
  }
}

std::size_t JantzenOrder::index_of(const Partition& lambda) const {
  const auto it = index_.find(lambda);
  if (it == index_.end()) throw Error(ErrorCode::DifferentBlock, to_string(lambda) + " not in " + to_string(block_));
  return it->second;
}

bool JantzenOrder::leq(const Partition& lambda, const Partition& sigma) const {
  const std::size_t i = index_of(lambda);
  const std::size_t j = index_of(sigma);
  return (reach_[i][j / 64] >> (j % 64)) & 1U;
}

RyomHansenSummary ryom_hansen_sweep(int max_n, const std::vector<int>& e_values, CanonicalCache& cache) {
  RyomHansenSummary out;
  for (int e : e_values) {
    for (int n = 0; n <= max_n; ++n) {
      const auto all = partitions_of(n);
      for (const auto& mu : all) {
        if (!is_e_regular(mu, e)) continue;
        const FockVector g = canonical_basis(mu, e, cache);
        const DecompOracle oracle = [&g](const Partition& tau) { return g.coefficient(tau).eval_at_one(); };
        for (const auto& lambda : all) {
          ++out.pairs;
          const std::int64_t js = js_bound(lambda, mu, e, 0, oracle);
          const LaurentPoly d = g.coefficient(lambda);
          const std::int64_t jc = d.derivative_at_one();
          if (js != jc) out.mismatches.push_back({e, lambda, mu, js, jc});
          if (lambda != mu && (js == 0) != (d.eval_at_one() == 0)) ++out.zero_mismatches;
        }
      }
    }
  }
  return out;
}

}  // namespace hecke
