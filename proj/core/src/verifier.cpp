#include "hecke/verifier.hpp"

#include <algorithm>
#include <set>

#include "hecke/error.hpp"
#include "hecke/fock.hpp"
#include "hecke/jantzen.hpp"
#include "hecke/mullineux.hpp"
#include "hecke/notation.hpp"

namespace hecke {

std::string to_string(Status status) {
  switch (status) {
    case Status::Pending: return "Pending";
    case Status::DiagonalOne: return "DiagonalOne";
    case Status::Zero: return "Zero";
    case Status::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(Justification justification) {
  switch (justification) {
    case Justification::None: return "None";
    case Justification::Lowerable: return "Lowerable";
    case Justification::ProductOrder: return "ProductOrder";
    case Justification::RowRemoval: return "RowRemoval";
    case Justification::MullineuxTransfer: return "MullineuxTransfer";
    case Justification::Cor217: return "Cor217";
    case Justification::Prop33: return "Prop33";
    case Justification::PaperUnresolved: return "PaperUnresolved";
  }
  return "?";
}

BlockId principal_5e(int e) {
  if (e < 2) throw Error(ErrorCode::InvalidArgument, "e must be at least 2");
  return principal_block(e, 5);
}

bool is_single_runner_five(const Partition& lambda, const BlockId& block) {
  const auto expr = encode(lambda, block);
  return expr.entries.size() == 1 && expr.entries.front().second == Partition{5};
}

std::vector<Partition> classify_reducible(int e) {
  const BlockId b = principal_5e(e);
  std::vector<Partition> out;
  for (auto& lambda : e_regular_members(b)) {
    if (has_reducible_restriction(lambda, e, b.bead_count())) out.push_back(std::move(lambda));
  }
  return out;
}

namespace {

bool lowerable(const std::vector<int>& normal_lambda, const std::vector<int>& normal_mu) {
  for (std::size_t j = 0; j < normal_lambda.size(); ++j) {
    if (normal_mu[j] >= 1 && normal_lambda[j] <= 1) return true;
  }
  return false;
}

bool product_geq(const Partition& mu, const Partition& lambda, int e) {
  const auto cmp = product_order_cmp(lambda, mu, e);
  return cmp == ProductOrder::Leq || cmp == ProductOrder::Equal;
}

}  // namespace

std::vector<PartitionPair> lowerable_scan(int e) {
  const BlockId b = principal_5e(e);
  const int r = b.bead_count();
  const auto regular = e_regular_members(b);
  std::map<Partition, std::vector<int>> normals;
  for (const auto& mu : regular) normals.emplace(mu, normal_counts(mu, e, r));
  std::vector<PartitionPair> out;
  for (const auto& lambda : classify_reducible(e)) {
    const auto& nl = normals.at(lambda);
    for (const auto& mu : regular) {
      if (mu != lambda && !lowerable(nl, normals.at(mu))) out.emplace_back(lambda, mu);
    }
  }
  return out;
}

PruneResult prune_candidates(int e, const std::vector<PartitionPair>& survivors) {
  PruneResult out;
  for (const auto& pair : survivors) {
    const auto& [lambda, mu] = pair;
    if (lambda.first() == mu.first()) {
      out.eliminated.emplace_back(pair, Justification::RowRemoval);
      continue;
    }
    if (!product_geq(mu, lambda, e)) {
      out.eliminated.emplace_back(pair, Justification::ProductOrder);
      continue;
    }
    const Partition ld = mullineux(lambda, e);
    const Partition md = mullineux(mu, e);
    if (ld.first() == md.first() || !product_geq(md, ld, e)) {
      out.eliminated.emplace_back(pair, Justification::MullineuxTransfer);
      continue;
    }
    out.remaining.push_back(pair);
  }
  return out;
}

namespace {

bool zero_or_v(const LaurentPoly& d) { return d.is_zero() || d == LaurentPoly::monomial(1, 1); }

enum class Route { Resolved, Blocked, Waiting };

// One application of the Jantzen-order corollary to (λ, μ) itself.
Route try_route(const Partition& lambda, const Partition& mu, const LaurentPoly& d, const BlockId& block,
                const JantzenOrder& order, const StatusLookup& lookup) {
  if (is_single_runner_five(lambda, block) || !zero_or_v(d)) return Route::Blocked;
  bool waiting = false;
  for (const auto& nu : order.members()) {
    if (nu == lambda || nu == mu || !is_e_regular(nu, block.e)) continue;
    if (!order.less(lambda, nu) || !order.less(nu, mu)) continue;
    const Status s = lookup(nu, mu);
    if (s == Status::Pending) waiting = true;
    if (s == Status::Unknown) return Route::Blocked;
  }
  return waiting ? Route::Waiting : Route::Resolved;
}

struct Evaluation {
  Cor217Outcome outcome;
  bool waiting = false;
};

Evaluation evaluate_cor217(const PartitionPair& pair, int e, CanonicalCache& cache, const JantzenOrder& order,
                           const StatusLookup& lookup) {
  const auto& [lambda, mu] = pair;
  const BlockId& block = order.block();
  Evaluation ev;
  ev.outcome.d = v_decomp(lambda, mu, e, cache);
  const Partition ld = mullineux(lambda, e);
  const Partition md = mullineux(mu, e);
  ev.outcome.d_dual = v_decomp(ld, md, e, cache);
  const Route direct = try_route(lambda, mu, ev.outcome.d, block, order, lookup);
  if (direct == Route::Resolved) {
    ev.outcome.status = Status::Zero;
    return ev;
  }
  const Route dual = try_route(ld, md, ev.outcome.d_dual, block, order, lookup);
  if (dual == Route::Resolved) {
    ev.outcome.status = Status::Zero;
    ev.outcome.via_dual = true;
    return ev;
  }
  ev.outcome.status = Status::Unknown;
  ev.waiting = direct == Route::Waiting || dual == Route::Waiting;
  return ev;
}

}  // namespace

Cor217Outcome cor217(const PartitionPair& pair, int e, CanonicalCache& cache, const JantzenOrder& order,
                     const StatusLookup& lookup) {
  auto ev = evaluate_cor217(pair, e, cache, order, lookup);
  if (ev.outcome.status != Status::Zero && ev.waiting) {
    throw Error(ErrorCode::HypothesisUnmet, "unresolved intermediate entry for (" + to_string(pair.first) + ", " +
                                                to_string(pair.second) + ")");
  }
  return ev.outcome;
}

Prop33Setup prop33_setup(int e) {
  if (e < 4) throw Error(ErrorCode::InvalidArgument, "the Fock-space argument needs e >= 4");
  Prop33Setup s;
  s.b = principal_5e(e);
  const std::string top = std::to_string(e - 1);
  s.lambda = decode("<1," + top + "_{2^2}>", s.b);
  s.mu = decode("<0,1," + top + "_3>", s.b);
  auto move = make_move(s.b, e - 1, 1, Direction::Restrict);
  if (!move) throw Error(ErrorCode::HypothesisUnmet, "no restriction along runners (e-2, e-1)");
  s.restrict_move = *move;
  s.d = move->target_block;
  std::vector<int> expected(static_cast<std::size_t>(e), 5);
  expected[static_cast<std::size_t>(e - 2)] = 6;
  expected[static_cast<std::size_t>(e - 1)] = 4;
  if (s.d.core_beads != expected || s.d.weight != 4) {
    throw Error(ErrorCode::HypothesisUnmet, "unexpected target block " + to_string(s.d));
  }
  const auto restricted = simple_restrict(s.mu, s.restrict_move);
  if (restricted.outcome != BranchOutcome::Simple) {
    throw Error(ErrorCode::HypothesisUnmet, "restriction of D^mu to D is not simple");
  }
  s.mu_tilde = *restricted.label;
  const auto factors = specht_restrict_list(s.lambda, s.restrict_move).factors;
  if (factors.size() != 2) throw Error(ErrorCode::HypothesisUnmet, "expected two Specht factors over lambda");
  const int r = s.b.bead_count();
  int exact = 0;
  for (const auto& nu : factors) {
    const auto image = f_apply(FockVector::basis(nu), e - 1, e, r);
    if (image.coefficient(s.lambda) == LaurentPoly::constant(1)) {
      s.lambda1 = nu;
      ++exact;
    } else {
      s.lambda0 = nu;
    }
  }
  if (exact != 1) throw Error(ErrorCode::HypothesisUnmet, "cannot tell the two Specht factors apart");
  return s;
}

bool Prop33Result::ok() const {
  const bool d1_in_vn = d_lambda1_mutilde.is_zero() ||
                        (d_lambda1_mutilde.low_degree() >= 1 && d_lambda1_mutilde.in_nonneg_polys());
  return positivity && a_lambda_zero && induce_recovers_mu && f_lambda1_unit && d1_in_vn && d_lambda0_mutilde.is_zero() &&
         chain_ok && hat_product_leq && d_hat.is_zero();
}

Prop33Result prop33_check(int e, CanonicalCache& cache) {
  Prop33Result res;
  res.setup = prop33_setup(e);
  const auto& s = res.setup;
  const int r = s.b.bead_count();

  const auto induce = make_move(s.d, e - 1, 1, Direction::Induce);
  if (induce && induce->target_block == s.b) {
    const auto up = simple_induce(s.mu_tilde, *induce);
    res.induce_recovers_mu = up.label && *up.label == s.mu;
    // The Specht side: exactly λ̃₀ and λ̃₁ in D induce onto a factor S^λ.
    std::vector<Partition> hits;
    for (const auto& nu : enumerate_block(s.d)) {
      const auto list = specht_induce_list(nu.partition, *induce).factors;
      if (std::find(list.begin(), list.end(), s.lambda) != list.end()) hits.push_back(nu.partition);
    }
    std::vector<Partition> expected{s.lambda0, s.lambda1};
    std::sort(expected.begin(), expected.end(), std::greater<>());
    res.induce_recovers_mu = res.induce_recovers_mu && hits == expected;
  }
  res.f_lambda1_unit = f_apply(FockVector::basis(s.lambda1), e - 1, e, r).coefficient(s.lambda) ==
                       LaurentPoly::constant(1);

  const auto g = canonical_basis(s.mu_tilde, e, r, cache);
  res.d_lambda0_mutilde = g.coefficient(s.lambda0);
  res.d_lambda1_mutilde = g.coefficient(s.lambda1);
  res.expansion = expand_in_canonical_basis(f_apply(g, e - 1, e, r), e, cache);
  res.positivity = true;
  res.a_lambda_zero = true;
  for (const auto& [nu, a] : res.expansion) {
    if (!a.in_nonneg_symmetric()) res.positivity = false;
    if (nu == s.lambda && !a.is_zero()) res.a_lambda_zero = false;
  }

  // D^(e-2) → ... → D^(0) one bead at a time, then two beads into E.
  res.chain.push_back(s.d);
  Partition lam = s.lambda0;
  Partition mu = s.mu_tilde;
  bool ok = true;
  for (int i = e - 3; i >= -1 && ok; --i) {
    const int runner = i >= 0 ? i + 1 : 0;
    const int kappa = i >= 0 ? 1 : 2;
    const auto move = make_move(res.chain.back(), runner, kappa, Direction::Restrict);
    if (!move) {
      ok = false;
      break;
    }
    const auto specht = specht_restrict_list(lam, *move);
    const auto simple = simple_restrict(mu, *move);
    if (specht.factors.size() != 1 || simple.outcome != BranchOutcome::Simple) {
      ok = false;
      break;
    }
    lam = specht.factors.front();
    mu = *simple.label;
    res.chain.push_back(move->target_block);
  }
  const BlockId& last = res.chain.back();
  std::vector<int> e_beads(static_cast<std::size_t>(e), 5);
  e_beads.front() = 4;
  e_beads.back() = 6;
  res.chain_ok = ok && last.core_beads == e_beads && last.weight == 2;
  if (res.chain_ok) {
    res.lambda0_hat = lam;
    res.mu_hat = mu;
    res.hat_product_leq = product_order_cmp(mu, lam, e) == ProductOrder::Leq;
    res.d_hat = v_decomp(lam, mu, e, cache);
  }
  return res;
}

void VerifierReport::init(int e_, BlockId block_, std::vector<Partition> regular_) {
  e = e_;
  block = std::move(block_);
  regular = std::move(regular_);
  codes_.assign(regular.size() * regular.size(), 0);
  index_.clear();
  for (std::size_t k = 0; k < regular.size(); ++k) index_.emplace(regular[k], k);
}

std::size_t VerifierReport::index(const Partition& lambda) const {
  const auto it = index_.find(lambda);
  if (it == index_.end()) throw Error(ErrorCode::WrongBlock, to_string(lambda) + " is not an e-regular member");
  return it->second;
}

void VerifierReport::set(std::size_t i, std::size_t j, Status s, Justification why) {
  codes_[i * regular.size() + j] =
      static_cast<std::uint8_t>((static_cast<unsigned>(s) << 4) | static_cast<unsigned>(why));
}

Status VerifierReport::status(std::size_t i, std::size_t j) const {
  return static_cast<Status>(codes_[i * regular.size() + j] >> 4);
}

Justification VerifierReport::justification(std::size_t i, std::size_t j) const {
  return static_cast<Justification>(codes_[i * regular.size() + j] & 0xF);
}

void VerifierReport::annotate(const PartitionPair& pair, AdjStatus detail) { details_[pair] = std::move(detail); }

AdjStatus VerifierReport::entry(std::size_t i, std::size_t j) const {
  AdjStatus out;
  const auto it = details_.find({regular[i], regular[j]});
  if (it != details_.end()) out = it->second;
  out.lambda = regular[i];
  out.mu = regular[j];
  out.status = status(i, j);
  out.justification = justification(i, j);
  return out;
}

AdjStatus VerifierReport::entry(const Partition& lambda, const Partition& mu) const {
  return entry(index(lambda), index(mu));
}

std::map<Justification, std::size_t> VerifierReport::zero_counts() const {
  std::map<Justification, std::size_t> counts;
  for (std::size_t i = 0; i < regular.size(); ++i) {
    for (std::size_t j = 0; j < regular.size(); ++j) {
      if (status(i, j) == Status::Zero) ++counts[justification(i, j)];
    }
  }
  return counts;
}

std::vector<PartitionPair> VerifierReport::unknown_entries() const {
  std::vector<PartitionPair> out;
  for (std::size_t i = 0; i < regular.size(); ++i) {
    for (std::size_t j = 0; j < regular.size(); ++j) {
      const Status s = status(i, j);
      if (s == Status::Unknown || s == Status::Pending) out.emplace_back(regular[i], regular[j]);
    }
  }
  return out;
}

std::vector<PartitionPair> expected_unknowns(int e) {
  if (e != 4) return {};
  const BlockId b = principal_5e(4);
  return {{decode("<1_{2^2},3>", b), decode("<1_2,2_2,3>", b)}, {decode("<1,3_{2^2}>", b), decode("<3_5>", b)}};
}

bool VerifierReport::matches_expectation() const {
  auto got = unknown_entries();
  auto want = expected_unknowns(e);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  return got == want;
}

VerifierReport report(int e, CanonicalCache& cache, const VerifyOptions& options) {
  VerifierReport rep;
  const BlockId b = principal_5e(e);
  rep.init(e, b, e_regular_members(b));
  const std::size_t n = rep.regular.size();
  for (std::size_t i = 0; i < n; ++i) rep.set(i, i, Status::DiagonalOne, Justification::None);

  // No reducible restriction: every off-diagonal entry in the row is lowerable.
  rep.reducible = classify_reducible(e);
  const std::set<Partition> reducible(rep.reducible.begin(), rep.reducible.end());
  rep.survivors = lowerable_scan(e);
  const std::set<PartitionPair> survivors(rep.survivors.begin(), rep.survivors.end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && !survivors.count({rep.regular[i], rep.regular[j]})) {
        rep.set(i, j, Status::Zero, Justification::Lowerable);
      }
    }
  }

  auto pruned = prune_candidates(e, rep.survivors);
  for (const auto& [pair, why] : pruned.eliminated) {
    rep.set(rep.index(pair.first), rep.index(pair.second), Status::Zero, why);
  }
  rep.candidates = pruned.remaining;

  if (e >= 4 && options.run_prop33) {
    rep.prop33 = prop33_check(e, cache);
    if (rep.prop33->ok()) {
      const auto& s = rep.prop33->setup;
      for (const PartitionPair& pair : {PartitionPair{s.lambda, s.mu},
                                        PartitionPair{mullineux(s.lambda, e), mullineux(s.mu, e)}}) {
        const auto i = rep.index(pair.first);
        const auto j = rep.index(pair.second);
        if (rep.status(i, j) == Status::Pending) rep.set(i, j, Status::Zero, Justification::Prop33);
      }
    }
  }

  const JantzenOrder order(b);
  const StatusLookup lookup = [&rep](const Partition& nu, const Partition& mu) {
    return rep.status(rep.index(nu), rep.index(mu));
  };
  // Repeat until no candidate changes; anything left cannot be settled.
  std::set<PartitionPair> annotated;
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& pair : rep.candidates) {
      const auto i = rep.index(pair.first);
      const auto j = rep.index(pair.second);
      const Status current = rep.status(i, j);
      if (current != Status::Pending && annotated.count(pair)) continue;
      const auto ev = evaluate_cor217(pair, e, cache, order, lookup);
      AdjStatus detail;
      detail.d = ev.outcome.d;
      detail.d_dual = ev.outcome.d_dual;
      if (current == Status::Pending && ev.outcome.status == Status::Zero) {
        rep.set(i, j, Status::Zero, Justification::Cor217);
        detail.via_dual = ev.outcome.via_dual;
        progress = true;
      }
      rep.annotate(pair, std::move(detail));
      annotated.insert(pair);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rep.status(i, j) == Status::Pending) rep.set(i, j, Status::Unknown, Justification::PaperUnresolved);
    }
  }
  return rep;
}

}  // namespace hecke
