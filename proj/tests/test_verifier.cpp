#include <doctest.h>

#include <set>

#include "hecke/abacus.hpp"
#include "hecke/branching.hpp"
#include "hecke/fixtures.hpp"
#include "hecke/jantzen.hpp"
#include "hecke/mullineux.hpp"
#include "hecke/notation.hpp"
#include "hecke/verifier.hpp"
#include "support.hpp"

using namespace hecke;

namespace {

// One cache and one report per e for the whole file.
CanonicalCache& shared_cache() {
  static CanonicalCache cache;
  return cache;
}

const VerifierReport& report_for(int e) {
  static std::map<int, VerifierReport> reports;
  auto it = reports.find(e);
  if (it == reports.end()) it = reports.emplace(e, report(e, shared_cache())).first;
  return it->second;
}

PartitionPair pair_of(const std::string& l, const std::string& m, int e) {
  const BlockId b = principal_5e(e);
  return {decode(l, b), decode(m, b)};
}

std::set<Partition> families(int e) {
  const BlockId b = principal_5e(e);
  std::set<Partition> out;
  for (int i = 1; i < e; ++i) {
    const std::string si = std::to_string(i);
    out.insert(decode("<" + si + "_{3,2}>", b));
    for (int j = 0; j < e; ++j) {
      const std::string sj = std::to_string(j);
      if (i <= j - 1) out.insert(decode("<" + si + "_{2^2}," + sj + ">", b));
      if (j <= i - 2) out.insert(decode("<" + sj + "," + si + "_{2^2}>", b));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("reducible classification") {
  const BlockId b2 = principal_5e(2);
  CHECK(classify_reducible(2) == std::vector<Partition>{decode("<1_{3,2}>", b2)});
  for (int e = 2; e <= 7; ++e) {
    const auto found = classify_reducible(e);
    CHECK(std::set<Partition>(found.begin(), found.end()) == families(e));
  }
}

TEST_CASE("principal block helpers") {
  CHECK(principal_5e(4) == principal_block(4, 5));
  const BlockId b = principal_5e(4);
  for (int i = 0; i < 4; ++i) CHECK(is_single_runner_five(decode("<" + std::to_string(i) + "_5>", b), b));
  CHECK_FALSE(is_single_runner_five(decode("<1_{3,2}>", b), b));
  CHECK(expected_unknowns(4) == std::vector<PartitionPair>{pair_of("<1_{2^2},3>", "<1_2,2_2,3>", 4),
                                                            pair_of("<1,3_{2^2}>", "<3_5>", 4)});
  CHECK(expected_unknowns(5).empty());
}

TEST_CASE("lowerable scan survivors") {
  for (int e = 2; e <= 5; ++e) {
    const int r = 5 * e;
    const auto reducible = families(e);
    for (const auto& [lambda, mu] : lowerable_scan(e)) {
      REQUIRE(reducible.count(lambda) == 1);
      REQUIRE(lambda != mu);
      const auto nl = normal_counts(lambda, e, r);
      const auto nm = normal_counts(mu, e, r);
      for (int j = 0; j < e; ++j) {
        if (nm[static_cast<std::size_t>(j)] >= 1) REQUIRE(nl[static_cast<std::size_t>(j)] >= 2);
      }
    }
  }
}

TEST_CASE("pruning examples") {
  const auto& r2 = report_for(2);
  std::set<Partition> mus;
  const Partition l2 = decode("<1_{3,2}>", r2.block);
  for (const auto& [l, m] : r2.candidates) {
    if (l == l2) mus.insert(m);
  }
  CHECK(mus == std::set<Partition>{decode("<1_5>", r2.block), decode("<0,1_4>", r2.block)});

  const auto& c4 = report_for(4).candidates;
  CHECK(std::count(c4.begin(), c4.end(), pair_of("<1_{2^2},3>", "<1_2,2_2,3>", 4)) == 1);
  CHECK(std::count(c4.begin(), c4.end(), pair_of("<1,3_{2^2}>", "<3_5>", 4)) == 1);

  const auto& r6 = report_for(6);
  const auto p6 = pair_of("<3_{2^2},5>", "<3_2,4_2,5>", 6);
  CHECK(std::count(r6.candidates.begin(), r6.candidates.end(), p6) == 1);
  const AdjStatus s6 = r6.entry(p6.first, p6.second);
  CHECK(s6.status == Status::Zero);
  CHECK(s6.justification == Justification::Cor217);
  REQUIRE(s6.d.has_value());
  CHECK(s6.d->is_zero());

  // Direct call: pairs with equal first rows go to row removal.
  const auto pr = prune_candidates(2, lowerable_scan(2));
  CHECK(pr.remaining.size() == 2);
  for (const auto& [p, why] : pr.eliminated) {
    if (p.first.first() == p.second.first()) CHECK(why == Justification::RowRemoval);
  }
}

TEST_CASE("cor217 engine") {
  const int e = 3;
  const auto& rep = report_for(e);
  const JantzenOrder order(rep.block);
  const StatusLookup lookup = [&](const Partition& nu, const Partition& mu) {
    return rep.status(rep.index(nu), rep.index(mu));
  };
  const auto out = cor217(pair_of("<2_{3,2}>", "<0,2_4>", e), e, shared_cache(), order, lookup);
  CHECK(out.status == Status::Zero);
  CHECK(out.d == LaurentPoly::parse("v"));

  const auto& rep4 = report_for(4);
  const JantzenOrder order4(rep4.block);
  const StatusLookup lookup4 = [&](const Partition& nu, const Partition& mu) {
    return rep4.status(rep4.index(nu), rep4.index(mu));
  };
  const auto open = cor217(pair_of("<1_{2^2},3>", "<1_2,2_2,3>", 4), 4, shared_cache(), order4, lookup4);
  CHECK(open.status == Status::Unknown);
  CHECK(open.d == LaurentPoly::parse("v^2"));
  CHECK(open.d_dual == LaurentPoly::parse("3v^2"));

  // An unresolved intermediate entry is a processing-order bug.
  const StatusLookup pending = [](const Partition&, const Partition&) { return Status::Pending; };
  bool threw_somewhere = false;
  for (const auto& pair : rep4.candidates) {
    try {
      cor217(pair, 4, shared_cache(), order4, pending);
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::HypothesisUnmet);
      threw_somewhere = true;
    }
  }
  CHECK(threw_somewhere);
}

TEST_CASE("prop33 setup") {
  for (int e = 4; e <= 6; ++e) {
    const Prop33Setup s = prop33_setup(e);
    const BlockId b = principal_5e(e);
    CHECK(s.lambda == decode("<1," + std::to_string(e - 1) + "_{2^2}>", b));
    CHECK(s.mu == decode("<0,1," + std::to_string(e - 1) + "_3>", b));
    std::vector<int> d(static_cast<std::size_t>(e), 5);
    d[static_cast<std::size_t>(e - 2)] = 6;
    d[static_cast<std::size_t>(e - 1)] = 4;
    CHECK(s.d.core_beads == d);
    CHECK(s.d.weight == 4);
    CHECK(s.lambda0 != s.lambda1);
    const auto back = make_move(s.d, e - 1, 1, Direction::Induce);
    REQUIRE(back.has_value());
    CHECK(simple_induce(s.mu_tilde, *back).label == s.mu);
    // λ̃₀ and λ̃₁ are the only Specht modules of D whose induction contains S^λ.
    int containing = 0;
    for (const auto& entry : enumerate_block(s.d)) {
      const auto list = specht_induce_list(entry.partition, *back);
      if (std::find(list.factors.begin(), list.factors.end(), s.lambda) != list.factors.end()) {
        ++containing;
        CHECK((entry.partition == s.lambda0 || entry.partition == s.lambda1));
      }
    }
    CHECK(containing == 2);
  }
}

TEST_CASE("prop33 check at e = 4, 5") {
  for (int e = 4; e <= 5; ++e) {
    const Prop33Result r = prop33_check(e, shared_cache());
    CHECK(r.ok());
    CHECK(r.positivity);
    CHECK(r.a_lambda_zero);
    CHECK(r.induce_recovers_mu);
    CHECK(r.f_lambda1_unit);
    CHECK(r.d_lambda0_mutilde.is_zero());
    CHECK(r.d_lambda1_mutilde == LaurentPoly::parse("v^2"));
    CHECK(r.chain_ok);
    CHECK(r.hat_product_leq);
    CHECK(r.d_hat.is_zero());
    for (const auto& [nu, a] : r.expansion) CHECK(a.in_nonneg_symmetric());
  }
}

TEST_CASE("reports for e = 2..6") {
  for (int e = 2; e <= 6; ++e) {
    const auto& rep = report_for(e);
    const std::set<Partition> reducible(rep.reducible.begin(), rep.reducible.end());
    const std::size_t m = rep.regular.size();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const Status s = rep.status(i, j);
        const Justification why = rep.justification(i, j);
        if (i == j) {
          REQUIRE(s == Status::DiagonalOne);
          continue;
        }
        REQUIRE((s == Status::Zero || s == Status::Unknown));
        REQUIRE(why != Justification::None);
        if (s == Status::Unknown) REQUIRE(why == Justification::PaperUnresolved);
        if (reducible.count(rep.regular[i]) == 0) REQUIRE(why == Justification::Lowerable);
      }
    }
    const auto got = rep.unknown_entries();
    const auto want = expected_unknowns(e);
    CHECK(std::set<PartitionPair>(got.begin(), got.end()) == std::set<PartitionPair>(want.begin(), want.end()));
    CHECK(rep.identity() == (e != 4));
    CHECK(rep.matches_expectation());
    if (e >= 4) {
      REQUIRE(rep.prop33.has_value());
      CHECK(rep.prop33->ok());
      CHECK(rep.zero_counts().at(Justification::Prop33) == 2);
    }
  }
}

TEST_CASE("candidate sets against the printed tables") {
  const std::string dir = HECKE_FIXTURE_DIR;
  std::vector<DTableRow> rows;
  for (const char* name : {"/table31.csv", "/table32.csv"}) {
    for (auto& r : expand_d_table(read_csv(dir + name), 2, 6)) rows.push_back(std::move(r));
  }
  for (int e = 2; e <= 6; ++e) {
    const auto& rep = report_for(e);
    std::set<PartitionPair> printed;
    for (const auto& r : rows) {
      if (r.e != e) continue;
      const PartitionPair p = pair_of(r.lambda, r.mu, e);
      printed.insert(p);
      printed.insert({mullineux(p.first, e), mullineux(p.second, e)});
    }
    const std::set<PartitionPair> computed(rep.candidates.begin(), rep.candidates.end());
    std::set<PartitionPair> extra, missing;
    std::set_difference(computed.begin(), computed.end(), printed.begin(), printed.end(),
                        std::inserter(extra, extra.end()));
    std::set_difference(printed.begin(), printed.end(), computed.begin(), computed.end(),
                        std::inserter(missing, missing.end()));
    std::set<PartitionPair> want_extra, want_missing;
    if (e == 3) want_extra = {pair_of("<1_{3,2}>", "<1_5>", 3), pair_of("<0,2_{2^2}>", "<0_3,2_2>", 3)};
    if (e == 6) want_extra = {pair_of("<3_{2^2},4>", "<3_2,4_2,5>", 6)};
    if (e == 4) want_missing = {pair_of("<2_{3,2}>", "<0,2_4>", 4), pair_of("<0,2_{2^2}>", "<0,1,2_2,3>", 4)};
    CHECK(extra == want_extra);
    CHECK(missing == want_missing);
    for (const auto& p : want_extra) {
      const AdjStatus s = rep.entry(p.first, p.second);
      CHECK(s.status == Status::Zero);
      CHECK(s.justification == Justification::Cor217);
    }
    for (const auto& p : want_missing) {
      const AdjStatus s = rep.entry(p.first, p.second);
      CHECK(s.status == Status::Zero);
      CHECK((s.justification == Justification::MullineuxTransfer || s.justification == Justification::RowRemoval));
    }
  }
}
