#include <doctest.h>

#include <map>
#include <set>

#include "hecke/abacus.hpp"
#include "hecke/partition.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hecke;

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{3, 2}) == Partition{2, 2, 1});
  CHECK(conjugate(Partition{5}) == Partition{1, 1, 1, 1, 1});
  for (int n = 0; n <= 10; ++n) {
    for (const auto& p : partitions_of(n)) CHECK(conjugate(conjugate(p)) == p);
  }
}

TEST_CASE("partition text form") {
  CHECK(parse_partition("5,3,1") == Partition{5, 3, 1});
  CHECK(parse_partition("2^2,1") == Partition{2, 2, 1});
  CHECK(parse_partition("-") == Partition{});
  CHECK(to_compact_string(Partition{2, 2, 1}) == "2^2,1");
  CHECK(throws_code([] { parse_partition("1,2"); }, ErrorCode::InvalidPartition));
}

TEST_CASE("to_abacus") {
  auto beads = [](const Partition& p, int e, int r) {
    const auto d = to_abacus(p, e, r);
    return std::set<int>(d.beads().begin(), d.beads().end());
  };
  CHECK(beads({}, 2, 2) == std::set<int>{0, 1});
  CHECK(beads({3, 2}, 2, 2) == std::set<int>{4, 2});
  CHECK(beads({1, 1}, 2, 2) == std::set<int>{2, 1});
  CHECK(throws_code([] { to_abacus(Partition{1, 1, 1}, 2, 2); }, ErrorCode::BeadCountTooSmall));
}

TEST_CASE("abacus round trip") {
  for (int n = 0; n <= 12; ++n) {
    for (const auto& p : partitions_of(n)) {
      for (int e = 2; e <= 6; ++e) {
        for (int r = p.length(); r <= p.length() + 2 * e; ++r) {
          REQUIRE(from_abacus(to_abacus(p, e, r)) == p);
        }
      }
    }
  }
}

TEST_CASE("e-core and weight against rim-hook stripping") {
  CHECK(e_core_and_weight(Partition{}, 2) == std::pair<Partition, int>{{}, 0});
  CHECK(e_core_and_weight(Partition{3, 2}, 2) == std::pair<Partition, int>{{1}, 2});
  CHECK(e_core_and_weight(Partition{2}, 3) == std::pair<Partition, int>{{2}, 0});
  CHECK(oracle::core_by_rim_hooks(Partition{3, 2}, 2, true) == std::pair<Partition, int>{{1}, 2});
  for (int n = 0; n <= 12; ++n) {
    for (const auto& p : partitions_of(n)) {
      for (int e = 2; e <= 6; ++e) {
        const auto [core, w] = e_core_and_weight(p, e);
        REQUIRE(w * e + core.size() == p.size());
        if (n <= 10) REQUIRE(oracle::core_by_rim_hooks(p, e) == std::pair<Partition, int>{core, w});
        // Core does not depend on the bead count.
        const int r = default_bead_count(n, e);
        REQUIRE(block_of(p, e, r + e).weight == w);
        REQUIRE(core_of(block_of(p, e, r + e)) == core);
      }
    }
  }
}

TEST_CASE("stripping order independence") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& p : partitions_of(n)) {
      for (int e = 2; e <= 4; ++e) CHECK_NOTHROW(oracle::core_by_rim_hooks(p, e, true));
    }
  }
}

TEST_CASE("block_of") {
  const BlockId b = block_of(Partition{}, 5);
  CHECK(b.weight == 0);
  CHECK(core_of(b) == Partition{});
  CHECK_FALSE(block_of(Partition{3, 2}, 2) == block_of(Partition{4, 1}, 2));
  CHECK(block_of(Partition{3, 2}, 2) == block_of(Partition{1, 1, 1, 1, 1}, 2));
  CHECK(block_of(Partition{3, 2}, 2) == block_of(Partition{3, 1, 1}, 2));
  // Principal block of H_{5e}: five beads per runner.
  for (int e = 2; e <= 6; ++e) {
    const Partition row{5 * e};
    const BlockId pb = block_of(row, e, 5 * e);
    CHECK(pb.core_beads == std::vector<int>(static_cast<std::size_t>(e), 5));
    CHECK(pb.weight == 5);
    CHECK(pb == principal_block(e, 5));
  }
}

TEST_CASE("Nakayama consistency") {
  for (int n = 0; n <= 10; ++n) {
    const auto all = partitions_of(n);
    for (int e = 2; e <= 5; ++e) {
      std::map<Partition, BlockId> by_core;
      for (const auto& p : all) {
        const auto core = oracle::core_by_rim_hooks(p, e).first;
        const BlockId b = block_of(p, e);
        const auto [it, fresh] = by_core.emplace(core, b);
        REQUIRE(it->second == b);
      }
      std::set<std::vector<int>> labels;
      for (const auto& [core, b] : by_core) labels.insert(b.core_beads);
      REQUIRE(labels.size() == by_core.size());
    }
  }
}

TEST_CASE("is_e_regular") {
  CHECK_FALSE(is_e_regular(Partition{1, 1}, 2));
  CHECK(is_e_regular(Partition{2}, 2));
  CHECK(is_e_regular(Partition{2, 2, 1}, 3));
}

TEST_CASE("dominance") {
  CHECK(dominance_cmp(Partition{2}, Partition{1, 1}) == Dominance::Greater);
  CHECK(dominance_cmp(Partition{3, 1, 1, 1}, Partition{2, 2, 2}) == Dominance::Incomparable);
  CHECK(dominance_cmp(Partition{4, 2}, Partition{4, 2}) == Dominance::Equal);
  CHECK(throws_code([] { dominance_cmp(Partition{2}, Partition{1}); }, ErrorCode::SizeMismatch));
}

TEST_CASE("remove_first_row") {
  CHECK(remove_first_row(Partition{5, 3, 1}) == Partition{3, 1});
  CHECK(remove_first_row(Partition{1}) == Partition{});
  CHECK(remove_first_row(Partition{4, 4}) == Partition{4});
  CHECK(throws_code([] { remove_first_row(Partition{}); }, ErrorCode::EmptyPartition));
}

TEST_CASE("induced e-sequence") {
  CHECK(induced_e_sequence(Partition{}, 3, 3).empty());
  CHECK(induced_e_sequence(Partition{1, 1}, 2, 2) == ESequence{2});
  CHECK(induced_e_sequence(Partition{2}, 2, 2) == ESequence{3});
  CHECK(throws_code([] { induced_e_sequence(Partition{1, 1, 1}, 2, 2); }, ErrorCode::BeadCountTooSmall));
  for (int n = 0; n <= 10; ++n) {
    for (const auto& p : partitions_of(n)) {
      for (int e = 2; e <= 4; ++e) {
        const auto s = induced_e_sequence(p, e, default_bead_count(n, e));
        REQUIRE(static_cast<int>(s.size()) == e_core_and_weight(p, e).second);
        REQUIRE(std::is_sorted(s.rbegin(), s.rend()));
      }
    }
  }
}

TEST_CASE("product order") {
  CHECK(product_order_cmp(Partition{1, 1}, Partition{2}, 2) == ProductOrder::Leq);
  CHECK(product_order_cmp(Partition{3, 2}, Partition{3, 2}, 2) == ProductOrder::Equal);
  CHECK(product_order_cmp(Partition{2}, Partition{1, 1, 1}, 2) == ProductOrder::DifferentBlock);
}

TEST_CASE("product order is a partial order on blocks") {
  for (int n = 1; n <= 10; ++n) {
    const auto all = partitions_of(n);
    for (int e = 2; e <= 4; ++e) {
      std::map<std::vector<int>, std::vector<Partition>> blocks;
      for (const auto& p : all) blocks[block_of(p, e).core_beads].push_back(p);
      for (const auto& [key, members] : blocks) {
        const std::size_t m = members.size();
        std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < m; ++j) {
            const auto c = product_order_cmp(members[i], members[j], e);
            leq[i][j] = c == ProductOrder::Leq || c == ProductOrder::Equal;
            REQUIRE((c == ProductOrder::Equal) == (i == j));
          }
        }
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < m; ++j) {
            if (i != j && leq[i][j]) REQUIRE_FALSE(leq[j][i]);
            for (std::size_t k = 0; k < m; ++k) {
              if (leq[i][j] && leq[j][k]) REQUIRE(leq[i][k]);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("enumerate_block") {
  const auto two = enumerate_block(make_block(Partition{}, 2, 1));
  REQUIRE(two.size() == 2);
  CHECK(two[0].partition == Partition{2});
  CHECK(two[1].partition == Partition{1, 1});
  CHECK(two[0].e_regular);
  CHECK_FALSE(two[1].e_regular);
  const auto trivial = enumerate_block(make_block(Partition{}, 3, 0));
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].partition == Partition{});
  // Every partition of 4 has empty 2-core.
  const auto four = enumerate_block(make_block(Partition{}, 2, 2));
  CHECK(four.size() == 5);
  CHECK(oracle::block_members(4, Partition{}, 2).size() == 5);
}

TEST_CASE("enumerate_block matches brute-force filtering") {
  for (int n = 0; n <= 12; ++n) {
    for (int e = 2; e <= 5; ++e) {
      std::set<Partition> cores;
      for (const auto& p : partitions_of(n)) cores.insert(e_core_and_weight(p, e).first);
      for (const auto& core : cores) {
        const int w = (n - core.size()) / e;
        std::vector<Partition> got;
        for (const auto& entry : enumerate_block(make_block(core, e, w))) {
          REQUIRE(entry.e_regular == is_e_regular(entry.partition, e));
          got.push_back(entry.partition);
        }
        REQUIRE(std::is_sorted(got.rbegin(), got.rend()));
        if (n <= 10) REQUIRE(got == oracle::block_members(n, core, e));
      }
    }
  }
}
