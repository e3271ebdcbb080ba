#include <doctest.h>

#include <set>

#include "hecke/abacus.hpp"
#include "hecke/branching.hpp"
#include "hecke/notation.hpp"
#include "support.hpp"

using namespace hecke;

namespace {

// Cancels "- +" pairs scanning from the right, the opposite order to the library.
std::vector<SignatureEntry> reduce_from_right(std::vector<SignatureEntry> s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = s.size(); k-- > 1;) {
      if (s[k - 1].sign == Sign::Minus && s[k].sign == Sign::Plus) {
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(k - 1), s.begin() + static_cast<std::ptrdiff_t>(k + 1));
        changed = true;
        break;
      }
    }
  }
  return s;
}

int distinct_parts(const Partition& p) {
  std::set<int> values(p.parts().begin(), p.parts().end());
  return static_cast<int>(values.size());
}

}  // namespace

TEST_CASE("signature examples") {
  const auto empty = signature(Partition{}, 2, 2, std::pair{0, 1});
  CHECK(empty.raw.empty());
  CHECK(empty.reduced.empty());

  const auto one = signature(Partition{1}, 2, 2, std::pair{0, 1});
  REQUIRE(one.reduced.size() == 2);
  CHECK(one.reduced[0].sign == Sign::Plus);
  CHECK(one.reduced[1].sign == Sign::Plus);
  CHECK(one.conormal_rows.size() == 2);
  CHECK(one.normal_rows.empty());

  // Display {3,0}: only the bead at 3 can step right, across the runner seam.
  const auto two = signature(Partition{2}, 2, 2, std::pair{1, 0});
  REQUIRE(two.raw.size() == 1);
  CHECK(two.raw[0].sign == Sign::Plus);
  CHECK(two.normal_rows.empty());

  CHECK(throws_code([] { signature(Partition{1, 1, 1}, 2, 2, 1); }, ErrorCode::BeadCountTooSmall));
}

TEST_CASE("signature reduction is confluent") {
  for (int n = 0; n <= 12; ++n) {
    for (const auto& p : partitions_of(n)) {
      for (int e = 2; e <= 4; ++e) {
        const int r = default_bead_count(n, e);
        for (int runner = 0; runner < e; ++runner) {
          const auto s = signature(p, e, r, runner);
          REQUIRE(s.reduced == reduce_from_right(s.raw));
          REQUIRE(reduce_signature(s.raw) == s.reduced);
        }
      }
    }
  }
}

TEST_CASE("every nonempty e-regular partition has a normal bead") {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& p : partitions_of(n)) {
      for (int e = 2; e <= 5; ++e) {
        if (!is_e_regular(p, e)) continue;
        const auto counts = normal_counts(p, e, default_bead_count(n, e));
        int total = 0;
        for (int c : counts) total += c;
        REQUIRE(total >= 1);
      }
    }
  }
}

TEST_CASE("good node removal and addition are inverse") {
  for (int n = 0; n <= 10; ++n) {
    for (const auto& p : partitions_of(n)) {
      for (int e = 2; e <= 4; ++e) {
        if (!is_e_regular(p, e)) continue;
        const int r = default_bead_count(n + 1, e);
        for (int runner = 0; runner < e; ++runner) {
          if (const auto down = remove_good(p, e, r, runner)) {
            REQUIRE(add_good(*down, e, r, runner) == p);
            REQUIRE(is_e_regular(*down, e));
          }
          if (const auto up = add_good(p, e, r, runner)) {
            REQUIRE(remove_good(*up, e, r, runner) == p);
            REQUIRE(is_e_regular(*up, e));
          }
        }
      }
    }
  }
}

TEST_CASE("simple restriction then induction returns the label") {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& p : partitions_of(n)) {
      for (int e = 2; e <= 4; ++e) {
        if (!is_e_regular(p, e)) continue;
        const BlockId b = block_of(p, e);
        for (const auto& move : neighbor_blocks(b, Direction::Restrict)) {
          const auto down = simple_restrict(p, move);
          if (down.outcome == BranchOutcome::Zero) continue;
          REQUIRE(down.label.has_value());
          const auto back = make_move(move.target_block, move.runner, 1, Direction::Induce);
          REQUIRE(back.has_value());
          REQUIRE(back->target_block == b);
          const auto up = simple_induce(*down.label, *back);
          REQUIRE(up.outcome != BranchOutcome::Zero);
          REQUIRE(up.label == p);
          if (down.outcome == BranchOutcome::Simple) REQUIRE(up.normal_count >= 1);
        }
      }
    }
  }
}

TEST_CASE("Specht restriction covers every removable node") {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& p : partitions_of(n)) {
      for (int e = 2; e <= 4; ++e) {
        const BlockId b = block_of(p, e);
        int total = 0;
        for (const auto& move : neighbor_blocks(b, Direction::Restrict)) {
          const auto list = specht_restrict_list(p, move);
          CHECK(list.multiplicity == 1);
          for (const auto& f : list.factors) REQUIRE(block_of(f, e, b.bead_count()) == move.target_block);
          total += static_cast<int>(list.factors.size());
        }
        REQUIRE(total == distinct_parts(p));
      }
    }
  }
}

TEST_CASE("Specht examples") {
  const BlockId b1 = block_of(Partition{1}, 2);
  const auto move = make_move(b1, 0, 1, Direction::Restrict);
  REQUIRE(move.has_value());
  const auto list = specht_restrict_list(Partition{1}, *move);
  CHECK(list.factors == std::vector<Partition>{Partition{}});
  // Two beads cross together: multiplicity 2!.
  const BlockId b8 = block_of(Partition{3, 3, 1, 1}, 2);
  const auto twice = make_move(b8, 1, 2, Direction::Induce);
  REQUIRE(twice.has_value());
  const auto up = specht_induce_list(Partition{3, 3, 1, 1}, *twice);
  CHECK(up.multiplicity == 2);
  CHECK(up.factors == std::vector<Partition>{Partition{4, 3, 2, 1}});
  // Nothing can move down from a core with all beads flush.
  const BlockId b0 = block_of(Partition{}, 3);
  for (const auto& m : neighbor_blocks(b0, Direction::Restrict)) {
    CHECK(specht_restrict_list(Partition{}, m).factors.empty());
  }
  CHECK(throws_code([&] { specht_restrict_list(Partition{2}, *move); }, ErrorCode::WrongBlock));
}

TEST_CASE("simple branching errors and zero cases") {
  const BlockId b = block_of(Partition{1, 1}, 2);
  const auto move = make_move(b, 1, 1, Direction::Restrict);
  REQUIRE(move.has_value());
  CHECK(throws_code([&] { simple_restrict(Partition{1, 1}, *move); }, ErrorCode::NotERegular));
  CHECK(throws_code([&] { simple_restrict(Partition{3}, *move); }, ErrorCode::WrongBlock));
  // (2) at e = 2 only has a normal bead on one runner.
  const auto counts = normal_counts(Partition{2}, 2, 2);
  CHECK(counts[0] + counts[1] == 1);
  for (const auto& m : neighbor_blocks(b, Direction::Restrict)) {
    const auto res = simple_restrict(Partition{2}, m);
    CHECK((res.outcome == BranchOutcome::Zero) == (res.normal_count == 0));
  }
}

TEST_CASE("neighbour blocks of the weight-5 principal block") {
  for (int e = 2; e <= 7; ++e) {
    const BlockId b = principal_block(e, 5);
    const auto moves = neighbor_blocks(b, Direction::Restrict);
    REQUIRE(moves.size() == static_cast<std::size_t>(e));
    for (const auto& m : moves) {
      CHECK(m.target_block.weight < 5);
      CHECK(block_size(m.target_block) == 5 * e - 1);
    }
    for (int i = 1; i < e; ++i) {
      std::vector<int> c(static_cast<std::size_t>(e), 5);
      c[static_cast<std::size_t>(i - 1)] = 6;
      c[static_cast<std::size_t>(i)] = 4;
      const auto move = make_move(b, i, 1, Direction::Restrict);
      REQUIRE(move.has_value());
      CHECK(move->target_block.core_beads == c);
      CHECK(move->target_block.weight == 4);
    }
  }
  // H_1 restricts to H_0.
  const BlockId one = block_of(Partition{1}, 3);
  bool reaches_empty = false;
  for (const auto& m : neighbor_blocks(one, Direction::Restrict)) {
    reaches_empty = reaches_empty || (m.target_block.weight == 0 && core_of(m.target_block) == Partition{});
  }
  CHECK(reaches_empty);
}

TEST_CASE("<i_{3,2}> restricts reducibly to C") {
  for (int e = 2; e <= 6; ++e) {
    const BlockId b = principal_block(e, 5);
    for (int i = 1; i < e; ++i) {
      const Partition lambda = decode("<" + std::to_string(i) + "_{3,2}>", b);
      const auto move = make_move(b, i, 1, Direction::Restrict);
      REQUIRE(move.has_value());
      const auto res = simple_restrict(lambda, *move);
      CHECK(res.outcome == BranchOutcome::Reducible);
      CHECK(res.normal_count == 2);
      // Every other restriction is zero.
      for (const auto& other : neighbor_blocks(b, Direction::Restrict)) {
        if (other.runner != i) CHECK(simple_restrict(lambda, other).outcome == BranchOutcome::Zero);
      }
    }
  }
}

TEST_CASE("reducible restrictions in the principal block are the three families") {
  for (int e = 2; e <= 6; ++e) {
    const BlockId b = principal_block(e, 5);
    std::set<Partition> expected;
    for (int i = 1; i < e; ++i) expected.insert(decode("<" + std::to_string(i) + "_{3,2}>", b));
    for (int i = 1; i < e; ++i) {
      for (int j = 0; j < e; ++j) {
        const std::string si = std::to_string(i), sj = std::to_string(j);
        if (i <= j - 1) expected.insert(decode("<" + si + "_{2^2}," + sj + ">", b));
        if (j <= i - 2) expected.insert(decode("<" + sj + "," + si + "_{2^2}>", b));
      }
    }
    std::set<Partition> found;
    for (const auto& p : e_regular_members(b)) {
      if (has_reducible_restriction(p, e, 5 * e)) found.insert(p);
    }
    CHECK(found == expected);
    CHECK(found.size() == static_cast<std::size_t>((e - 1) * (e - 1)));
  }
}
