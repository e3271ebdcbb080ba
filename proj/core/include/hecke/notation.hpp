#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hecke/abacus.hpp"
#include "hecke/partition.hpp"

namespace hecke {

/// Angle-bracket label <0_{λ(0)},...,(e-1)_{λ(e-1)} | b_0,...,b_{e-1}>.
///
/// ASCII grammar:
///   expr     := '<' [entry (',' entry)*] ['|' int (',' int)*] '>'
///   entry    := int ['_' subscript]
///   subscript:= int | '{' part (',' part)* '}'
///   part     := int ['^' int]
/// A bare runner index means λ(i) = (1); omitted runners carry ().
struct BracketExpr {
  /// (runner, runner partition), sorted by runner, runners distinct.
  std::vector<std::pair<int, Partition>> entries;
  std::optional<std::vector<int>> bead_counts;

  friend bool operator==(const BracketExpr&, const BracketExpr&) = default;
};

BracketExpr parse_bracket(std::string_view text);
/// Canonical text; empty runner partitions are dropped.
std::string to_string(const BracketExpr& expr);

Partition decode(const BracketExpr& expr, const BlockId& block);
Partition decode(std::string_view text, const BlockId& block);
BracketExpr encode(const Partition& lambda, const BlockId& block);
std::string encode_string(const Partition& lambda, const BlockId& block);

/// Accepts either bracket text (leading '<') or a plain part list.
Partition parse_partition_arg(std::string_view text, const std::optional<BlockId>& block);

}  // namespace hecke
