#pragma once

#include <utility>
#include <vector>

#include "hecke/partition.hpp"

namespace hecke {

/// Columns (a_i, r_i): nodes in the i-th e-rim and rows of the partition it
/// was stripped from, outermost first.
struct MullineuxSymbol {
  std::vector<std::pair<int, int>> columns;

  friend bool operator==(const MullineuxSymbol&, const MullineuxSymbol&) = default;
};

/// Removes the e-rim; returns (number of removed nodes, remainder).
std::pair<int, Partition> strip_e_rim(const Partition& lambda, int e);

MullineuxSymbol mullineux_symbol(const Partition& lambda, int e);

/// Inverse of mullineux_symbol on e-regular partitions. Each column is undone
/// from the innermost outward; throws SymbolMismatch unless exactly one
/// e-regular partition fits at every step.
Partition from_symbol(const MullineuxSymbol& symbol, int e);

/// λ^◇ via the symbol: (a, r) ↦ (a, a - r + [e does not divide a]).
Partition mullineux(const Partition& lambda, int e);

/// λ^◇ via good nodes: peel λ to () recording residues, rebuild with the
/// negated residues in reverse.
Partition mullineux_kleshchev(const Partition& lambda, int e);

std::string to_string(const MullineuxSymbol& symbol);

}  // namespace hecke
