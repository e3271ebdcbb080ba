#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "hecke/abacus.hpp"
#include "hecke/fock.hpp"
#include "hecke/llt.hpp"
#include "hecke/verifier.hpp"

namespace hecke::cli {

enum class Format { Markdown, Csv, Json };

/// "md", "csv" or "json"; throws InvalidArgument otherwise.
Format parse_format(std::string_view name);

/// Bracket label when a block is known, plain part list otherwise.
std::string label(const Partition& lambda, const std::optional<BlockId>& block);

/// "identity" or "<k> unknown entries".
std::string verdict(const VerifierReport& rep);

/// Candidate pairs and unknown entries by default; every off-diagonal entry with `all`.
void write_report(std::ostream& out, const VerifierReport& rep, Format format, bool all);

void write_canonical(std::ostream& out, const Partition& mu, const FockVector& g, const std::optional<BlockId>& block,
                     Format format);

void write_dmatrix(std::ostream& out, const DecompositionMatrix& m, bool at_v1, Format format);

}  // namespace hecke::cli
