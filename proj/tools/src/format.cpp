#include "format.hpp"

#include <set>

#include <json.hpp>

#include "hecke/error.hpp"
#include "hecke/mullineux.hpp"
#include "hecke/notation.hpp"

namespace hecke::cli {

namespace {

using nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string poly_or_blank(const std::optional<LaurentPoly>& p) { return p ? to_string(*p) : ""; }

std::vector<AdjStatus> listed_entries(const VerifierReport& rep, bool all) {
  std::vector<AdjStatus> out;
  if (all) {
    for (std::size_t i = 0; i < rep.regular.size(); ++i) {
      for (std::size_t j = 0; j < rep.regular.size(); ++j) {
        if (i != j) out.push_back(rep.entry(i, j));
      }
    }
    return out;
  }
  std::set<PartitionPair> seen;
  for (const auto& pair : rep.candidates) {
    if (seen.insert(pair).second) out.push_back(rep.entry(pair.first, pair.second));
  }
  for (const auto& pair : rep.unknown_entries()) {
    if (seen.insert(pair).second) out.push_back(rep.entry(pair.first, pair.second));
  }
  return out;
}

std::string justification_text(const AdjStatus& s) {
  std::string out = to_string(s.justification);
  if (s.via_dual) out += " (dual)";
  return out;
}

ordered_json prop33_json(const Prop33Result& p, const BlockId& b) {
  const auto& s = p.setup;
  ordered_json j;
  j["lambda"] = encode_string(s.lambda, b);
  j["mu"] = encode_string(s.mu, b);
  j["block_d"] = to_string(s.d);
  j["mu_tilde"] = to_string(s.mu_tilde);
  j["lambda0"] = to_string(s.lambda0);
  j["lambda1"] = to_string(s.lambda1);
  j["a_lambda_zero"] = p.a_lambda_zero;
  j["positivity"] = p.positivity;
  j["d_lambda0_mutilde"] = to_string(p.d_lambda0_mutilde);
  j["d_lambda1_mutilde"] = to_string(p.d_lambda1_mutilde);
  j["ok"] = p.ok();
  return j;
}

void report_json(std::ostream& out, const VerifierReport& rep, bool all) {
  ordered_json doc;
  doc["e"] = rep.e;
  doc["block"] = to_string(rep.block);
  doc["hypothesis"] = "char(F) >= 5";
  ordered_json entries = ordered_json::array();
  for (const auto& s : listed_entries(rep, all)) {
    ordered_json row;
    row["lambda"] = encode_string(s.lambda, rep.block);
    row["mu"] = encode_string(s.mu, rep.block);
    row["status"] = to_string(s.status);
    row["justification"] = to_string(s.justification);
    row["via_dual"] = s.via_dual;
    row["d_poly"] = s.d ? ordered_json(to_string(*s.d)) : ordered_json(nullptr);
    row["d_dual_poly"] = s.d_dual ? ordered_json(to_string(*s.d_dual)) : ordered_json(nullptr);
    entries.push_back(std::move(row));
  }
  doc["entries"] = std::move(entries);
  ordered_json summary;
  summary["verdict"] = verdict(rep);
  summary["identity"] = rep.identity();
  summary["matches_expectation"] = rep.matches_expectation();
  summary["regular"] = rep.regular.size();
  summary["reducible"] = rep.reducible.size();
  summary["survivors"] = rep.survivors.size();
  summary["candidates"] = rep.candidates.size();
  ordered_json zeros;
  for (const auto& [why, count] : rep.zero_counts()) zeros[to_string(why)] = count;
  summary["zero_counts"] = std::move(zeros);
  ordered_json unknown = ordered_json::array();
  for (const auto& [l, m] : rep.unknown_entries()) {
    unknown.push_back({encode_string(l, rep.block), encode_string(m, rep.block)});
  }
  summary["unknown"] = std::move(unknown);
  summary["prop33"] = rep.prop33 ? prop33_json(*rep.prop33, rep.block) : ordered_json(nullptr);
  doc["summary"] = std::move(summary);
  out << doc.dump(2) << '\n';
}

void report_csv(std::ostream& out, const VerifierReport& rep, bool all) {
  out << "e,lambda,mu,status,justification,via_dual,d,d_dual\n";
  for (const auto& s : listed_entries(rep, all)) {
    out << rep.e << ',' << csv_field(encode_string(s.lambda, rep.block)) << ','
        << csv_field(encode_string(s.mu, rep.block)) << ',' << to_string(s.status) << ','
        << to_string(s.justification) << ',' << (s.via_dual ? 1 : 0) << ',' << poly_or_blank(s.d) << ','
        << poly_or_blank(s.d_dual) << '\n';
  }
}

void report_md(std::ostream& out, const VerifierReport& rep, bool all) {
  out << "# Principal block of H_" << 5 * rep.e << ", e = " << rep.e << "\n\n";
  out << "hypothesis: char(F) >= 5\n";
  out << "block: " << to_string(rep.block) << '\n';
  out << "e-regular: " << rep.regular.size() << "  reducible: " << rep.reducible.size()
      << "  after lowerable scan: " << rep.survivors.size() << "  candidates: " << rep.candidates.size() << "\n\n";
  out << "| lambda | mu | lambda dual | mu dual | status | justification | d | d dual |\n";
  out << "|---|---|---|---|---|---|---|---|\n";
  for (const auto& s : listed_entries(rep, all)) {
    out << "| " << encode_string(s.lambda, rep.block) << " | " << encode_string(s.mu, rep.block) << " | "
        << encode_string(mullineux(s.lambda, rep.e), rep.block) << " | "
        << encode_string(mullineux(s.mu, rep.e), rep.block) << " | " << to_string(s.status) << " | "
        << justification_text(s) << " | " << poly_or_blank(s.d) << " | " << poly_or_blank(s.d_dual) << " |\n";
  }
  out << "\nzero entries:";
  for (const auto& [why, count] : rep.zero_counts()) out << ' ' << to_string(why) << '=' << count;
  out << '\n';
  if (rep.prop33) {
    const auto& p = *rep.prop33;
    out << "prop33: lambda " << encode_string(p.setup.lambda, rep.block) << ", mu "
        << encode_string(p.setup.mu, rep.block) << ", a_lambda " << (p.a_lambda_zero ? "0" : "nonzero")
        << ", positivity " << (p.positivity ? "ok" : "violated") << ", d(lambda0~, mu~) "
        << to_string(p.d_lambda0_mutilde) << ", " << (p.ok() ? "applied" : "not applied") << '\n';
  }
  for (const auto& [l, m] : rep.unknown_entries()) {
    out << "unknown: (" << encode_string(l, rep.block) << ", " << encode_string(m, rep.block) << ")\n";
  }
  out << "verdict: " << verdict(rep) << '\n';
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "md" || name == "markdown") return Format::Markdown;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw Error(ErrorCode::InvalidArgument, "unknown format " + std::string(name));
}

std::string label(const Partition& lambda, const std::optional<BlockId>& block) {
  return block ? encode_string(lambda, *block) : to_compact_string(lambda);
}

std::string verdict(const VerifierReport& rep) {
  const auto unknown = rep.unknown_entries().size();
  return unknown == 0 ? "identity" : std::to_string(unknown) + " unknown entries";
}

void write_report(std::ostream& out, const VerifierReport& rep, Format format, bool all) {
  switch (format) {
    case Format::Json: return report_json(out, rep, all);
    case Format::Csv: return report_csv(out, rep, all);
    case Format::Markdown: return report_md(out, rep, all);
  }
}

void write_canonical(std::ostream& out, const Partition& mu, const FockVector& g, const std::optional<BlockId>& block,
                     Format format) {
  switch (format) {
    case Format::Json: {
      ordered_json doc;
      doc["mu"] = label(mu, block);
      ordered_json terms = ordered_json::array();
      for (const auto& [lambda, c] : g.terms()) terms.push_back({{"lambda", label(lambda, block)}, {"d", to_string(c)}});
      doc["terms"] = std::move(terms);
      out << doc.dump(2) << '\n';
      return;
    }
    case Format::Csv:
      out << "lambda,d\n";
      for (const auto& [lambda, c] : g.terms()) out << csv_field(label(lambda, block)) << ',' << to_string(c) << '\n';
      return;
    case Format::Markdown:
      out << "G(" << label(mu, block) << "): " << g.support_size() << " terms\n\n| lambda | d(v) |\n|---|---|\n";
      for (const auto& [lambda, c] : g.terms()) out << "| " << label(lambda, block) << " | " << to_string(c) << " |\n";
      return;
  }
}

void write_dmatrix(std::ostream& out, const DecompositionMatrix& m, bool at_v1, Format format) {
  const auto ones = at_v1 ? m.at_v1() : std::vector<std::vector<std::int64_t>>{};
  auto cell = [&](std::size_t r, std::size_t c) {
    if (at_v1) return std::to_string(ones[r][c]);
    return to_string(m.entries[r][c]);
  };
  switch (format) {
    case Format::Json: {
      ordered_json doc;
      doc["block"] = to_string(m.block);
      ordered_json cols = ordered_json::array();
      for (const auto& c : m.columns) cols.push_back(to_string(c));
      doc["columns"] = std::move(cols);
      ordered_json rows = ordered_json::array();
      for (std::size_t r = 0; r < m.rows.size(); ++r) {
        ordered_json vals = ordered_json::array();
        for (std::size_t c = 0; c < m.columns.size(); ++c) {
          if (at_v1) {
            vals.push_back(ones[r][c]);
          } else {
            vals.push_back(to_string(m.entries[r][c]));
          }
        }
        rows.push_back({{"lambda", to_string(m.rows[r])}, {"entries", std::move(vals)}});
      }
      doc["rows"] = std::move(rows);
      out << doc.dump(2) << '\n';
      return;
    }
    case Format::Csv:
      out << "lambda";
      for (const auto& c : m.columns) out << ',' << csv_field(to_string(c));
      out << '\n';
      for (std::size_t r = 0; r < m.rows.size(); ++r) {
        out << csv_field(to_string(m.rows[r]));
        for (std::size_t c = 0; c < m.columns.size(); ++c) out << ',' << cell(r, c);
        out << '\n';
      }
      return;
    case Format::Markdown:
      out << "| lambda |";
      for (const auto& c : m.columns) out << ' ' << to_compact_string(c) << " |";
      out << "\n|---|";
      for (std::size_t c = 0; c < m.columns.size(); ++c) out << "---|";
      out << '\n';
      for (std::size_t r = 0; r < m.rows.size(); ++r) {
        out << "| " << to_compact_string(m.rows[r]) << " |";
        for (std::size_t c = 0; c < m.columns.size(); ++c) {
          const std::string v = cell(r, c);
          out << ' ' << (v == "0" ? "." : v) << " |";
        }
        out << '\n';
      }
      return;
  }
}

}  // namespace hecke::cli
