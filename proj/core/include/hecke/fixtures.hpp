#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/laurent.hpp"
#include "hecke/partition.hpp"

namespace hecke {

// Machine-readable copies of the published tables. Cells may hold templates
// such as "<[e-i]_{2^2},[e-j]>": each bracketed integer expression is replaced
// by its value. Conditions look like "1<=i && i<=e-2 && e>=4".

using Bindings = std::map<char, std::int64_t>;

/// Integer expression over + - * and parentheses with single-letter
/// variables; throws SyntaxError or InvalidArgument for unbound names.
std::int64_t eval_expr(std::string_view text, const Bindings& vars);

/// Conjunction (&&) of relational chains such as "2<=i<=e-3". Empty is true.
bool eval_condition(std::string_view text, const Bindings& vars);

/// Substitutes every "[expr]" in `tmpl`.
std::string instantiate(std::string_view tmpl, const Bindings& vars);

/// Distinct lowercase letters in the text, in order of first appearance.
std::vector<char> variables_in(std::string_view text);

struct CsvTable {
  std::vector<std::string> comments;  ///< lines starting with '#', marker stripped
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;  ///< 1-based source line of each row

  /// Index of a header column; throws InvalidArgument.
  std::size_t column(std::string_view name) const;
  const std::string& cell(std::size_t row, std::string_view name) const;
};

/// Comma separated, double-quote aware ("" escapes a quote).
CsvTable parse_csv(std::string_view text);
CsvTable read_csv(const std::filesystem::path& path);

/// One instantiated row of the Mullineux table.
struct MullineuxCase {
  std::size_t line = 0;
  std::string family;
  std::string condition;
  Bindings vars;  ///< includes 'e'
  std::string mu;
  std::string mu_dual;
  std::string note;
};

/// Every row for every e in [e_min, e_max] and every i, j in 0..e-1 the row
/// mentions, subject to its condition.
std::vector<MullineuxCase> expand_mullineux_table(const CsvTable& table, int e_min = 2, int e_max = 8);

/// One instantiated row of a d-value table.
struct DTableRow {
  std::size_t line = 0;
  int e = 0;
  std::string lambda;
  std::string mu;
  std::string lambda_dual;
  std::string mu_dual;
  std::optional<LaurentPoly> d;       ///< blank cells stay empty
  std::optional<LaurentPoly> d_dual;
  std::string note;
};

std::vector<DTableRow> expand_d_table(const CsvTable& table, int e_min = 2, int e_max = 8);

struct MullineuxCheck {
  MullineuxCase row;
  Partition mu;
  Partition expected;
  Partition computed;
  std::string computed_text;
  bool ok = false;
  std::string error;  ///< decode or parse failure, empty otherwise
};

/// Decodes each case in the principal block of H_{5e}, applies the Mullineux
/// map and compares with the printed image.
std::vector<MullineuxCheck> check_mullineux_table(const std::vector<MullineuxCase>& cases);

}  // namespace hecke
