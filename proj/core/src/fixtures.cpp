#include "hecke/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "hecke/abacus.hpp"
#include "hecke/error.hpp"
#include "hecke/mullineux.hpp"
#include "hecke/notation.hpp"

namespace hecke {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const Bindings& vars) : text_(text), vars_(vars) {}

  std::int64_t expr() {
    std::int64_t value = term();
    for (;;) {
      skip();
      if (peek('+')) {
        ++pos_;
        value += term();
      } else if (peek('-')) {
        ++pos_;
        value -= term();
      } else {
        return value;
      }
    }
  }

  bool condition() {
    skip();
    if (pos_ == text_.size()) return true;
    bool result = chain();
    for (;;) {
      skip();
      if (text_.substr(pos_, 2) != "&&") break;
      pos_ += 2;
      result = chain() && result;
    }
    return result;
  }

  void expect_end() {
    skip();
    if (pos_ != text_.size()) fail("trailing input");
  }

 private:
  enum class Rel { Lt, Le, Gt, Ge, Eq, Ne, None };

  bool chain() {
    std::int64_t lhs = expr();
    bool ok = true;
    bool any = false;
    for (;;) {
      const Rel rel = relation();
      if (rel == Rel::None) break;
      any = true;
      const std::int64_t rhs = expr();
      ok = ok && holds(lhs, rel, rhs);
      lhs = rhs;
    }
    if (!any) fail("expected a comparison");
    return ok;
  }

  static bool holds(std::int64_t a, Rel rel, std::int64_t b) {
    switch (rel) {
      case Rel::Lt: return a < b;
      case Rel::Le: return a <= b;
      case Rel::Gt: return a > b;
      case Rel::Ge: return a >= b;
      case Rel::Eq: return a == b;
      case Rel::Ne: return a != b;
      case Rel::None: break;
    }
    return false;
  }

  Rel relation() {
    skip();
    const auto two = text_.substr(pos_, 2);
    if (two == "<=") return pos_ += 2, Rel::Le;
    if (two == ">=") return pos_ += 2, Rel::Ge;
    if (two == "==") return pos_ += 2, Rel::Eq;
    if (two == "!=") return pos_ += 2, Rel::Ne;
    if (peek('<')) return ++pos_, Rel::Lt;
    if (peek('>')) return ++pos_, Rel::Gt;
    return Rel::None;
  }

  std::int64_t term() {
    std::int64_t value = factor();
    for (;;) {
      skip();
      if (!peek('*')) return value;
      ++pos_;
      value *= factor();
    }
  }

  std::int64_t factor() {
    skip();
    if (pos_ == text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      const std::int64_t value = expr();
      skip();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + (text_[pos_++] - '0');
      }
      return value;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      ++pos_;
      const auto it = vars_.find(c);
      if (it == vars_.end()) throw Error(ErrorCode::InvalidArgument, std::string("unbound variable ") + c);
      return it->second;
    }
    fail("unexpected character");
    return 0;
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ErrorCode::SyntaxError, pos_, what + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  const Bindings& vars_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_record(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char c = line[k];
    if (quoted) {
      if (c == '"') {
        if (k + 1 < line.size() && line[k + 1] == '"') {
          field += '"';
          ++k;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      fields.push_back(was_quoted ? field : trim(field));
      field.clear();
      was_quoted = false;
    } else {
      field += c;
    }
  }
  if (quoted) throw Error(ErrorCode::SyntaxError, "unterminated quote on line " + std::to_string(line_no));
  fields.push_back(was_quoted ? field : trim(field));
  return fields;
}

std::vector<char> template_vars(const std::vector<std::string>& cells) {
  std::vector<char> out;
  for (const auto& cell : cells) {
    for (char c : variables_in(cell)) {
      if (c != 'e' && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Calls f for every assignment of `names` to 0..e-1.
template <typename F>
void for_each_assignment(Bindings vars, const std::vector<char>& names, std::size_t k, int e, const F& f) {
  if (k == names.size()) {
    f(vars);
    return;
  }
  for (int v = 0; v < e; ++v) {
    vars[names[k]] = v;
    for_each_assignment(vars, names, k + 1, e, f);
  }
}

std::optional<LaurentPoly> poly_cell(const std::string& cell) {
  if (cell.empty()) return std::nullopt;
  return LaurentPoly::parse(cell);
}

}  // namespace

std::int64_t eval_expr(std::string_view text, const Bindings& vars) {
  ExprParser parser(text, vars);
  const std::int64_t value = parser.expr();
  parser.expect_end();
  return value;
}

bool eval_condition(std::string_view text, const Bindings& vars) {
  ExprParser parser(text, vars);
  const bool value = parser.condition();
  parser.expect_end();
  return value;
}

std::string instantiate(std::string_view tmpl, const Bindings& vars) {
  std::string out;
  std::size_t pos = 0;
  while (pos < tmpl.size()) {
    const std::size_t open = tmpl.find('[', pos);
    if (open == std::string_view::npos) {
      out.append(tmpl.substr(pos));
      break;
    }
    const std::size_t close = tmpl.find(']', open);
    if (close == std::string_view::npos) throw ParseError(ErrorCode::SyntaxError, open, "unclosed '['");
    out.append(tmpl.substr(pos, open - pos));
    out += std::to_string(eval_expr(tmpl.substr(open + 1, close - open - 1), vars));
    pos = close + 1;
  }
  return out;
}

std::vector<char> variables_in(std::string_view text) {
  std::vector<char> out;
  for (char c : text) {
    if (std::islower(static_cast<unsigned char>(c)) && std::find(out.begin(), out.end(), c) == out.end()) {
      out.push_back(c);
    }
  }
  return out;
}

std::size_t CsvTable::column(std::string_view name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw Error(ErrorCode::InvalidArgument, "no column " + std::string(name));
  return static_cast<std::size_t>(it - header.begin());
}

const std::string& CsvTable::cell(std::size_t row, std::string_view name) const {
  static const std::string empty;
  const std::size_t c = column(name);
  return c < rows[row].size() ? rows[row][c] : empty;
}

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    if (stripped.front() == '#') {
      table.comments.push_back(trim(std::string_view(stripped).substr(1)));
      continue;
    }
    auto fields = split_record(line, line_no);
    if (table.header.empty()) {
      table.header = std::move(fields);
      continue;
    }
    if (fields.size() > table.header.size()) {
      throw Error(ErrorCode::SyntaxError, "too many fields on line " + std::to_string(line_no));
    }
    fields.resize(table.header.size());
    table.rows.push_back(std::move(fields));
    table.line_numbers.push_back(line_no);
  }
  return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_csv(buffer.str());
}

std::vector<MullineuxCase> expand_mullineux_table(const CsvTable& table, int e_min, int e_max) {
  std::vector<MullineuxCase> out;
  std::string family;
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    if (!table.cell(k, "family").empty()) family = table.cell(k, "family");
    const std::string& condition = table.cell(k, "condition");
    const std::string& mu = table.cell(k, "mu");
    const std::string& dual = table.cell(k, "mu_dual");
    const auto names = template_vars({condition, mu, dual});
    for (int e = e_min; e <= e_max; ++e) {
      for_each_assignment(Bindings{{'e', e}}, names, 0, e, [&](const Bindings& vars) {
        if (!eval_condition(condition, vars)) return;
        MullineuxCase row;
        row.line = table.line_numbers[k];
        row.family = family;
        row.condition = condition;
        row.vars = vars;
        row.mu = instantiate(mu, vars);
        row.mu_dual = instantiate(dual, vars);
        row.note = table.cell(k, "note");
        out.push_back(std::move(row));
      });
    }
  }
  return out;
}

std::vector<DTableRow> expand_d_table(const CsvTable& table, int e_min, int e_max) {
  std::vector<DTableRow> out;
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    const std::string& condition = table.cell(k, "condition");
    for (int e = e_min; e <= e_max; ++e) {
      const Bindings vars{{'e', e}};
      if (!eval_condition(condition, vars)) continue;
      DTableRow row;
      row.line = table.line_numbers[k];
      row.e = e;
      row.lambda = instantiate(table.cell(k, "lambda"), vars);
      row.mu = instantiate(table.cell(k, "mu"), vars);
      row.lambda_dual = instantiate(table.cell(k, "lambda_dual"), vars);
      row.mu_dual = instantiate(table.cell(k, "mu_dual"), vars);
      row.d = poly_cell(table.cell(k, "d"));
      row.d_dual = poly_cell(table.cell(k, "d_dual"));
      row.note = table.cell(k, "note");
      out.push_back(std::move(row));
    }
  }
  return out;
}

std::vector<MullineuxCheck> check_mullineux_table(const std::vector<MullineuxCase>& cases) {
  std::vector<MullineuxCheck> out;
  out.reserve(cases.size());
  for (const auto& row : cases) {
    MullineuxCheck check;
    check.row = row;
    const int e = static_cast<int>(row.vars.at('e'));
    const BlockId block = principal_block(e, 5);
    try {
      check.mu = decode(row.mu, block);
      check.computed = mullineux(check.mu, e);
      check.computed_text = encode_string(check.computed, block);
      check.expected = decode(row.mu_dual, block);
      check.ok = check.computed == check.expected;
    } catch (const Error& err) {
      check.error = err.what();
    }
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace hecke
