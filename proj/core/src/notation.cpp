#include "hecke/notation.hpp"

#include <algorithm>
#include <cctype>

#include "hecke/error.hpp"

namespace hecke {

namespace {

class BracketParser {
 public:
  explicit BracketParser(std::string_view text) : text_(text) {}

  BracketExpr parse() {
    BracketExpr expr;
    expect('<');
    skip_ws();
    if (peek() != '|' && peek() != '>') {
      parse_entry(expr);
      while (accept(',')) parse_entry(expr);
    }
    if (accept('|')) {
      std::vector<int> counts{read_int()};
      while (accept(',')) counts.push_back(read_int());
      expr.bead_counts = std::move(counts);
    }
    expect('>');
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");

    std::sort(expr.entries.begin(), expr.entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i + 1 < expr.entries.size(); ++i) {
      if (expr.entries[i].first == expr.entries[i + 1].first) {
        throw ParseError(ErrorCode::DuplicateRunner, entry_offsets_.back(),
                         "runner " + std::to_string(expr.entries[i].first) + " appears twice");
      }
    }
    if (expr.bead_counts) {
      for (const auto& [runner, part] : expr.entries) {
        if (runner >= static_cast<int>(expr.bead_counts->size())) {
          throw ParseError(ErrorCode::RunnerOutOfRange, 0,
                           "runner " + std::to_string(runner) + " exceeds the " +
                               std::to_string(expr.bead_counts->size()) + " listed bead counts");
        }
      }
    }
    return expr;
  }

 private:
  void parse_entry(BracketExpr& expr) {
    skip_ws();
    entry_offsets_.push_back(pos_);
    const int runner = read_int();
    Partition part{1};
    if (accept('_')) {
      skip_ws();
      if (peek() == '{') {
        ++pos_;
        const std::size_t start = pos_;
        std::vector<int> parts;
        read_part(parts);
        while (accept(',')) read_part(parts);
        expect('}');
        part = make_subscript(std::move(parts), start);
      } else {
        const std::size_t start = pos_;
        const int value = read_int();
        skip_ws();
        if (peek() == '^') fail("exponent in a subscript requires braces");
        part = make_subscript({value}, start);
      }
    }
    expr.entries.emplace_back(runner, std::move(part));
  }

  Partition make_subscript(std::vector<int> parts, std::size_t offset) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 1 || (i + 1 < parts.size() && parts[i] < parts[i + 1])) {
        throw ParseError(ErrorCode::NonPartitionSubscript, offset,
                         "subscript is not a partition");
      }
    }
    return Partition(std::move(parts));
  }

  void read_part(std::vector<int>& parts) {
    const int value = read_int();
    int mult = 1;
    if (accept('^')) mult = read_int();
    for (int k = 0; k < mult; ++k) parts.push_back(value);
  }

  int read_int() {
    skip_ws();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return static_cast<int>(value);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(ErrorCode::SyntaxError, pos_, msg + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::size_t> entry_offsets_;
};

}  // namespace

BracketExpr parse_bracket(std::string_view text) { return BracketParser(text).parse(); }

std::string to_string(const BracketExpr& expr) {
  std::string out = "<";
  bool first = true;
  for (const auto& [runner, part] : expr.entries) {
    if (part.empty()) continue;
    if (!first) out.push_back(',');
    first = false;
    out += std::to_string(runner);
    if (part == Partition{1}) continue;
    if (part.length() == 1) {
      out += "_" + std::to_string(part.first());
    } else {
      out += "_{" + to_compact_string(part) + "}";
    }
  }
  if (expr.bead_counts) {
    out.push_back('|');
    for (std::size_t i = 0; i < expr.bead_counts->size(); ++i) {
      if (i > 0) out.push_back(',');
      out += std::to_string((*expr.bead_counts)[i]);
    }
  }
  out.push_back('>');
  return out;
}

Partition decode(const BracketExpr& expr, const BlockId& block) {
  if (expr.bead_counts && *expr.bead_counts != block.core_beads) {
    throw Error(ErrorCode::BlockMismatch, "bead counts in " + to_string(expr) +
                                              " disagree with block " + to_string(block));
  }
  std::vector<Partition> runner_parts(static_cast<std::size_t>(block.e));
  for (const auto& [runner, part] : expr.entries) {
    if (runner < 0 || runner >= block.e) {
      throw Error(ErrorCode::BlockMismatch,
                  "runner " + std::to_string(runner) + " does not exist for e=" + std::to_string(block.e));
    }
    runner_parts[static_cast<std::size_t>(runner)] = part;
  }
  auto lambda = from_runner_partitions(block, runner_parts);
  const int weight = e_core_and_weight(lambda, block.e).second;
  if (weight != block.weight) {
    throw Error(ErrorCode::WeightMismatch, to_string(expr) + " has weight " + std::to_string(weight) +
                                               ", block has weight " + std::to_string(block.weight));
  }
  return lambda;
}

Partition decode(std::string_view text, const BlockId& block) { return decode(parse_bracket(text), block); }

BracketExpr encode(const Partition& lambda, const BlockId& block) {
  const auto parts = runner_partitions(lambda, block);
  BracketExpr expr;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!parts[i].empty()) expr.entries.emplace_back(static_cast<int>(i), parts[i]);
  }
  return expr;
}

std::string encode_string(const Partition& lambda, const BlockId& block) {
  return to_string(encode(lambda, block));
}

Partition parse_partition_arg(std::string_view text, const std::optional<BlockId>& block) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first < text.size() && text[first] == '<') {
    if (!block) {
      throw Error(ErrorCode::InvalidArgument, "bracket notation needs a block context");
    }
    return decode(text, *block);
  }
  return parse_partition(text);
}

}  // namespace hecke
