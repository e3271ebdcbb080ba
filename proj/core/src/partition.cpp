#include "hecke/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "hecke/error.hpp"

namespace hecke {

namespace {

void validate(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) {
      throw Error(ErrorCode::InvalidPartition, "parts must be positive");
    }
    if (i + 1 < parts.size() && parts[i] < parts[i + 1]) {
      throw Error(ErrorCode::InvalidPartition, "parts must be weakly decreasing");
    }
  }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) { validate(parts_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(parts_); }

Partition Partition::from_parts_trimmed(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.first()), 0);
  for (int part : lambda.parts()) {
    for (int c = 0; c < part; ++c) ++out[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(out));
}

Dominance dominance_cmp(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw Error(ErrorCode::SizeMismatch,
                "dominance needs equal sizes: " + to_string(lambda) + " vs " + to_string(mu));
  }
  bool some_greater = false;
  bool some_less = false;
  int sum_l = 0;
  int sum_m = 0;
  const auto len = static_cast<std::size_t>(std::max(lambda.length(), mu.length()));
  for (std::size_t i = 0; i < len; ++i) {
    sum_l += lambda[i];
    sum_m += mu[i];
    if (sum_l > sum_m) some_greater = true;
    if (sum_l < sum_m) some_less = true;
  }
  if (some_greater && some_less) return Dominance::Incomparable;
  if (some_greater) return Dominance::Greater;
  if (some_less) return Dominance::Less;
  return Dominance::Equal;
}

bool dominates(const Partition& lambda, const Partition& mu) {
  const auto c = dominance_cmp(lambda, mu);
  return c == Dominance::Greater || c == Dominance::Equal;
}

bool is_e_regular(const Partition& lambda, int e) {
  const auto parts = lambda.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (static_cast<int>(j - i) >= e) return false;
    i = j;
  }
  return true;
}

Partition remove_first_row(const Partition& lambda) {
  if (lambda.empty()) throw Error(ErrorCode::EmptyPartition, "no first row to remove");
  return Partition(std::vector<int>(lambda.vec().begin() + 1, lambda.vec().end()));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Descending lexicographic generation: start at (n), repeatedly take the
  // lexicographic predecessor.
  std::vector<int> cur{n};
  while (true) {
    out.emplace_back(cur);
    // find the rightmost part > 1
    int rem = 0;
    while (!cur.empty() && cur.back() == 1) {
      ++rem;
      cur.pop_back();
    }
    if (cur.empty()) break;
    const int k = --cur.back();
    ++rem;
    while (rem > 0) {
      const int take = std::min(k, rem);
      cur.push_back(take);
      rem -= take;
    }
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty() || s == "-" || s == "()" || s == "0") return {};
  if (s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<int> parts;
  std::size_t pos = 0;
  auto read_int = [&](std::size_t& p) {
    const std::size_t start = p;
    int value = 0;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
      value = value * 10 + (s[p] - '0');
      ++p;
    }
    if (p == start) {
      throw ParseError(ErrorCode::SyntaxError, start, "expected integer in partition '" + s + "'");
    }
    return value;
  };
  while (pos < s.size()) {
    const int part = read_int(pos);
    int mult = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      mult = read_int(pos);
    }
    for (int k = 0; k < mult; ++k) parts.push_back(part);
    if (pos < s.size()) {
      if (s[pos] != ',') {
        throw ParseError(ErrorCode::SyntaxError, pos, "expected ',' in partition '" + s + "'");
      }
      ++pos;
      if (pos == s.size()) {
        throw ParseError(ErrorCode::SyntaxError, pos, "trailing ',' in partition '" + s + "'");
      }
    }
  }
  return Partition::from_parts_trimmed(std::move(parts));
}

std::string to_string(const Partition& lambda) {
  if (lambda.empty()) return "-";
  std::string out;
  for (int part : lambda.parts()) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(part);
  }
  return out;
}

std::string to_compact_string(const Partition& lambda) {
  if (lambda.empty()) return "-";
  std::string out;
  const auto parts = lambda.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!out.empty()) out.push_back(',');
    out += std::to_string(parts[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace hecke
