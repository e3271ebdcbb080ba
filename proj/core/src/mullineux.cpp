#include "hecke/mullineux.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hecke/branching.hpp"
#include "hecke/error.hpp"

namespace hecke {

std::pair<int, Partition> strip_e_rim(const Partition& lambda, int e) {
  const auto& parts = lambda.parts();
  const int rows = lambda.length();
  std::vector<int> removed(static_cast<std::size_t>(rows), 0);
  int total = 0;
  int in_segment = 0;
  int i = 0;
  int col = rows > 0 ? parts[0] : 0;
  while (i < rows) {
    ++removed[static_cast<std::size_t>(i)];
    ++total;
    const int floor = std::max(lambda[static_cast<std::size_t>(i + 1)], 1);
    if (++in_segment == e) {
      // Segment complete: continue from the end of the next row.
      in_segment = 0;
      ++i;
      if (i < rows) col = parts[static_cast<std::size_t>(i)];
      continue;
    }
    if (col > floor) {
      --col;
    } else if (i + 1 < rows) {
      ++i;  // col == lambda_{i+1}, the end of the next row
    } else {
      break;
    }
  }
  std::vector<int> rest(parts.begin(), parts.end());
  for (int j = 0; j < rows; ++j) rest[static_cast<std::size_t>(j)] -= removed[static_cast<std::size_t>(j)];
  return {total, Partition::from_parts_trimmed(std::move(rest))};
}

MullineuxSymbol mullineux_symbol(const Partition& lambda, int e) {
  MullineuxSymbol symbol;
  Partition current = lambda;
  while (!current.empty()) {
    auto [a, rest] = strip_e_rim(current, e);
    symbol.columns.emplace_back(a, current.length());
    current = std::move(rest);
  }
  return symbol;
}

namespace {

// All e-regular λ with `rows` parts whose e-rim has `a` nodes and leaves `inner`.
std::vector<Partition> rim_extensions(const Partition& inner, int a, int rows, int e) {
  std::vector<Partition> found;
  if (inner.length() > rows) return found;
  std::vector<int> parts(static_cast<std::size_t>(rows), 0);
  const int target = inner.size() + a;
  std::function<void(int, int)> rec = [&](int j, int sum) {
    if (j == rows) {
      if (sum != target) return;
      Partition candidate(parts);
      if (!is_e_regular(candidate, e)) return;
      const auto [len, rest] = strip_e_rim(candidate, e);
      if (len == a && rest == inner) found.push_back(std::move(candidate));
      return;
    }
    const int lo = std::max(inner[static_cast<std::size_t>(j)], 1);
    int hi = j == 0 ? inner[0] + a : std::min(parts[static_cast<std::size_t>(j - 1)],
                                               inner[static_cast<std::size_t>(j - 1)] + 1);
    // Remaining rows need at least one node each beyond the inner shape.
    hi = std::min(hi, target - sum - (rows - j - 1));
    for (int v = lo; v <= hi; ++v) {
      parts[static_cast<std::size_t>(j)] = v;
      rec(j + 1, sum + v);
    }
  };
  rec(0, 0);
  return found;
}

}  // namespace

Partition from_symbol(const MullineuxSymbol& symbol, int e) {
  Partition current;
  for (auto it = symbol.columns.rbegin(); it != symbol.columns.rend(); ++it) {
    auto found = rim_extensions(current, it->first, it->second, e);
    if (found.size() != 1) {
      throw Error(ErrorCode::SymbolMismatch, "column (" + std::to_string(it->first) + "," +
                                                 std::to_string(it->second) + ") over " + to_string(current) +
                                                 " has " + std::to_string(found.size()) + " preimages");
    }
    current = std::move(found.front());
  }
  return current;
}

Partition mullineux(const Partition& lambda, int e) {
  if (!is_e_regular(lambda, e)) throw Error(ErrorCode::NotERegular, to_string(lambda));
  auto symbol = mullineux_symbol(lambda, e);
  for (auto& [a, r] : symbol.columns) r = a - r + (a % e != 0 ? 1 : 0);
  return from_symbol(symbol, e);
}

Partition mullineux_kleshchev(const Partition& lambda, int e) {
  if (!is_e_regular(lambda, e)) throw Error(ErrorCode::NotERegular, to_string(lambda));
  // A multiple of e as bead count makes runner index and residue coincide.
  const int r = e * (lambda.size() / e + 1);
  std::vector<int> path;
  Partition current = lambda;
  while (!current.empty()) {
    bool moved = false;
    for (int i = 0; i < e && !moved; ++i) {
      if (auto next = remove_good(current, e, r, i)) {
        path.push_back(i);
        current = std::move(*next);
        moved = true;
      }
    }
    if (!moved) throw Error(ErrorCode::InvalidArgument, "no good node in " + to_string(current));
  }
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    auto next = add_good(current, e, r, (e - *it) % e);
    if (!next) throw Error(ErrorCode::InvalidArgument, "no cogood node in " + to_string(current));
    current = std::move(*next);
  }
  return current;
}

std::string to_string(const MullineuxSymbol& symbol) {
  std::ostringstream top;
  std::ostringstream bottom;
  for (std::size_t k = 0; k < symbol.columns.size(); ++k) {
    if (k) {
      top << ' ';
      bottom << ' ';
    }
    top << symbol.columns[k].first;
    bottom << symbol.columns[k].second;
  }
  return top.str() + " / " + bottom.str();
}

}  // namespace hecke
