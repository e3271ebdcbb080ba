#include "hecke/llt.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "hecke/error.hpp"

namespace hecke {

CanonicalCache::Value CanonicalCache::get_or_compute(int e, const Partition& mu,
                                                     const std::function<FockVector()>& compute) {
  std::promise<Value> promise;
  {
    std::unique_lock lock(mutex_);
    const auto it = entries_.find(Key{e, mu});
    if (it != entries_.end()) {
      auto future = it->second;
      lock.unlock();
      return future.get();
    }
    entries_.emplace(Key{e, mu}, promise.get_future().share());
  }
  try {
    auto value = std::make_shared<const FockVector>(compute());
    {
      std::lock_guard lock(mutex_);
      ++computed_;
    }
    promise.set_value(value);
    return value;
  } catch (...) {
    promise.set_exception(std::current_exception());
    std::lock_guard lock(mutex_);
    entries_.erase(Key{e, mu});
    throw;
  }
}

CanonicalCache::Value CanonicalCache::find(int e, const Partition& mu) const {
  std::lock_guard lock(mutex_);
  const auto it = entries_.find(Key{e, mu});
  if (it == entries_.end()) return nullptr;
  if (it->second.wait_for(std::chrono::seconds(0)) != std::future_status::ready) return nullptr;
  return it->second.get();
}

void CanonicalCache::insert(int e, const Partition& mu, FockVector g) {
  std::promise<Value> promise;
  promise.set_value(std::make_shared<const FockVector>(std::move(g)));
  std::lock_guard lock(mutex_);
  entries_.insert_or_assign(Key{e, mu}, promise.get_future().share());
}

std::size_t CanonicalCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

std::size_t CanonicalCache::computed_count() const {
  std::lock_guard lock(mutex_);
  return computed_;
}

namespace {

constexpr const char* kCacheHeader = "LLTCACHE 1";

std::string encode_poly(const LaurentPoly& p) {
  std::string out;
  for (int k = p.low_degree(); k <= p.high_degree(); ++k) {
    const auto c = p.coeff(k);
    if (c == 0) continue;
    if (!out.empty()) out.push_back(',');
    out += std::to_string(k) + ":" + std::to_string(c);
  }
  return out;
}

LaurentPoly decode_poly(const std::string& text, std::size_t line_no) {
  LaurentPoly p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorCode::CacheFormat, "line " + std::to_string(line_no) + ": bad term '" + item + "'");
    }
    try {
      p += LaurentPoly::monomial(std::stoll(item.substr(colon + 1)), std::stoi(item.substr(0, colon)));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::CacheFormat, "line " + std::to_string(line_no) + ": bad term '" + item + "'");
    }
  }
  return p;
}

void check_canonical_shape(const Partition& mu, const FockVector& g, const std::string& where) {
  if (g.coefficient(mu) != LaurentPoly::constant(1)) {
    throw Error(ErrorCode::CacheFormat, where + ": coefficient of s(mu) is not 1");
  }
  for (const auto& [lambda, c] : g.terms()) {
    if (lambda != mu && !c.in_v_lattice()) {
      throw Error(ErrorCode::CacheFormat, where + ": coefficient of s(" + to_string(lambda) +
                                              ") is not in vZ[v]");
    }
  }
}

}  // namespace

void CanonicalCache::save(const std::filesystem::path& path) const {
  std::vector<std::pair<Key, Value>> ready;
  {
    std::lock_guard lock(mutex_);
    for (const auto& [key, future] : entries_) {
      if (future.wait_for(std::chrono::seconds(0)) == std::future_status::ready) {
        ready.emplace_back(key, future.get());
      }
    }
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::CacheFormat, "cannot write " + path.string());
  out << kCacheHeader << '\n';
  for (const auto& [key, g] : ready) {
    out << key.first << '\t' << key.second.size() << '\t' << to_string(key.second);
    for (const auto& [lambda, c] : g->terms()) out << '\t' << to_string(lambda) << '|' << encode_poly(c);
    out << '\n';
  }
}

void CanonicalCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::CacheFormat, "cannot read " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != kCacheHeader) {
    throw Error(ErrorCode::CacheFormat, path.string() + ": missing '" + kCacheHeader + "' header");
  }
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '\t')) fields.push_back(field);
    const std::string where = path.string() + ":" + std::to_string(line_no);
    if (fields.size() < 4) throw Error(ErrorCode::CacheFormat, where + ": too few fields");
    int e = 0;
    int n = 0;
    Partition mu;
    try {
      e = std::stoi(fields[0]);
      n = std::stoi(fields[1]);
      mu = parse_partition(fields[2]);
    } catch (const std::exception& ex) {
      throw Error(ErrorCode::CacheFormat, where + ": " + ex.what());
    }
    if (mu.size() != n || e < 2) throw Error(ErrorCode::CacheFormat, where + ": inconsistent header fields");
    FockVector g;
    for (std::size_t k = 3; k < fields.size(); ++k) {
      const auto bar = fields[k].find('|');
      if (bar == std::string::npos) throw Error(ErrorCode::CacheFormat, where + ": missing '|'");
      Partition lambda;
      try {
        lambda = parse_partition(fields[k].substr(0, bar));
      } catch (const std::exception& ex) {
        throw Error(ErrorCode::CacheFormat, where + ": " + ex.what());
      }
      if (lambda.size() != n) throw Error(ErrorCode::CacheFormat, where + ": term of wrong size");
      g.add(lambda, decode_poly(fields[k].substr(bar + 1), line_no));
    }
    check_canonical_shape(mu, g, where);
    insert(e, mu, std::move(g));
  }
}

FockVector ladder_vector(const Partition& mu, int e, int r) {
  FockVector a = FockVector::basis(Partition{});
  for (const auto& [residue, count] : ladder_sequence(mu, e)) a = f_divided(a, residue, count, e, r);
  return a;
}

namespace {

// Bar-symmetric polynomial agreeing with c in degrees ≤ 0.
LaurentPoly symmetric_part(const LaurentPoly& c) {
  LaurentPoly beta = LaurentPoly::constant(c.coeff(0));
  for (int k = 1; k <= -c.low_degree(); ++k) {
    const auto ck = c.coeff(-k);
    if (ck == 0) continue;
    beta += LaurentPoly::monomial(ck, k);
    beta += LaurentPoly::monomial(ck, -k);
  }
  return beta;
}

FockVector compute_canonical(const Partition& mu, int e, int r, CanonicalCache& cache) {
  FockVector g = ladder_vector(mu, e, r);
  if (g.coefficient(mu) != LaurentPoly::constant(1)) {
    throw Error(ErrorCode::CorrectionDiverged,
                "ladder vector of " + to_string(mu) + " does not contain s(mu) with coefficient 1");
  }
  const Partition* previous = nullptr;
  Partition last;
  while (true) {
    const Partition* offender = nullptr;
    LaurentPoly offending_coeff;
    for (const auto& [nu, c] : g.terms()) {
      if (nu != mu && !c.in_v_lattice()) {
        offender = &nu;
        offending_coeff = c;
        break;
      }
    }
    if (offender == nullptr) break;
    const Partition nu = *offender;
    if (previous != nullptr && !(nu < last)) {
      throw Error(ErrorCode::CorrectionDiverged,
                  "correction for " + to_string(mu) + " revisited " + to_string(nu));
    }
    if (!is_e_regular(nu, e)) {
      throw Error(ErrorCode::CorrectionDiverged, "correction for " + to_string(mu) +
                                                     " hit non-regular " + to_string(nu));
    }
    const auto beta = symmetric_part(offending_coeff);
    const auto g_nu = canonical_basis_shared(nu, e, r, cache);
    g.add_scaled(*g_nu, -beta);
    last = nu;
    previous = &last;
  }
  return g;
}

}  // namespace

CanonicalCache::Value canonical_basis_shared(const Partition& mu, int e, int r, CanonicalCache& cache) {
  if (!is_e_regular(mu, e)) {
    throw Error(ErrorCode::NotERegular, to_string(mu) + " is not " + std::to_string(e) + "-regular");
  }
  if (r < mu.length()) {
    throw Error(ErrorCode::BeadCountTooSmall, "bead count too small for " + to_string(mu));
  }
  return cache.get_or_compute(e, mu, [&] { return compute_canonical(mu, e, r, cache); });
}

FockVector canonical_basis(const Partition& mu, int e, int r, CanonicalCache& cache) {
  return *canonical_basis_shared(mu, e, r, cache);
}

FockVector canonical_basis(const Partition& mu, int e, CanonicalCache& cache) {
  return canonical_basis(mu, e, default_bead_count(mu.size(), e), cache);
}

LaurentPoly v_decomp(const Partition& lambda, const Partition& mu, int e, CanonicalCache& cache) {
  if (lambda.size() != mu.size()) {
    throw Error(ErrorCode::SizeMismatch, to_string(lambda) + " and " + to_string(mu) + " differ in size");
  }
  return canonical_basis_shared(mu, e, default_bead_count(mu.size(), e), cache)->coefficient(lambda);
}

std::int64_t jc_bound(const Partition& lambda, const Partition& mu, int e, CanonicalCache& cache) {
  return v_decomp(lambda, mu, e, cache).derivative_at_one();
}

std::vector<std::vector<std::int64_t>> DecompositionMatrix::at_v1() const {
  std::vector<std::vector<std::int64_t>> out(rows.size(), std::vector<std::int64_t>(columns.size(), 0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < columns.size(); ++j) out[i][j] = entries[i][j].eval_at_one();
  }
  return out;
}

DecompositionMatrix decomposition_matrix(const BlockId& block, CanonicalCache& cache, int jobs) {
  DecompositionMatrix m;
  m.block = block;
  for (auto& entry : enumerate_block(block)) {
    if (entry.e_regular) m.columns.push_back(entry.partition);
    m.rows.push_back(std::move(entry.partition));
  }
  const int r = block.bead_count();
  std::vector<CanonicalCache::Value> columns(m.columns.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t j = next.fetch_add(1);
      if (j >= m.columns.size()) return;
      try {
        columns[j] = canonical_basis_shared(m.columns[j], block.e, r, cache);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  m.entries.assign(m.rows.size(), std::vector<LaurentPoly>(m.columns.size()));
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    for (std::size_t j = 0; j < m.columns.size(); ++j) {
      m.entries[i][j] = columns[j]->coefficient(m.rows[i]);
    }
  }
  return m;
}

std::vector<std::pair<Partition, LaurentPoly>> expand_in_canonical_basis(FockVector x, int e,
                                                                         CanonicalCache& cache) {
  std::vector<std::pair<Partition, LaurentPoly>> out;
  while (!x.is_zero()) {
    const auto& [nu, a] = *x.terms().begin();
    if (!is_e_regular(nu, e)) {
      throw Error(ErrorCode::ExpansionResidue,
                  "leading term s(" + to_string(nu) + ") is not e-regular");
    }
    const Partition lead = nu;
    const LaurentPoly coeff = a;
    const auto g = canonical_basis_shared(lead, e, default_bead_count(lead.size(), e), cache);
    x.add_scaled(*g, -coeff);
    if (!x.coefficient(lead).is_zero()) {
      throw Error(ErrorCode::ExpansionResidue, "elimination of " + to_string(lead) + " left a residue");
    }
    out.emplace_back(lead, coeff);
  }
  return out;
}

}  // namespace hecke
