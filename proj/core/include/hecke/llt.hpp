#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "hecke/abacus.hpp"
#include "hecke/fock.hpp"
#include "hecke/laurent.hpp"
#include "hecke/partition.hpp"

namespace hecke {

/// Memo table (e, μ) → G(μ), shared across threads.
///
/// Each key is computed at most once: the first requester computes, later
/// requesters block on the same shared future. Recursive requests from inside
/// a computation are fine since the dependency graph follows dominance and is
/// acyclic.
class CanonicalCache {
 public:
  using Value = std::shared_ptr<const FockVector>;
  using Key = std::pair<int, Partition>;

  CanonicalCache() = default;
  CanonicalCache(const CanonicalCache&) = delete;
  CanonicalCache& operator=(const CanonicalCache&) = delete;

  Value get_or_compute(int e, const Partition& mu, const std::function<FockVector()>& compute);
  /// Null if absent or still being computed.
  Value find(int e, const Partition& mu) const;
  void insert(int e, const Partition& mu, FockVector g);
  std::size_t size() const;
  /// Number of G(μ) computed by this cache instance (loads excluded).
  std::size_t computed_count() const;

  /// Versioned text format, one record per line:
  ///   LLTCACHE 1
  ///   <e>\t<n>\t<mu>\t<lambda>|<exp>:<coeff>,...\t...
  void save(const std::filesystem::path& path) const;
  /// Loads records, validating G(μ) ≡ s(μ) mod vL; throws CacheFormat.
  void load(const std::filesystem::path& path);

 private:
  mutable std::mutex mutex_;
  std::map<Key, std::shared_future<Value>> entries_;
  std::size_t computed_ = 0;
};

/// G(μ) via the LLT algorithm with the default bead count for |μ|.
FockVector canonical_basis(const Partition& mu, int e, CanonicalCache& cache);
/// Same with an explicit bead count r ≥ number of parts; the result does not depend on r.
FockVector canonical_basis(const Partition& mu, int e, int r, CanonicalCache& cache);
CanonicalCache::Value canonical_basis_shared(const Partition& mu, int e, int r, CanonicalCache& cache);

/// LLT first approximation A(μ) along the ladder sequence.
FockVector ladder_vector(const Partition& mu, int e, int r);

/// d_{λμ}(v), the coefficient of s(λ) in G(μ).
LaurentPoly v_decomp(const Partition& lambda, const Partition& mu, int e, CanonicalCache& cache);

/// J_C(λ, μ) = d'_{λμ}(1).
std::int64_t jc_bound(const Partition& lambda, const Partition& mu, int e, CanonicalCache& cache);

struct DecompositionMatrix {
  BlockId block;
  std::vector<Partition> rows;     ///< every partition of the block
  std::vector<Partition> columns;  ///< e-regular partitions
  std::vector<std::vector<LaurentPoly>> entries;  ///< entries[row][col] = d_{λμ}(v)

  std::vector<std::vector<std::int64_t>> at_v1() const;
};

/// v-decomposition matrix of a block; columns are computed on `jobs` threads.
DecompositionMatrix decomposition_matrix(const BlockId& block, CanonicalCache& cache, int jobs = 1);

/// Expands x (a combination of canonical basis vectors of a block) as
/// Σ a_ν G(ν) by dominance-descending elimination; throws ExpansionResidue
/// when a leftover term is not e-regular.
std::vector<std::pair<Partition, LaurentPoly>> expand_in_canonical_basis(FockVector x, int e,
                                                                         CanonicalCache& cache);

}  // namespace hecke
