#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "symwalk/errors.hpp"
#include "symwalk/exact.hpp"
#include "symwalk/partition.hpp"

namespace symwalk {

inline constexpr int kDefaultCharacterTableCap = 14;

/// Memoized Murnaghan-Nakayama evaluation of irreducible characters of S_n.
///
/// chi_shape(cycles) is expanded by removing a border strip of length
/// cycles[0] from `shape` in every possible way, each contributing
/// (-1)^height * chi_{shape minus strip}(cycles[1:]), where height is the
/// number of rows the strip spans minus one. Cycle parts are consumed
/// largest first.
///
/// Strips are enumerated on the beta-set (first-column hook lengths) of the
/// shape: removing a strip of length r is moving one bead from position b to
/// the free position b - r, and the height equals the number of beads
/// strictly between the two positions.
///
/// The cache is keyed on (remaining shape, remaining cycle list) and is
/// guarded by a mutex, so a single engine may be shared across threads.
class CharacterEngine {
 public:
  BigInt character(const Partition& shape, const Partition& cycles) {
    if (shape.size() != cycles.size())
      throw SizeMismatch("representation " + shape.to_string() + " and class " +
                         cycles.to_string() + " are partitions of different n");
    return evaluate(shape.vector(), cycles.vector());
  }

  std::size_t cache_size() const {
    std::lock_guard lock(mutex_);
    return cache_.size();
  }

 private:
  using Key = std::pair<std::vector<int>, std::vector<int>>;

  BigInt evaluate(const std::vector<int>& shape, const std::vector<int>& cycles) {
    if (shape.empty()) return cycles.empty() ? 1 : 0;
    Key key{shape, cycles};
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }

    const int r = cycles.front();
    const std::vector<int> rest(cycles.begin() + 1, cycles.end());
    const int k = static_cast<int>(shape.size());

    std::vector<int> beads(k);
    for (int i = 0; i < k; ++i) beads[i] = shape[i] + (k - 1 - i);

    BigInt total = 0;
    for (int i = 0; i < k; ++i) {
      const int from = beads[i];
      const int to = from - r;
      if (to < 0) continue;
      if (std::find(beads.begin(), beads.end(), to) != beads.end()) continue;
      int height = 0;
      for (int b : beads)
        if (b > to && b < from) ++height;

      std::vector<int> moved = beads;
      moved[i] = to;
      std::sort(moved.begin(), moved.end(), std::greater<>());
      std::vector<int> smaller;
      for (int j = 0; j < k; ++j) {
        const int part = moved[j] - (k - 1 - j);
        if (part > 0) smaller.push_back(part);
      }
      BigInt term = evaluate(smaller, rest);
      if (height % 2) total -= term;
      else total += term;
    }

    std::lock_guard lock(mutex_);
    cache_.emplace(std::move(key), total);
    return total;
  }

  mutable std::mutex mutex_;
  std::map<Key, BigInt> cache_;
};

/// Process-wide engine used by the free functions below.
inline CharacterEngine& shared_character_engine() {
  static CharacterEngine engine;
  return engine;
}

/// chi_nu(lambda): the irreducible character indexed by `nu` evaluated on
/// the conjugacy class with cycle type `lambda`.
inline BigInt character(const Partition& nu, const Partition& lambda) {
  return shared_character_engine().character(nu, lambda);
}

/// dim(rho_nu), computed as chi_nu(identity).
inline BigInt dimension(const Partition& nu) {
  return character(nu, Partition::identity(nu.size()));
}

/// dim(rho_nu) by the hook-length formula n! / prod(hook lengths).
inline BigInt hook_length_dimension(const Partition& nu) {
  const Partition conj = transpose(nu);
  BigInt hooks = 1;
  for (std::size_t i = 0; i < nu.length(); ++i)
    for (int j = 0; j < nu[i]; ++j)
      hooks *= (nu[i] - j - 1) + (conj[j] - static_cast<int>(i) - 1) + 1;
  return factorial(nu.size()) / hooks;
}

/// Sum over rows of C(nu_j, 2) - C(nu'_j, 2). This is the content sum of
/// the diagram and the eigenvalue of the transposition walk on block nu.
inline BigInt content_sum(const Partition& nu) {
  const Partition conj = transpose(nu);
  BigInt total = 0;
  for (int part : nu.parts()) total += binomial(part, 2);
  for (int part : conj.parts()) total -= binomial(part, 2);
  return total;
}

/// Closed form for chi_nu at a transposition:
/// dim(rho_nu) / C(n,2) * sum_j (C(nu_j,2) - C(nu'_j,2)).
inline BigRational character_transposition(const Partition& nu) {
  const int n = nu.size();
  if (n < 2) throw DomainError("S_" + std::to_string(n) + " has no transpositions");
  return BigRational(hook_length_dimension(nu) * content_sum(nu), binomial(n, 2));
}

/// Closed form for the hook (k,1,...,1) at the p-cycle class (p,1,...,1),
/// valid for 1 <= p <= n-1:
/// C(n-p-1, k-p-1) + (-1)^{p+1} C(n-p-1, k-1).
inline BigInt character_hook_pcycle(int k, int p, int n) {
  if (k < 1 || k > n) throw DomainError("hook arm k out of range [1, n]");
  if (p < 1 || p > n - 1) throw DomainError("cycle length p out of range [1, n-1]");
  BigInt value = binomial(n - p - 1, k - p - 1);
  if (p % 2 == 1) value += binomial(n - p - 1, k - 1);
  else value -= binomial(n - p - 1, k - 1);
  return value;
}

/// Closed form for chi_nu at the full cycle (n): (-1)^{n-k} for the hook
/// (k,1,...,1) and 0 for every other shape.
inline BigInt character_full_cycle(const Partition& nu) {
  if (nu.empty()) return 1;
  if (!nu.is_hook()) return 0;
  return (nu.size() - nu[0]) % 2 == 0 ? 1 : -1;
}

/// Full character table of S_n. Rows are representations, columns are
/// classes, both in the canonical (lexicographically descending) partition
/// order, so the identity class is the last column.
struct CharacterTable {
  int n = 0;
  std::vector<Partition> partitions;
  std::vector<std::vector<BigInt>> entries;

  std::size_t order() const noexcept { return partitions.size(); }

  std::size_t index_of(const Partition& lambda) const {
    auto it = std::lower_bound(partitions.begin(), partitions.end(), lambda,
                               std::greater<>());
    if (it == partitions.end() || *it != lambda)
      throw SizeMismatch(lambda.to_string() + " is not a partition of " +
                         std::to_string(n));
    return static_cast<std::size_t>(it - partitions.begin());
  }

  const BigInt& at(const Partition& nu, const Partition& lambda) const {
    return entries[index_of(nu)][index_of(lambda)];
  }

  const BigInt& dimension(std::size_t rep) const { return entries[rep].back(); }
};

inline CharacterTable character_table(int n, int cap = kDefaultCharacterTableCap) {
  if (n < 0) throw DomainError("n must be nonnegative");
  if (n > cap)
    throw ResourceLimit("character table for n=" + std::to_string(n) +
                        " exceeds cap " + std::to_string(cap));
  CharacterTable table;
  table.n = n;
  table.partitions = enumerate_partitions(n);
  auto& engine = shared_character_engine();
  table.entries.reserve(table.order());
  for (const auto& nu : table.partitions) {
    std::vector<BigInt> row;
    row.reserve(table.order());
    for (const auto& lambda : table.partitions) row.push_back(engine.character(nu, lambda));
    table.entries.push_back(std::move(row));
  }
  return table;
}

}  // namespace symwalk
