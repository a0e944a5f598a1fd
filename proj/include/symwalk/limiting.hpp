#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "symwalk/characters.hpp"
#include "symwalk/errors.hpp"
#include "symwalk/exact.hpp"
#include "symwalk/partition.hpp"
#include "symwalk/walk_spectrum.hpp"

namespace symwalk {

/// Representations grouped by exactly equal eigenvalue E_nu. Only pairs
/// (nu, eta) inside one group survive the time average of P_t.
struct EigenGroups {
  int n = 0;
  std::vector<std::vector<Partition>> groups;
  std::vector<BigRational> eigenvalues;  // one per group
  std::vector<std::vector<std::size_t>> indices;  // rows of the character table

  std::size_t group_of(const Partition& nu) const {
    for (std::size_t g = 0; g < groups.size(); ++g)
      for (const auto& member : groups[g])
        if (member == nu) return g;
    throw SizeMismatch(nu.to_string() + " is not a partition of " + std::to_string(n));
  }
};

/// Groups are listed in order of their first member in canonical partition
/// order; members keep canonical order.
inline EigenGroups eigenvalue_groups(const WalkSpectrum& spec) {
  EigenGroups out;
  out.n = spec.n();
  std::map<BigRational, std::size_t> slot;
  for (std::size_t v = 0; v < spec.lines().size(); ++v) {
    const auto& line = spec.lines()[v];
    auto [it, inserted] = slot.try_emplace(line.eigenvalue, out.groups.size());
    if (inserted) {
      out.groups.emplace_back();
      out.indices.emplace_back();
      out.eigenvalues.push_back(line.eigenvalue);
    }
    out.groups[it->second].push_back(line.rep);
    out.indices[it->second].push_back(v);
  }
  return out;
}

struct ExactClassProbability {
  Partition partition;
  BigInt class_size;
  BigRational probability;
  BigRational per_element;
};

/// Exact limiting (time-averaged) distribution over conjugacy classes.
struct ExactDistribution {
  int n = 0;
  Partition start;
  std::vector<ExactClassProbability> classes;

  const ExactClassProbability& entry(const Partition& lambda) const {
    for (const auto& c : classes)
      if (c.partition == lambda) return c;
    throw SizeMismatch(lambda.to_string() + " is not a class of this distribution");
  }
  const BigRational& probability(const Partition& lambda) const {
    return entry(lambda).probability;
  }
  const BigRational& per_element(const Partition& lambda) const {
    return entry(lambda).per_element;
  }

  BigRational total() const {
    BigRational sum = 0;
    for (const auto& c : classes) sum += c.probability;
    return sum;
  }
};

/// Limit of the time average of |c_lambda^* U(t) c_mu|^2:
/// |C_lambda||C_mu|/(n!)^2 * sum over groups G of (sum_{nu in G} chi_nu(lambda) chi_nu(mu))^2.
inline ExactDistribution limiting_class_distribution(const WalkSpectrum& spec,
                                                     const Partition& mu) {
  const auto& table = spec.table();
  const EigenGroups groups = eigenvalue_groups(spec);
  const std::size_t m = table.index_of(mu);
  const BigInt order = factorial(spec.n());
  const BigInt order_squared = order * order;
  const BigInt& start_size = spec.class_size_exact(m);

  ExactDistribution out;
  out.n = spec.n();
  out.start = mu;
  for (std::size_t l = 0; l < table.order(); ++l) {
    BigInt acc = 0;
    for (const auto& members : groups.indices) {
      BigInt s = 0;
      for (std::size_t v : members) s += table.entries[v][l] * table.entries[v][m];
      acc += s * s;
    }
    const BigInt& size = spec.class_size_exact(l);
    BigRational probability(size * start_size * acc, order_squared);
    BigRational per_element(start_size * acc, order_squared);
    out.classes.push_back({table.partitions[l], size, probability, per_element});
  }
  return out;
}

/// Which case of the closed-form n-cycle table applies to (n, p).
enum class TableRow : int {
  even_p_low = 1,        // p even, 2 <= p <= ceil(n/2)
  even_n_even_p_high = 2,  // n even, p even, n/2 + 1 <= p <= n - 1
  odd_n_even_p_high = 3,   // n odd, p even, (n+1)/2 + 1 <= p <= n - 1
  even_n_full_cycle = 4,   // n even, p = n
  even_n_odd_p = 5,        // n even, p odd: walk confined to A_n
  odd_p_low = 6,           // n odd, p odd, 2 <= p <= (n+1)/2
  odd_p_high = 7,          // n odd, p odd, (n+1)/2 + 1 <= p <= n - 1
  odd_n_full_cycle = 8,    // n odd, p = n
};

inline std::string row_label(TableRow row) {
  switch (row) {
    case TableRow::even_p_low: return "n any, p even, 2<=p<=ceil(n/2)";
    case TableRow::even_n_even_p_high: return "n even, p even, n/2+1<=p<=n-1";
    case TableRow::odd_n_even_p_high: return "n odd, p even, (n+1)/2+1<=p<=n-1";
    case TableRow::even_n_full_cycle: return "n even, p even, p=n";
    case TableRow::even_n_odd_p: return "n even, p odd";
    case TableRow::odd_p_low: return "n odd, p odd, 2<=p<=(n+1)/2";
    case TableRow::odd_p_high: return "n odd, p odd, (n+1)/2+1<=p<=n-1";
    case TableRow::odd_n_full_cycle: return "n odd, p odd, p=n";
  }
  return "unknown";
}

struct TableEntry {
  TableRow row;
  BigRational value;
};

inline TableRow table_row(int n, int p) {
  if (p < 2 || p > n) throw DomainError("p must satisfy 2 <= p <= n");
  const bool n_even = n % 2 == 0;
  if (p % 2 == 0) {
    if (p <= (n + 1) / 2) return TableRow::even_p_low;
    if (p == n) return TableRow::even_n_full_cycle;
    return n_even ? TableRow::even_n_even_p_high : TableRow::odd_n_even_p_high;
  }
  if (n_even) return TableRow::even_n_odd_p;
  if (p == n) return TableRow::odd_n_full_cycle;
  if (p <= (n + 1) / 2) return TableRow::odd_p_low;
  return TableRow::odd_p_high;
}

/// Closed-form average probability of reaching each individual n-cycle from
/// the identity for the walk generated by all p-cycles. Computed purely from
/// binomial sums, independently of the eigenvalue-grouping engine.
inline TableEntry table_ncycle_probability(int n, int p) {
  const TableRow row = table_row(n, p);
  const BigInt order = factorial(n);
  const BigInt order_squared = order * order;
  auto squares_up_to = [n](int m) {
    BigInt sum = 0;
    for (int k = 1; k <= m; ++k) {
      const BigInt c = binomial(n - 1, k - 1);
      sum += c * c;
    }
    return sum;
  };
  const BigInt central = binomial(2 * n - 2, n - 1);

  BigInt numerator = 0;
  switch (row) {
    case TableRow::even_p_low:
    case TableRow::even_n_full_cycle:
      numerator = central;
      break;
    case TableRow::even_n_even_p_high:
      numerator = 2 * squares_up_to(n - p);
      break;
    case TableRow::odd_n_even_p_high: {
      const BigInt c = binomial(n - 2, p - 1);
      numerator = 2 * squares_up_to(n - p) + 4 * c * c;
      break;
    }
    case TableRow::even_n_odd_p:
      numerator = 0;
      break;
    case TableRow::odd_p_low:
    case TableRow::odd_n_full_cycle: {
      const BigInt middle = binomial(n - 1, (n - 1) / 2);
      numerator = 2 * central - middle * middle;
      break;
    }
    case TableRow::odd_p_high: {
      const BigInt c = binomial(n - 2, p - 1);
      numerator = 4 * squares_up_to(n - p) + 4 * c * c;
      break;
    }
  }
  return {row, BigRational(numerator, order_squared)};
}

enum class Support { symmetric_group, alternating_group };

/// Exact total variation distance from the uniform distribution on the
/// support, computed classwise: both distributions are constant on classes.
inline BigRational tv_distance(const ExactDistribution& dist, Support support) {
  const int n = dist.n;
  BigInt support_size = factorial(n);
  const bool alternating = support == Support::alternating_group && n >= 2;
  if (alternating) {
    support_size /= 2;
    for (const auto& c : dist.classes)
      if (!c.partition.is_even_class() && c.probability != 0)
        throw SupportMismatch("odd class " + c.partition.to_string() +
                              " carries probability; distribution is not on A_n");
  }
  BigRational sum = 0;
  for (const auto& c : dist.classes) {
    const bool in_support = !alternating || c.partition.is_even_class();
    const BigRational uniform =
        in_support ? BigRational(c.class_size, support_size) : BigRational(0);
    const BigRational diff = c.probability - uniform;
    sum += diff < 0 ? BigRational(-diff) : diff;
  }
  return sum / 2;
}

/// 1/n - C(2n-2, n-1)/(n n!): n-cycle-only lower bound on the TV distance
/// of the limiting distribution from uniform(S_n), for even p.
inline BigRational symmetric_tv_lower_bound(int n) {
  return BigRational(1, n) - BigRational(binomial(2 * n - 2, n - 1), n * factorial(n));
}

/// 2/n - 2 C(2n-2, n-1)/(n n!) + C(n-1, (n-1)/2)^2/(n n!): n-cycle-only
/// lower bound against uniform(A_n), for odd n and odd p.
inline BigRational alternating_tv_lower_bound(int n) {
  const BigInt denom = n * factorial(n);
  const BigInt middle = binomial(n - 1, (n - 1) / 2);
  return BigRational(2, n) - BigRational(2 * binomial(2 * n - 2, n - 1), denom) +
         BigRational(middle * middle, denom);
}

/// 1/n - 2^{2n-2}/(n n!): bound on ||P_t - uniform|| valid at every t for
/// the transposition walk.
inline BigRational pointwise_tv_lower_bound(int n) {
  return BigRational(1, n) - max_ncycle_probability(n);
}

/// Midpoint-rule estimate of (1/T) * integral_0^T P_t dt.
inline ClassDistribution time_averaged_distribution(const WalkSpectrum& spec,
                                                    const Partition& mu, double T,
                                                    int samples) {
  if (!(T > 0)) throw DomainError("averaging window T must be positive");
  if (samples < 1) throw DomainError("need at least one sample");
  const double step = T / samples;
  ClassDistribution acc = class_distribution(spec, mu, 0.5 * step);
  for (int j = 1; j < samples; ++j) {
    const ClassDistribution d = class_distribution(spec, mu, (j + 0.5) * step);
    for (std::size_t c = 0; c < acc.classes.size(); ++c)
      acc.classes[c].probability += d.classes[c].probability;
  }
  for (std::size_t c = 0; c < acc.classes.size(); ++c) {
    acc.classes[c].probability /= samples;
    acc.classes[c].per_element =
        acc.classes[c].probability / spec.class_size_value(c);
  }
  acc.t = T;
  return acc;
}

}  // namespace symwalk
