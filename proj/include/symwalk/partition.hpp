#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symwalk/errors.hpp"
#include "symwalk/exact.hpp"

namespace symwalk {

inline constexpr int kDefaultPartitionCap = 30;

/// An integer partition of n: positive parts in weakly decreasing order.
///
/// Partitions index both the conjugacy classes (as cycle types) and the
/// irreducible representations of S_n. The empty partition is the unique
/// partition of 0.
class Partition {
 public:
  Partition() = default;

  /// Validates that `parts` is already in canonical (descending) form.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw InvalidPartition("parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw InvalidPartition("parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  /// Sorts the parts; zeros are dropped.
  static Partition from_multiset(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  /// The identity class (1,...,1).
  static Partition identity(int n) { return Partition(std::vector<int>(n, 1)); }

  /// The class of p-cycles, (p,1,...,1).
  static Partition cycle_class(int p, int n) {
    if (p < 1 || p > n) throw DomainError("cycle length out of range");
    std::vector<int> parts(1, p);
    parts.resize(n - p + 1, 1);
    return Partition(std::move(parts));
  }

  /// The hook (k,1,...,1); same shape as cycle_class, named for its role
  /// as a representation index.
  static Partition hook(int k, int n) { return cycle_class(k, n); }

  /// Parses the comma-separated form, e.g. "2,1,1". The empty string is the
  /// empty partition.
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) return Partition();
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto comma = text.find(',', pos);
      const auto token =
          text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
      int value = 0;
      const auto* first = token.data();
      const auto* last = token.data() + token.size();
      const auto [ptr, ec] = std::from_chars(first, last, value);
      if (token.empty() || ec != std::errc() || ptr != last)
        throw InvalidPartition("cannot parse '" + std::string(text) + "'");
      parts.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return Partition(std::move(parts));
  }

  int size() const noexcept { return n_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  std::span<const int> parts() const noexcept { return parts_; }
  const std::vector<int>& vector() const noexcept { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  int multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
  }

  bool is_identity() const noexcept {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; });
  }

  /// True for (k,1,...,1), including (n) and (1,...,1).
  bool is_hook() const noexcept {
    return parts_.empty() ||
           std::all_of(parts_.begin() + 1, parts_.end(), [](int p) { return p == 1; });
  }

  /// A cycle type is even iff n minus the number of cycles is even.
  bool is_even_class() const noexcept {
    return (n_ - static_cast<int>(parts_.size())) % 2 == 0;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

  /// Plain lexicographic comparison of the part lists. The canonical
  /// enumeration order is the reverse of this ((n) first).
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

namespace detail {

inline void enumerate_into(int remaining, int max_part, std::vector<int>& prefix,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    enumerate_into(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// All partitions of n in lexicographically descending order:
/// (n), (n-1,1), (n-2,2), (n-2,1,1), ..., (1,...,1).
inline std::vector<Partition> enumerate_partitions(int n, int cap = kDefaultPartitionCap) {
  if (n < 0) throw DomainError("n must be nonnegative");
  if (n > cap)
    throw ResourceLimit("partition enumeration for n=" + std::to_string(n) +
                        " exceeds cap " + std::to_string(cap));
  std::vector<Partition> out;
  std::vector<int> prefix;
  detail::enumerate_into(n, n, prefix, out);
  return out;
}

/// z_lambda = prod_k k^{m_k} m_k!, the order of the centralizer of any
/// element of the class.
inline BigInt centralizer_order(const Partition& lambda) {
  BigInt z = 1;
  std::size_t i = 0;
  const auto parts = lambda.parts();
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const int multiplicity = static_cast<int>(j - i);
    for (int m = 0; m < multiplicity; ++m) z *= parts[i];
    z *= factorial(multiplicity);
    i = j;
  }
  return z;
}

inline BigInt class_size(const Partition& lambda) {
  return factorial(lambda.size()) / centralizer_order(lambda);
}

struct ClassInfo {
  Partition partition;
  BigInt size;
  BigInt centralizer_order;
};

inline ClassInfo class_info(const Partition& lambda) {
  BigInt z = centralizer_order(lambda);
  return {lambda, factorial(lambda.size()) / z, z};
}

/// Conjugate partition: row lengths of the transposed Young diagram.
inline Partition transpose(const Partition& lambda) {
  if (lambda.empty()) return Partition();
  std::vector<int> columns(lambda[0], 0);
  for (int part : lambda.parts())
    for (int c = 0; c < part; ++c) ++columns[c];
  return Partition(std::move(columns));
}

/// Cycle type of a permutation given in one-line notation on {1..n}.
inline Partition cycle_type(std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<char> seen(n, 0);
  for (int image : perm) {
    if (image < 1 || image > n || seen[image - 1])
      throw InvalidPermutation("not a bijection on {1.." + std::to_string(n) + "}");
    seen[image - 1] = 1;
  }
  std::fill(seen.begin(), seen.end(), 0);
  std::vector<int> lengths;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    int length = 0;
    for (int x = start; !seen[x]; x = perm[x] - 1) {
      seen[x] = 1;
      ++length;
    }
    lengths.push_back(length);
  }
  return Partition::from_multiset(std::move(lengths));
}

}  // namespace symwalk
