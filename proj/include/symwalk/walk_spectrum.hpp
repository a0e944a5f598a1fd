#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include "symwalk/characters.hpp"
#include "symwalk/errors.hpp"
#include "symwalk/exact.hpp"
#include "symwalk/partition.hpp"

namespace symwalk {

/// A finitely supported rational class function on S_n. Absent classes have
/// weight zero. The walk Hamiltonian is H[g,h] = f(g^{-1} h).
class ClassFunction {
 public:
  using WeightMap = std::map<Partition, BigRational, std::greater<>>;

  explicit ClassFunction(int n) : n_(n) {
    if (n < 0) throw DomainError("n must be nonnegative");
  }

  /// Indicator of the class gamma, i.e. the Cayley graph generated by C_gamma.
  static ClassFunction indicator(const Partition& gamma) {
    if (gamma.is_identity())
      throw DegenerateGenerator("the identity class does not generate edges");
    ClassFunction f(gamma.size());
    f.set(gamma, 1);
    return f;
  }

  void set(const Partition& gamma, const BigRational& weight) {
    if (gamma.size() != n_)
      throw SizeMismatch("class " + gamma.to_string() + " is not a partition of " +
                         std::to_string(n_));
    if (weight == 0) weights_.erase(gamma);
    else weights_[gamma] = weight;
  }

  BigRational weight(const Partition& gamma) const {
    auto it = weights_.find(gamma);
    return it == weights_.end() ? BigRational(0) : it->second;
  }

  int n() const noexcept { return n_; }
  const WeightMap& weights() const noexcept { return weights_; }
  bool is_zero() const noexcept { return weights_.empty(); }

  bool is_indicator() const {
    return weights_.size() == 1 && weights_.begin()->second == 1 &&
           !weights_.begin()->first.is_identity();
  }

  bool has_integer_weights() const {
    for (const auto& [gamma, w] : weights_)
      if (!is_integer(w)) return false;
    return true;
  }

  bool has_negative_weights() const {
    for (const auto& [gamma, w] : weights_)
      if (w < 0) return true;
    return false;
  }

  /// Vertex degree d = sum_gamma |C_gamma| f(gamma).
  BigRational degree() const {
    BigRational d = 0;
    for (const auto& [gamma, w] : weights_) d += w * class_size(gamma);
    return d;
  }

 private:
  int n_;
  WeightMap weights_;
};

struct SpectralLine {
  Partition rep;
  BigRational eigenvalue;
  BigInt dim;
};

/// The walk operator diagonalized block by block: every irreducible nu
/// contributes dim(rho_nu)^2 eigenvectors with the common eigenvalue
/// E_nu = (1/dim rho_nu) sum_gamma |C_gamma| f(gamma) chi_nu(gamma).
///
/// Immutable after construction. Also carries double-precision copies of
/// the character table so the time-evaluation routines do no big-number
/// work.
class WalkSpectrum {
 public:
  WalkSpectrum(ClassFunction f, std::shared_ptr<const CharacterTable> table)
      : f_(std::move(f)), table_(std::move(table)) {
    if (table_->n != f_.n())
      throw SizeMismatch("character table and class function disagree on n");
    const std::size_t m = table_->order();
    lines_.reserve(m);
    for (std::size_t v = 0; v < m; ++v) {
      BigRational sum = 0;
      for (const auto& [gamma, w] : f_.weights())
        sum += w * class_size(gamma) * table_->entries[v][table_->index_of(gamma)];
      const BigInt& dim = table_->dimension(v);
      lines_.push_back({table_->partitions[v], sum / dim, dim});
    }
    // Integer-weighted class sums act on each irreducible as an integer
    // scalar; a fractional eigenvalue can only come from a bad character.
    if (f_.has_integer_weights()) {
      for (const auto& line : lines_)
        if (!is_integer(line.eigenvalue))
          throw InternalConsistency("non-integral eigenvalue " +
                                    to_exact_string(line.eigenvalue) + " for rep " +
                                    line.rep.to_string());
    }
    degree_ = f_.degree();

    n_factorial_ = to_double(factorial(f_.n()));
    chi_.assign(m, std::vector<double>(m));
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t c = 0; c < m; ++c) chi_[v][c] = to_double(table_->entries[v][c]);
    sizes_.reserve(m);
    for (const auto& lambda : table_->partitions) {
      exact_sizes_.push_back(class_size(lambda));
      sizes_.push_back(to_double(exact_sizes_.back()));
    }
    for (const auto& line : lines_) eigen_.push_back(to_double(line.eigenvalue));
  }

  int n() const noexcept { return f_.n(); }
  const ClassFunction& generator() const noexcept { return f_; }
  const CharacterTable& table() const noexcept { return *table_; }
  std::shared_ptr<const CharacterTable> shared_table() const noexcept { return table_; }
  const std::vector<SpectralLine>& lines() const noexcept { return lines_; }
  const std::vector<Partition>& partitions() const noexcept { return table_->partitions; }
  const BigRational& degree() const noexcept { return degree_; }

  std::size_t index_of(const Partition& lambda) const { return table_->index_of(lambda); }
  double eigenvalue(std::size_t rep) const { return eigen_[rep]; }
  double chi(std::size_t rep, std::size_t cls) const { return chi_[rep][cls]; }
  double class_size_value(std::size_t cls) const { return sizes_[cls]; }
  const BigInt& class_size_exact(std::size_t cls) const { return exact_sizes_[cls]; }
  double group_order() const noexcept { return n_factorial_; }

 private:
  ClassFunction f_;
  std::shared_ptr<const CharacterTable> table_;
  std::vector<SpectralLine> lines_;
  BigRational degree_;
  double n_factorial_ = 1;
  std::vector<std::vector<double>> chi_;
  std::vector<double> sizes_;
  std::vector<BigInt> exact_sizes_;
  std::vector<double> eigen_;
};

inline WalkSpectrum spectrum(const ClassFunction& f,
                             std::shared_ptr<const CharacterTable> table) {
  return WalkSpectrum(f, std::move(table));
}

inline WalkSpectrum spectrum(const ClassFunction& f,
                             int table_cap = kDefaultCharacterTableCap) {
  return WalkSpectrum(f, std::make_shared<const CharacterTable>(character_table(f.n(), table_cap)));
}

/// c_lambda^* U(t) c_mu with U(t) = exp(itH), where c_lambda is the unit
/// vector uniform on C_lambda:
/// sqrt(|C_lambda| |C_mu|)/n! * sum_nu exp(i t E_nu) chi_nu(lambda) chi_nu(mu).
inline std::complex<double> class_amplitude(const WalkSpectrum& spec, const Partition& lambda,
                                            const Partition& mu, double t) {
  const std::size_t l = spec.index_of(lambda);
  const std::size_t m = spec.index_of(mu);
  std::complex<double> sum = 0;
  for (std::size_t v = 0; v < spec.lines().size(); ++v)
    sum += std::polar(1.0, t * spec.eigenvalue(v)) * (spec.chi(v, l) * spec.chi(v, m));
  return sum * (std::sqrt(spec.class_size_value(l)) * std::sqrt(spec.class_size_value(m)) /
                spec.group_order());
}

struct ClassProbability {
  Partition partition;
  BigInt class_size;
  double probability = 0;
  double per_element = 0;
};

/// Measurement distribution aggregated over conjugacy classes.
struct ClassDistribution {
  int n = 0;
  double t = 0;
  Partition start;
  std::vector<ClassProbability> classes;

  double probability(const Partition& lambda) const {
    for (const auto& c : classes)
      if (c.partition == lambda) return c.probability;
    throw SizeMismatch(lambda.to_string() + " is not a class of this distribution");
  }

  double total() const {
    double sum = 0;
    for (const auto& c : classes) sum += c.probability;
    return sum;
  }
};

namespace detail {

inline ClassDistribution make_distribution(const WalkSpectrum& spec, const Partition& mu,
                                           double t, const std::vector<double>& probs) {
  ClassDistribution out;
  out.n = spec.n();
  out.t = t;
  out.start = mu;
  for (std::size_t c = 0; c < probs.size(); ++c)
    out.classes.push_back({spec.partitions()[c], spec.class_size_exact(c), probs[c],
                           probs[c] / spec.class_size_value(c)});
  return out;
}

}  // namespace detail

/// Quantum walk started in c_mu: probability of each class is
/// |c_lambda^* U(t) c_mu|^2. No renormalization is applied; classes outside
/// the reachable component come out as (numerically) zero.
inline ClassDistribution class_distribution(const WalkSpectrum& spec, const Partition& mu,
                                            double t) {
  const std::size_t m = spec.index_of(mu);
  const std::size_t count = spec.lines().size();
  std::vector<std::complex<double>> weighted(count);
  for (std::size_t v = 0; v < count; ++v)
    weighted[v] = std::polar(1.0, t * spec.eigenvalue(v)) * spec.chi(v, m);

  std::vector<double> probs(count);
  for (std::size_t l = 0; l < count; ++l) {
    std::complex<double> sum = 0;
    for (std::size_t v = 0; v < count; ++v) sum += weighted[v] * spec.chi(v, l);
    sum *= std::sqrt(spec.class_size_value(l)) * std::sqrt(spec.class_size_value(m)) /
           spec.group_order();
    probs[l] = std::norm(sum);
  }
  return detail::make_distribution(spec, mu, t, probs);
}

/// Classical walk M(t) = exp(-tL), L = dI - A, started uniformly on C_mu.
/// L has eigenvalue d - E_nu on block nu, and the mass on class lambda is
/// (|C_lambda|/n!) sum_nu exp(-t(d - E_nu)) chi_nu(lambda) chi_nu(mu).
inline ClassDistribution classical_class_distribution(const WalkSpectrum& spec,
                                                      const Partition& mu, double t) {
  const auto& f = spec.generator();
  if (f.has_negative_weights())
    throw DomainError("classical walk needs nonnegative generator weights");
  for (const auto& [gamma, w] : f.weights())
    if (w != 1) throw DomainError("classical walk supports only 0/1 generator weights");

  const double d = to_double(spec.degree());
  const std::size_t m = spec.index_of(mu);
  const std::size_t count = spec.lines().size();
  std::vector<double> weighted(count);
  for (std::size_t v = 0; v < count; ++v)
    weighted[v] = std::exp(-t * (d - spec.eigenvalue(v))) * spec.chi(v, m);

  std::vector<double> probs(count);
  for (std::size_t l = 0; l < count; ++l) {
    double sum = 0;
    for (std::size_t v = 0; v < count; ++v) sum += weighted[v] * spec.chi(v, l);
    probs[l] = sum * spec.class_size_value(l) / spec.group_order();
  }
  return detail::make_distribution(spec, mu, t, probs);
}

/// Transposition walk from the identity, amplitude on the n-cycle class:
/// (2i sin(tn/2))^{n-1} / sqrt(n * n!).
inline std::complex<double> ncycle_amplitude_closed_form(int n, double t) {
  if (n < 2) throw DomainError("closed form needs n >= 2");
  const double base = 2.0 * std::sin(t * n / 2.0);
  std::complex<double> unit_power = 1;
  for (int k = 0; k < n - 1; ++k) unit_power *= std::complex<double>(0, 1);
  const double norm = std::sqrt(n * to_double(factorial(n)));
  return unit_power * (std::pow(base, n - 1) / norm);
}

/// max_t |c_(n)^* U(t) c_id|^2 = 2^{2n-2} / (n * n!) for the transposition walk.
inline BigRational max_ncycle_probability(int n) {
  if (n < 2) throw DomainError("closed form needs n >= 2");
  BigInt power = 1;
  power <<= 2 * n - 2;
  return BigRational(power, n * factorial(n));
}

}  // namespace symwalk
