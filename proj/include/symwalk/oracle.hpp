#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "symwalk/errors.hpp"
#include "symwalk/partition.hpp"

namespace symwalk::oracle {

inline constexpr int kDefaultOracleCap = 6;
inline constexpr int kExtendedOracleCap = 7;

/// One-line notation on {1..n}: perm[i-1] is the image of i.
using Permutation = std::vector<int>;

/// All of S_n in lexicographic order of one-line notation.
inline std::vector<Permutation> all_permutations(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// (g h)(x) = g(h(x)).
inline Permutation compose(const Permutation& g, const Permutation& h) {
  Permutation out(g.size());
  for (std::size_t i = 0; i < h.size(); ++i) out[i] = g[h[i] - 1];
  return out;
}

inline Permutation inverse(const Permutation& g) {
  Permutation out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[g[i] - 1] = static_cast<int>(i) + 1;
  return out;
}

inline std::string one_line(const Permutation& g) {
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i > 0 && g.size() > 9) out += ' ';
    out += std::to_string(g[i]);
  }
  return out;
}

/// Which quotient defines an edge. Right: {g,h} is an edge iff g h^{-1} is
/// in the generating class. Left: iff g^{-1} h is. The two agree for class
/// generators because every permutation is conjugate to its inverse.
enum class EdgeConvention { right_quotient, left_quotient };

struct OracleOptions {
  int cap = kDefaultOracleCap;
  bool allow_extended = false;  // permits n = 7
};

/// Adjacency of Gamma(S_n, C_gamma) over `vertices` (all of S_n). Built by
/// solving the edge relation for h: h = c g (right) or h = g c (left) for
/// each c in C_gamma.
inline Eigen::MatrixXd adjacency_matrix(const std::vector<Permutation>& vertices,
                                        const Partition& gamma,
                                        EdgeConvention convention) {
  const auto count = static_cast<Eigen::Index>(vertices.size());
  std::map<Permutation, Eigen::Index> index;
  std::vector<Permutation> members;
  for (Eigen::Index i = 0; i < count; ++i) {
    index.emplace(vertices[i], i);
    if (cycle_type(vertices[i]) == gamma) members.push_back(vertices[i]);
  }
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(count, count);
  for (Eigen::Index i = 0; i < count; ++i)
    for (const auto& c : members) {
      const Permutation h = convention == EdgeConvention::right_quotient
                                ? compose(c, vertices[i])
                                : compose(vertices[i], c);
      a(i, index.at(h)) = 1;
    }
  return a;
}

/// The literal Cayley graph Gamma(S_n, C_gamma) with a dense symmetric
/// eigendecomposition of its adjacency matrix. Immutable after build.
class DenseWalk {
 public:
  DenseWalk(int n, Partition gamma, EdgeConvention convention)
      : n_(n), gamma_(std::move(gamma)), vertices_(all_permutations(n)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      index_.emplace(vertices_[i], i);
      classes_.push_back(cycle_type(vertices_[i]));
    }
    adjacency_ = adjacency_matrix(vertices_, gamma_, convention);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency_);
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
  }

  int n() const noexcept { return n_; }
  const Partition& generator() const noexcept { return gamma_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<Permutation>& vertices() const noexcept { return vertices_; }
  const Partition& vertex_class(std::size_t i) const { return classes_[i]; }
  std::size_t index_of(const Permutation& g) const { return index_.at(g); }
  const Eigen::MatrixXd& adjacency() const noexcept { return adjacency_; }
  const Eigen::VectorXd& eigenvalues() const noexcept { return eigenvalues_; }
  const Eigen::MatrixXd& eigenvectors() const noexcept { return eigenvectors_; }

  double degree() const { return adjacency_.row(0).sum(); }

 private:
  int n_;
  Partition gamma_;
  std::vector<Permutation> vertices_;
  std::vector<Partition> classes_;
  std::map<Permutation, std::size_t> index_;
  Eigen::MatrixXd adjacency_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
};

inline DenseWalk build_cayley(int n, const Partition& gamma, OracleOptions options = {},
                              EdgeConvention convention = EdgeConvention::right_quotient) {
  if (gamma.size() != n)
    throw SizeMismatch("generator " + gamma.to_string() + " is not a partition of " +
                       std::to_string(n));
  const int cap = options.allow_extended ? std::max(options.cap, kExtendedOracleCap)
                                         : options.cap;
  if (n > cap)
    throw ResourceLimit("dense oracle for n=" + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));
  if (gamma.is_identity())
    throw DegenerateGenerator("the identity class does not generate edges");
  return DenseWalk(n, gamma, convention);
}

inline Eigen::VectorXcd basis_state(const DenseWalk& walk, const Permutation& g) {
  Eigen::VectorXcd s = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(walk.vertex_count()));
  s(static_cast<Eigen::Index>(walk.index_of(g))) = 1;
  return s;
}

/// c_mu: unit vector uniform on the class mu.
inline Eigen::VectorXcd class_state(const DenseWalk& walk, const Partition& mu) {
  const auto count = static_cast<Eigen::Index>(walk.vertex_count());
  Eigen::VectorXcd s = Eigen::VectorXcd::Zero(count);
  double members = 0;
  for (Eigen::Index i = 0; i < count; ++i)
    if (walk.vertex_class(i) == mu) {
      s(i) = 1;
      ++members;
    }
  if (members == 0) throw SizeMismatch(mu.to_string() + " is not a class of S_n");
  return s / std::sqrt(members);
}

/// Uniform probability vector on the class mu.
inline Eigen::VectorXd class_probability_state(const DenseWalk& walk, const Partition& mu) {
  const Eigen::VectorXcd s = class_state(walk, mu);
  return s.cwiseAbs2();
}

/// exp(itA) start, through the eigendecomposition A = V diag(w) V^T.
inline Eigen::VectorXcd evolve_quantum(const DenseWalk& walk, const Eigen::VectorXcd& start,
                                       double t) {
  const auto& v = walk.eigenvectors();
  Eigen::VectorXcd coeffs = v.transpose().cast<std::complex<double>>() * start;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k)
    coeffs(k) *= std::polar(1.0, t * walk.eigenvalues()(k));
  return v.cast<std::complex<double>>() * coeffs;
}

/// exp(-tL) start with L = dI - A.
inline Eigen::VectorXd evolve_classical(const DenseWalk& walk, const Eigen::VectorXd& start,
                                        double t) {
  const auto& v = walk.eigenvectors();
  const double d = walk.degree();
  Eigen::VectorXd coeffs = v.transpose() * start;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k)
    coeffs(k) *= std::exp(-t * (d - walk.eigenvalues()(k)));
  return v * coeffs;
}

/// Exact Cesaro limit of |exp(itA) start|^2: the sum over distinct
/// eigenvalues of |P_k start|^2, where P_k projects onto the eigenspace.
/// Eigenvalues closer than `tolerance` are treated as equal.
inline Eigen::VectorXd cesaro_limit(const DenseWalk& walk, const Eigen::VectorXcd& start,
                                    double tolerance = 1e-6) {
  const auto& w = walk.eigenvalues();
  const auto& v = walk.eigenvectors();
  const Eigen::VectorXcd coeffs = v.transpose().cast<std::complex<double>>() * start;
  Eigen::VectorXd limit = Eigen::VectorXd::Zero(v.rows());
  Eigen::Index begin = 0;
  while (begin < w.size()) {
    Eigen::Index end = begin + 1;
    while (end < w.size() && w(end) - w(begin) < tolerance) ++end;
    Eigen::VectorXcd projected = Eigen::VectorXcd::Zero(v.rows());
    for (Eigen::Index k = begin; k < end; ++k)
      projected += v.col(k).cast<std::complex<double>>() * coeffs(k);
    limit += projected.cwiseAbs2();
    begin = end;
  }
  return limit;
}

/// Per-class totals of a state and how far it is from being constant on
/// each class.
struct ClassAggregate {
  std::vector<Partition> classes;  // canonical order
  std::vector<double> mass;
  std::vector<double> max_deviation;  // max |amp(g) - amp(h)| within the class
  double worst_deviation = 0;

  double mass_of(const Partition& lambda) const {
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (classes[c] == lambda) return mass[c];
    throw SizeMismatch(lambda.to_string() + " is not a class of S_n");
  }
};

namespace detail {

template <typename Vector, typename Mass>
ClassAggregate aggregate(const DenseWalk& walk, const Vector& vec, Mass mass_of) {
  ClassAggregate out;
  out.classes = enumerate_partitions(walk.n());
  const std::size_t m = out.classes.size();
  out.mass.assign(m, 0.0);
  out.max_deviation.assign(m, 0.0);
  std::map<Partition, std::size_t, std::greater<>> slot;
  for (std::size_t c = 0; c < m; ++c) slot.emplace(out.classes[c], c);

  std::vector<bool> seen(m, false);
  std::vector<typename Vector::Scalar> reference(m);
  for (std::size_t i = 0; i < walk.vertex_count(); ++i) {
    const std::size_t c = slot.at(walk.vertex_class(i));
    const auto value = vec(static_cast<Eigen::Index>(i));
    out.mass[c] += mass_of(value);
    if (!seen[c]) {
      seen[c] = true;
      reference[c] = value;
    } else {
      out.max_deviation[c] = std::max(out.max_deviation[c], std::abs(value - reference[c]));
    }
  }
  for (double d : out.max_deviation) out.worst_deviation = std::max(out.worst_deviation, d);
  return out;
}

}  // namespace detail

/// Sums |amplitude|^2 over each cycle type.
inline ClassAggregate class_aggregate(const DenseWalk& walk, const Eigen::VectorXcd& amplitudes) {
  return detail::aggregate(walk, amplitudes,
                           [](const std::complex<double>& a) { return std::norm(a); });
}

/// Sums probability entries over each cycle type.
inline ClassAggregate class_aggregate(const DenseWalk& walk, const Eigen::VectorXd& probabilities) {
  return detail::aggregate(walk, probabilities, [](double p) { return p; });
}

/// Edge list as CSV "perm_g,perm_h", each unordered edge once with g < h.
inline void dump_adjacency(const DenseWalk& walk, std::ostream& out) {
  out << "perm_g,perm_h\n";
  const auto& a = walk.adjacency();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != 0)
        out << one_line(walk.vertices()[i]) << ',' << one_line(walk.vertices()[j]) << '\n';
}

}  // namespace symwalk::oracle
