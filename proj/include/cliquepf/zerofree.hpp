#pragma once

#include <cliquepf/model.hpp>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cliquepf {

using Complex = std::complex<double>;

/// Constants of the zero-free region: omega, theta, lambda = e^theta and tau.
/// Standard regime: tau = cos(theta)/lambda. Large-gap: tau = sqrt(cos theta),
/// theta stored as its upper bound.
struct ZeroFreeConstants {
  Regime regime = Regime::standard;
  double omega = 0.0;
  double theta = 0.0;
  double lambda = 0.0;
  double tau = 0.0;

  static ZeroFreeConstants for_regime(Regime regime);
  /// delta = omega / (m - 1).
  double radius(std::size_t m) const { return omega / static_cast<double>(m - 1); }
};

/// theta - 4 omega e^theta / ((1 - omega) cos theta).
double standard_fixed_point_residual(double omega, double theta);

/// Smallest root in (0, pi/2) of theta = 4 omega / ((1 - omega/(m-1)) sqrt(cos theta)),
/// or nullopt if there is none.
std::optional<double> large_gap_theta(double omega, std::size_t m);

/// Symmetric complex matrix; diagonal stored as 1 and unused.
class ComplexWeightMatrix {
 public:
  ComplexWeightMatrix() = default;
  explicit ComplexWeightMatrix(std::size_t n);

  std::size_t size() const { return n_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return z_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, Complex z);

  /// |z_ij - 1| <= delta (1 + 1e-12) for every off-diagonal pair.
  bool in_polydisc(double delta) const;

  static ComplexWeightMatrix from_real(const WeightMatrix& w);
  /// J + z (W - J).
  static ComplexWeightMatrix on_line(const WeightMatrix& w, Complex z);

 private:
  std::size_t n_ = 0;
  std::vector<Complex> z_;
};

/// `count` matrices with entries 1 + r e^{i phi}; phi uniform, r = delta
/// exactly or uniform on [0, delta] with equal probability. Deterministic in
/// `seed`. Throws ParameterError if count < 1.
std::vector<ComplexWeightMatrix> sample_polydisc(std::size_t n, double delta, std::size_t count,
                                                 std::uint64_t seed);
/// Radius omega/(m-1) from the constants.
std::vector<ComplexWeightMatrix> sample_polydisc(std::size_t n, std::size_t m, const ZeroFreeConstants& c,
                                                 std::size_t count, std::uint64_t seed);

/// P_m(Z) by exhaustive enumeration in double-precision complex arithmetic.
Complex complex_partition_function(const ComplexWeightMatrix& z, std::size_t m,
                                   std::size_t cap = 20);

struct AuditResult {
  double min_modulus = 0.0;
  std::size_t argmin = 0;
  std::size_t samples = 0;
};

/// Minimum |P_m(Z)| over the samples; the first index wins ties.
AuditResult audit_min_modulus(std::span<const ComplexWeightMatrix> samples, std::size_t m,
                              std::size_t cap = 20);

/// Checks ||sum u_i|| >= sqrt(cos alpha) * sum ||u_i||.
/// Throws InputError on a zero vector, mismatched dimensions, alpha outside
/// [0, pi/2), or a pair of vectors at angle greater than alpha.
bool angle_sum_check(std::span<const std::vector<double>> vectors, double alpha);

/// Angle between two nonzero vectors, in [0, pi].
double vector_angle(std::span<const double> u, std::span<const double> v);

}  // namespace cliquepf
