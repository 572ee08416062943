#include <cliquepf/errors.hpp>
#include <cliquepf/oracle.hpp>
#include <cliquepf/zerofree.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace cliquepf {

ZeroFreeConstants ZeroFreeConstants::for_regime(Regime regime) {
  ZeroFreeConstants c;
  c.regime = regime;
  if (regime == Regime::standard) {
    c.omega = 0.061;
    c.theta = 0.4580097179;
    c.lambda = std::exp(c.theta);
    c.tau = std::cos(c.theta) / c.lambda;
  } else {
    c.omega = 0.181;
    c.theta = 1.02831829;
    c.lambda = std::exp(c.theta);
    c.tau = std::sqrt(std::cos(c.theta));
  }
  return c;
}

double standard_fixed_point_residual(double omega, double theta) {
  return theta - 4.0 * omega * std::exp(theta) / ((1.0 - omega) * std::cos(theta));
}

std::optional<double> large_gap_theta(double omega, std::size_t m) {
  if (m < 2) throw ParameterError("need m >= 2");
  const double scale = 4.0 * omega / (1.0 - omega / static_cast<double>(m - 1));
  auto h = [scale](double theta) { return theta - scale / std::sqrt(std::cos(theta)); };
  // h(0) < 0; scan for the first sign change, then bisect.
  const double top = std::numbers::pi / 2.0;
  constexpr int kSteps = 20000;
  double lo = 0.0;
  for (int s = 1; s < kSteps; ++s) {
    double hi = top * s / kSteps;
    if (h(hi) >= 0.0) {
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (h(mid) < 0.0) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      return 0.5 * (lo + hi);
    }
    lo = hi;
  }
  return std::nullopt;
}

ComplexWeightMatrix::ComplexWeightMatrix(std::size_t n) : n_(n), z_(n * n, Complex(1.0, 0.0)) {}

void ComplexWeightMatrix::set(std::size_t i, std::size_t j, Complex z) {
  z_[i * n_ + j] = z;
  z_[j * n_ + i] = z;
}

bool ComplexWeightMatrix::in_polydisc(double delta) const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      if (i == j) continue;
      if (z_[i * n_ + j] != z_[j * n_ + i]) return false;
      if (std::abs(z_[i * n_ + j] - 1.0) > delta * (1.0 + 1e-12)) return false;
    }
  return true;
}

ComplexWeightMatrix ComplexWeightMatrix::from_real(const WeightMatrix& w) { return on_line(w, Complex(1.0, 0.0)); }

ComplexWeightMatrix ComplexWeightMatrix::on_line(const WeightMatrix& w, Complex z) {
  ComplexWeightMatrix out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) out.set(i, j, 1.0 + z * (w.approx(i, j) - 1.0));
  return out;
}

std::vector<ComplexWeightMatrix> sample_polydisc(std::size_t n, double delta, std::size_t count,
                                                 std::uint64_t seed) {
  if (count < 1) throw ParameterError("sample count must be at least 1");
  if (!(delta >= 0.0)) throw ParameterError("polydisc radius must be non-negative");
  std::mt19937_64 rng(seed);
  // Raw 53-bit draws keep the stream identical across standard libraries.
  auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<ComplexWeightMatrix> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    ComplexWeightMatrix z(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const bool boundary = (rng() >> 63) != 0;
        const double r = boundary ? delta : delta * unit();
        const double phi = 2.0 * std::numbers::pi * unit();
        z.set(i, j, 1.0 + std::polar(r, phi));
      }
    out.push_back(std::move(z));
  }
  return out;
}

std::vector<ComplexWeightMatrix> sample_polydisc(std::size_t n, std::size_t m, const ZeroFreeConstants& c,
                                                 std::size_t count, std::uint64_t seed) {
  if (m < 2) throw ParameterError("need m >= 2");
  return sample_polydisc(n, c.radius(m), count, seed);
}

Complex complex_partition_function(const ComplexWeightMatrix& z, std::size_t m, std::size_t cap) {
  check_oracle_cap(z.size(), cap);
  if (m < 2 || m > z.size()) throw ParameterError("need 1 < m <= n");
  return enumerate_subset_products<Complex>(z.size(), m, {}, [&z](Vertex i, Vertex j) { return z(i, j); });
}

AuditResult audit_min_modulus(std::span<const ComplexWeightMatrix> samples, std::size_t m, std::size_t cap) {
  if (samples.empty()) throw ParameterError("audit needs at least one sample");
  std::vector<double> modulus(samples.size());
  for (std::size_t s = 0; s < samples.size(); ++s) modulus[s] = std::abs(complex_partition_function(samples[s], m, cap));
  AuditResult r{modulus[0], 0, samples.size()};
  for (std::size_t s = 1; s < samples.size(); ++s)
    if (modulus[s] < r.min_modulus) r = {modulus[s], s, samples.size()};
  return r;
}

double vector_angle(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw InputError("vectors of different dimension");
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (nu == 0.0 || nv == 0.0) throw InputError("zero vector");
  const double c = std::clamp(dot / std::sqrt(nu * nv), -1.0, 1.0);
  return std::acos(c);
}

bool angle_sum_check(std::span<const std::vector<double>> vectors, double alpha) {
  if (!(alpha >= 0.0 && alpha < std::numbers::pi / 2.0)) throw InputError("alpha must lie in [0, pi/2)");
  if (vectors.empty()) throw InputError("no vectors");
  const std::size_t d = vectors.front().size();
  std::vector<double> sum(d, 0.0);
  double norms = 0.0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != d) throw InputError("vectors of different dimension");
    double sq = 0.0;
    for (std::size_t c = 0; c < d; ++c) {
      sum[c] += vectors[i][c];
      sq += vectors[i][c] * vectors[i][c];
    }
    if (sq == 0.0) throw InputError("zero vector");
    norms += std::sqrt(sq);
    for (std::size_t j = 0; j < i; ++j)
      if (vector_angle(vectors[i], vectors[j]) > alpha + 1e-12)
        throw InputError("pairwise angle exceeds alpha");
  }
  double total = 0.0;
  for (double x : sum) total += x * x;
  return std::sqrt(total) >= std::sqrt(std::cos(alpha)) * norms * (1.0 - 1e-12);
}

}  // namespace cliquepf
