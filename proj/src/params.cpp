#include <cliquepf/errors.hpp>
#include <cliquepf/model.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace cliquepf {

std::string_view to_string(ScalarMode mode) { return mode == ScalarMode::exact ? "exact" : "float"; }

ScalarMode scalar_mode_from_string(std::string_view s) {
  if (s == "exact") return ScalarMode::exact;
  if (s == "float") return ScalarMode::floating;
  throw ParameterError("unknown scalar mode '" + std::string(s) + "' (expected exact|float)");
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  auto bad = [&]() -> ParameterError { return ParameterError("cannot parse '" + s + "' as a rational number"); };
  if (s.empty()) throw bad();
  try {
    if (s.find('/') != std::string::npos) {
      Rational q(s, 10);
      if (q.get_den() == 0) throw bad();
      q.canonicalize();
      return q;
    }
    const auto dot = s.find('.');
    std::string digits = s;
    std::size_t frac = 0;
    if (dot != std::string::npos) {
      frac = s.size() - dot - 1;
      digits = s.substr(0, dot) + s.substr(dot + 1);
    }
    const std::size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
    if (digits.size() == start || digits.find_first_not_of("0123456789", start) != std::string::npos) throw bad();
    if (digits[0] == '+') digits.erase(0, 1);
    BigInt num(digits, 10);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw bad();
  }
}

double log_rational(const Rational& q) {
  if (sgn(q) <= 0) throw DomainError("log of a non-positive rational");
  long exp_num = 0;
  long exp_den = 0;
  const double mant_num = mpz_get_d_2exp(&exp_num, q.get_num_mpz_t());
  const double mant_den = mpz_get_d_2exp(&exp_den, q.get_den_mpz_t());
  return std::log(mant_num) - std::log(mant_den) + static_cast<double>(exp_num - exp_den) * std::log(2.0);
}

std::string_view to_string(Regime regime) { return regime == Regime::standard ? "standard" : "large-gap"; }

Regime regime_from_string(std::string_view s) {
  if (s == "standard") return Regime::standard;
  if (s == "large-gap") return Regime::large_gap;
  throw ParameterError("unknown regime '" + std::string(s) + "' (expected standard|large-gap)");
}

Rational regime_gamma(Regime regime) { return regime == Regime::standard ? Rational(3, 50) : Rational(9, 50); }

Rational regime_omega(Regime regime) {
  return regime == Regime::standard ? Rational(61, 1000) : Rational(181, 1000);
}

AlgorithmParams::AlgorithmParams(std::size_t m, std::size_t n, Regime regime, std::optional<Rational> gamma)
    : m_(m), n_(n), regime_(regime), gamma_(gamma.value_or(regime_gamma(regime))), omega_(regime_omega(regime)) {
  if (m <= 1) throw ParameterError("m must be greater than 1 (got " + std::to_string(m) + ")");
  if (m > n) throw ParameterError("m = " + std::to_string(m) + " exceeds n = " + std::to_string(n));
  if (regime == Regime::large_gap && (m < 10 || n < 4 * m))
    throw ParameterError("large-gap regime requires m >= 10 and n >= 4m");
  if (sgn(gamma_) <= 0) throw ParameterError("gamma must be positive");
  if (gamma_ > regime_gamma(regime))
    throw ParameterError("gamma = " + gamma_.get_str() + " exceeds the regime maximum " + regime_gamma(regime).get_str());
}

Rational AlgorithmParams::delta() const { return gamma_ / Rational(static_cast<long>(m_ - 1)); }

WeightMatrix::WeightMatrix(std::size_t n, std::vector<Rational> entries, Rational delta)
    : n_(n), exact_(std::move(entries)), approx_(n * n), delta_(std::move(delta)) {
  if (exact_.size() != n * n) throw ParameterError("weight matrix needs n*n entries");
  if (sgn(delta_) < 0 || delta_ >= 1) throw ParameterError("delta must lie in [0, 1)");
  for (std::size_t i = 0; i < n; ++i) {
    exact_[i * n + i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (exact_[i * n + j] != exact_[j * n + i]) throw ParameterError("weight matrix is not symmetric");
      if (abs(exact_[i * n + j] - 1) > delta_) throw ParameterError("weight violates |w - 1| <= delta");
    }
  }
  std::transform(exact_.begin(), exact_.end(), approx_.begin(), [](const Rational& q) { return q.get_d(); });
}

WeightMatrix WeightMatrix::ones(std::size_t n) { return WeightMatrix(n, std::vector<Rational>(n * n, Rational(1)), 0); }

WeightMatrix weights_from_graph(const Graph& g, const AlgorithmParams& p) {
  const std::size_t n = g.vertex_count();
  if (p.n() != n) throw ParameterError("parameters were built for a different vertex count");
  const Rational delta = p.delta();
  const Rational up = 1 + delta;
  const Rational down = 1 - delta;
  std::vector<Rational> entries(n * n, down);
  for (auto [u, v] : g.edges()) entries[u * n + v] = entries[v * n + u] = up;
  return WeightMatrix(n, std::move(entries), delta);
}

double log_weight_curve(double t, const AlgorithmParams& p) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("density t must lie in [0, 1]");
  const double gamma = p.gamma().get_d();
  const double delta = p.delta().get_d();
  const double pairs = static_cast<double>(p.pair_count());
  const double m = static_cast<double>(p.m());
  return gamma * m + (t - 1.0) * pairs * std::log1p(delta) + (1.0 - t) * pairs * std::log1p(-delta);
}

double weight_curve(double t, const AlgorithmParams& p) { return std::exp(log_weight_curve(t, p)); }

BigInt binomial(long a, long b) {
  if (a < 0) throw DomainError("binomial: negative upper argument");
  if (b < 0 || b > a) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

double ApproxLog::relative_certificate() const { return std::expm1(additive_bound); }

AnchorSet::AnchorSet(std::vector<Vertex> vertices, std::size_t n, std::size_t m) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw ParameterError("anchor vertices must be distinct");
  for (Vertex v : vertices_)
    if (v >= n) throw ParameterError("anchor vertex " + std::to_string(v + 1) + " outside [1," + std::to_string(n) + "]");
  if (vertices_.size() > m) throw ParameterError("anchor larger than m");
}

bool AnchorSet::contains(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

std::uint64_t AnchorSet::mask() const {
  std::uint64_t bits = 0;
  for (Vertex v : vertices_) bits |= std::uint64_t{1} << v;
  return bits;
}

AnchorSet AnchorSet::with(Vertex v, std::size_t n, std::size_t m) const {
  std::vector<Vertex> next = vertices_;
  next.push_back(v);
  return AnchorSet(std::move(next), n, m);
}

}  // namespace cliquepf
