#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>

namespace cliquepf {

using Rational = mpq_class;
using BigInt = mpz_class;

enum class ScalarMode { exact, floating };

std::string_view to_string(ScalarMode mode);
ScalarMode scalar_mode_from_string(std::string_view s);

/// Parses "p/q", an integer, or a plain decimal such as "0.06" into an exact
/// rational. Throws ParameterError on anything else.
Rational parse_rational(std::string_view s);

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

template <class T>
T from_rational(const Rational& q);

template <>
inline Rational from_rational<Rational>(const Rational& q) {
  return q;
}

template <>
inline double from_rational<double>(const Rational& q) {
  return q.get_d();
}

/// Natural log of a positive rational without going through a double that
/// may overflow or underflow.
double log_rational(const Rational& q);

/// Summation helper. Exact rationals are summed directly; doubles use
/// Neumaier's compensated summation so the result depends only on the order
/// of the calls.
template <class T>
class Accumulator {
 public:
  void add(const T& x) { sum_ += x; }
  void merge(const Accumulator& other) { sum_ += other.sum_; }
  T value() const { return sum_; }

 private:
  T sum_ = T(0);
};

template <>
class Accumulator<double> {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  void merge(const Accumulator& other) {
    add(other.sum_);
    add(other.comp_);
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace cliquepf
