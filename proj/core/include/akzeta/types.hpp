#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace akzeta {

/// Working-precision real. Precision is set process-wide through
/// ScopedPrecision; every value created afterwards inherits it.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parameters for which the requested series does not converge.
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A numerical procedure could not produce a trustworthy answer
/// (non-alternating input to an accelerator, singular fit, ...).
class DiagnosticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Real to_real(const Rational& q) {
  return Real(boost::multiprecision::numerator(q)) / Real(boost::multiprecision::denominator(q));
}

inline Real to_real(const Integer& z) { return Real(z); }

}  // namespace akzeta
