#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cec {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial in x with arbitrary-precision nonnegative coefficients.
///
/// Coefficient i multiplies x^i. The representation is normalized: the last
/// stored coefficient is nonzero, so the zero polynomial stores nothing.
/// Every constructor rejects negative coefficients with InvalidParameter.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigInt> coeffs);

  static Poly constant(const BigInt& c);
  static Poly monomial(std::size_t exponent, const BigInt& c = 1);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;
  std::optional<std::size_t> min_exponent() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
/// Multiplies by x^k.
Poly shift(const Poly& p, std::size_t k);
Poly scale(const Poly& p, const BigInt& c);

inline Poly operator+(const Poly& p, const Poly& q) { return add(p, q); }
inline Poly operator*(const Poly& p, const Poly& q) { return mul(p, q); }

/// (a + x)^e expanded.
Poly binom_power(const BigInt& a, unsigned e);

/// Exact value at a nonnegative integer point.
BigInt eval_int(const Poly& p, const BigInt& x0);

/// Weakly rises then weakly falls over [min_exponent, degree]. An internal
/// zero inside that window breaks unimodality. Zero polynomial: true.
bool is_unimodal(const Poly& p);

BigInt binomial(unsigned n, unsigned k);

/// Human-readable form, lowest power first: "5x^4 + x^5". Zero prints "0".
std::string to_string(const Poly& p);

/// Dense decimal strings from x^0 to the degree.
std::vector<std::string> coefficient_strings(const Poly& p);

/// Inverse of coefficient_strings. Throws InvalidParameter on malformed input.
Poly poly_from_strings(const std::vector<std::string>& coeffs);

}  // namespace cec
