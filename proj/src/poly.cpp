#include "cec/poly.hpp"

#include <algorithm>

#include "cec/errors.hpp"

namespace cec {

Poly::Poly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  for (const BigInt& c : coeffs_)
    if (c < 0) throw InvalidParameter("polynomial coefficients must be nonnegative");
  normalize();
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const BigInt& c) { return Poly(std::vector<BigInt>{c}); }

Poly Poly::monomial(std::size_t exponent, const BigInt& c) {
  std::vector<BigInt> v(exponent + 1);
  v[exponent] = c;
  return Poly(std::move(v));
}

std::optional<std::size_t> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

std::optional<std::size_t> Poly::min_exponent() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  return std::nullopt;
}

Poly add(const Poly& p, const Poly& q) {
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<BigInt> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return Poly(std::move(out));
}

Poly mul(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return Poly(std::move(out));
}

Poly shift(const Poly& p, std::size_t k) {
  if (p.is_zero()) return {};
  std::vector<BigInt> out(k);
  out.insert(out.end(), p.coeffs().begin(), p.coeffs().end());
  return Poly(std::move(out));
}

Poly scale(const Poly& p, const BigInt& c) {
  std::vector<BigInt> out = p.coeffs();
  for (BigInt& x : out) x *= c;
  return Poly(std::move(out));
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Poly binom_power(const BigInt& a, unsigned e) {
  if (a < 0) throw InvalidParameter("binom_power needs a nonnegative constant");
  // coefficient of x^i is C(e, i) a^(e-i); build the powers of a from the top down
  std::vector<BigInt> out(e + 1);
  BigInt apow = 1;
  for (unsigned i = e + 1; i-- > 0;) {
    out[i] = binomial(e, i) * apow;
    apow *= a;
  }
  return Poly(std::move(out));
}

BigInt eval_int(const Poly& p, const BigInt& x0) {
  BigInt acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x0 + c[i];
  return acc;
}

bool is_unimodal(const Poly& p) {
  auto lo = p.min_exponent();
  if (!lo) return true;
  const auto& c = p.coeffs();
  std::size_t i = *lo;
  while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
  while (i + 1 < c.size() && c[i] >= c[i + 1]) {
    if (c[i + 1] == 0) return false;
    ++i;
  }
  return i + 1 == c.size();
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += c[i].str();
      continue;
    }
    if (c[i] != 1) out += c[i].str();
    out += 'x';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

std::vector<std::string> coefficient_strings(const Poly& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const BigInt& c : p.coeffs()) out.push_back(c.str());
  return out;
}

Poly poly_from_strings(const std::vector<std::string>& coeffs) {
  std::vector<BigInt> v;
  v.reserve(coeffs.size());
  for (const std::string& s : coeffs) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      throw InvalidParameter("malformed coefficient '" + s + "'");
    }
    v.emplace_back(s);
  }
  return Poly(std::move(v));
}

}  // namespace cec
