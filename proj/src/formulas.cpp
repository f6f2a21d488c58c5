#include "cec/formulas.hpp"

#include <functional>
#include <string>

#include "cec/errors.hpp"

namespace cec {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameter(what);
}

BigInt pow_int(const BigInt& base, unsigned e) { return boost::multiprecision::pow(base, e); }

using SignedCoeffs = std::vector<BigInt>;

// Walks every tuple (i_1..i_k) with 0 <= i_p <= parts[p].
void for_each_tuple(const std::vector<int>& parts, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> idx(parts.size(), 0);
  for (;;) {
    visit(idx);
    std::size_t p = 0;
    while (p < parts.size() && idx[p] == parts[p]) idx[p++] = 0;
    if (p == parts.size()) return;
    ++idx[p];
  }
}

BigInt multiplicity(const std::vector<int>& parts, const std::vector<int>& idx) {
  BigInt r = 1;
  for (std::size_t p = 0; p < parts.size(); ++p) r *= binomial(parts[p], idx[p]);
  return r;
}

int parity_sign(const std::vector<int>& idx) {
  int total = 0;
  for (int i : idx) total += i;
  return total % 2 == 0 ? 1 : -1;
}

// Accumulates sign * mult * (1+x)^exponent into acc.
void add_binomial_row(SignedCoeffs& acc, int sign, const BigInt& mult, unsigned exponent) {
  if (acc.size() < exponent + 1) acc.resize(exponent + 1);
  for (unsigned i = 0; i <= exponent; ++i) {
    BigInt term = mult * binomial(exponent, i);
    if (sign > 0)
      acc[i] += term;
    else
      acc[i] -= term;
  }
}

Poly to_counting_poly(SignedCoeffs coeffs, const char* what) {
  for (const BigInt& c : coeffs)
    if (c < 0) throw InternalError(std::string(what) + ": negative coefficient after inclusion-exclusion");
  return Poly(std::move(coeffs));
}

void require_parts(const std::vector<int>& parts) {
  require(parts.size() >= 2, "multipartite formulas need at least two parts");
  for (int a : parts) require(a >= 1, "part sizes must be positive");
}

unsigned allowed_edges(const std::vector<int>& parts, const std::vector<int>& idx) {
  unsigned e = 0;
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (std::size_t q = p + 1; q < parts.size(); ++q)
      e += static_cast<unsigned>((parts[p] - idx[p]) * (parts[q] - idx[q]));
  return e;
}

}  // namespace

Poly cec_tree(int n) {
  require(n >= 1, "tree needs n >= 1");
  return Poly::monomial(static_cast<std::size_t>(n - 1));
}

Poly cec_path(int n) {
  require(n >= 2, "path formula needs n >= 2");
  return Poly::monomial(static_cast<std::size_t>(n - 1));
}

Poly cec_star(int leaves) {
  require(leaves >= 1, "star formula needs at least one leaf");
  return Poly::monomial(static_cast<std::size_t>(leaves));
}

Poly cec_cycle(int n) {
  require(n >= 3, "cycle formula needs n >= 3");
  return Poly::monomial(n - 1, n) + Poly::monomial(n);
}

BigInt cec_complete_total(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<BigInt> total(n + 1);
  total[1] = 1;
  for (int size = 2; size <= n; ++size) {
    BigInt t = pow_int(2, static_cast<unsigned>(size * (size - 1) / 2));
    for (int k = 1; k < size; ++k) {
      const int rest = size - k;
      t -= binomial(size - 1, k - 1) * total[k] * pow_int(2, static_cast<unsigned>(rest * (rest - 1) / 2));
    }
    total[size] = t;
  }
  return total[n];
}

Poly cec_k2n(int n) {
  require(n >= 2, "K_{2,n} formula needs n >= 2");
  Poly p = Poly::monomial(2 * n);
  for (int k = 1; k <= n - 1; ++k) {
    p = p + Poly::monomial(n + k, binomial(n, k) * pow_int(2, n - k));
  }
  return p;
}

Poly cec_friendship(int k) {
  require(k >= 1, "friendship formula needs k >= 1");
  return shift(binom_power(3, static_cast<unsigned>(k)), 2 * static_cast<std::size_t>(k));
}

Poly cec_lollipop(int m, int n, const Poly& km_poly) {
  require(m >= 2 && n >= 1, "lollipop formula needs m >= 2 and n >= 1");
  return shift(km_poly, static_cast<std::size_t>(n));
}

Poly cec_fan_claimed(int n) {
  require(n >= 4, "fan formula needs n >= 4");
  Poly p;
  for (int k = 0; k <= n - 2; ++k) p = p + Poly::monomial(n - 1 + k, binomial(n - 2, k) * pow_int(2, k));
  return p;
}

Poly cec_cocktail_claimed(int n) {
  require(n >= 2, "cocktail party formula needs n >= 2");
  if (n == 2) return Poly(std::vector<BigInt>{0, 0, 0, 4, 1});
  if (n == 3) return Poly(std::vector<BigInt>{0, 0, 0, 0, 0, 384, 740, 744, 489, 240, 90, 24, 1});
  return {};
}

BigInt cec_cocktail_claimed_total(int n) {
  require(n >= 2, "cocktail party formula needs n >= 2");
  if (n == 2) return 5;
  if (n == 3) return 2656;
  return 0;
}

BigInt wheel_total(int n, WheelMode mode) {
  require(n >= 4, "wheel formula needs n >= 4");
  if (mode == WheelMode::closed_form) {
    // 10 - 40*2^(n-4) + 68*3^(n-4), always positive for n >= 4
    const unsigned e = static_cast<unsigned>(n - 4);
    return BigInt(10) - 40 * pow_int(2, e) + 68 * pow_int(3, e);
  }
  std::vector<BigInt> e{38, 134, 462};
  while (static_cast<int>(e.size()) < n - 3) {
    const std::size_t s = e.size();
    e.push_back(6 * e[s - 1] - 11 * e[s - 2] + 6 * e[s - 3]);
  }
  return e[n - 4];
}

BigInt ec_count_multipartite(const std::vector<int>& parts) {
  require_parts(parts);
  BigInt sum = 0;
  for_each_tuple(parts, [&](const std::vector<int>& idx) {
    BigInt term = multiplicity(parts, idx) * pow_int(2, allowed_edges(parts, idx));
    if (parity_sign(idx) > 0)
      sum += term;
    else
      sum -= term;
  });
  if (sum < 0) throw InternalError("ec_count_multipartite: negative count");
  return sum;
}

Poly ec_poly_multipartite(const std::vector<int>& parts) {
  require_parts(parts);
  SignedCoeffs acc;
  for_each_tuple(parts, [&](const std::vector<int>& idx) {
    add_binomial_row(acc, parity_sign(idx), multiplicity(parts, idx), allowed_edges(parts, idx));
  });
  return to_counting_poly(std::move(acc), "ec_poly_multipartite");
}

BigInt hypercube_spanning_trees(int d) {
  require(d >= 1 && d <= 16, "hypercube formula needs 1 <= d <= 16");
  BigInt r = pow_int(2, (1u << d) - static_cast<unsigned>(d) - 1);
  for (int k = 1; k <= d; ++k) {
    r *= pow_int(k, static_cast<unsigned>(binomial(d, k)));
  }
  return r;
}

BigInt turan_spanning_trees(int n, int k) {
  const std::vector<int> parts = turan_parts(n, k);
  BigInt r = pow_int(n, static_cast<unsigned>(k - 2));
  for (int a : parts) r *= pow_int(n - a, static_cast<unsigned>(a - 1));
  return r;
}

Poly turan_ie_poly(int n, int k) {
  const std::vector<int> parts = turan_parts(n, k);
  long long m = 0;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) m += static_cast<long long>(parts[i]) * parts[j];

  SignedCoeffs acc;
  // |I_i| = idx[i]; the C(a_i, |I_i|) choices of each I_i share one term
  for_each_tuple(parts, [&](const std::vector<int>& idx) {
    long long exponent = m;
    for (std::size_t i = 0; i < parts.size(); ++i) exponent -= static_cast<long long>(idx[i]) * (n - parts[i]);
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j) exponent += static_cast<long long>(idx[i]) * idx[j];
    if (exponent < 0) throw InternalError("turan_ie_poly: negative edge count");
    add_binomial_row(acc, parity_sign(idx), multiplicity(parts, idx), static_cast<unsigned>(exponent));
  });
  return to_counting_poly(std::move(acc), "turan_ie_poly");
}

bool bounds_check(const Graph& g, const Poly& p) {
  auto lo = p.min_exponent();
  if (!lo) return true;
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  if (n == 1) return *lo == 0;
  const std::size_t lower = (n + 1) / 2;
  const std::size_t upper = n == 0 ? 0 : n - 1;
  return *lo >= lower && *lo <= upper;
}

std::optional<FormulaResult> formula_for(const FamilySpec& spec, const std::optional<Poly>& km_poly) {
  validate(spec);
  const auto& p = spec.params;
  auto with_poly = [](Poly poly) {
    FormulaResult r;
    r.total = eval_int(poly, 1);
    r.poly = std::move(poly);
    return r;
  };
  switch (spec.family) {
    case Family::path:
      return with_poly(p[0] == 1 ? cec_tree(1) : cec_path(p[0]));
    case Family::star:
      return with_poly(cec_star(p[0]));
    case Family::cycle:
      return with_poly(cec_cycle(p[0]));
    case Family::complete: {
      FormulaResult r;
      r.total = cec_complete_total(p[0]);
      return r;
    }
    case Family::complete_bipartite:
      if (p[0] == 2 && p[1] >= 2) return with_poly(cec_k2n(p[1]));
      if (p[1] == 2 && p[0] >= 2) return with_poly(cec_k2n(p[0]));
      if (p[0] == 1) return with_poly(cec_star(p[1]));
      if (p[1] == 1) return with_poly(cec_star(p[0]));
      return std::nullopt;
    case Family::friendship:
      return with_poly(cec_friendship(p[0]));
    case Family::lollipop: {
      if (km_poly) return with_poly(cec_lollipop(p[0], p[1], *km_poly));
      FormulaResult r;
      r.total = cec_complete_total(p[0]);
      return r;
    }
    case Family::fan:
      if (p[0] < 4) return std::nullopt;
      return with_poly(cec_fan_claimed(p[0]));
    case Family::cocktail_party: {
      FormulaResult r;
      r.poly = cec_cocktail_claimed(p[0]);
      r.total = cec_cocktail_claimed_total(p[0]);
      return r;
    }
    case Family::wheel: {
      FormulaResult r;
      r.total = wheel_total(p[0], WheelMode::recurrence);
      return r;
    }
    case Family::complete_multipartite:
    case Family::hypercube:
    case Family::turan:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace cec
