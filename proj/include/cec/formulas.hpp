#pragma once

#include <optional>
#include <vector>

#include "cec/families.hpp"
#include "cec/graph.hpp"
#include "cec/poly.hpp"

namespace cec {

// Closed forms, recurrences and inclusion-exclusion sums for the families
// covered by the published results. Every evaluator reproduces the
// published statement as written, including the ones that turn out to be
// false; deciding what is true is the job of verify.hpp.

struct FormulaResult {
  std::optional<Poly> poly;
  std::optional<BigInt> total;
};

Poly cec_tree(int n);
Poly cec_path(int n);
Poly cec_star(int leaves);
Poly cec_cycle(int n);

/// E_c(K_n, 1) by conditioning on the component of a fixed vertex.
BigInt cec_complete_total(int n);

/// sum_{k=1}^{n-1} C(n,k) 2^(n-k) x^(n+k) + x^(2n).
Poly cec_k2n(int n);

/// x^(2k) (3 + x)^k.
Poly cec_friendship(int k);

/// x^n E_c(K_m, x); km_poly must be E_c(K_m, x).
Poly cec_lollipop(int m, int n, const Poly& km_poly);

/// Published fan polynomial sum_k C(n-2,k) 2^k x^(n-1+k). Known to be false.
Poly cec_fan_claimed(int n);

/// Published cocktail party polynomials: C_4 for n = 2, the listed
/// coefficient table for n = 3, zero for n >= 4.
Poly cec_cocktail_claimed(int n);
/// Published cocktail party totals: 5, 2656, then 0.
BigInt cec_cocktail_claimed_total(int n);

enum class WheelMode { recurrence, closed_form };

/// Published wheel totals: E_4, E_5, E_6 = 38, 134, 462 with
/// E_n = 6 E_(n-1) - 11 E_(n-2) + 6 E_(n-3), or 10 - 40*2^(n-4) + 68*3^(n-4).
BigInt wheel_total(int n, WheelMode mode);

/// Edge cover count of K_{n_1,...,n_k} by inclusion-exclusion over the
/// vertices forced to be isolated.
BigInt ec_count_multipartite(const std::vector<int>& parts);

/// Edge cover polynomial of K_{n_1,...,n_k}, same sum with (1+x)^allowed.
Poly ec_poly_multipartite(const std::vector<int>& parts);

/// 2^(2^d - d - 1) prod_{k=1}^{d} k^C(d,k).
BigInt hypercube_spanning_trees(int d);

/// n^(k-2) prod_i (n - a_i)^(a_i - 1) over the balanced part sizes a_i.
BigInt turan_spanning_trees(int n, int k);

/// The Turan inclusion-exclusion sum with exponent
/// m - sum_i |I_i| (n - a_i) + sum_{i<j} |I_i| |I_j|. It never enforces
/// connectivity, so it yields the edge cover polynomial.
Poly turan_ie_poly(int n, int k);

/// True iff p is zero or its lowest exponent lies in [ceil(n/2), n-1]; for a
/// single vertex the lowest exponent must be 0.
bool bounds_check(const Graph& g, const Poly& p);

/// Evaluates whatever formula exists for the family. Returns nullopt when
/// nothing applies (e.g. hypercube, turan). Lollipop uses `km_poly` when
/// given, otherwise the result carries no polynomial.
std::optional<FormulaResult> formula_for(const FamilySpec& spec, const std::optional<Poly>& km_poly = std::nullopt);

}  // namespace cec
