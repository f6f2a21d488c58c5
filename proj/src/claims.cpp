#include <algorithm>
#include <string>

#include "cec/errors.hpp"
#include "cec/fixtures.hpp"
#include "cec/formulas.hpp"
#include "cec/verify.hpp"

namespace cec {
namespace {

std::vector<FamilySpec> range1(Family f, int lo, int hi) {
  std::vector<FamilySpec> out;
  for (int i = lo; i <= hi; ++i) out.push_back({f, {i}});
  return out;
}

std::vector<FamilySpec> turan_range(int max_n) {
  std::vector<FamilySpec> out;
  for (int n = 3; n <= max_n; ++n)
    for (int k = 2; k < n; ++k) out.push_back({Family::turan, {n, k}});
  return out;
}

// Nonincreasing part lists with 2..max_parts parts of size 1..max_size.
std::vector<FamilySpec> part_lists(int max_parts, int max_size) {
  std::vector<FamilySpec> out;
  std::vector<int> parts;
  auto extend = [&](auto&& self, int cap) -> void {
    if (parts.size() >= 2) out.push_back({Family::complete_multipartite, parts});
    if (static_cast<int>(parts.size()) == max_parts) return;
    for (int s = 1; s <= cap; ++s) {
      parts.push_back(s);
      self(self, s);
      parts.pop_back();
    }
  };
  extend(extend, max_size);
  std::sort(out.begin(), out.end(), [](const FamilySpec& a, const FamilySpec& b) { return a.params < b.params; });
  return out;
}

Asserted poly_only(Poly p) { return {std::move(p), std::nullopt, std::nullopt}; }
Asserted total_only(BigInt t) { return {std::nullopt, std::move(t), std::nullopt}; }
Asserted poly_and_total(Poly p, BigInt t) { return {std::move(p), std::move(t), std::nullopt}; }

Claim fixture_claim(const std::string& id, const std::string& statement, Quantity quantity,
                    std::optional<Verdict> expected = Verdict::confirmed) {
  const Fixture& f = fixture(id);
  Claim c;
  c.id = id;
  c.statement = statement;
  c.source = f.citation;
  c.quantity = quantity;
  c.targets = {f.target};
  c.asserted = [&f](const FamilySpec&) {
    Asserted a;
    if (f.complete) a.poly = f.poly();
    if (f.total) a.total = BigInt(*f.total);
    return a;
  };
  c.expected = expected;
  return c;
}

std::vector<Claim> build() {
  std::vector<Claim> claims;
  const std::vector<FamilySpec> corpus = standard_corpus();

  claims.push_back({"prop-bounds", "ceil(n/2) <= rho_c(G) <= n-1 for connected G",
                    "size bounds proposition: lower bound since each edge covers at most two vertices",
                    Quantity::bounds, corpus,
                    [](const FamilySpec&) { return Asserted{std::nullopt, std::nullopt, "ceil(n/2) <= rho_c <= n-1"}; }});

  std::vector<FamilySpec> trees = range1(Family::path, 2, 12);
  for (const auto& s : range1(Family::star, 1, 12)) trees.push_back(s);
  claims.push_back({"prop-tree", "E_c(T, x) = x^(n-1) for every tree T on n vertices", "tree proposition",
                    Quantity::cec, trees, [](const FamilySpec& s) {
                      return poly_only(cec_tree(generate(s).vertex_count()));
                    }});

  claims.push_back({"thm-path", "E_c(P_n, x) = x^(n-1)", "path/star/cycle theorem (i)", Quantity::cec,
                    range1(Family::path, 2, 12),
                    [](const FamilySpec& s) { return poly_and_total(cec_path(s.params[0]), 1); }});
  claims.push_back({"thm-star", "E_c(S_n, x) = x^n", "path/star/cycle theorem (ii)", Quantity::cec,
                    range1(Family::star, 1, 12),
                    [](const FamilySpec& s) { return poly_and_total(cec_star(s.params[0]), 1); }});
  claims.push_back({"thm-cycle", "E_c(C_n, x) = n x^(n-1) + x^n, total n+1", "path/star/cycle theorem (iii)",
                    Quantity::cec, range1(Family::cycle, 3, 12), [](const FamilySpec& s) {
                      return poly_and_total(cec_cycle(s.params[0]), s.params[0] + 1);
                    }});

  claims.push_back({"thm-complete-recurrence",
                    "E_c(K_n,1) = 2^C(n,2) - sum_k C(n-1,k-1) E_c(K_k,1) 2^C(n-k,2), E_c(K_1,1) = 1",
                    "complete-graph theorem", Quantity::cec, range1(Family::complete, 1, 8),
                    [](const FamilySpec& s) { return total_only(cec_complete_total(s.params[0])); }});
  for (int n = 2; n <= 6; ++n) {
    claims.push_back(fixture_claim("table-Kn-row-" + std::to_string(n),
                                   "E_c(K_" + std::to_string(n) + ", x) as tabulated", Quantity::cec));
  }

  std::vector<FamilySpec> k2n;
  for (int n = 2; n <= 8; ++n) k2n.push_back({Family::complete_bipartite, {2, n}});
  claims.push_back({"thm-k2n", "E_c(K_{2,n}, x) = sum_{k=1}^{n-1} C(n,k) 2^(n-k) x^(n+k) + x^(2n), total 3^n - 2^n",
                    "K_{2,n} theorem", Quantity::cec, k2n, [](const FamilySpec& s) {
                      const int n = s.params[1];
                      return poly_and_total(cec_k2n(n), boost::multiprecision::pow(BigInt(3), n) -
                                                            boost::multiprecision::pow(BigInt(2), n));
                    }});

  claims.push_back({"thm-friendship", "E_c(F_k, x) = x^(2k) (3+x)^k, total 4^k", "friendship theorem",
                    Quantity::cec, range1(Family::friendship, 1, 6), [](const FamilySpec& s) {
                      return poly_and_total(cec_friendship(s.params[0]),
                                            boost::multiprecision::pow(BigInt(4), s.params[0]));
                    }});

  std::vector<FamilySpec> lollipops;
  for (int m = 2; m <= 5; ++m)
    for (int n = 1; n <= 3; ++n) lollipops.push_back({Family::lollipop, {m, n}});
  claims.push_back({"thm-lollipop", "E_c(L(m,n), x) = x^n E_c(K_m, x), with E_c(K_m, x) from the K_n table",
                    "lollipop theorem", Quantity::cec, lollipops, [](const FamilySpec& s) {
                      const Poly km = fixture("table-Kn-row-" + std::to_string(s.params[0])).poly();
                      return poly_and_total(cec_lollipop(s.params[0], s.params[1], km), eval_int(km, 1));
                    }});

  claims.push_back({"thm-fan", "E_c(F(n), x) = sum_k C(n-2,k) 2^k x^(n-1+k), total 3^(n-2)", "fan theorem",
                    Quantity::cec, range1(Family::fan, 4, 8),
                    [](const FamilySpec& s) {
                      return poly_and_total(cec_fan_claimed(s.params[0]),
                                            boost::multiprecision::pow(BigInt(3), s.params[0] - 2));
                    },
                    Verdict::refuted});

  claims.push_back(fixture_claim("cocktail-n2", "E_c(CP(2), x) = 4x^3 + x^4, total 5", Quantity::cec));
  claims.back().id = "thm-cocktail-n2";
  {
    Claim c{"thm-cocktail-n3-coeffs", "E_c(CP(3), x) has the listed coefficients 384, 740, ..., 90, 24, 1",
            fixture("cocktail-n3").citation, Quantity::cec, {{Family::cocktail_party, {3}}},
            [](const FamilySpec&) { return poly_only(fixture("cocktail-n3").poly()); }, Verdict::refuted};
    claims.push_back(std::move(c));
  }
  claims.push_back({"thm-cocktail-n3-total", "E_c(CP(3), 1) = 2656", fixture("cocktail-n3").citation,
                    Quantity::cec, {{Family::cocktail_party, {3}}},
                    [](const FamilySpec&) { return total_only(BigInt(*fixture("cocktail-n3").total)); }});
  claims.push_back({"thm-cocktail-n3-total-consistency",
                    "the stated total 2656 equals the sum of the stated CP(3) coefficients",
                    fixture("cocktail-n3").citation, Quantity::internal_total, {{Family::cocktail_party, {3}}},
                    [](const FamilySpec&) {
                      const Fixture& f = fixture("cocktail-n3");
                      return poly_and_total(f.poly(), BigInt(*f.total));
                    },
                    Verdict::refuted});
  claims.push_back({"thm-cocktail-n4", "E_c(CP(n), x) = 0 for n >= 4 (no connected edge cover exists)",
                    "cocktail party theorem, case n >= 4", Quantity::cec, range1(Family::cocktail_party, 4, 5),
                    [](const FamilySpec& s) {
                      return poly_and_total(cec_cocktail_claimed(s.params[0]), cec_cocktail_claimed_total(s.params[0]));
                    },
                    Verdict::refuted});

  claims.push_back({"thm-wheel-initial", "E_4 = 38, E_5 = 134, E_6 = 462", "wheel theorem, initial conditions",
                    Quantity::cec, range1(Family::wheel, 4, 6), [](const FamilySpec& s) {
                      return total_only(BigInt(*fixture("wheel-e" + std::to_string(s.params[0])).total));
                    }});
  claims.push_back({"thm-wheel", "E_n = 6E_(n-1) - 11E_(n-2) + 6E_(n-3) for n >= 7", "wheel theorem",
                    Quantity::cec, range1(Family::wheel, 4, 10), [](const FamilySpec& s) {
                      return total_only(wheel_total(s.params[0], WheelMode::recurrence));
                    }});
  claims.push_back({"thm-wheel-closed-form", "E_n = 10 - 40*2^(n-4) + 68*3^(n-4)", "wheel theorem, closed form",
                    Quantity::cec, range1(Family::wheel, 4, 10), [](const FamilySpec& s) {
                      return total_only(wheel_total(s.params[0], WheelMode::closed_form));
                    }});

  const std::vector<FamilySpec> lists = part_lists(4, 3);
  claims.push_back({"thm-main-count",
                    "edge cover count of K_{n_1..n_k} = sum (-1)^(i_1+..+i_k) prod C(n_p,i_p) 2^(allowed edges)",
                    "complete k-partite count theorem (edge cover reading)", Quantity::ec, lists,
                    [](const FamilySpec& s) { return total_only(ec_count_multipartite(s.params)); }});
  claims.push_back({"thm-main-poly", "edge cover polynomial of K_{n_1..n_k} = sum ... (1+x)^(allowed edges)",
                    "complete k-partite polynomial theorem (edge cover reading)", Quantity::ec, lists,
                    [](const FamilySpec& s) { return poly_only(ec_poly_multipartite(s.params)); }});
  claims.push_back({"example-kpartite-ec", "EC(K_{1,1,1}) = 4, EC(K_{2,2}) = 7, EC(K_{1,1,2}) = 16",
                    "worked multipartite examples 1-3", Quantity::ec,
                    {{Family::complete_multipartite, {1, 1, 1}},
                     {Family::complete_multipartite, {2, 2}},
                     {Family::complete_multipartite, {1, 1, 2}}},
                    [](const FamilySpec& s) {
                      std::string id = "kpartite-ec";
                      for (int a : s.params) id += "-" + std::to_string(a);
                      return total_only(BigInt(*fixture(id).total));
                    }});
  claims.push_back({"example-kpartite-cec", "CEC(K_{1,1,1}) = 4, CEC(K_{2,2}) = 5, CEC(K_{1,1,2}) = 14",
                    "worked multipartite examples 1-3", Quantity::cec,
                    {{Family::complete_multipartite, {1, 1, 1}},
                     {Family::complete_multipartite, {2, 2}},
                     {Family::complete_multipartite, {1, 1, 2}}},
                    [](const FamilySpec& s) {
                      std::string id = "kpartite-cec";
                      for (int a : s.params) id += "-" + std::to_string(a);
                      return total_only(BigInt(*fixture(id).total));
                    }});

  for (int d = 1; d <= 3; ++d) {
    claims.push_back(fixture_claim("table-hypercube-d" + std::to_string(d),
                                   "E_c(Q_" + std::to_string(d) + ", x) as tabulated", Quantity::cec));
  }
  claims.push_back({"table-hypercube-d4-leading", "e_c(Q_4, 15) = t(Q_4) = 42,568,192 as printed",
                    fixture("table-hypercube-d4").citation, Quantity::spanning_trees, {{Family::hypercube, {4}}},
                    [](const FamilySpec&) { return total_only(*fixture("table-hypercube-d4").coefficient(15)); },
                    Verdict::refuted});
  claims.push_back({"thm-hypercube-trees", "t(Q_d) = 2^(2^d-d-1) prod_k k^C(d,k)", "hypercube theorem",
                    Quantity::spanning_trees, range1(Family::hypercube, 1, 6),
                    [](const FamilySpec& s) { return total_only(hypercube_spanning_trees(s.params[0])); }});

  for (const char* rowid : {"3-2", "4-2", "4-3", "5-2", "5-3", "5-4"}) {
    claims.push_back(fixture_claim(std::string("table-turan-") + rowid,
                                   std::string("E_c(T(") + rowid[0] + "," + rowid[2] + "), x) as tabulated",
                                   Quantity::cec));
  }
  claims.push_back({"thm-turan-trees", "t(T(n,k)) = n^(k-2) prod_i (n-a_i)^(a_i-1)", "Turan theorem",
                    Quantity::spanning_trees, turan_range(9), [](const FamilySpec& s) {
                      return total_only(turan_spanning_trees(s.params[0], s.params[1]));
                    }});
  claims.push_back({"remark-turan-ie",
                    "inclusion-exclusion over uncovered vertex sets with exponent m - sum|I_i|(n-a_i) + sum|I_i||I_j| "
                    "(edge cover reading)",
                    "Turan inclusion-exclusion remark", Quantity::ec, turan_range(7),
                    [](const FamilySpec& s) { return poly_only(turan_ie_poly(s.params[0], s.params[1])); }});

  claims.push_back({"conj-unimodal", "E_c(G, x) has a unimodal coefficient sequence", "unimodality conjecture",
                    Quantity::unimodal, corpus,
                    [](const FamilySpec&) { return Asserted{std::nullopt, std::nullopt, "unimodal"}; },
                    std::nullopt});

  std::sort(claims.begin(), claims.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
  return claims;
}

}  // namespace

std::vector<FamilySpec> standard_corpus() {
  std::vector<FamilySpec> out;
  auto append = [&](const std::vector<FamilySpec>& more) { out.insert(out.end(), more.begin(), more.end()); };
  append(range1(Family::path, 2, 10));
  append(range1(Family::cycle, 3, 10));
  append(range1(Family::star, 1, 10));
  append(range1(Family::complete, 2, 6));
  for (int n = 2; n <= 6; ++n) out.push_back({Family::complete_bipartite, {2, n}});
  append(range1(Family::friendship, 1, 4));
  for (int m = 2; m <= 4; ++m)
    for (int n = 1; n <= 3; ++n) out.push_back({Family::lollipop, {m, n}});
  append(range1(Family::fan, 3, 8));
  append(range1(Family::wheel, 4, 7));
  append(range1(Family::cocktail_party, 2, 3));
  append(range1(Family::hypercube, 2, 3));
  for (auto [n, k] : {std::pair{3, 2}, {4, 2}, {4, 3}, {5, 2}, {5, 3}, {5, 4}}) out.push_back({Family::turan, {n, k}});
  return out;
}

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> claims = build();
  return claims;
}

std::vector<std::string> claim_ids() {
  std::vector<std::string> ids;
  for (const Claim& c : claim_registry()) ids.push_back(c.id);
  return ids;
}

}  // namespace cec
