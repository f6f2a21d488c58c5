#include "cec/fixtures.hpp"

#include <cstdio>
#include <stdexcept>

#include "cec/errors.hpp"

namespace cec {
namespace {

using Terms = std::vector<std::pair<std::size_t, std::string>>;

Fixture row(std::string id, Family family, std::vector<int> params, Terms terms, std::string citation,
            bool complete = true, std::optional<std::string> total = std::nullopt) {
  Fixture f;
  f.id = std::move(id);
  f.target = {family, std::move(params)};
  f.terms = std::move(terms);
  f.complete = complete;
  f.total = std::move(total);
  f.citation = std::move(citation);
  return f;
}

std::vector<Fixture> build() {
  std::vector<Fixture> out;
  // complete graphs
  out.push_back(row("table-Kn-row-2", Family::complete, {2}, {{1, "1"}},
                    "complete-graph table, row n=2: x [fp:d33999d3bc30ac55]"));
  out.push_back(row("table-Kn-row-3", Family::complete, {3}, {{2, "3"}, {3, "1"}},
                    "complete-graph table, row n=3: 3x^2+x^3 [fp:1d6a46c97936ad9e]"));
  out.push_back(row("table-Kn-row-4", Family::complete, {4}, {{3, "16"}, {4, "15"}, {5, "6"}, {6, "1"}},
                    "complete-graph table, row n=4: 16x^3+15x^4+6x^5+x^6 [fp:ca23ae6866a85fc3]"));
  out.push_back(row("table-Kn-row-5", Family::complete, {5},
                    {{4, "125"}, {5, "222"}, {6, "205"}, {7, "120"}, {8, "45"}, {9, "10"}, {10, "1"}},
                    "complete-graph table, row n=5 [fp:652e50030272ab98]"));
  out.push_back(row("table-Kn-row-6", Family::complete, {6},
                    {{5, "1296"},
                     {6, "3660"},
                     {7, "5700"},
                     {8, "6165"},
                     {9, "4945"},
                     {10, "2997"},
                     {11, "1365"},
                     {12, "455"},
                     {13, "105"},
                     {14, "15"},
                     {15, "1"}},
                    "complete-graph table, row n=6 [fp:24772d1fa79be385]"));

  // hypercubes; the d=4 row only prints its extreme terms
  out.push_back(row("table-hypercube-d1", Family::hypercube, {1}, {{1, "1"}},
                    "hypercube table, row d=1: x [fp:1c61fe42e023ed78]"));
  out.push_back(row("table-hypercube-d2", Family::hypercube, {2}, {{3, "4"}, {4, "1"}},
                    "hypercube table, row d=2: 4x^3+x^4 [fp:f81933aa90e517e2]"));
  out.push_back(row("table-hypercube-d3", Family::hypercube, {3},
                    {{7, "384"}, {8, "408"}, {9, "212"}, {10, "66"}, {11, "12"}, {12, "1"}},
                    "hypercube table, row d=3 [fp:4b3181ad18ec1e34]"));
  out.push_back(row("table-hypercube-d4", Family::hypercube, {4}, {{15, "42568192"}, {32, "1"}},
                    "hypercube table, row d=4: 42,568,192 x^15 + ... + x^32 [fp:ce2617a78adeaaf1]", false));

  // Turan graphs T(n,k)
  out.push_back(row("table-turan-3-2", Family::turan, {3, 2}, {{2, "1"}},
                    "Turan table, row (3,2): x^2 [fp:ee71dc727805a32a]"));
  out.push_back(row("table-turan-4-2", Family::turan, {4, 2}, {{3, "4"}, {4, "1"}},
                    "Turan table, row (4,2): 4x^3+x^4 [fp:4dcd3b2eb69538ad]"));
  out.push_back(row("table-turan-4-3", Family::turan, {4, 3}, {{3, "8"}, {4, "5"}, {5, "1"}},
                    "Turan table, row (4,3): 8x^3+5x^4+x^5 [fp:f509f8f946827dc1]"));
  out.push_back(row("table-turan-5-2", Family::turan, {5, 2}, {{4, "12"}, {5, "6"}, {6, "1"}},
                    "Turan table, row (5,2): 12x^4+6x^5+x^6 [fp:7023895f74316ce0]"));
  out.push_back(row("table-turan-5-3", Family::turan, {5, 3}, {{4, "45"}, {5, "52"}, {6, "28"}, {7, "8"}, {8, "1"}},
                    "Turan table, row (5,3): 45x^4+52x^5+28x^6+8x^7+x^8 [fp:7130e1d360a54e38]"));
  out.push_back(row("table-turan-5-4", Family::turan, {5, 4},
                    {{4, "75"}, {5, "111"}, {6, "82"}, {7, "36"}, {8, "9"}, {9, "1"}},
                    "Turan table, row (5,4): 75x^4+111x^5+82x^6+36x^7+9x^8+x^9 [fp:c5a33488e20d0df8]"));

  // cocktail party graphs: stated polynomial and stated totals
  out.push_back(row("cocktail-n2", Family::cocktail_party, {2}, {{3, "4"}, {4, "1"}},
                    "cocktail party theorem, n=2: 4x^3+x^4, total 5 [fp:85fab5b7af014ef6]", true, "5"));
  out.push_back(row("cocktail-n3", Family::cocktail_party, {3},
                    {{5, "384"}, {6, "740"}, {7, "744"}, {8, "489"}, {9, "240"}, {10, "90"}, {11, "24"}, {12, "1"}},
                    "cocktail party theorem, n=3 coefficient list and total 2656 [fp:cd3a73e78a5bce13]", true,
                    "2656"));

  // wheel totals stated as initial conditions and the checked value E_7
  out.push_back(row("wheel-e4", Family::wheel, {4}, {}, "wheel theorem, E_4 = 38 [fp:d54c00c86e201ce0]", false, "38"));
  out.push_back(row("wheel-e5", Family::wheel, {5}, {}, "wheel theorem, E_5 = 134 [fp:b9caf69e75860571]", false, "134"));
  out.push_back(row("wheel-e6", Family::wheel, {6}, {}, "wheel theorem, E_6 = 462 [fp:1e20d7a8bcc41ae5]", false, "462"));
  out.push_back(row("wheel-e7", Family::wheel, {7}, {}, "wheel theorem, E_7 = 1526 [fp:1cf3459b8f9456f7]", false, "1526"));

  // worked multipartite examples: edge cover totals and connected totals
  out.push_back(row("kpartite-ec-1-1-1", Family::complete_multipartite, {1, 1, 1}, {},
                    "multipartite example 1: EC = 4 [fp:7bca2b22aa5374c1]", false, "4"));
  out.push_back(row("kpartite-ec-2-2", Family::complete_multipartite, {2, 2}, {},
                    "multipartite example 2: EC = 7 [fp:997755caceeca4d7]", false, "7"));
  out.push_back(row("kpartite-ec-1-1-2", Family::complete_multipartite, {1, 1, 2}, {},
                    "multipartite example 3: EC = 16 [fp:f3f9cc97c63f4f18]", false, "16"));
  out.push_back(row("kpartite-cec-1-1-1", Family::complete_multipartite, {1, 1, 1}, {},
                    "multipartite example 1: CEC = 4 [fp:21ec43b4da3306dc]", false, "4"));
  out.push_back(row("kpartite-cec-2-2", Family::complete_multipartite, {2, 2}, {},
                    "multipartite example 2: CEC = 5 [fp:130525e7c747950c]", false, "5"));
  out.push_back(row("kpartite-cec-1-1-2", Family::complete_multipartite, {1, 1, 2}, {},
                    "multipartite example 3: CEC = 14 [fp:ef448b26a1f8cdcd]", false, "14"));
  return out;
}

void mix(std::uint64_t& h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  h ^= 0xff;
  h *= 0x100000001b3ULL;
}

}  // namespace

Poly Fixture::poly() const {
  if (!complete) throw InvalidParameter("fixture " + id + " does not list every coefficient");
  std::vector<BigInt> c;
  for (const auto& [exp, value] : terms) {
    if (c.size() < exp + 1) c.resize(exp + 1);
    c[exp] = BigInt(value);
  }
  return Poly(std::move(c));
}

std::optional<BigInt> Fixture::coefficient(std::size_t exponent) const {
  for (const auto& [exp, value] : terms)
    if (exp == exponent) return BigInt(value);
  return std::nullopt;
}

const std::vector<Fixture>& published_fixtures() {
  static const std::vector<Fixture> fixtures = build();
  return fixtures;
}

const Fixture& fixture(const std::string& id) {
  for (const Fixture& f : published_fixtures())
    if (f.id == id) return f;
  throw InvalidParameter("no fixture named " + id);
}

std::uint64_t fixture_fingerprint(const Fixture& f) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  mix(h, f.id);
  mix(h, to_string(f.target));
  for (const auto& [exp, value] : f.terms) {
    mix(h, std::to_string(exp));
    mix(h, value);
  }
  mix(h, f.complete ? "complete" : "partial");
  mix(h, f.total.value_or("-"));
  return h;
}

std::optional<std::uint64_t> cited_fingerprint(const Fixture& f) {
  auto pos = f.citation.rfind("[fp:");
  if (pos == std::string::npos || f.citation.size() < pos + 4 + 16 + 1) return std::nullopt;
  const std::string hex = f.citation.substr(pos + 4, 16);
  try {
    std::size_t used = 0;
    std::uint64_t value = std::stoull(hex, &used, 16);
    if (used != 16 || f.citation[pos + 20] != ']') return std::nullopt;
    return value;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace cec
