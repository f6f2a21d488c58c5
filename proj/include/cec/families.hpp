#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cec/graph.hpp"

namespace cec {

enum class Family {
  path,
  cycle,
  star,
  complete,
  complete_bipartite,
  complete_multipartite,
  friendship,
  lollipop,
  fan,
  wheel,
  cocktail_party,
  hypercube,
  turan,
};

/// A named graph family plus its integer parameters.
///
/// Parameter conventions and vertex labels:
///  - path [n]: n >= 1 vertices, edges i -- i+1.
///  - cycle [n]: n >= 3, edges i -- i+1 and 0 -- n-1.
///  - star [n]: n >= 1 leaves; hub 0, leaves 1..n.
///  - complete [n]: n >= 1.
///  - complete_bipartite [a, b]: parts {0..a-1} and {a..a+b-1}.
///  - complete_multipartite [a_1, ..., a_k]: k >= 2, parts laid out consecutively.
///  - friendship [k]: hub 0, triangle i uses vertices 2i-1 and 2i.
///  - lollipop [m, n]: K_m on 0..m-1 (m >= 2) with a path of n >= 1 edges
///    hanging from vertex m-1 through m, m+1, ..., m+n-1.
///  - fan [n]: n >= 3 vertices; hub 0 joined to the path 1 -- 2 -- ... -- n-1.
///  - wheel [n]: n >= 4 vertices; hub 0, rim cycle 1..n-1.
///  - cocktail_party [n]: n >= 2 pairs {2i, 2i+1}; every cross-pair edge.
///  - hypercube [d]: 1 <= d <= 12; vertex = coordinate word, edges flip one bit.
///  - turan [n, k]: 2 <= k < n; the first n mod k parts have ceil(n/k) vertices.
struct FamilySpec {
  Family family = Family::path;
  std::vector<int> params;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
const std::vector<Family>& all_families();

/// Throws InvalidParameter on an arity or range violation.
void validate(const FamilySpec& spec);

Graph generate(const FamilySpec& spec);

/// Part sizes used by turan [n, k].
std::vector<int> turan_parts(int n, int k);

/// "cycle(5)", "turan(5,3)".
std::string to_string(const FamilySpec& spec);

}  // namespace cec
