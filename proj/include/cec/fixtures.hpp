#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cec/families.hpp"
#include "cec/poly.hpp"

namespace cec {

/// A published table row or stated value, kept verbatim.
///
/// `terms` lists (exponent, coefficient) pairs as printed; `complete` is
/// false when the source elides middle terms. The citation ends with a
/// "[fp:...]" tag holding fixture_fingerprint() of everything else, so any
/// edit to the values has to touch the citation as well.
struct Fixture {
  std::string id;
  FamilySpec target;
  std::vector<std::pair<std::size_t, std::string>> terms;
  bool complete = true;
  std::optional<std::string> total;
  std::string citation;

  /// Only meaningful when complete.
  Poly poly() const;
  std::optional<BigInt> coefficient(std::size_t exponent) const;
};

const std::vector<Fixture>& published_fixtures();
const Fixture& fixture(const std::string& id);

/// FNV-1a over id, target, terms, completeness and total.
std::uint64_t fixture_fingerprint(const Fixture& f);
/// The "[fp:...]" tag parsed back out of the citation.
std::optional<std::uint64_t> cited_fingerprint(const Fixture& f);

}  // namespace cec
