#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "idealkit/groebner.hpp"

namespace idealkit {

/// Leading monomials of a basis, or a declared set read from a fixture.
struct LeadingTermSet {
  std::vector<Monomial> monomials;
  std::optional<TermOrder> order;  // empty for fixture-sourced sets
  std::string source;              // "basis" or "fixture <name>"

  bool is_unit() const { return monomials.size() == 1 && monomials.front().is_one(); }
};

template <class C>
LeadingTermSet leading_terms(const GroebnerBasis<C>& G) {
  return {G.leading_monomials(), G.order, "basis"};
}

/// Declared leading terms: the canonical leading monomial of each polynomial.
LeadingTermSet leading_terms_from_fixture(const std::vector<QPoly>& polys, const std::string& name);

/// Pure-power test: every variable x has some x^m (m >= 1) in H. The unit set
/// {1} counts as zero-dimensional (its variety is empty).
bool is_zero_dimensional(const LeadingTermSet& H, const VariableTable& vars);

struct StandardMonomialCount {
  bool infinite = false;
  std::uint64_t count = 0;
};

/// Number of monomials divisible by no element of H, by walking the box below
/// the pure-power bounds. Infinite when the pure-power test fails. Throws
/// Error{CapExceeded} when the walk would visit more than `cap` monomials.
StandardMonomialCount standard_monomials(const LeadingTermSet& H, const VariableTable& vars,
                                         std::uint64_t cap = 10'000'000);

}  // namespace idealkit
