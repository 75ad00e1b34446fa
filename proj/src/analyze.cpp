#include "idealkit/analyze.hpp"

#include <limits>

namespace idealkit {

namespace {

// Smallest m with x_var^m in H, or 0 if none.
unsigned pure_power_bound(const LeadingTermSet& H, std::size_t var) {
  unsigned best = 0;
  for (const auto& m : H.monomials) {
    if (m.degree() == 0 || m[var] != m.degree()) continue;
    if (best == 0 || m[var] < best) best = m[var];
  }
  return best;
}

void require_size(const LeadingTermSet& H, const VariableTable& vars) {
  for (const auto& m : H.monomials) {
    if (m.size() != vars.size()) {
      throw Error(ErrorKind::TableMismatch, "leading monomial does not fit the variable table");
    }
  }
}

}  // namespace

LeadingTermSet leading_terms_from_fixture(const std::vector<QPoly>& polys, const std::string& name) {
  LeadingTermSet H{{}, std::nullopt, "fixture " + name};
  for (const auto& f : polys) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial in leading-term fixture");
    H.monomials.push_back(f.terms().front().monomial);
  }
  return H;
}

bool is_zero_dimensional(const LeadingTermSet& H, const VariableTable& vars) {
  require_size(H, vars);
  if (H.is_unit()) return true;
  for (std::size_t v = 0; v < vars.size(); ++v) {
    if (pure_power_bound(H, v) == 0) return false;
  }
  return true;
}

StandardMonomialCount standard_monomials(const LeadingTermSet& H, const VariableTable& vars,
                                         std::uint64_t cap) {
  if (cap == 0) throw Error(ErrorKind::InvalidArgument, "cap must be positive");
  if (!is_zero_dimensional(H, vars)) return {true, 0};
  if (H.is_unit()) return {false, 0};

  const std::size_t n = vars.size();
  std::vector<unsigned> bound(n);
  std::uint64_t box = 1;
  for (std::size_t v = 0; v < n; ++v) {
    bound[v] = pure_power_bound(H, v);
    if (box > cap / bound[v]) {
      throw Error(ErrorKind::CapExceeded,
                  "standard-monomial walk exceeds the cap of " + std::to_string(cap));
    }
    box *= bound[v];
  }

  // Odometer over the box; any standard monomial lies inside it.
  StandardMonomialCount out;
  Monomial m(n);
  for (;;) {
    bool standard = true;
    for (const auto& h : H.monomials) {
      if (h.divides(m)) {
        standard = false;
        break;
      }
    }
    if (standard) ++out.count;
    std::size_t v = 0;
    while (v < n && m[v] + 1 == bound[v]) {
      m.set(v, 0);
      ++v;
    }
    if (v == n) break;
    m.set(v, m[v] + 1);
  }
  return out;
}

}  // namespace idealkit
