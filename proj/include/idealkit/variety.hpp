#pragma once

#include <cstdint>
#include <vector>

#include "idealkit/polynomial.hpp"

namespace idealkit {

using FpPoint = std::vector<std::uint32_t>;

/// Common zeros in Z_p^n, sorted lexicographically.
struct FpVariety {
  std::uint32_t prime = 0;
  std::vector<FpPoint> points;
};

struct VarietyOptions {
  std::uint64_t max_evaluations = 10'000'000;
  unsigned threads = 1;
};

/// Exhaustive evaluation over Z_p^n. Throws Error{CapExceeded} when p^n is
/// above the cap and Error{BadReduction} when a coefficient does not reduce.
FpVariety brute_force(const std::vector<QPoly>& F, Prime p, const VarietyOptions& options = {});

struct CoverageReport {
  std::uint32_t prime = 0;
  std::vector<FpPoint> system_points;          // V(F)
  std::vector<FpPoint> component_points;       // union of V(G_i)
  std::vector<FpPoint> symmetric_difference;
  std::vector<FpPoint> uncovered;              // in V(F) only
  std::vector<FpPoint> unsound;                // in some V(G_i) only
  bool covered = false;                        // V(F) inside the union
  bool sound = false;                          // the union inside V(F)
};

CoverageReport variety_covered(const std::vector<QPoly>& F,
                               const std::vector<std::vector<QPoly>>& components, Prime p,
                               const VarietyOptions& options = {});

}  // namespace idealkit
