#include "idealkit/variety.hpp"

#include <algorithm>
#include <iterator>
#include <string>
#include <thread>

namespace idealkit {

namespace {

// A polynomial mod p flattened for fast repeated evaluation.
struct Compiled {
  std::vector<std::uint32_t> coeffs;
  std::vector<std::uint16_t> exps;  // row-major, nvars per term
};

std::vector<Compiled> compile(const std::vector<QPoly>& F, Prime p, std::size_t nvars,
                              unsigned& max_deg) {
  std::vector<Compiled> out;
  for (const auto& f : F) {
    if (f.table()->size() != nvars) {
      throw Error(ErrorKind::TableMismatch, "polynomials live on different variable tables");
    }
    Compiled c;
    for (const auto& t : f.terms()) {
      c.coeffs.push_back(reduce_mod_p(t.coeff, p).value());
      for (std::size_t i = 0; i < nvars; ++i) {
        c.exps.push_back(static_cast<std::uint16_t>(t.monomial[i]));
        max_deg = std::max(max_deg, t.monomial[i]);
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::uint64_t checked_power(std::uint64_t p, std::size_t n, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > cap / p) {
      throw Error(ErrorKind::CapExceeded,
                  std::to_string(p) + "^" + std::to_string(n) +
                      " points exceed the evaluation cap of " + std::to_string(cap));
    }
    total *= p;
  }
  return total;
}

// Zeros with first coordinate in [lo, hi), in lexicographic order.
std::vector<FpPoint> enumerate(const std::vector<Compiled>& polys, std::uint32_t p,
                               std::size_t n, unsigned max_deg, std::uint32_t lo,
                               std::uint32_t hi) {
  std::vector<FpPoint> found;
  if (n == 0) {
    bool zero = true;
    for (const auto& c : polys) {
      std::uint64_t acc = 0;
      for (auto v : c.coeffs) acc += v;
      zero = zero && acc % p == 0;
    }
    if (zero && lo == 0) found.push_back({});
    return found;
  }
  // powers[i][e] = point[i]^e, refreshed when coordinate i changes.
  std::vector<std::vector<std::uint64_t>> powers(n, std::vector<std::uint64_t>(max_deg + 1, 1));
  FpPoint point(n, 0);
  point[0] = lo;
  auto refresh = [&](std::size_t i) {
    for (unsigned e = 1; e <= max_deg; ++e) powers[i][e] = powers[i][e - 1] * point[i] % p;
  };
  for (std::size_t i = 0; i < n; ++i) refresh(i);
  if (lo >= hi) return found;
  for (;;) {
    bool zero = true;
    for (const auto& c : polys) {
      std::uint64_t acc = 0;
      for (std::size_t t = 0; t < c.coeffs.size(); ++t) {
        std::uint64_t v = c.coeffs[t];
        const std::uint16_t* e = &c.exps[t * n];
        for (std::size_t i = 0; i < n; ++i) {
          if (e[i]) v = v * powers[i][e[i]] % p;
        }
        acc += v;
      }
      if (acc % p != 0) {
        zero = false;
        break;
      }
    }
    if (zero) found.push_back(point);
    // Advance the odometer, last coordinate fastest.
    std::size_t i = n;
    while (i-- > 0) {
      if (++point[i] < (i == 0 ? hi : p)) {
        refresh(i);
        break;
      }
      if (i == 0) return found;
      point[i] = 0;
      refresh(i);
    }
  }
}

}  // namespace

FpVariety brute_force(const std::vector<QPoly>& F, Prime p, const VarietyOptions& options) {
  if (F.empty()) throw Error(ErrorKind::InvalidArgument, "brute force needs at least one polynomial");
  const std::size_t n = F.front().table()->size();
  checked_power(p.value(), n, options.max_evaluations);
  unsigned max_deg = 0;
  const auto polys = compile(F, p, n, max_deg);

  FpVariety out;
  out.prime = p.value();
  const unsigned workers = n == 0 ? 1u : std::max(1u, std::min(options.threads, p.value()));
  if (workers == 1) {
    out.points = enumerate(polys, p.value(), n, max_deg, 0, p.value());
    return out;
  }
  // Slabs of the first coordinate; concatenating slabs in order keeps the
  // lexicographic sort, whatever order the workers finish in.
  std::vector<std::vector<FpPoint>> parts(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint32_t lo = static_cast<std::uint32_t>(std::uint64_t{p.value()} * w / workers);
    const std::uint32_t hi = static_cast<std::uint32_t>(std::uint64_t{p.value()} * (w + 1) / workers);
    pool.emplace_back([&, w, lo, hi] { parts[w] = enumerate(polys, p.value(), n, max_deg, lo, hi); });
  }
  for (auto& t : pool) t.join();
  for (auto& part : parts) {
    out.points.insert(out.points.end(), std::make_move_iterator(part.begin()),
                      std::make_move_iterator(part.end()));
  }
  return out;
}

CoverageReport variety_covered(const std::vector<QPoly>& F,
                               const std::vector<std::vector<QPoly>>& components, Prime p,
                               const VarietyOptions& options) {
  CoverageReport r;
  r.prime = p.value();
  r.system_points = brute_force(F, p, options).points;
  for (const auto& G : components) {
    if (G.empty()) continue;
    auto pts = brute_force(G, p, options).points;
    std::vector<FpPoint> merged;
    std::set_union(r.component_points.begin(), r.component_points.end(), pts.begin(), pts.end(),
                   std::back_inserter(merged));
    r.component_points = std::move(merged);
  }
  std::set_difference(r.system_points.begin(), r.system_points.end(), r.component_points.begin(),
                      r.component_points.end(), std::back_inserter(r.uncovered));
  std::set_difference(r.component_points.begin(), r.component_points.end(),
                      r.system_points.begin(), r.system_points.end(),
                      std::back_inserter(r.unsound));
  std::set_union(r.uncovered.begin(), r.uncovered.end(), r.unsound.begin(), r.unsound.end(),
                 std::back_inserter(r.symmetric_difference));
  r.covered = r.uncovered.empty();
  r.sound = r.unsound.empty();
  return r;
}

}  // namespace idealkit
