#include "idealkit/modular.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "idealkit/parse.hpp"

namespace idealkit {

namespace {

bool skeleton_less(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Monomial& x, const Monomial& y) {
                                        return canonical_compare(x, y) > 0;
                                      });
}

PrimeSample sample_one(const std::vector<QPoly>& F, const TermOrder& ord, std::uint32_t p,
                       const GroebnerOptions& options) {
  PrimeSample s;
  s.prime = p;
  try {
    s.skeleton = skeleton_of(gb_mod_p(F, ord, Prime(p), options));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BadReduction) s.status = SampleStatus::BadReduction;
    else if (e.kind() == ErrorKind::ResourceLimit) s.status = SampleStatus::ResourceLimit;
    else throw;
    s.detail = e.what();
  }
  return s;
}

}  // namespace

template <class C>
Skeleton skeleton_of(const GroebnerBasis<C>& G) {
  Skeleton s;
  for (const auto& g : G.generators) {
    std::vector<Monomial> ms;
    for (const auto& t : g.terms()) ms.push_back(t.monomial);
    s.push_back(std::move(ms));
  }
  std::sort(s.begin(), s.end(), skeleton_less);
  return s;
}

template Skeleton skeleton_of(const QBasis&);
template Skeleton skeleton_of(const FpBasis&);

const char* to_string(SampleStatus s) {
  switch (s) {
    case SampleStatus::Ok: return "Ok";
    case SampleStatus::BadReduction: return "BadReduction";
    case SampleStatus::ResourceLimit: return "ResourceLimit";
  }
  return "?";
}

FpBasis gb_mod_p(const std::vector<QPoly>& F, const TermOrder& ord, Prime p,
                 const GroebnerOptions& options) {
  std::vector<FpPoly> reduced;
  reduced.reserve(F.size());
  for (const auto& f : F) reduced.push_back(reduce_mod(f, p));
  return buchberger(reduced, ord, options);
}

std::vector<std::uint32_t> default_primes(std::size_t count) {
  return primes_between(1u << 15, 1u << 16, count);
}

SampleReport sample_structure(const std::vector<QPoly>& F, const TermOrder& ord,
                              const std::vector<std::uint32_t>& primes,
                              const GroebnerOptions& options, unsigned threads) {
  if (std::set<std::uint32_t>(primes.begin(), primes.end()).size() != primes.size()) {
    throw Error(ErrorKind::InvalidArgument, "sample primes must be distinct");
  }
  for (auto p : primes) (void)Prime(p);

  SampleReport report;
  report.samples.resize(primes.size());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(primes.size())));
  if (threads == 1) {
    for (std::size_t k = 0; k < primes.size(); ++k) {
      report.samples[k] = sample_one(F, ord, primes[k], options);
    }
  } else {
    // Each worker writes only to the slots it claims, so the merge is the
    // vector itself, indexed by position in the prime list.
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t k; (k = next.fetch_add(1)) < primes.size();) {
            report.samples[k] = sample_one(F, ord, primes[k], options);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<std::pair<Skeleton, std::size_t>> tally;
  for (const auto& s : report.samples) {
    if (s.status != SampleStatus::Ok) {
      report.failed.push_back(s.prime);
      continue;
    }
    auto it = std::find_if(tally.begin(), tally.end(),
                           [&](const auto& entry) { return entry.first == s.skeleton; });
    if (it == tally.end()) tally.emplace_back(s.skeleton, 1);
    else ++it->second;
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k < tally.size(); ++k) {
    if (tally[k].second > tally[best].second) best = k;
  }
  if (!tally.empty()) {
    report.majority = tally[best].first;
    report.agreeing = tally[best].second;
  }
  for (const auto& s : report.samples) {
    if (s.status == SampleStatus::Ok && s.skeleton != report.majority) {
      report.dissenting.push_back(s.prime);
    }
  }
  return report;
}

std::string format_skeleton(const Skeleton& s, const VariableTable& table) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < s[i].size(); ++j) {
      if (j) out += " ";
      out += format_monomial(s[i][j], table);
    }
    out += "]";
  }
  return out + "}";
}

}  // namespace idealkit
