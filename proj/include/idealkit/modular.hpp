#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "idealkit/groebner.hpp"

namespace idealkit {

/// Monomial structure of a basis with coefficients discarded: one canonical
/// monomial list per generator, generators sorted.
using Skeleton = std::vector<std::vector<Monomial>>;

template <class C>
Skeleton skeleton_of(const GroebnerBasis<C>& G);

enum class SampleStatus { Ok, BadReduction, ResourceLimit };
const char* to_string(SampleStatus s);

struct PrimeSample {
  std::uint32_t prime = 0;
  SampleStatus status = SampleStatus::Ok;
  Skeleton skeleton;
  std::string detail;  // failure message, empty when Ok
};

struct SampleReport {
  std::vector<PrimeSample> samples;  // in the order of the requested primes
  Skeleton majority;
  std::size_t agreeing = 0;
  std::vector<std::uint32_t> dissenting;
  std::vector<std::uint32_t> failed;
};

/// Reduces every generator mod p and runs the prime-field engine.
/// Throws Error{BadReduction} and Error{ResourceLimit}.
FpBasis gb_mod_p(const std::vector<QPoly>& F, const TermOrder& ord, Prime p,
                 const GroebnerOptions& options = {});

/// The first `count` primes above 2^15.
std::vector<std::uint32_t> default_primes(std::size_t count = 20);

/// One gb_mod_p per prime, optionally on `threads` workers. The report does
/// not depend on the number of workers or on completion order. The majority
/// skeleton is the most frequent one among successful samples; ties go to the
/// skeleton seen first in prime-list order.
SampleReport sample_structure(const std::vector<QPoly>& F, const TermOrder& ord,
                              const std::vector<std::uint32_t>& primes,
                              const GroebnerOptions& options = {}, unsigned threads = 1);

std::string format_skeleton(const Skeleton& s, const VariableTable& table);

}  // namespace idealkit
