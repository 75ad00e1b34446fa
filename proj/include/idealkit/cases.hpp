#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "idealkit/groebner.hpp"

namespace idealkit {

enum class CaseStatus { Confirmed, ConfirmedUpToScalar, DiffsFound, Refuted, Skipped };
const char* to_string(CaseStatus s);

/// One itemized disagreement: a term (or a named check) with the coefficient
/// or verdict the fixture prints and the one that was computed.
struct TermDiff {
  std::string item;
  std::string expected;
  std::string computed;
  std::string entry;     // fixture entry the expected side comes from
  bool suspect = false;  // that entry carries a suspect annotation
};

struct CaseReport {
  std::string case_id;
  CaseStatus status = CaseStatus::Skipped;
  std::string citation;
  std::vector<std::pair<std::string, std::string>> certificates;
  std::vector<TermDiff> diffs;
  double elapsed_ms = 0;
  /// False when the case reads a suspect fixture entry; such cases never
  /// gate the suite.
  bool strict = true;

  const std::string* certificate(const std::string& name) const;
};

/// Numerator over denominator; no cancellation is ever attempted.
struct RationalForm {
  QPoly numerator;
  QPoly denominator;
};

/// a.num*b.den - b.num*a.den with integer content removed and a positive
/// canonical leading coefficient.
QPoly rational_difference_numerator(const RationalForm& a, const RationalForm& b);

/// Writes f = A*v + B and returns (-B, A). Throws Error{NotLinear} unless f
/// has degree exactly one in v.
RationalForm solve_linear_in(const QPoly& f, const std::string& variable);

struct CaseOptions {
  std::filesystem::path fixture_dir;
  OrderKind order = OrderKind::GrevLex;
  GroebnerOptions groebner;
  std::vector<std::uint32_t> sample_primes;   // empty: the default 20
  std::vector<std::uint32_t> variety_primes;  // empty: 7, 11, 13
  unsigned threads = 1;
};

/// Compiled-in fixture directory unless IDEALKIT_FIXTURES is set.
std::filesystem::path default_fixture_dir();
CaseOptions default_case_options();

const std::vector<std::string>& case_ids();

/// Throws Error{InvalidArgument} for an unknown id. Missing fixtures and
/// resource limits end the case as Skipped with the reason as certificate.
CaseReport run_case(const std::string& case_id, const CaseOptions& options);

/// Every case, sorted by id; cases run on up to `options.threads` workers.
std::vector<CaseReport> run_all_cases(const CaseOptions& options);

std::string format_report(const CaseReport& report);
/// {case_id, status, citation, certificates, diffs[], elapsed_ms, strict}
std::string report_json(const CaseReport& report, int indent = 2);
std::string reports_json(const std::vector<CaseReport>& reports, int indent = 2);

// Comparison helpers shared with the CLI and tests.

/// Coefficient-level differences between two polynomials on one table.
std::vector<TermDiff> diff_terms(const QPoly& expected, const QPoly& computed,
                                 const std::string& entry, bool suspect);

/// The ratio expected/computed that occurs on the most shared monomials
/// (ties: first in canonical order). Nullopt when no monomial is shared.
std::optional<Rational> dominant_ratio(const QPoly& expected, const QPoly& computed);

}  // namespace idealkit
