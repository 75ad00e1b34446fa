// Acceptance driver: one PASS/FAIL line per criterion. Criteria known to be
// unattainable are named with --expect-fail; the exit status is zero only
// when the failing set equals that list exactly, so an unexpected failure
// and an unexpected pass both turn the run red.
#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "idealkit/analyze.hpp"
#include "idealkit/cases.hpp"
#include "idealkit/modular.hpp"
#include "idealkit/parse.hpp"
#include "idealkit/variety.hpp"

using namespace idealkit;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<Outcome()> run;
};

CaseOptions g_options;
std::string g_properties;

bool starts_with(const std::string* s, const std::string& prefix) {
  return s && s->rfind(prefix, 0) == 0;
}

std::string status_line(const CaseReport& r) {
  return r.case_id + " " + to_string(r.status);
}

std::vector<QPoly> with_conjugates(std::vector<QPoly> F) {
  const std::size_t n = F.size();
  for (std::size_t i = 0; i < n; ++i) F.push_back(conjugate(F[i]));
  return F;
}

SystemFile load(const std::string& rel) { return load_system(g_options.fixture_dir / rel); }

std::vector<QPoly> final_system() {
  const SystemFile s = load("final_system.sys");
  return with_conjugates({s.entry("f1").poly(), s.entry("f3").poly(), s.entry("f4").poly(),
                          s.entry("S1").poly()});
}

std::vector<QPoly> d1_system() {
  const SystemFile s = load("d1_branch.sys");
  const QPoly d1 = s.entry("d1").poly(), e1 = s.entry("E1").poly();
  return {d1, conjugate(d1), e1, conjugate(e1), s.entry("E2").poly(), s.entry("E3").poly()};
}

std::vector<QPoly> p1_system() {
  const SystemFile s = load("phi11_zero/p1_branch.sys");
  return with_conjugates({s.entry("p1").poly(), s.entry("p3").poly()});
}

Outcome unit_ideal_case(const std::string& id) {
  const CaseReport r = run_case(id, g_options);
  const bool unit = r.certificate("reduced basis") && *r.certificate("reduced basis") == "{1}";
  std::string detail = status_line(r);
  if (const auto* b = r.certificate("basis")) detail += "; " + *b;
  if (!unit) {
    if (const auto* b = r.certificate("reduced basis")) detail += "; reduced basis " + b->substr(0, 80) + "...";
    if (const auto* s = r.certificate("saturated by h")) detail += "; saturated by the excluded loci: " + *s;
  }
  return {r.status == CaseStatus::Confirmed && unit, detail};
}

Outcome criterion_p1() {
  Outcome base = unit_ideal_case("P1_BRANCH");
  const CaseReport s = run_case("S_SYSTEM", g_options);
  const bool s_ok = s.status == CaseStatus::Confirmed ||
                    (s.status == CaseStatus::DiffsFound && !s.diffs.empty());
  base.detail += "; " + status_line(s) + " (" + std::to_string(s.diffs.size()) + " itemized)";
  return {base.pass && s_ok, base.detail};
}

Outcome criterion_factorization() {
  const CaseReport r = run_case("N1_FACTORIZATION", g_options);
  bool confined = true;
  for (const auto& d : r.diffs) confined = confined && d.suspect;
  const bool ok = r.status == CaseStatus::Confirmed || r.status == CaseStatus::ConfirmedUpToScalar ||
                  (r.status == CaseStatus::DiffsFound && confined);
  std::string detail = status_line(r) + "; " + std::to_string(r.diffs.size()) + " diff(s), all in suspect entries: " +
                       (confined ? "yes" : "no");
  if (const auto* c = r.certificate("cofactor")) detail += "; cofactor " + *c;
  return {ok, detail};
}

Outcome criterion_derivations() {
  std::string detail;
  bool ok = true;
  for (const char* id : {"S1_DERIVATION", "N1_DERIVATION"}) {
    const CaseReport r = run_case(id, g_options);
    ok = ok && r.status != CaseStatus::Refuted && r.status != CaseStatus::Skipped;
    if (r.status == CaseStatus::DiffsFound) ok = ok && !r.diffs.empty();
    if (!detail.empty()) detail += "; ";
    detail += status_line(r);
    if (const auto* s = r.certificate("numerator scalar")) detail += " (scalar " + *s + ")";
  }
  return {ok, detail};
}

Outcome criterion_components() {
  const CaseReport r = run_case("P2_COMPONENTS", g_options);
  bool members = true, sound = true;
  for (int i = 1; i <= 6; ++i) {
    members = members && starts_with(r.certificate("G" + std::to_string(i) + " radical membership"), "p2 yes");
  }
  std::size_t coverage = 0;
  for (int p : {7, 11, 13}) {
    const auto* c = r.certificate("mod " + std::to_string(p));
    sound = sound && starts_with(c, "sound yes");
  }
  for (const auto& d : r.diffs) coverage += d.item.find("coverage") != std::string::npos;
  std::string detail = status_line(r) + "; p2 in every radical: " + (members ? "yes" : "no") +
                       "; sound mod 7, 11, 13: " + (sound ? "yes" : "no") + "; " +
                       std::to_string(coverage) + " coverage discrepancies itemized";
  return {r.status != CaseStatus::Skipped && members && sound, detail};
}

Outcome criterion_reality() {
  const CaseReport r = run_case("G6_REALITY", g_options);
  const auto* s = r.certificate("scalar");
  return {r.status == CaseStatus::Confirmed && s && *s != "0" && *s != "none",
          status_line(r) + "; scalar " + (s ? *s : "missing")};
}

Outcome criterion_finiteness() {
  const CaseReport r = run_case("FINITENESS_5102", g_options);
  const TablePtr xy = make_table(std::vector<std::string>{"x", "y"});
  const bool xy_false = !is_zero_dimensional(
      leading_terms_from_fixture({parse_poly("x*y", xy)}, "xy"), *xy);

  // Order invariance on every fixture system small enough to finish under a
  // modest cap in all three orders.
  const SystemFile comp = load("phi11_zero/p2_components.sys");
  const SystemFile p1 = load("phi11_zero/p1_branch.sys");
  std::vector<std::pair<std::string, std::vector<QPoly>>> systems = {
      {"D1_BRANCH", d1_system()},
      {"FINAL_SYSTEM", final_system()},
      {"P1_BRANCH", p1_system()},
      {"p1,p3", {p1.entry("p1").poly(), p1.entry("p3").poly()}},
  };
  for (int i = 1; i <= 6; ++i) {
    const std::string g = "G" + std::to_string(i);
    systems.push_back({g, comp.entry(g).polys});
  }
  GroebnerOptions cap;
  cap.max_pair_reductions = 300;
  cap.max_terms = 400;
  std::size_t checked = 0, invariant = 0;
  std::vector<std::string> skipped;
  for (const auto& [name, F] : systems) {
    const auto& T = *F.front().table();
    std::set<bool> verdicts;
    bool computed = true;
    for (auto kind : {OrderKind::Lex, OrderKind::GrLex, OrderKind::GrevLex}) {
      try {
        verdicts.insert(is_zero_dimensional(leading_terms(buchberger(F, make_order(kind, T), cap)), T));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::ResourceLimit) throw;
        computed = false;
        break;
      }
    }
    if (!computed) {
      skipped.push_back(name);
      continue;
    }
    ++checked;
    invariant += verdicts.size() == 1;
  }
  std::string detail = status_line(r) + "; {x*y} -> " + (xy_false ? "false" : "true") + "; order invariance " +
                       std::to_string(invariant) + "/" + std::to_string(checked) + " systems";
  if (!skipped.empty()) {
    detail += " (over the cap in some order:";
    for (const auto& s : skipped) detail += " " + s;
    detail += ")";
  }
  return {r.status == CaseStatus::Confirmed && xy_false && invariant == checked && checked > 0, detail};
}

Outcome criterion_modular() {
  const auto primes = default_primes(20);
  std::string detail;
  bool ok = true;
  const std::vector<std::pair<std::string, std::vector<QPoly>>> systems = {
      {"FINAL_SYSTEM", final_system()}, {"D1_BRANCH", d1_system()}};
  for (const auto& [name, F] : systems) {
    const auto& T = *F.front().table();
    const TermOrder ord = make_order(OrderKind::GrevLex, T);
    if (!is_trivial(buchberger(F, ord))) continue;
    const SampleReport s = sample_structure(F, ord, primes, {}, g_options.threads);
    std::size_t unit = 0;
    for (const auto& smp : s.samples) {
      unit += smp.status == SampleStatus::Ok && smp.skeleton.size() == 1 &&
              smp.skeleton.front().size() == 1 && smp.skeleton.front().front().is_one();
    }
    // Exceptions must be failed reductions or skeleton dissent; both are
    // classified by sample_structure already.
    const bool gb_ok = unit >= 18 && unit + s.failed.size() + s.dissenting.size() == s.samples.size();

    std::size_t empty = 0;
    std::string why;
    for (auto p : primes) {
      try {
        empty += brute_force(F, Prime(p)).points.empty();
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::CapExceeded && e.kind() != ErrorKind::BadReduction) throw;
        if (why.empty()) why = e.what();
      }
    }
    // Small primes are within reach of enumeration and give a coherence
    // check of the same kind, reported alongside.
    std::string small;
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
      const bool unit_p = is_trivial(gb_mod_p(F, ord, Prime(p)));
      const bool empty_p = brute_force(F, Prime(p)).points.empty();
      // {1} forces an empty variety; the converse can fail at unlucky
      // primes whose basis is larger but whose points lie in extensions.
      small += " " + std::to_string(p) +
               (unit_p ? (empty_p ? ":coherent" : ":incoherent") : (empty_p ? ":unlucky,empty" : ":unlucky,points"));
    }
    const bool bf_ok = empty >= 18;
    ok = ok && gb_ok && bf_ok;
    if (!detail.empty()) detail += "; ";
    detail += name + ": gb_mod_p {1} on " + std::to_string(unit) + "/20, brute_force empty on " +
              std::to_string(empty) + "/20";
    if (!why.empty()) detail += " (" + why + ")";
    detail += "; small primes" + small;
  }
  return {ok, detail};
}

Outcome criterion_properties() {
  if (g_properties.empty()) return {false, "property test binary not given"};
  const std::string cmd = g_properties + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return {rc == 0, "randomized property suite exit status " + std::to_string(rc)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> expect_fail;
  g_options = default_case_options();
  g_options.threads = 4;
  app.add_option("--expect-fail", expect_fail, "Criteria known to be unattainable")->delimiter(',');
  app.add_option("--properties", g_properties, "Path of the property test binary");
  app.add_option("-j,--threads", g_options.threads, "Worker threads");
  std::vector<int> only;
  std::string report_path;
  app.add_option("--report", report_path, "Also write the report to this file");
  app.add_option("--only", only, "Run only these criteria")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "FINAL_SYSTEM reduces to {1}", 60, [] { return unit_ideal_case("FINAL_SYSTEM"); }},
      {2, "P1_BRANCH reduces to {1}; s1..s3 membership or itemized diffs", 60, criterion_p1},
      {3, "D1_BRANCH reduces to {1}", 60, [] { return unit_ideal_case("D1_BRANCH"); }},
      {4, "N1 factorization diffs confined to suspect terms", 5, criterion_factorization},
      {5, "S1 and N1 derivations not refuted", 10, criterion_derivations},
      {6, "p2 lies on every component; components sound mod 7, 11, 13", 300, criterion_components},
      {7, "G6 reality scalar", 1, criterion_reality},
      {8, "zero-dimensionality verdicts", 1, criterion_finiteness},
      {9, "modular coherence for unit-ideal systems", 120, criterion_modular},
      {10, "engine properties on randomized inputs", 120, criterion_properties},
  };

  std::ostringstream log;
  auto emit = [&](const std::string& text) {
    std::cout << text << std::flush;
    log << text;
  };
  std::set<int> failed;
  std::size_t ran = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    ++ran;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = s <= c.budget_s;
    const bool pass = o.pass && in_time;
    if (!pass) failed.insert(c.id);
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", s, c.budget_s);
    emit(std::string(pass ? "PASS" : "FAIL") + "  criterion " + std::to_string(c.id) + ": " + c.title + " [" +
         timing + (in_time ? "" : ", over budget") + "]\n      " + o.detail + "\n");
  }
  const std::set<int> expected(expect_fail.begin(), expect_fail.end());
  std::string summary = "\n" + std::to_string(ran - failed.size()) + "/" + std::to_string(ran) + " criteria pass";
  if (!expected.empty()) {
    summary += "; expected failures:";
    for (int e : expected) summary += " " + std::to_string(e);
  }
  emit(summary + "\n");
  int status = 0;
  if (!only.empty()) {
    status = failed.empty() ? 0 : 1;
  } else if (failed != expected) {
    emit("failing set differs from the expected one\n");
    status = 1;
  }
  if (!report_path.empty()) std::ofstream(report_path) << log.str();
  return status;
}
