#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "idealkit/analyze.hpp"
#include "idealkit/cases.hpp"
#include "idealkit/groebner.hpp"
#include "idealkit/modular.hpp"
#include "idealkit/parse.hpp"
#include "idealkit/variety.hpp"

namespace idealkit {

namespace {

using json = nlohmann::ordered_json;

struct CliConfig {
  std::string file;
  std::string order;  // empty: the file's @order, else grevlex
  std::vector<std::string> priority;
  std::vector<std::string> entries;
  std::string target;
  bool no_conj = false;
  bool json = false;
  std::string format = "text";
  std::uint64_t max_pairs = GroebnerOptions{}.max_pair_reductions;
  std::uint64_t max_terms = GroebnerOptions{}.max_terms;
  std::uint64_t max_evaluations = VarietyOptions{}.max_evaluations;
  std::uint32_t prime = 0;
  std::size_t count = 20;
  std::uint64_t window_lo = 1u << 15;
  std::uint64_t window_hi = 1u << 16;
  std::vector<std::uint32_t> primes;
  unsigned threads = 1;
  std::string fixtures;
  std::string case_id;
};

GroebnerOptions groebner_options(const CliConfig& c) {
  GroebnerOptions o;
  o.max_pair_reductions = c.max_pairs;
  o.max_terms = c.max_terms;
  return o;
}

TermOrder effective_order(const CliConfig& c, const SystemFile& s, const TablePtr& table) {
  if (c.order.empty() && c.priority.empty() && s.order && same_table(table, s.table)) return *s.order;
  OrderKind kind = c.order.empty() ? (s.order ? s.order->kind() : OrderKind::GrevLex)
                                   : parse_order_kind(c.order);
  return make_order(kind, *table, c.priority);
}

// Conjugates are never stored in fixtures; a system whose header declares
// conjugate pairs stands for its closure under conjugation.
std::vector<QPoly> close_under_conj(const CliConfig& c, std::vector<QPoly> F) {
  if (c.no_conj || F.empty() || F.front().table()->conj_pairs().empty()) return F;
  const std::size_t n = F.size();
  for (std::size_t i = 0; i < n; ++i) {
    QPoly g = conjugate(F[i]);
    if (std::find(F.begin(), F.end(), g) == F.end()) F.push_back(std::move(g));
  }
  return F;
}

std::vector<QPoly> selected(const CliConfig& c, const SystemFile& s, bool exclude_target) {
  std::vector<QPoly> F;
  if (c.entries.empty()) {
    for (const auto& e : s.entries) {
      if (exclude_target && e.name == c.target) continue;
      F.insert(F.end(), e.polys.begin(), e.polys.end());
    }
  } else {
    for (const auto& name : c.entries) {
      const auto& e = s.entry(name);
      F.insert(F.end(), e.polys.begin(), e.polys.end());
    }
  }
  if (F.empty()) throw Error(ErrorKind::InvalidArgument, s.source + ": no polynomials selected");
  return F;
}

json stats_json(const GroebnerStats& st) {
  return {{"pairs_created", st.pairs_created},   {"pairs_reduced", st.pairs_reduced},
          {"zero_reductions", st.zero_reductions}, {"product_criterion", st.product_criterion},
          {"chain_criterion", st.chain_criterion}, {"max_terms", st.max_terms}};
}

std::string point_text(const FpPoint& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? " " : "") + std::to_string(p[i]);
  return out;
}

int cmd_gb(const CliConfig& c, std::ostream& out) {
  const SystemFile s = load_system(c.file);
  const auto F = close_under_conj(c, selected(c, s, false));
  const TermOrder ord = effective_order(c, s, s.table);
  const QBasis G = buchberger(F, ord, groebner_options(c));
  if (c.json) {
    json j{{"order", describe_order(ord, *s.table)}, {"generators", json::array()},
           {"stats", stats_json(G.stats)}};
    for (const auto& g : G.generators) j["generators"].push_back(print_poly(g));
    out << j.dump(2) << "\n";
  } else {
    out << "# order " << describe_order(ord, *s.table) << "\n";
    for (const auto& g : G.generators) out << print_poly(g) << "\n";
  }
  return kExitOk;
}

int cmd_nf(const CliConfig& c, std::ostream& out) {
  const SystemFile s = load_system(c.file);
  const auto& target = s.entry(c.target);
  const auto F = close_under_conj(c, selected(c, s, true));
  const TermOrder ord = effective_order(c, s, s.table);
  const QBasis G = buchberger(F, ord, groebner_options(c));
  json arr = json::array();
  for (const auto& f : target.polys) {
    const QPoly r = normal_form(f, G.generators, ord);
    if (c.json) arr.push_back(print_poly(r));
    else out << print_poly(r) << "\n";
  }
  if (c.json) {
    out << json{{"order", describe_order(ord, *s.table)}, {"entry", target.name}, {"normal_forms", arr}}.dump(2)
        << "\n";
  }
  return kExitOk;
}

int cmd_radical(const CliConfig& c, std::ostream& out) {
  const SystemFile s = load_system(c.file);
  const auto& target = s.entry(c.target);
  const auto F = close_under_conj(c, selected(c, s, true));
  const TablePtr ext = extend_table(s.table, "z");
  const TermOrder ord = effective_order(c, s, ext);
  bool all = true;
  json arr = json::array();
  for (const auto& f : target.polys) {
    const bool member = radical_member(f, F, ord, groebner_options(c));
    all = all && member;
    if (c.json) arr.push_back(member);
    else out << (member ? "true" : "false") << "\n";
  }
  if (c.json) out << json{{"entry", target.name}, {"member", arr}}.dump(2) << "\n";
  return all ? kExitOk : kExitRefuted;
}

int cmd_solve(const CliConfig& c, std::ostream& out) {
  const SystemFile s = load_system(c.file);
  const auto F = close_under_conj(c, selected(c, s, false));
  VarietyOptions vo;
  vo.max_evaluations = c.max_evaluations;
  vo.threads = c.threads;
  const FpVariety V = brute_force(F, Prime(c.prime), vo);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < s.table->size(); ++i) names.push_back(s.table->name(i));
  if (c.json) {
    json j{{"prime", V.prime}, {"variables", names}, {"points", json::array()}};
    for (const auto& p : V.points) j["points"].push_back(p);
    out << j.dump(2) << "\n";
  } else {
    out << "# " << V.points.size() << " points mod " << V.prime << " over";
    for (const auto& n : names) out << " " << n;
    out << "\n";
    for (const auto& p : V.points) out << point_text(p) << "\n";
  }
  return kExitOk;
}

int cmd_finiteness(const CliConfig& c, std::ostream& out) {
  const SystemFile s = load_system(c.file);
  LeadingTermSet H;
  std::string order_text;
  if (!c.target.empty()) {
    H = leading_terms_from_fixture(s.entry(c.target).polys, c.target);
  } else {
    const TermOrder ord = effective_order(c, s, s.table);
    H = leading_terms(buchberger(close_under_conj(c, selected(c, s, false)), ord, groebner_options(c)));
    order_text = describe_order(ord, *s.table);
  }
  const bool finite = is_zero_dimensional(H, *s.table);
  const auto count = standard_monomials(H, *s.table);
  const std::string count_text = count.infinite ? "infinite" : std::to_string(count.count);
  if (c.json) {
    json j{{"source", H.source}, {"zero_dimensional", finite}, {"standard_monomials", count_text}};
    if (!order_text.empty()) j["order"] = order_text;
    out << j.dump(2) << "\n";
  } else {
    if (!order_text.empty()) out << "# order " << order_text << "\n";
    out << "zero-dimensional: " << (finite ? "true" : "false") << "\n";
    out << "standard monomials: " << count_text << "\n";
  }
  return kExitOk;
}

SystemFile map_system(const SystemFile& s, const TablePtr& table,
                      const std::function<QPoly(const QPoly&)>& fn, const std::string& suffix) {
  SystemFile r{s.source, table, std::nullopt, {}};
  for (const auto& e : s.entries) {
    SystemEntry m{e.name + suffix, e.citation, e.suspect, {}, e.line};
    for (const auto& f : e.polys) m.polys.push_back(fn(f));
    r.entries.push_back(std::move(m));
  }
  return r;
}

int cmd_dehom(const CliConfig& c, std::ostream& out) {
  const SystemFile s = load_system(c.file);
  const Dehomogenization scheme = standard_dehomogenization(s.table);
  out << print_system(map_system(s, scheme.target,
                                 [&](const QPoly& f) { return dehomogenize(f, scheme); }, ""));
  return kExitOk;
}

int cmd_conj(const CliConfig& c, std::ostream& out) {
  const SystemFile s = load_system(c.file);
  out << print_system(map_system(s, s.table, [](const QPoly& f) { return conjugate(f); }, "_conj"));
  return kExitOk;
}

int cmd_sample(const CliConfig& c, std::ostream& out) {
  const SystemFile s = load_system(c.file);
  const auto F = close_under_conj(c, selected(c, s, false));
  const TermOrder ord = effective_order(c, s, s.table);
  const auto primes = c.primes.empty() ? primes_between(c.window_lo, c.window_hi, c.count) : c.primes;
  const SampleReport r = sample_structure(F, ord, primes, groebner_options(c), c.threads);
  if (c.json) {
    json j{{"order", describe_order(ord, *s.table)},
           {"majority", format_skeleton(r.majority, *s.table)},
           {"agreeing", r.agreeing},
           {"samples", json::array()}};
    for (const auto& p : r.samples) {
      j["samples"].push_back({{"prime", p.prime}, {"status", to_string(p.status)},
                              {"agrees", p.status == SampleStatus::Ok && p.skeleton == r.majority},
                              {"detail", p.detail}});
    }
    out << j.dump(2) << "\n";
  } else {
    out << "# order " << describe_order(ord, *s.table) << "\n";
    out << "majority skeleton: " << format_skeleton(r.majority, *s.table) << "\n";
    out << "agreeing: " << r.agreeing << "/" << r.samples.size() << "\n";
    for (const auto& p : r.samples) {
      out << p.prime << " " << to_string(p.status);
      if (p.status == SampleStatus::Ok) out << (p.skeleton == r.majority ? " agrees" : " dissents");
      else out << " " << p.detail;
      out << "\n";
    }
  }
  return kExitOk;
}

bool passes(const CaseReport& r) {
  if (r.status == CaseStatus::Confirmed || r.status == CaseStatus::ConfirmedUpToScalar) return true;
  return !r.strict && r.status != CaseStatus::Skipped;
}

// Exit code for one failing report.
int failure_code(const CaseReport& r) {
  if (r.status != CaseStatus::Skipped) return kExitRefuted;
  const std::string* why = r.certificate("skipped");
  const bool resources = why && why->rfind(to_string(ErrorKind::ResourceLimit), 0) == 0;
  return resources ? kExitResource : kExitUsage;
}

int cmd_verify(const CliConfig& c, std::ostream& out) {
  CaseOptions o = default_case_options();
  if (!c.fixtures.empty()) o.fixture_dir = c.fixtures;
  if (!c.order.empty()) o.order = parse_order_kind(c.order);
  o.groebner = groebner_options(c);
  o.sample_primes = c.primes.empty() ? primes_between(c.window_lo, c.window_hi, c.count) : c.primes;
  o.threads = c.threads;
  std::vector<CaseReport> reports;
  if (c.case_id == "all") reports = run_all_cases(o);
  else reports.push_back(run_case(c.case_id, o));

  if (c.json) {
    out << (c.case_id == "all" ? reports_json(reports, 2) : report_json(reports.front(), 2)) << "\n";
  } else {
    for (const auto& r : reports) out << format_report(r);
  }
  // A refutation outranks a missing fixture, which outranks a resource limit.
  int code = kExitOk;
  auto rank = [](int c) { return c == kExitRefuted ? 3 : c == kExitUsage ? 2 : c == kExitResource ? 1 : 0; };
  for (const auto& r : reports) {
    if (c.case_id == "all" && !r.strict) continue;
    if (passes(r)) continue;
    const int f = failure_code(r);
    if (rank(f) > rank(code)) code = f;
  }
  return code;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ResourceLimit:
    case ErrorKind::CapExceeded:
      return kExitResource;
    default:
      return kExitUsage;
  }
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact polynomial-ideal toolkit"};
  app.require_subcommand(1);
  CliConfig c;
  std::string env_dir = default_fixture_dir().string();

  auto common = [&](CLI::App* sub, bool with_order) {
    sub->add_option("file", c.file, "System file")->required();
    if (with_order) {
      sub->add_option("--order", c.order, "Term order")
          ->check(CLI::IsMember({"lex", "grlex", "grevlex"}));
      sub->add_option("--vars", c.priority, "Variable priority, most significant first")
          ->delimiter(',');
      sub->add_option("--max-pairs", c.max_pairs, "Cap on pair reductions");
      sub->add_option("--max-terms", c.max_terms, "Cap on terms per polynomial");
    }
    sub->add_option("-e,--entry", c.entries, "Entries forming the ideal (default: all)");
    sub->add_flag("--no-conj", c.no_conj, "Do not close the system under conjugation");
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis");
  common(gb, true);
  auto* nf = app.add_subcommand("nf", "Normal form of an entry modulo the other entries");
  common(nf, true);
  nf->add_option("-f,--poly", c.target, "Entry to reduce")->required();
  auto* rad = app.add_subcommand("radical", "Radical membership of an entry in the other entries");
  common(rad, true);
  rad->add_option("-f,--poly", c.target, "Entry to test")->required();
  auto* solve = app.add_subcommand("solve-zp", "All common zeros over Z_p by enumeration");
  common(solve, false);
  solve->add_option("-p,--prime", c.prime, "Prime modulus")->required();
  solve->add_option("--max-evals", c.max_evaluations, "Cap on enumerated points");
  solve->add_option("-j,--threads", c.threads, "Worker threads");
  auto* fin = app.add_subcommand("finiteness", "Zero-dimensionality via leading terms");
  common(fin, true);
  fin->add_option("-f,--leading", c.target, "Entry listing declared leading terms");
  auto* dehom = app.add_subcommand("dehom", "Dehomogenize a spin-alphabet system");
  dehom->add_option("file", c.file, "System file")->required();
  auto* conj = app.add_subcommand("conj", "Conjugate every entry");
  conj->add_option("file", c.file, "System file")->required();
  auto* sample = app.add_subcommand("sample", "Monomial structure over sampled primes");
  common(sample, true);
  sample->add_option("-n,--count", c.count, "Number of primes");
  sample->add_option("--window-lo", c.window_lo, "Primes above this bound");
  sample->add_option("--window-hi", c.window_hi, "Primes below this bound");
  sample->add_option("--primes", c.primes, "Explicit primes")->delimiter(',');
  sample->add_option("-j,--threads", c.threads, "Worker threads");
  auto* verify = app.add_subcommand("verify", "Run a scripted case or all of them");
  verify->add_option("case", c.case_id, "Case id or 'all'")->required();
  verify->add_option("--order", c.order, "Term order")->check(CLI::IsMember({"lex", "grlex", "grevlex"}));
  verify->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--fixtures", c.fixtures, "Fixture directory")->default_str(env_dir);
  verify->add_option("--max-pairs", c.max_pairs, "Cap on pair reductions");
  verify->add_option("--max-terms", c.max_terms, "Cap on terms per polynomial");
  verify->add_option("-n,--count", c.count, "Number of sampled primes");
  verify->add_option("--primes", c.primes, "Explicit sample primes")->delimiter(',');
  verify->add_option("-j,--threads", c.threads, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    for (auto* sub : app.get_subcommands()) err << sub->help();
    if (app.get_subcommands().empty()) err << app.help();
    return kExitUsage;
  }
  c.json = c.format == "json";

  try {
    if (gb->parsed()) return cmd_gb(c, out);
    if (nf->parsed()) return cmd_nf(c, out);
    if (rad->parsed()) return cmd_radical(c, out);
    if (solve->parsed()) return cmd_solve(c, out);
    if (fin->parsed()) return cmd_finiteness(c, out);
    if (dehom->parsed()) return cmd_dehom(c, out);
    if (conj->parsed()) return cmd_conj(c, out);
    if (sample->parsed()) return cmd_sample(c, out);
    if (verify->parsed()) return cmd_verify(c, out);
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace idealkit
