// Command-line front end. Links only the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "totcof/totcof.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitStrict = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct Job {
  std::string command;
  std::string generate;
  std::string poset_file;
  std::string diagram_file;
  std::string constant;
  std::string random_diagram;
  bool random_given = false;
  std::string field = "q";
  std::uint64_t seed = 0;
  bool strict = false;
  std::string degrees;
  std::string out;
  std::optional<int> p;
  int q = 0;
  int r_max = -1;
  bool json = false;
};

struct Failure {
  int exit_code;
  std::string message;
};

[[noreturn]] void input_failure(const std::string& message) { throw Failure{kExitInput, message}; }

void check_status(totcof_status s) {
  if (s == TOTCOF_OK) return;
  const int code = s == TOTCOF_ERR_INTERNAL ? kExitInternal : kExitInput;
  throw Failure{code, std::string(totcof_status_name(s)) + ": " + totcof_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) input_failure("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "lo..hi"
std::pair<int, int> parse_window(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) input_failure("--degrees expects lo..hi, got '" + s + "'");
  try {
    std::size_t used = 0;
    const int lo = std::stoi(s.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(s);
    const std::string rest = s.substr(dots + 2);
    const int hi = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(s);
    if (lo > hi) input_failure("--degrees window " + s + " is empty");
    return {lo, hi};
  } catch (const std::logic_error&) {
    input_failure("--degrees expects lo..hi, got '" + s + "'");
  }
}

// "seed=N", "N", or empty for --seed.
std::uint64_t parse_random_seed(const std::string& s, std::uint64_t fallback) {
  if (s.empty()) return fallback;
  const std::string digits = s.rfind("seed=", 0) == 0 ? s.substr(5) : s;
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    input_failure("--random-diagram expects seed=N, got '" + s + "'");
  try {
    return std::stoull(digits);
  } catch (const std::out_of_range&) {
    input_failure("--random-diagram seed out of range: '" + s + "'");
  }
}

struct Handles {
  totcof_pair* pair = nullptr;
  totcof_diagram* diagram = nullptr;
  totcof_report* report = nullptr;
  ~Handles() {
    totcof_report_free(report);
    totcof_diagram_free(diagram);
    totcof_pair_free(pair);
  }
};

bool needs_diagram(const std::string& c) {
  return c == "limp" || c == "gamma" || c == "holim" || c == "verify" || c == "ss";
}

int run(const Job& job) {
  Handles h;
  std::string input;
  std::string diagram_text;

  if (!job.generate.empty() && !job.poset_file.empty()) input_failure("give exactly one of --generate and --poset");
  if (!job.generate.empty()) {
    check_status(totcof_pair_generate(job.generate.c_str(), &h.pair));
    input = "generate " + job.generate;
  } else if (!job.poset_file.empty()) {
    check_status(totcof_pair_parse_json(read_file(job.poset_file).c_str(), &h.pair));
    input = "poset " + job.poset_file;
  }

  if (needs_diagram(job.command)) {
    const int sources = (!job.diagram_file.empty()) + (!job.constant.empty()) + (job.random_given ? 1 : 0);
    if (sources != 1) input_failure(job.command + " needs exactly one of --diagram, --constant, --random-diagram");
    if (!job.diagram_file.empty()) {
      diagram_text = read_file(job.diagram_file);
      if (!h.pair) {
        check_status(totcof_diagram_json_pair(diagram_text.c_str(), &h.pair));
        input = "poset embedded in " + job.diagram_file;
      }
    }
  }
  if (!h.pair) input_failure(job.command + " needs a poset: --generate SPEC or --poset FILE");

  if (needs_diagram(job.command)) {
    if (!job.diagram_file.empty()) {
      check_status(totcof_diagram_parse_json(diagram_text.c_str(), h.pair, &h.diagram));
      input += ", diagram " + job.diagram_file;
    } else if (!job.constant.empty()) {
      check_status(totcof_diagram_constant(h.pair, job.constant.c_str(), &h.diagram));
      input += ", constant " + job.constant;
    } else {
      const std::uint64_t seed = parse_random_seed(job.random_diagram, job.seed);
      check_status(totcof_diagram_random(h.pair, seed, &h.diagram));
      input += ", random diagram seed=" + std::to_string(seed);
    }
  }

  totcof_options o;
  totcof_options_init(&o);
  o.field = job.field.c_str();
  if (!job.degrees.empty()) {
    const auto [lo, hi] = parse_window(job.degrees);
    o.has_degrees = 1;
    o.degree_lo = lo;
    o.degree_hi = hi;
  }
  if (job.p) {
    o.has_p = 1;
    o.p = *job.p;
  }
  o.q = job.q;
  o.r_max = job.r_max;
  o.input = input.c_str();

  const std::string& c = job.command;
  if (c == "check") check_status(totcof_check(h.pair, &o, &h.report));
  else if (c == "homology") check_status(totcof_homology(h.pair, &o, &h.report));
  else if (c == "limp") check_status(totcof_limp(h.diagram, &o, &h.report));
  else if (c == "gamma") check_status(totcof_gamma(h.diagram, h.pair, &o, &h.report));
  else if (c == "holim") check_status(totcof_holim(h.diagram, &o, &h.report));
  else if (c == "verify") check_status(totcof_verify(h.diagram, h.pair, &o, &h.report));
  else if (c == "ss") check_status(totcof_ss(h.diagram, h.pair, &o, &h.report));
  else input_failure("unknown command '" + c + "'");

  if (!job.out.empty()) {
    std::ofstream f(job.out, std::ios::binary);
    if (!f) input_failure("cannot write '" + job.out + "'");
    f << totcof_report_json(h.report);
    if (!f) input_failure("failed writing '" + job.out + "'");
  }
  std::cout << (job.json ? totcof_report_json(h.report) : totcof_report_text(h.report));
  std::cout.flush();
  return job.strict && !totcof_report_passed(h.report) ? kExitStrict : kExitOk;
}

void add_common(CLI::App* sub, Job& job) {
  sub->add_option("--generate", job.generate, "generated pair: simplex:N, cube:N, prism(G,G), cone(G), sd(G), "
                                              "optionally with -boundary");
  sub->add_option("--poset", job.poset_file, "poset pair JSON file");
  sub->add_option("--field", job.field, "q or fp:<p>")->capture_default_str();
  sub->add_option("--seed", job.seed, "seed for --random-diagram without a value")->capture_default_str();
  sub->add_flag("--strict", job.strict, "exit 1 when a check in the report fails");
  sub->add_option("--degrees", job.degrees, "report only degrees lo..hi");
  sub->add_option("--out", job.out, "write the JSON report to this file");
  sub->add_flag("--json", job.json, "print the JSON report instead of text");
}

CLI::Option* add_diagram_inputs(CLI::App* sub, Job& job) {
  sub->add_option("--diagram", job.diagram_file, "diagram JSON file");
  sub->add_option("--constant", job.constant, "constant diagram Z or Z/k");
  return sub->add_option("--random-diagram", job.random_diagram, "seeded random diagram: seed=N (default --seed)")
      ->expected(0, 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Total cofibres, derived limits and holim comparisons on finite poset pairs"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string("totcof 1.0"));
  Job job;
  std::vector<CLI::Option*> random_options;

  struct Spec {
    const char* name;
    const char* help;
    bool diagram;
  };
  const Spec specs[] = {
      {"check", "conditions P1 and P2 for a pair", false},
      {"homology", "homology of N(C), N(D) and N(C)/N(D)", false},
      {"limp", "derived limits lim^p of a diagram's homology (or of an abelian diagram)", true},
      {"gamma", "homology of the total cofibre", true},
      {"holim", "homology of the homotopy limit", true},
      {"verify", "holim against the shifted total cofibre on a ball pair", true},
      {"ss", "spectral sequence pages with E_2 and abutment checks", true},
  };
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub, job);
    if (s.diagram) random_options.push_back(add_diagram_inputs(sub, job));
    if (std::string(s.name) == "limp") {
      sub->add_option("--p", job.p, "single degree p (default: all)");
      sub->add_option("--q", job.q, "homology degree q of a complexes diagram")->capture_default_str();
    }
    if (std::string(s.name) == "ss") sub->add_option("--r-max", job.r_max, "last page (default longest chain + 2)");
    sub->callback([&job, name = std::string(s.name)] { job.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "totcof: " << e.what() << "\n";
    return kExitInput;
  }

  for (const auto* o : random_options) job.random_given = job.random_given || o->count() > 0;
  try {
    return run(job);
  } catch (const Failure& f) {
    std::cerr << "totcof: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "totcof: " << e.what() << "\n";
    return kExitInternal;
  }
}
