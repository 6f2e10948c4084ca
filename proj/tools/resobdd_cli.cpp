// Command-line front end. Talks to the engine only through resobdd.h.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "resobdd.h"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct PlaDeleter {
  void operator()(resobdd_pla* p) const { resobdd_pla_free(p); }
};
using PlaPtr = std::unique_ptr<resobdd_pla, PlaDeleter>;

struct CString {
  char* p = nullptr;
  ~CString() { resobdd_string_free(p); }
  [[nodiscard]] std::string str() const { return p ? p : ""; }
};

class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  [[nodiscard]] int code() const { return code_; }

 private:
  int code_;
};

void check(resobdd_status s, const std::string& context) {
  if (s == RESOBDD_OK) return;
  throw CliError(s == RESOBDD_ERR_INTERNAL ? kCheckFailed : kUsage,
                 context + ": " + resobdd_last_error());
}

PlaPtr load(const std::string& path) {
  resobdd_pla* raw = nullptr;
  check(resobdd_pla_load(path.c_str(), &raw), path);
  PlaPtr pla(raw);
  for (std::size_t i = 0; i < resobdd_pla_num_warnings(raw); ++i) {
    std::cerr << path << ": warning: " << resobdd_pla_warning(raw, i) << '\n';
  }
  return pla;
}

std::string name_of(const std::string& path) {
  CString s;
  check(resobdd_benchmark_name(path.c_str(), &s.p), path);
  return s.str();
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("RESILIENT_OBDD_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CliError(kUsage, std::string("RESILIENT_OBDD_SEED is not an integer: ") + env);
    }
  }
  return 1;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError(kUsage, "cannot write " + path);
  out << text;
}

const std::map<std::string, resobdd_dc_policy> kDcPolicies{{"zero", RESOBDD_DC_ZERO},
                                                           {"one", RESOBDD_DC_ONE}};

// ---------------------------------------------------------------------------

struct StatsArgs {
  std::vector<std::string> files;
  resobdd_dc_policy dc = RESOBDD_DC_ZERO;
  std::string format = "text";
  std::string csv_path;
  std::string json_path;
};

int run_stats(const StatsArgs& a) {
  resobdd_stats* raw = nullptr;
  check(resobdd_stats_create(&raw), "stats");
  std::unique_ptr<resobdd_stats, void (*)(resobdd_stats*)> stats(raw, resobdd_stats_free);
  bool sandwich = true;
  for (const auto& f : a.files) {
    PlaPtr pla = load(f);
    resobdd_counts c{};
    check(resobdd_stats_add(stats.get(), pla.get(), name_of(f).c_str(), a.dc, &c), f);
    if (!(c.ro <= c.ir && c.ir <= c.qr)) sandwich = false;
  }
  auto render = [&](resobdd_format fmt) {
    CString s;
    check(resobdd_stats_render(stats.get(), fmt, &s.p), "render");
    return s.str();
  };
  const resobdd_format main_fmt = a.format == "csv"    ? RESOBDD_FORMAT_CSV
                                  : a.format == "json" ? RESOBDD_FORMAT_JSON
                                                       : RESOBDD_FORMAT_TEXT;
  std::cout << render(main_fmt);
  if (!a.csv_path.empty()) write_file(a.csv_path, render(RESOBDD_FORMAT_CSV));
  if (!a.json_path.empty()) write_file(a.json_path, render(RESOBDD_FORMAT_JSON));
  if (!sandwich) {
    std::cerr << "sandwich violated: expected ro <= ir <= qr\n";
    return kCheckFailed;
  }
  return kOk;
}

struct VerifyArgs {
  std::vector<std::string> files;
  resobdd_dc_policy dc = RESOBDD_DC_ZERO;
  std::uint32_t max_vars = 20;
  int break_output = -1;
};

int run_verify(const VerifyArgs& a) {
  int code = kOk;
  for (const auto& f : a.files) {
    PlaPtr pla = load(f);
    resobdd_verify_options o;
    resobdd_verify_options_init(&o);
    o.dc = a.dc;
    o.max_exhaustive_vars = a.max_vars;
    o.break_output = a.break_output;
    int passed = 0;
    CString report;
    check(resobdd_verify(pla.get(), name_of(f).c_str(), &o, &passed, &report.p), f);
    std::cout << report.str();
    if (!passed) code = kCheckFailed;
  }
  return code;
}

struct InjectArgs {
  std::vector<std::string> files;
  resobdd_campaign_mode mode = RESOBDD_MODE_INDEX_UT;
  resobdd_dc_policy dc = RESOBDD_DC_ZERO;
  std::size_t trials = 1000;
  std::optional<std::uint64_t> seed;
  std::vector<std::size_t> table_sizes;
  bool strict = false;
  std::string faults = "1";
  std::string csv_path;
};

int run_inject(const InjectArgs& a) {
  resobdd_campaign_config cfg;
  resobdd_campaign_config_init(&cfg);
  cfg.mode = a.mode;
  cfg.dc = a.dc;
  cfg.trials = a.trials;
  cfg.seed = a.seed ? *a.seed : default_seed();
  cfg.strict = a.strict ? 1 : 0;
  cfg.table_sizes = a.table_sizes.empty() ? nullptr : a.table_sizes.data();
  cfg.num_table_sizes = a.table_sizes.size();
  try {
    if (!a.faults.empty() && a.faults.back() == '%') {
      cfg.fault_fraction = std::stod(a.faults.substr(0, a.faults.size() - 1)) / 100.0;
    } else {
      cfg.fault_count = std::stoul(a.faults);
    }
  } catch (const std::exception&) {
    throw CliError(kUsage, "--faults expects a count or a percentage, got " + a.faults);
  }

  int code = kOk;
  std::string csv;
  for (const auto& f : a.files) {
    PlaPtr pla = load(f);
    int passed = 0;
    int trend = 1;
    CString rows, summary;
    check(resobdd_inject_recover(pla.get(), name_of(f).c_str(), &cfg, &passed, &trend, &rows.p,
                                 &summary.p),
          f);
    std::cout << summary.str();
    std::string r = rows.str();
    // Keep a single header across files.
    if (!csv.empty()) r = r.substr(r.find('\n') + 1);
    csv += r;
    if (!passed) code = kCheckFailed;
  }
  if (a.csv_path.empty()) {
    std::cout << '\n' << csv;
  } else {
    write_file(a.csv_path, csv);
  }
  return code;
}

struct DotArgs {
  std::string file;
  std::size_t output = 0;
  resobdd_form form = RESOBDD_FORM_RO;
  resobdd_dc_policy dc = RESOBDD_DC_ZERO;
  std::string out_path;
};

int run_dot(const DotArgs& a) {
  PlaPtr pla = load(a.file);
  resobdd_diagram* raw = nullptr;
  check(resobdd_diagram_from_pla(pla.get(), a.output, a.form, a.dc, &raw), a.file);
  std::unique_ptr<resobdd_diagram, void (*)(resobdd_diagram*)> d(raw, resobdd_diagram_free);
  CString dot;
  const std::string name = name_of(a.file) + "_" + std::to_string(a.output);
  check(resobdd_diagram_to_dot(d.get(), name.c_str(), &dot.p), "export-dot");
  if (a.out_path.empty()) {
    std::cout << dot.str();
  } else {
    write_file(a.out_path, dot.str());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Error-resilient OBDD engine: statistics, verification and fault campaigns"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(resobdd_version()));

  StatsArgs stats;
  auto* s = app.add_subcommand("stats", "QR/RO/IR node counts per benchmark");
  s->add_option("files", stats.files, "PLA files")->required()->check(CLI::ExistingFile);
  s->add_option("--dc-policy", stats.dc, "Don't-care resolution")
      ->transform(CLI::CheckedTransformer(kDcPolicies));
  s->add_option("--format", stats.format, "Report on stdout")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  s->add_option("--csv", stats.csv_path, "Also write CSV here");
  s->add_option("--json", stats.json_path, "Also write JSON here");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check semantics and structural invariants");
  v->add_option("files", verify.files, "PLA files")->required()->check(CLI::ExistingFile);
  v->add_option("--dc-policy", verify.dc, "Don't-care resolution")
      ->transform(CLI::CheckedTransformer(kDcPolicies));
  v->add_option("--max-vars", verify.max_vars, "Exhaustive check up to this many inputs")
      ->check(CLI::Range(0, 24));
  v->add_option("--break-output", verify.break_output)
      ->group("")  // test hook, hidden from help
      ->check(CLI::NonNegativeNumber);

  InjectArgs inject;
  const std::map<std::string, resobdd_campaign_mode> modes{{"index-ut", RESOBDD_MODE_INDEX_UT},
                                                           {"index-ir", RESOBDD_MODE_INDEX_IR},
                                                           {"edge", RESOBDD_MODE_EDGE}};
  auto* ir = app.add_subcommand("inject-recover", "Fault injection and recovery campaign");
  ir->add_option("files", inject.files, "PLA files")->required()->check(CLI::ExistingFile);
  ir->add_option("--mode", inject.mode, "index-ut, index-ir or edge")
      ->required()
      ->transform(CLI::CheckedTransformer(modes));
  ir->add_option("--trials", inject.trials, "Trials per output");
  ir->add_option("--seed", inject.seed, "RNG seed (default: $RESILIENT_OBDD_SEED or 1)");
  ir->add_option("--table-size", inject.table_sizes, "Unique-table buckets (repeatable)")
      ->allow_extra_args(false)
      ->check(CLI::PositiveNumber);
  ir->add_flag("--strict", inject.strict, "Report ambiguity instead of guessing");
  ir->add_option("--faults", inject.faults, "index-ir: faults per trial, N or P%");
  ir->add_option("--dc-policy", inject.dc, "Don't-care resolution")
      ->transform(CLI::CheckedTransformer(kDcPolicies));
  ir->add_option("--csv", inject.csv_path, "Write CSV here instead of stdout");

  DotArgs dot;
  const std::map<std::string, resobdd_form> forms{
      {"ro", RESOBDD_FORM_RO}, {"qr", RESOBDD_FORM_QR}, {"ir", RESOBDD_FORM_IR}};
  auto* d = app.add_subcommand("export-dot", "Graphviz rendering of one output");
  d->add_option("file", dot.file, "PLA file")->required()->check(CLI::ExistingFile);
  d->add_option("--output-idx", dot.output, "Output column");
  d->add_option("--form", dot.form, "ro, qr or ir")->transform(CLI::CheckedTransformer(forms));
  d->add_option("--dc-policy", dot.dc, "Don't-care resolution")
      ->transform(CLI::CheckedTransformer(kDcPolicies));
  d->add_option("-o,--out", dot.out_path, "Write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*s) return run_stats(stats);
    if (*v) return run_verify(verify);
    if (*ir) return run_inject(inject);
    if (*d) return run_dot(dot);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code();
  }
  return kUsage;
}
