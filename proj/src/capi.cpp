#include "resobdd.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "resobdd/bench.hpp"
#include "resobdd/fault_lab.hpp"
#include "resobdd/index_resilient.hpp"
#include "resobdd/quasi_reduced.hpp"

struct resobdd_pla {
  resobdd::PlaFile pla;
};

struct resobdd_diagram {
  resobdd::Diagram d;
};

struct resobdd_stats {
  std::vector<resobdd::StatsRow> rows;
};

namespace {

thread_local std::string g_last_error;

resobdd_status fail(resobdd_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Runs `fn`, mapping library exceptions onto status codes.
template <class F>
resobdd_status guarded(F&& fn) {
  try {
    g_last_error.clear();
    fn();
    return RESOBDD_OK;
  } catch (const resobdd::ParseError& e) {
    return fail(RESOBDD_ERR_PARSE, e.what());
  } catch (const resobdd::UsageError& e) {
    return fail(RESOBDD_ERR_USAGE, e.what());
  } catch (const resobdd::StructuralError& e) {
    return fail(RESOBDD_ERR_STRUCTURE, e.what());
  } catch (const resobdd::ContractViolation& e) {
    return fail(RESOBDD_ERR_CONTRACT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RESOBDD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RESOBDD_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(RESOBDD_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(bool cond, const char* what) {
  if (!cond) throw resobdd::UsageError(what);
}

resobdd::DcPolicy dc_of(resobdd_dc_policy dc) {
  require(dc == RESOBDD_DC_ZERO || dc == RESOBDD_DC_ONE, "unknown dc policy");
  return dc == RESOBDD_DC_ONE ? resobdd::DcPolicy::One : resobdd::DcPolicy::Zero;
}

resobdd::Diagram shape(resobdd::Diagram ro, resobdd_form form) {
  switch (form) {
    case RESOBDD_FORM_RO: return ro;
    case RESOBDD_FORM_QR: return resobdd::build_qr(ro);
    case RESOBDD_FORM_IR: return resobdd::ir_reduce(resobdd::build_qr(ro));
  }
  throw resobdd::UsageError("unknown diagram form");
}

}  // namespace

extern "C" {

const char* resobdd_version(void) { return "0.1.0"; }

const char* resobdd_last_error(void) { return g_last_error.c_str(); }

void resobdd_string_free(char* s) { std::free(s); }

resobdd_status resobdd_pla_parse(const char* text, resobdd_pla** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new resobdd_pla{resobdd::parse_pla(text)};
  });
}

resobdd_status resobdd_pla_load(const char* path, resobdd_pla** out) {
  if (path && out) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) {
      return fail(RESOBDD_ERR_IO, std::string("cannot read ") + path);
    }
  }
  return guarded([&] {
    require(path && out, "null argument");
    *out = new resobdd_pla{resobdd::load_pla(path)};
  });
}

void resobdd_pla_free(resobdd_pla* pla) { delete pla; }

uint32_t resobdd_pla_num_inputs(const resobdd_pla* pla) { return pla ? pla->pla.num_inputs : 0; }

uint32_t resobdd_pla_num_outputs(const resobdd_pla* pla) {
  return pla ? pla->pla.num_outputs : 0;
}

size_t resobdd_pla_num_warnings(const resobdd_pla* pla) {
  return pla ? pla->pla.warnings.size() : 0;
}

const char* resobdd_pla_warning(const resobdd_pla* pla, size_t i) {
  if (!pla || i >= pla->pla.warnings.size()) return nullptr;
  return pla->pla.warnings[i].c_str();
}

resobdd_status resobdd_diagram_from_pla(const resobdd_pla* pla, size_t output, resobdd_form form,
                                        resobdd_dc_policy dc, resobdd_diagram** out) {
  return guarded([&] {
    require(pla && out, "null argument");
    require(output < pla->pla.num_outputs, "output index out of range");
    const auto on = pla->pla.on_set(output);
    const auto dcs = pla->pla.dc_set(output);
    resobdd::Diagram ro =
        resobdd::from_cubes(pla->pla.num_inputs, on, dcs, dc_of(dc) == resobdd::DcPolicy::One);
    *out = new resobdd_diagram{shape(std::move(ro), form)};
  });
}

resobdd_status resobdd_diagram_from_cubes(uint32_t num_vars, const char* const* cubes,
                                          size_t count, resobdd_form form,
                                          resobdd_diagram** out) {
  return guarded([&] {
    require(out && (cubes || count == 0), "null argument");
    std::vector<std::string> on;
    for (size_t i = 0; i < count; ++i) {
      require(cubes[i] != nullptr, "null cube");
      on.emplace_back(cubes[i]);
    }
    *out = new resobdd_diagram{shape(resobdd::from_cubes(num_vars, on), form)};
  });
}

void resobdd_diagram_free(resobdd_diagram* d) { delete d; }

resobdd_status resobdd_diagram_num_vars(const resobdd_diagram* d, uint32_t* out) {
  return guarded([&] {
    require(d && out, "null argument");
    *out = d->d.num_vars();
  });
}

resobdd_status resobdd_diagram_node_count(const resobdd_diagram* d, size_t* out) {
  return guarded([&] {
    require(d && out, "null argument");
    *out = resobdd::count_nodes(d->d);
  });
}

resobdd_status resobdd_diagram_evaluate(const resobdd_diagram* d, const uint8_t* assignment,
                                        size_t len, int* out) {
  return guarded([&] {
    require(d && out && (assignment || len == 0), "null argument");
    *out = resobdd::evaluate(d->d, {assignment, len}) ? 1 : 0;
  });
}

resobdd_status resobdd_diagram_is_index_resilient(const resobdd_diagram* d, int* out) {
  return guarded([&] {
    require(d && out, "null argument");
    *out = resobdd::is_index_resilient(d->d) ? 1 : 0;
  });
}

resobdd_status resobdd_diagram_cost(const resobdd_diagram* d, size_t* total, double* mean) {
  return guarded([&] {
    require(d, "null argument");
    resobdd::CostReport r = resobdd::cost_report(d->d);
    if (total) *total = r.total;
    if (mean) *mean = r.mean();
  });
}

resobdd_status resobdd_diagram_to_dot(const resobdd_diagram* d, const char* name, char** out) {
  return guarded([&] {
    require(d && out, "null argument");
    *out = dup_string(resobdd::export_dot(d->d, name ? name : "obdd"));
  });
}

resobdd_status resobdd_stats_create(resobdd_stats** out) {
  return guarded([&] {
    require(out, "null argument");
    *out = new resobdd_stats{};
  });
}

void resobdd_stats_free(resobdd_stats* stats) { delete stats; }

resobdd_status resobdd_stats_add(resobdd_stats* stats, const resobdd_pla* pla,
                                 const char* benchmark, resobdd_dc_policy dc,
                                 resobdd_counts* counts) {
  return guarded([&] {
    require(stats && pla && benchmark, "null argument");
    resobdd::StatsRow row = resobdd::compute_stats(pla->pla, benchmark, dc_of(dc));
    if (counts) *counts = resobdd_counts{row.qr, row.ro, row.ir};
    stats->rows.push_back(std::move(row));
  });
}

resobdd_status resobdd_stats_render(const resobdd_stats* stats, resobdd_format format,
                                    char** out) {
  return guarded([&] {
    require(stats && out, "null argument");
    resobdd::ReportFormat f;
    switch (format) {
      case RESOBDD_FORMAT_CSV: f = resobdd::ReportFormat::Csv; break;
      case RESOBDD_FORMAT_TEXT: f = resobdd::ReportFormat::Text; break;
      case RESOBDD_FORMAT_JSON: f = resobdd::ReportFormat::Json; break;
      default: throw resobdd::UsageError("unknown report format");
    }
    std::ostringstream os;
    resobdd::write_stats(os, stats->rows, f);
    *out = dup_string(os.str());
  });
}

resobdd_status resobdd_reference(const char* benchmark, resobdd_counts* out, int* found) {
  return guarded([&] {
    require(benchmark && out && found, "null argument");
    const resobdd::ReferenceRow* r = resobdd::find_reference(benchmark);
    *found = r ? 1 : 0;
    *out = r ? resobdd_counts{r->qr, r->ro, r->ir} : resobdd_counts{0, 0, 0};
  });
}

resobdd_status resobdd_benchmark_name(const char* path, char** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = dup_string(resobdd::benchmark_name(path));
  });
}

void resobdd_verify_options_init(resobdd_verify_options* opts) {
  if (!opts) return;
  opts->dc = RESOBDD_DC_ZERO;
  opts->max_exhaustive_vars = 20;
  opts->break_output = -1;
}

resobdd_status resobdd_verify(const resobdd_pla* pla, const char* benchmark,
                              const resobdd_verify_options* opts, int* passed, char** report) {
  return guarded([&] {
    require(pla && passed, "null argument");
    resobdd_verify_options o;
    resobdd_verify_options_init(&o);
    if (opts) o = *opts;
    resobdd::VerifyOptions vo;
    vo.dc = dc_of(o.dc);
    vo.max_exhaustive_vars = o.max_exhaustive_vars;
    if (o.break_output >= 0) {
      const auto target = static_cast<std::size_t>(o.break_output);
      require(target < pla->pla.num_outputs, "break_output out of range");
      vo.tamper = [target](std::size_t j, resobdd::OutputDiagrams& d) {
        if (j == target) d.ir = resobdd::negate(d.ir);
      };
    }
    resobdd::VerifyReport r = resobdd::verify_pla(pla->pla, vo);
    *passed = r.ok() ? 1 : 0;
    if (report) {
      std::ostringstream os;
      resobdd::write_verify(os, benchmark ? benchmark : "pla", r);
      *report = dup_string(os.str());
    }
  });
}

void resobdd_campaign_config_init(resobdd_campaign_config* cfg) {
  if (!cfg) return;
  cfg->mode = RESOBDD_MODE_INDEX_UT;
  cfg->dc = RESOBDD_DC_ZERO;
  cfg->trials = 1000;
  cfg->seed = 1;
  cfg->fault_count = 1;
  cfg->fault_fraction = 0.0;
  cfg->table_sizes = nullptr;
  cfg->num_table_sizes = 0;
  cfg->strict = 0;
}

resobdd_status resobdd_inject_recover(const resobdd_pla* pla, const char* benchmark,
                                      const resobdd_campaign_config* cfg, int* passed,
                                      int* trend_ok, char** csv, char** summary) {
  return guarded([&] {
    require(pla && cfg && passed, "null argument");
    resobdd::CampaignConfig c;
    switch (cfg->mode) {
      case RESOBDD_MODE_INDEX_UT: c.mode = resobdd::CampaignMode::IndexUt; break;
      case RESOBDD_MODE_INDEX_IR: c.mode = resobdd::CampaignMode::IndexIr; break;
      case RESOBDD_MODE_EDGE: c.mode = resobdd::CampaignMode::Edge; break;
      default: throw resobdd::UsageError("unknown campaign mode");
    }
    c.dc = dc_of(cfg->dc);
    c.trials = cfg->trials;
    c.seed = cfg->seed;
    c.fault_count = cfg->fault_count;
    require(cfg->fault_fraction >= 0.0 && cfg->fault_fraction <= 1.0,
            "fault fraction must lie in [0, 1]");
    c.fault_fraction = cfg->fault_fraction;
    if (cfg->num_table_sizes > 0) {
      require(cfg->table_sizes != nullptr, "null table size array");
      c.table_sizes.assign(cfg->table_sizes, cfg->table_sizes + cfg->num_table_sizes);
    }
    c.strict = cfg->strict != 0;
    const std::string name = benchmark ? benchmark : "pla";
    resobdd::CampaignReport r = resobdd::run_campaign(pla->pla, name, c);
    *passed = r.passed() ? 1 : 0;
    if (trend_ok) *trend_ok = r.edge_trend_monotone() ? 1 : 0;
    if (csv) {
      std::ostringstream os;
      resobdd::write_campaign_csv(os, r);
      *csv = dup_string(os.str());
    }
    if (summary) {
      std::ostringstream os;
      resobdd::write_campaign_summary(os, r);
      *summary = dup_string(os.str());
    }
  });
}

}  // extern "C"
