#include "resobdd/bench.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <unordered_set>

#include <json.hpp>

#include "resobdd/fault.hpp"
#include "resobdd/fault_lab.hpp"
#include "resobdd/index_repair.hpp"
#include "resobdd/index_resilient.hpp"
#include "resobdd/quasi_reduced.hpp"

namespace resobdd {

std::vector<bool> cover_table(const PlaFile& pla, std::size_t output, DcPolicy dc) {
  const std::uint32_t n = pla.num_inputs;
  if (n > 24) throw UsageError("cover_table: more than 24 inputs");
  std::vector<bool> table(std::size_t{1} << n, false);
  auto add = [&](const std::string& cube) {
    std::uint64_t fixed = 0;
    std::vector<std::uint32_t> free;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (cube[i] == '1') fixed |= std::uint64_t{1} << i;
      if (cube[i] == '-') free.push_back(i);
    }
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << free.size()); ++m) {
      std::uint64_t a = fixed;
      for (std::size_t k = 0; k < free.size(); ++k) {
        if ((m >> k) & 1U) a |= std::uint64_t{1} << free[k];
      }
      table[a] = true;
    }
  };
  for (const auto& c : pla.on_set(output)) add(c);
  if (dc == DcPolicy::One) {
    for (const auto& c : pla.dc_set(output)) add(c);
  }
  return table;
}

OutputDiagrams build_output(const PlaFile& pla, std::size_t output, DcPolicy dc) {
  if (output >= pla.num_outputs) throw UsageError("output index out of range");
  const auto on = pla.on_set(output);
  const auto dcs = pla.dc_set(output);
  Diagram ro = from_cubes(pla.num_inputs, on, dcs, dc == DcPolicy::One);
  Diagram qr = build_qr(ro);
  Diagram ir = ir_reduce(qr);
  return OutputDiagrams{std::move(ro), std::move(qr), std::move(ir)};
}

StatsRow compute_stats(const PlaFile& pla, const std::string& benchmark, DcPolicy dc) {
  StatsRow row;
  row.benchmark = benchmark;
  row.in = pla.num_inputs;
  row.out = pla.num_outputs;
  for (std::size_t j = 0; j < pla.num_outputs; ++j) {
    OutputDiagrams o = build_output(pla, j, dc);
    OutputCounts c{count_nodes(o.qr), count_nodes(o.ro), count_nodes(o.ir)};
    row.qr += c.qr;
    row.ro += c.ro;
    row.ir += c.ir;
    row.outputs.push_back(c);
  }
  return row;
}

namespace {

constexpr std::array<ReferenceRow, 27> kReference{{
    {"al2", 16, 47, 1218, 269, 504},      {"alcom", 15, 38, 946, 175, 424},
    {"alu1", 12, 8, 206, 31, 109},        {"amd", 14, 24, 1318, 739, 1021},
    {"b10", 15, 11, 985, 617, 815},       {"b2", 16, 17, 6613, 5568, 5902},
    {"b9", 16, 5, 453, 196, 334},         {"br1", 12, 8, 346, 242, 265},
    {"br2", 12, 8, 285, 174, 190},        {"clpl", 11, 5, 140, 53, 84},
    {"co14", 14, 1, 39, 27, 27},          {"gary", 15, 11, 988, 625, 814},
    {"in2", 19, 10, 4006, 2476, 2988},    {"intb", 15, 7, 1862, 1228, 1631},
    {"mp2d", 14, 14, 413, 151, 299},      {"newapla", 12, 10, 272, 78, 134},
    {"newapla1", 12, 7, 155, 50, 81},     {"newtpla", 15, 5, 186, 83, 120},
    {"opa", 17, 69, 3091, 1164, 2315},    {"pdc", 16, 40, 6204, 4754, 5563},
    {"ryy6", 16, 1, 50, 23, 32},          {"shift", 19, 10, 1206, 189, 667},
    {"t2", 17, 16, 728, 306, 434},        {"t3", 12, 8, 300, 111, 227},
    {"t4", 12, 8, 399, 213, 320},         {"test2", 11, 35, 11678, 11195, 11431},
    {"tial", 14, 8, 2230, 1677, 1934},
}};

long long diff(std::size_t a, std::size_t b) {
  return static_cast<long long>(a) - static_cast<long long>(b);
}

}  // namespace

std::span<const ReferenceRow> reference_table() { return kReference; }

const ReferenceRow* find_reference(const std::string& benchmark) {
  for (const auto& r : kReference) {
    if (benchmark == r.name) return &r;
  }
  return nullptr;
}

std::string benchmark_name(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

void write_stats(std::ostream& os, const std::vector<StatsRow>& rows, ReportFormat format) {
  switch (format) {
    case ReportFormat::Csv: {
      os << "benchmark,in,out,qr_nodes,ro_nodes,ir_nodes,ref_qr,ref_ro,ref_ir,d_qr,d_ro,d_ir\n";
      for (const auto& r : rows) {
        os << r.benchmark << ',' << r.in << ',' << r.out << ',' << r.qr << ',' << r.ro << ','
           << r.ir;
        if (const ReferenceRow* ref = find_reference(r.benchmark)) {
          os << ',' << ref->qr << ',' << ref->ro << ',' << ref->ir << ',' << diff(r.qr, ref->qr)
             << ',' << diff(r.ro, ref->ro) << ',' << diff(r.ir, ref->ir);
        } else {
          os << ",,,,,,";
        }
        os << '\n';
      }
      break;
    }
    case ReportFormat::Text: {
      auto col = [&](auto v, int w) { os << std::setw(w) << v; };
      os << std::left << std::setw(12) << "benchmark" << std::right;
      for (const char* h : {"in", "out", "QR", "RO", "IR", "dQR", "dRO", "dIR"}) col(h, 8);
      os << '\n';
      for (const auto& r : rows) {
        os << std::left << std::setw(12) << r.benchmark << std::right;
        col(r.in, 8);
        col(r.out, 8);
        col(r.qr, 8);
        col(r.ro, 8);
        col(r.ir, 8);
        if (const ReferenceRow* ref = find_reference(r.benchmark)) {
          col(diff(r.qr, ref->qr), 8);
          col(diff(r.ro, ref->ro), 8);
          col(diff(r.ir, ref->ir), 8);
        } else {
          for (int k = 0; k < 3; ++k) col("-", 8);
        }
        os << '\n';
      }
      break;
    }
    case ReportFormat::Json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["benchmark"] = r.benchmark;
        j["in"] = r.in;
        j["out"] = r.out;
        j["qr_nodes"] = r.qr;
        j["ro_nodes"] = r.ro;
        j["ir_nodes"] = r.ir;
        nlohmann::ordered_json per = nlohmann::ordered_json::array();
        for (const auto& o : r.outputs) per.push_back({{"qr", o.qr}, {"ro", o.ro}, {"ir", o.ir}});
        j["outputs"] = std::move(per);
        if (const ReferenceRow* ref = find_reference(r.benchmark)) {
          j["reference"] = {{"qr", ref->qr}, {"ro", ref->ro}, {"ir", ref->ir}};
          j["delta"] = {{"qr", diff(r.qr, ref->qr)},
                        {"ro", diff(r.ro, ref->ro)},
                        {"ir", diff(r.ir, ref->ir)}};
        }
        arr.push_back(std::move(j));
      }
      os << arr.dump(2) << '\n';
      break;
    }
  }
}

// ---------------------------------------------------------------------------

VerifyReport verify_pla(const PlaFile& pla, const VerifyOptions& opts) {
  VerifyReport rep;
  const bool exhaustive = pla.num_inputs <= std::min<std::uint32_t>(opts.max_exhaustive_vars, 24);
  for (std::size_t j = 0; j < pla.num_outputs; ++j) {
    OutputDiagrams o = build_output(pla, j, opts.dc);
    if (opts.tamper) opts.tamper(j, o);
    ++rep.outputs;
    auto fail = [&](const char* check, std::string detail) {
      rep.issues.push_back({j, check, std::move(detail)});
    };

    if (exhaustive) {
      ++rep.exhaustive_outputs;
      const std::vector<bool> oracle = cover_table(pla, j, opts.dc);
      const std::pair<const char*, const Diagram*> forms[] = {
          {"ro", &o.ro}, {"qr", &o.qr}, {"ir", &o.ir}};
      for (const auto& [name, d] : forms) {
        const std::vector<bool> got = truth_table(*d);
        auto it = std::mismatch(got.begin(), got.end(), oracle.begin());
        if (it.first != got.end()) {
          fail("semantics", std::string(name) + " differs from the cover at assignment " +
                                std::to_string(it.first - got.begin()));
        }
      }
    }
    if (!mergeable_groups(o.ro).empty()) fail("ro-reduced", "mergeable nodes");
    for (NodeId id : preorder(o.ro)) {
      if (o.ro.node(id).redundant()) {
        fail("ro-reduced", "redundant node");
        break;
      }
    }
    if (!has_level_discipline(o.qr)) fail("qr-levels", "edge skips a level");
    if (!is_index_resilient(o.ir)) fail("ir-resilient", "index-resilience violated");
    if (!is_ir_reduced(o.ir)) fail("ir-reduced", "removable chain left");
    const std::size_t qr = count_nodes(o.qr);
    const std::size_t ro = count_nodes(o.ro);
    const std::size_t ir = count_nodes(o.ir);
    if (!(ro <= ir && ir <= qr)) {
      fail("sandwich", "ro=" + std::to_string(ro) + " ir=" + std::to_string(ir) +
                           " qr=" + std::to_string(qr));
    }
  }
  return rep;
}

void write_verify(std::ostream& os, const std::string& benchmark, const VerifyReport& r) {
  os << benchmark << ": " << r.outputs << " outputs, " << r.exhaustive_outputs
     << " checked exhaustively, " << r.issues.size() << " violations\n";
  for (const auto& i : r.issues) {
    os << "  output " << i.output << " [" << i.check << "] " << i.detail << '\n';
  }
  os << (r.ok() ? "OK" : "FAILED") << '\n';
}

// ---------------------------------------------------------------------------

namespace {

IndexCampaignRow index_ut_output(Diagram d, std::size_t output, const CampaignConfig& cfg,
                                 std::mt19937_64& rng) {
  IndexCampaignRow row;
  row.output = output;
  const std::vector<NodeId> nodes = preorder(d);
  row.nodes = nodes.size();
  if (nodes.empty()) return row;
  FaultOverlay overlay(d);
  std::uniform_int_distribution<std::size_t> pick(0, nodes.size() - 1);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const NodeId node = nodes[pick(rng)];
    FaultRecord rec = overlay.inject(node, Component::Index, rng);
    ++row.trials;
    ++row.faults;
    const int got = reconstruct_index_ut(d, node, &overlay);
    if (got == static_cast<int>(rec.original)) ++row.restored;
    overlay.restore(rec);
  }
  return row;
}

std::size_t corrupted_below(const Diagram& d, const FaultOverlay& overlay, NodeId root) {
  std::vector<NodeId> stack{root};
  std::unordered_set<NodeId> seen{root};
  std::size_t count = 0;
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    if (overlay.index_corrupt(id)) ++count;
    const Node& n = d.node(id);
    for (NodeId c : {n.lo, n.hi}) {
      if (!c.is_terminal() && seen.insert(c).second) stack.push_back(c);
    }
  }
  return count;
}

IndexCampaignRow index_ir_output(Diagram d, std::size_t output, const CampaignConfig& cfg,
                                 std::mt19937_64& rng) {
  IndexCampaignRow row;
  row.output = output;
  const std::vector<NodeId> nodes = preorder(d);
  row.nodes = nodes.size();
  if (nodes.empty()) return row;
  std::size_t r = cfg.fault_count;
  if (cfg.fault_fraction > 0.0) {
    r = std::max<std::size_t>(
        1, static_cast<std::size_t>(cfg.fault_fraction * static_cast<double>(nodes.size()) + 0.5));
  }
  r = std::min(r, nodes.size());

  FaultOverlay overlay(d);
  std::vector<Level> original(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) original[k] = d.node(nodes[k]).index;
  std::vector<std::size_t> order(nodes.size());
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t k = 0; k < r; ++k) overlay.inject(nodes[order[k]], Component::Index, rng);
    ++row.trials;
    row.faults += r;

    for (NodeId id : nodes) {
      if (!overlay.index_corrupt(id)) continue;
      const std::size_t bound = corrupted_below(d, overlay, id);
      RepairStats stats;
      (void)index_reconstruct(overlay, id, &stats);
      row.max_invocations = std::max(row.max_invocations, stats.invocations);
      if (stats.invocations > bound) ++row.bound_violations;
    }
    for (std::size_t k = 0; k < r; ++k) {
      const std::size_t s = order[k];
      if (d.node(nodes[s]).index == original[s]) ++row.restored;
    }
    // Leave the diagram pristine even if a repair went wrong.
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (d.node(nodes[k]).index != original[k]) {
        overlay.repair(nodes[k], Component::Index, original[k]);
      }
    }
  }
  return row;
}

const char* mode_name(CampaignMode m) {
  switch (m) {
    case CampaignMode::IndexUt: return "index-ut";
    case CampaignMode::IndexIr: return "index-ir";
    case CampaignMode::Edge: return "edge";
  }
  return "?";
}

}  // namespace

bool CampaignReport::passed() const {
  if (mode == CampaignMode::Edge) return true;
  for (const auto& r : index_rows) {
    if (r.restored != r.faults || r.bound_violations != 0) return false;
  }
  return true;
}

bool CampaignReport::edge_trend_monotone() const {
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> agg;  // size -> (succ, trials)
  std::vector<std::size_t> order;
  for (const auto& [out, rows] : edge_rows) {
    for (const auto& r : rows) {
      if (!agg.count(r.table_size)) order.push_back(r.table_size);
      agg[r.table_size].first += r.successes;
      agg[r.table_size].second += r.trials;
    }
  }
  std::sort(order.begin(), order.end());
  double prev = -1.0;
  for (std::size_t s : order) {
    const auto [succ, trials] = agg[s];
    const double rate = trials ? static_cast<double>(succ) / static_cast<double>(trials) : 1.0;
    if (rate < prev) return false;
    prev = rate;
  }
  return true;
}

CampaignReport run_campaign(const PlaFile& pla, const std::string& benchmark,
                            const CampaignConfig& cfg) {
  if (cfg.trials == 0) throw UsageError("campaign needs at least one trial");
  if (cfg.fault_fraction < 0 || cfg.fault_fraction > 1) {
    throw UsageError("fault fraction must lie in [0, 1]");
  }
  CampaignReport rep;
  rep.mode = cfg.mode;
  rep.benchmark = benchmark;
  rep.seed = cfg.seed;
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t j = 0; j < pla.num_outputs; ++j) {
    OutputDiagrams o = build_output(pla, j, cfg.dc);
    switch (cfg.mode) {
      case CampaignMode::IndexUt:
        rep.index_rows.push_back(index_ut_output(o.ro, j, cfg, rng));
        break;
      case CampaignMode::IndexIr:
        rep.index_rows.push_back(index_ir_output(o.ir, j, cfg, rng));
        break;
      case CampaignMode::Edge: {
        EdgeCampaignConfig ec;
        ec.table_sizes = cfg.table_sizes;
        ec.trials = cfg.trials;
        ec.seed = cfg.seed + j;
        ec.strict = cfg.strict;
        rep.edge_rows.emplace_back(j, edge_campaign(o.ro, ec));
        break;
      }
    }
  }
  return rep;
}

void write_campaign_csv(std::ostream& os, const CampaignReport& r) {
  if (r.mode == CampaignMode::Edge) {
    write_campaign_csv_header(os);
    for (const auto& [out, rows] : r.edge_rows) {
      write_campaign_csv(os, r.benchmark, out, r.seed + out, rows);
    }
    return;
  }
  os << "benchmark,output_idx,mode,nodes,trials,faults,restored,max_invocations,"
        "bound_violations,seed\n";
  for (const auto& row : r.index_rows) {
    os << r.benchmark << ',' << row.output << ',' << mode_name(r.mode) << ',' << row.nodes << ','
       << row.trials << ',' << row.faults << ',' << row.restored << ',' << row.max_invocations
       << ',' << row.bound_violations << ',' << r.seed << '\n';
  }
}

void write_campaign_summary(std::ostream& os, const CampaignReport& r) {
  os << r.benchmark << " [" << mode_name(r.mode) << ", seed " << r.seed << "]\n";
  if (r.mode == CampaignMode::Edge) {
    std::map<std::size_t, std::array<std::size_t, 4>> agg;  // succ, trials, ambiguous, wrong
    for (const auto& [out, rows] : r.edge_rows) {
      for (const auto& row : rows) {
        auto& a = agg[row.table_size];
        a[0] += row.successes;
        a[1] += row.trials;
        a[2] += row.ambiguous;
        a[3] += row.wrong;
      }
    }
    for (const auto& [size, a] : agg) {
      const double rate = a[1] ? 100.0 * static_cast<double>(a[0]) / static_cast<double>(a[1]) : 0.0;
      os << "  buckets " << std::setw(6) << size << ": " << a[0] << '/' << a[1] << " recovered ("
         << std::fixed << std::setprecision(1) << rate << "%), " << a[2] << " ambiguous, " << a[3]
         << " wrong\n";
    }
    os << "  trend " << (r.edge_trend_monotone() ? "non-decreasing" : "DECREASING") << '\n';
    return;
  }
  std::size_t faults = 0;
  std::size_t restored = 0;
  std::size_t violations = 0;
  std::size_t max_inv = 0;
  for (const auto& row : r.index_rows) {
    faults += row.faults;
    restored += row.restored;
    violations += row.bound_violations;
    max_inv = std::max(max_inv, row.max_invocations);
  }
  os << "  restored " << restored << '/' << faults << " indices";
  if (r.mode == CampaignMode::IndexIr) {
    os << ", max invocations per repair " << max_inv << ", bound violations " << violations;
  }
  os << '\n' << (r.passed() ? "OK" : "FAILED") << '\n';
}

}  // namespace resobdd
