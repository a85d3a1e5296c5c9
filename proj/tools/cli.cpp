// Copyright 2026 The cdc-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cdc/decoder.hpp"
#include "cdc/designs.hpp"
#include "cdc/engine.hpp"
#include "cdc/error.hpp"
#include "cdc/metrics.hpp"
#include "cdc/parallel.hpp"
#include "cdc/scheme.hpp"
#include "cdc/serialize.hpp"

namespace cdc::cli {
namespace {

struct RunConfig {
  int n = 0;
  int t = 0;
  unsigned field_T = 8;
  std::uint64_t seed = 0;
  std::size_t file_bits = engine::kDefaultFileBits;
  std::string output_path;
  std::string transcript_path;
  std::string format = "text";
  std::int64_t b_min = 3, b_max = 19;
  std::int64_t p_min = 2, p_max = 7;
  std::int64_t p = 3;
  int w = 2;
  std::vector<int> vs{1, 0};
  int check = 1;
};

// Largest p whose C(K, r) column is written from the exact binomial.
constexpr std::int64_t kExactFileCountMaxP = 7;

std::string join(const std::vector<int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

std::string fixed(double v, int digits = 6) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

std::string num(const Rational& q) { return boost::multiprecision::numerator(q).str(); }
std::string den(const Rational& q) { return boost::multiprecision::denominator(q).str(); }

// Writes `body` to cfg.output_path when set, otherwise to `out`.
void emit(const RunConfig& cfg, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (cfg.output_path.empty()) {
    body(out);
    return;
  }
  std::ofstream file(cfg.output_path, std::ios::binary);
  if (!file) throw ParameterError("cannot open " + cfg.output_path + " for writing");
  body(file);
}

int cmd_build(const RunConfig& cfg, std::ostream& out) {
  const auto plan = scheme::build_scheme(cfg.n, cfg.t, ff::FieldSpec::standard(cfg.field_T));
  const std::string path = cfg.output_path.empty() ? "plan.json" : cfg.output_path;
  std::ofstream file(path);
  if (!file) throw ParameterError("cannot open " + path + " for writing");
  file << io::plan_to_json(plan).dump(2) << '\n';

  const Rational load = scheme::communication_load(plan);
  if (cfg.format == "json") {
    const nlohmann::json summary = {{"plan", path},
                                    {"K", plan.nodes()},
                                    {"N", plan.files()},
                                    {"Q", plan.functions()},
                                    {"r", plan.computation_load()},
                                    {"s", plan.replication()},
                                    {"T", plan.field().width()},
                                    {"coefficients", plan.coeffs().size()},
                                    {"load", to_string(load)}};
    out << summary.dump(2) << '\n';
    return kExitOk;
  }
  out << "K  N  Q  r  s  T  L\n"
      << plan.nodes() << "  " << plan.files() << "  " << plan.functions() << "  "
      << plan.computation_load() << "  " << plan.replication() << "  " << plan.field().width()
      << "  " << to_string(load) << "\n"
      << "coefficients: " << plan.coeffs().size() << " of " << plan.field().order() - 1
      << " nonzero field elements\n"
      << "plan written to " << path << "\n";
  return kExitOk;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  auto plan = scheme::build_scheme(cfg.n, cfg.t, ff::FieldSpec::standard(cfg.field_T));
  const engine::World world = engine::make_world(std::move(plan), cfg.seed, cfg.file_bits);
  const engine::SimulationResult result = engine::simulate(world);
  const Rational predicted = scheme::communication_load(world.plan);
  const bool load_ok = result.load == predicted;
  const bool ok = load_ok && result.report.passed;

  if (!cfg.transcript_path.empty()) {
    std::ofstream file(cfg.transcript_path, std::ios::binary);
    if (!file) throw ParameterError("cannot open " + cfg.transcript_path + " for writing");
    io::write_transcript_jsonl(file, result.transcript);
  }

  const auto& p = world.plan;
  if (cfg.format == "json") {
    nlohmann::json doc = {{"n", p.n()},
                          {"t", p.t()},
                          {"T", p.field().width()},
                          {"seed", cfg.seed},
                          {"total_bits", result.transcript.total_bits()},
                          {"bits_sent_per_node", result.transcript.bits_sent_per_node},
                          {"measured_load", to_string(result.load)},
                          {"predicted_load", to_string(predicted)},
                          {"verification", result.report.passed ? "pass" : "fail"},
                          {"mismatches", result.report.mismatches().size()}};
    out << doc.dump(2) << '\n';
    return ok ? kExitOk : kExitCheckFailed;
  }

  out << "scheme: K = N = Q = " << p.n() << ", r = s = " << p.t() << ", T = " << p.field().width()
      << ", seed = " << cfg.seed << "\n";
  out << "coefficients:";
  for (const auto& a : p.coeffs()) out << ' ' << a.value();
  std::size_t width = std::string("stores (Z)").size();
  for (int c = 0; c < p.n(); ++c) width = std::max(width, join(p.placement(c)).size());
  out << "\n\n" << std::left << std::setw(6) << "node" << std::setw(width + 2) << "stores (Z)"
      << "computes (Q)\n";
  for (int c = 0; c < p.n(); ++c) {
    out << std::setw(6) << c << std::setw(width + 2) << join(p.placement(c))
        << join(p.assignment(c)) << "\n";
  }
  out << std::right;
  out << "\ncoded signals:\n";
  for (const auto& s : result.transcript.signals) {
    out << "  node " << s.sender << " group " << s.file << " slot " << s.slot << ": "
        << scheme::signal_formula(p, s.file, s.slot) << " = 0x" << io::payload_hex(s.payload)
        << "\n";
  }
  out << "\ntotal shuffle bits: " << result.transcript.total_bits() << "\n"
      << "measured L = " << to_string(result.load) << "\n"
      << "predicted L = " << to_string(predicted) << (load_ok ? " (exact match)" : " (MISMATCH)")
      << "\n";
  for (const auto& m : result.report.mismatches()) {
    out << "mismatch: node " << m.node << " function " << m.q << "\n";
  }
  out << "verification: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_sweep_fig2(const RunConfig& cfg, std::ostream& out) {
  if (cfg.b_min < 3) throw ParameterError("sweep-fig2 requires --b-min >= 3");
  if (cfg.b_max < cfg.b_min) throw ParameterError("--b-max must be >= --b-min");
  std::vector<metrics::JiangComparison> rows(static_cast<std::size_t>(cfg.b_max - cfg.b_min + 1));
  parallel_for(rows.size(), [&](std::size_t i) {
    rows[i] = metrics::jiang_sbibd_loads(cfg.b_min + static_cast<std::int64_t>(i));
  });
  bool ordered = true;
  emit(cfg, out, [&](std::ostream& o) {
    io::CsvWriter csv(o);
    csv.row({"b", "jiang_num", "jiang_den", "jiang_float", "ours_num", "ours_den", "ours_float",
             "ours_less"});
    for (const auto& r : rows) {
      const bool less = r.ours && *r.ours < r.jiang;
      ordered = ordered && less;
      csv.row({std::to_string(r.b), num(r.jiang), den(r.jiang), to_decimal(r.jiang), num(*r.ours),
               den(*r.ours), to_decimal(*r.ours), less ? "true" : "false"});
    }
  });
  return ordered ? kExitOk : kExitCheckFailed;
}

int cmd_sweep_fig3(const RunConfig& cfg, std::ostream& out) {
  if (cfg.p_min < 2) throw ParameterError("sweep-fig3 requires --p-min >= 2");
  if (cfg.p_max < cfg.p_min) throw ParameterError("--p-max must be >= --p-min");
  struct Row {
    std::int64_t p = 0, K = 0, r = 0;
    Rational ours, li, ratio;
    double log10_n_ours = 0, log10_n_li = 0;
    bool approximate = false;
  };
  std::vector<Row> rows(static_cast<std::size_t>(cfg.p_max - cfg.p_min + 1));
  parallel_for(rows.size(), [&](std::size_t i) {
    Row& row = rows[i];
    row.p = cfg.p_min + static_cast<std::int64_t>(i);
    const auto fp = metrics::FamilyParams::make(row.p, 4, {2, 1, 0});
    row.r = fp.p_pow_w();
    row.K = fp.p_pow_w() + fp.y();
    row.ours = metrics::our_load(row.K, row.r);
    row.li = metrics::li_optimal_load(row.K, row.r, row.r);
    row.ratio = row.li / row.ours;
    row.log10_n_ours = std::log10(static_cast<double>(row.K));
    row.approximate = row.p > kExactFileCountMaxP;
    row.log10_n_li = row.approximate ? log_binomial_approx(row.K, row.r) / std::log(10.0)
                                     : log10_of(binomial(row.K, row.r));
  });
  bool ok = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ok = ok && rows[i].ratio > 0 && rows[i].ratio <= 1;
    if (i > 0) ok = ok && rows[i].ratio > rows[i - 1].ratio;
  }
  emit(cfg, out, [&](std::ostream& o) {
    io::CsvWriter csv(o);
    csv.row({"p", "K", "r", "ours_num", "ours_den", "ours_float", "li_num", "li_den", "li_float",
             "ratio_num", "ratio_den", "ratio_float", "log10_n_ours", "log10_n_li",
             "n_li_approximate"});
    for (const auto& r : rows) {
      csv.row({std::to_string(r.p), std::to_string(r.K), std::to_string(r.r), num(r.ours),
               den(r.ours), to_decimal(r.ours), num(r.li), den(r.li), to_decimal(r.li),
               num(r.ratio), den(r.ratio), to_decimal(r.ratio), fixed(r.log10_n_ours),
               fixed(r.log10_n_li), r.approximate ? "true" : "false"});
    }
  });
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_check_lemma31(const RunConfig& cfg, std::ostream& out) {
  const auto fp = metrics::FamilyParams::make(cfg.p, cfg.w, cfg.vs);
  const auto rep = metrics::lemma31_check(fp);
  auto verdict = [](const metrics::Inequality& q) { return q.holds ? "HOLDS" : "FAILS"; };
  emit(cfg, out, [&](std::ostream& o) {
    if (cfg.format == "csv") {
      io::CsvWriter csv(o);
      csv.row({"p", "w", "y", "inequality", "lhs", "rhs", "holds"});
      const std::pair<const char*, const metrics::Inequality*> items[] = {
          {"main", &rep.main}, {"tail_bound", &rep.tail_bound}, {"ratio_bound", &rep.ratio_bound}};
      for (const auto& [name, q] : items) {
        csv.row({std::to_string(rep.p), std::to_string(rep.w), std::to_string(rep.y), name,
                 q->lhs.str(), q->rhs.str(), q->holds ? "true" : "false"});
      }
      return;
    }
    o << "p = " << rep.p << ", w = " << rep.w << ", vs = " << join(fp.vs()) << ", y = " << rep.y
      << "\n"
      << rep.main.lhs << " > " << rep.main.rhs << " " << verdict(rep.main) << "\n"
      << "tail bound: " << rep.tail_bound.lhs << " > " << rep.tail_bound.rhs << " "
      << verdict(rep.tail_bound) << "\n"
      << "ratio bound: " << rep.ratio_bound.lhs << " > " << rep.ratio_bound.rhs << " "
      << verdict(rep.ratio_bound) << "\n";
  });
  return kExitOk;
}

int cmd_verify_design(const RunConfig& cfg, std::ostream& out) {
  if (cfg.check < 1) throw ParameterError("--check must be >= 1 (t >= 1 required)");
  const auto design = designs::cyclic_blocks(cfg.n, cfg.t);
  const auto verdict = designs::verify_t_design(design, cfg.check);
  emit(cfg, out, [&](std::ostream& o) {
    o << "blocks:";
    for (const auto& b : design.blocks) o << ' ' << join(b);
    o << "\n";
    if (verdict.is_t_design) {
      o << verdict.t << "-(" << design.n_points << "," << design.block_size << ","
        << *verdict.lambda << ") design\n";
    } else {
      const auto& w = *verdict.counterexample;
      o << "not a " << verdict.t << "-design\n"
        << "witness: " << join(w.first) << " lies in " << w.first_count << " block(s), "
        << join(w.second) << " lies in " << w.second_count << " block(s)\n";
    }
  });
  return kExitOk;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out) {
  const std::vector<metrics::LoadReport> reports = {
      metrics::table1_loads(metrics::Table1Row::kNew, {{"K", cfg.n}, {"r", cfg.t}}),
      metrics::table1_loads(metrics::Table1Row::kLi, {{"K", cfg.n}, {"r", cfg.t}, {"s", cfg.t}}),
  };
  emit(cfg, out, [&](std::ostream& o) { io::write_load_csv(o, reports); });
  return reports[0].load >= reports[1].load ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cascaded coded distributed computing on cyclic 1-designs", "cdc-forge"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_nt = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "nodes = files = functions")->required();
    sub->add_option("--t", cfg.t, "computation load r = replication s")->required();
  };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field-T", cfg.field_T, "field width T of GF(2^T)")
        ->check(CLI::Range(2u, 16u));
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.output_path, "output file"); };

  auto* build = app.add_subcommand("build", "build a scheme plan and write it as JSON");
  add_nt(build);
  add_field(build);
  add_out(build);
  build->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

  auto* simulate = app.add_subcommand("simulate", "run Map, Shuffle and Reduce and verify");
  add_nt(simulate);
  add_field(simulate);
  simulate->add_option("--seed", cfg.seed, "seed for file contents and map functions");
  simulate->add_option("--file-bits", cfg.file_bits, "bits per input file");
  simulate->add_option("--transcript", cfg.transcript_path, "write signals as JSON lines");
  simulate->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

  auto* fig2 = app.add_subcommand("sweep-fig2", "symmetric-design vs cyclic loads over b (CSV)");
  fig2->add_option("--b-min", cfg.b_min);
  fig2->add_option("--b-max", cfg.b_max);
  add_out(fig2);

  auto* fig3 = app.add_subcommand("sweep-fig3", "K = p^4+p^2+p+1, r = s = p^4 vs optimum (CSV)");
  fig3->add_option("--p-min", cfg.p_min);
  fig3->add_option("--p-max", cfg.p_max);
  add_out(fig3);

  auto* lemma = app.add_subcommand("check-lemma31", "exact check of the binomial inequalities");
  lemma->add_option("--p", cfg.p)->required();
  lemma->add_option("--w", cfg.w);
  lemma->add_option("--vs", cfg.vs, "exponents v_1..v_c")->delimiter(',');
  add_out(lemma);
  lemma->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "csv"}));

  auto* verify = app.add_subcommand("verify-design", "check the cyclic design for the t-design property");
  add_nt(verify);
  verify->add_option("--check", cfg.check, "t of the t-design property to check")->required();
  add_out(verify);

  auto* compare = app.add_subcommand("compare", "loads of this scheme and the optimum (CSV)");
  add_nt(compare);
  add_out(compare);

  std::vector<std::string> argv_storage{"cdc-forge"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build) return cmd_build(cfg, out);
    if (*simulate) return cmd_simulate(cfg, out);
    if (*fig2) return cmd_sweep_fig2(cfg, out);
    if (*fig3) return cmd_sweep_fig3(cfg, out);
    if (*lemma) return cmd_check_lemma31(cfg, out);
    if (*verify) return cmd_verify_design(cfg, out);
    if (*compare) return cmd_compare(cfg, out);
  } catch (const engine::DecodeFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cdc::cli
