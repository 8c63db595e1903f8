#include "entrolab/cli_runner.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "entrolab/estimators.hpp"
#include "entrolab/reduction.hpp"
#include "entrolab/version.hpp"

namespace entrolab {

namespace {

Report fresh_report() {
  Report r;
  r.tool = kToolName;
  r.version = kToolVersion;
  r.timestamp = current_timestamp_utc();
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

EntropyFamily parse_family(const std::string& s) {
  if (s == "tsallis") return EntropyFamily::Tsallis;
  if (s == "renyi") return EntropyFamily::Renyi;
  throw Error("family must be 'tsallis' or 'renyi'");
}

}  // namespace

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ENTROLAB_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int run_verify_inequalities(const VerifyOptions& opt, Report& out) {
  out = fresh_report();
  GridSpec grid;
  grid.x_points = opt.x_points;
  grid.slack = opt.slack;
  out.checks = run_inequality_suite(grid, opt.only, resolve_threads(opt.threads));
  return out.all_passed() ? 0 : 1;
}

int run_build(const BuildOptions& opt, Report& out) {
  out = fresh_report();
  EntropyFamily family = parse_family(opt.family);
  Order order = Order::parse(opt.order);
  if (opt.n < 2) throw Error("instances need n >= 2");

  SyntheticBqpInstance bqp = synthesize_bqp_instance(opt.n - 1, opt.accept_prob);
  ReductionInstance inst = build_instance(bqp, family, order);

  if (!opt.out_path.empty()) {
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) throw Error("cannot write '" + opt.out_path + "'");
    f << serialize_instance(inst);
  }

  InstanceRecord rec;
  rec.family = opt.family;
  rec.order = order.str();
  rec.n = inst.n;
  rec.t = inst.tg.t;
  rec.g = inst.tg.g;
  rec.label = label_str(inst.label);
  rec.verdict = "";
  rec.entropy = 0.0;
  rec.pass = inst.tg.valid;
  out.instances.push_back(rec);
  return inst.tg.valid ? 0 : 1;
}

int run_instance_file(const RunOptions& opt, Report& out) {
  out = fresh_report();
  ReductionInstance inst = parse_instance(slurp(opt.instance_path));
  VerifyResult res = verify_instance(inst);

  InstanceRecord rec;
  rec.family = inst.family == EntropyFamily::Tsallis ? "tsallis" : "renyi";
  rec.order = inst.order.str();
  rec.n = inst.n;
  rec.t = inst.tg.t;
  rec.g = inst.tg.g;
  rec.entropy = res.entropy;
  rec.label = label_str(inst.label);
  rec.verdict = verdict_str(res.verdict);
  rec.pass = inst.label == InstanceLabel::Unknown ||
             rec.verdict == rec.label;
  out.instances.push_back(rec);
  return rec.pass ? 0 : 1;
}

int run_swap_test(const SwapTestOptions& opt, Report& out) {
  out = fresh_report();

  if (!opt.order0_instance_path.empty()) {
    ReductionInstance inst = parse_instance(slurp(opt.order0_instance_path));
    ShotPlan plan{opt.shots, opt.seed};
    Order0Result res = order0_decide(inst.mixer, plan);
    SampleRecord rec;
    rec.kind = "order0";
    rec.shots = res.shots;
    rec.seed = opt.seed;
    rec.ones = res.ones;
    rec.zeros = res.shots - res.ones;
    rec.estimate = res.accept_prob;
    rec.exact = res.purity;
    rec.decision = res.decision == RankDecision::Rank2
                       ? "RANK2"
                       : (res.provisional ? "RANK1 (provisional)" : "RANK1");
    out.samples.push_back(rec);
    return 0;
  }

  if (opt.state0_path.empty()) {
    throw Error("swap-test needs --state0 or --order0-instance");
  }
  Circuit c0 = parse_circuit(slurp(opt.state0_path));
  DensityMatrix rho0 = reduced_state(c0, StateVector::zero(c0.width));
  DensityMatrix rho1 = rho0;
  if (!opt.state1_path.empty()) {
    Circuit c1 = parse_circuit(slurp(opt.state1_path));
    rho1 = reduced_state(c1, StateVector::zero(c1.width));
  }

  ShotPlan plan{opt.shots, opt.seed};
  SwapTestSample s = swap_test_sample(rho0, rho1, plan);
  SampleRecord rec;
  rec.kind = opt.state1_path.empty() ? "purity" : "swap-test";
  rec.shots = plan.shots;
  rec.seed = plan.seed;
  rec.zeros = s.zeros;
  rec.ones = s.ones;
  rec.estimate = s.estimate;
  rec.exact = s.exact;
  rec.decision = "";
  out.samples.push_back(rec);
  return 0;
}

int run_scan_qstar(const QStarOptions& opt, Report& out) {
  out = fresh_report();
  if (opt.x_points < 1) throw Error("scan-qstar needs at least one x");
  std::vector<double> xs;
  for (int i = 1; i <= opt.x_points; ++i) {
    xs.push_back(0.5 * static_cast<double>(i) /
                 static_cast<double>(opt.x_points + 1));
  }
  for (const QStarPoint& p : scan_qstar(xs)) {
    out.qstar.push_back(QStarRecord{p.x, p.q_star, p.found});
  }
  return 0;
}

}  // namespace entrolab
