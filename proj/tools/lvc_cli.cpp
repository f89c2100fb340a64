// Command-line front end. Every subcommand prints one JSON (or CSV) payload
// that echoes the global configuration. Exit codes: 0 ok, 1 usage or
// malformed input, 2 recognized failure or nothing found, 3 exhausted.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "lvc/json_io.hpp"
#include "lvc/lvc.hpp"

namespace {

using namespace lvc;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailed = 2;
constexpr int kExhausted = 3;

struct GlobalConfig {
  std::uint64_t seed = 0;
  std::size_t fuel = 1'000'000;
  std::size_t precision_bits = 30;
  std::size_t trials = 10'000;
  std::string output = "json";

  Json json() const {
    return {{"seed", seed}, {"fuel", fuel}, {"precision_bits", precision_bits}, {"trials", trials}, {"output", output}};
  }
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_source(path));
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

std::string csv_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + csv_cell(v[i]);
    return s;
  }
  return v.dump();
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) flatten(*it, key, out);
    else out.emplace_back(key, csv_cell(*it));
  }
}

void emit(const GlobalConfig& cfg, Json payload) {
  payload["config"] = cfg.json();
  if (cfg.output == "csv") {
    std::vector<std::pair<std::string, std::string>> cells;
    flatten(payload, "", cells);
    for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? "," : "") << cells[i].first;
    std::cout << "\n";
    for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? "," : "") << cells[i].second;
    std::cout << "\n";
  } else {
    std::cout << payload.dump(2) << "\n";
  }
}

Json estimate_json(const SuccessEstimate& e) {
  return {{"trials", e.trials},
          {"succeeded", e.succeeded},
          {"failed", e.failed},
          {"exhausted", e.exhausted},
          {"estimate", to_string(e.estimate)},
          {"success_frequency", to_string(e.success_frequency)},
          {"wilson99", {to_string(e.wilson_lo), to_string(e.wilson_hi)}}};
}

int status_exit(RunStatus s) {
  switch (s) {
    case RunStatus::Succeeding: return kOk;
    case RunStatus::Failed: return kFailed;
    case RunStatus::Exhausted: return kExhausted;
  }
  return kUsage;
}

SuccessEstimate estimate_wwkl(const CoTree& t, const GlobalConfig& cfg, std::optional<std::size_t> out_len) {
  return lv_estimate_success(wwkl_machine(), t, cfg.trials, cfg.seed, RunBudget{cfg.fuel},
                             out_len.value_or(wwkl_decisive_length(t)));
}

int cmd_wwkl(const GlobalConfig& cfg, const std::string& path) {
  const CoTree t = tree_from_json(read_json(path));
  Json out = estimate_json(estimate_wwkl(t, cfg, std::nullopt));
  out["exact"] = to_string(tree_measure_exact(t));
  emit(cfg, out);
  return kOk;
}

int cmd_nash(const GlobalConfig& cfg, const std::string& path) {
  const BimatrixGame g = game_from_json(read_json(path));
  const NashResult r = nash_solve(g);
  if (!r.equilibrium) {
    emit(cfg, {{"result", "not_found"}, {"examined", r.examined}});
    return kFailed;
  }
  emit(cfg, {{"result", "found"},
             {"x", vector_json(r.equilibrium->x)},
             {"y", vector_json(r.equilibrium->y)},
             {"verified", nash_verify(g, *r.equilibrium)},
             {"support", {r.row_support, r.col_support}},
             {"examined", r.examined}});
  return kOk;
}

int cmd_rdiv(const GlobalConfig& cfg, const std::string& xs, const std::string& ys) {
  Rational x, y;
  try {
    x = parse_rational(xs);
    y = parse_rational(ys);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  const Rational exact = rdiv(x, y);
  const RdivOutcome o = rdiv_stream(sds_from_rational(x), sds_from_rational(y), cfg.precision_bits, {cfg.fuel});
  Json out = {{"exact", to_string(exact)},
              {"status", o.status == RdivStatus::Converged ? "converged" : "exhausted"},
              {"value", o.value.str()},
              {"value_rational", to_string(o.value.to_rational())},
              {"mind_changes", o.mind_changes},
              {"steps", o.steps}};
  out["witness_precision"] = o.witness_precision ? Json(*o.witness_precision) : Json(nullptr);
  emit(cfg, out);
  return o.status == RdivStatus::Converged ? kOk : kExhausted;
}

Json zero_set_json(const PwlFunction& f) {
  Json zs = Json::array();
  for (const auto& iv : pwl_zero_set(f)) zs.push_back(interval_json(iv));
  return zs;
}

int cmd_ivt(const GlobalConfig& cfg, const std::string& path, std::optional<int> advice_b, bool trisect) {
  const PwlFunction f = pwl_from_json(read_json(path));
  require_sign_change(f);
  if (trisect) {
    const TrisectOutcome o = ivt_trisect(f, cfg.precision_bits, {cfg.fuel});
    Json out = {{"mode", "trisect"},
                {"status", o.status == TrisectStatus::Zero ? "zero" : "stalled"},
                {"interval", interval_json(o.interval)},
                {"plateau", o.plateau},
                {"shrinks", o.shrinks},
                {"steps", o.steps},
                {"zero_set", zero_set_json(f)}};
    if (o.status == TrisectStatus::Zero) out["value"] = to_string(o.value.to_rational());
    emit(cfg, out);
    return o.status == TrisectStatus::Zero ? kOk : kExhausted;
  }
  Bits advice = seeded_bits(cfg.seed);
  if (advice_b) {
    const Bits x = drop(advice, 1);
    const auto b = static_cast<std::uint8_t>(*advice_b);
    advice = Bits([x, b](std::size_t i) { return i == 0 ? b : x[i - 1]; });
  }
  const RunOutcome<Dyadic> o = ivt_probabilistic(f, advice, cfg.precision_bits, {cfg.fuel});
  Json out = {{"mode", "probabilistic"},
              {"advice_b", advice[0]},
              {"status", to_string(o.status)},
              {"steps", o.steps},
              {"symbols", o.output.size()},
              {"zero_set", zero_set_json(f)}};
  if (!o.output.empty()) out["value"] = to_string(o.output.back().to_rational());
  emit(cfg, out);
  return status_exit(o.status);
}

int cmd_svc(const GlobalConfig& cfg, const std::optional<std::string>& query, std::string eps, std::string word,
            std::size_t depth) {
  SvcQuery q;
  if (query) {
    q = svc_query_from_json(read_json(*query));
    depth = q.depth;
  } else {
    q.epsilon = dyadic_from_string(eps);
    q.word = std::move(word);
  }
  Interval iv;
  try {
    iv = svc_interval(q.word, q.epsilon);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  Json out = interval_json(iv);
  out["epsilon"] = to_string(q.epsilon.to_rational());
  out["word"] = q.word;
  out["cylinder_measure"] = to_string(svc_cylinder_measure(q.word, q.epsilon));
  if (depth > 0) {  // level sums are only reported when asked for
    out["depth"] = depth;
    out["remaining_length"] = to_string(svc_remaining_length(q.epsilon, depth));
    out["subtree_length"] = to_string(svc_subtree_length(q.word, q.epsilon, depth));
  }
  emit(cfg, out);
  return kOk;
}

int cmd_density(const GlobalConfig& cfg, const std::string& path, std::size_t k) {
  const CoTree t = tree_from_json(read_json(path));
  const DensityWitness w = ldl_search(t, k, {cfg.fuel});
  emit(cfg, {{"status", w.status == LdlStatus::Certified ? "certified" : "exhausted"},
             {"word", w.word},
             {"relative_measure", to_string(w.relative_measure)},
             {"rejected", w.rejected},
             {"certifying_depth", w.certifying_depth},
             {"steps", w.steps}});
  return w.status == LdlStatus::Certified ? kOk : kExhausted;
}

int cmd_amplify(const GlobalConfig& cfg, const std::string& a_path, const std::string& b_path) {
  const CoTree a = tree_from_json(read_json(a_path));
  const CoTree b = tree_from_json(read_json(b_path));
  const CoTree c = product_amplify(a, b);
  const Rational ma = tree_measure_exact(a), mb = tree_measure_exact(b), mc = tree_measure_exact(c);
  emit(cfg, {{"measure_a", to_string(ma)},
             {"measure_b", to_string(mb)},
             {"measure", to_string(mc)},
             {"law", to_string(1 - (1 - ma) * (1 - mb))},
             {"tree", tree_json(c)}});
  return kOk;
}

int cmd_majority(const GlobalConfig& cfg, const std::string& path) {
  const MajorityInput in = majority_from_json(read_json(path));
  const MajorityOutcome o = majority_vote(in.oracle(), in.k, in.max_depth);
  if (o.status == MajorityStatus::Exhausted) {
    emit(cfg, {{"status", "exhausted"}});
    return kExhausted;
  }
  emit(cfg, {{"status", "found"},
             {"value", o.value.str()},
             {"value_rational", to_string(o.value.to_rational())},
             {"depth", o.depth},
             {"support", o.support}});
  return kOk;
}

int cmd_estimate(const GlobalConfig& cfg, const std::string& machine, const std::string& path,
                 std::optional<std::size_t> out_len) {
  const Json conf = read_json(path);
  SuccessEstimate e;
  if (machine == "wwkl") {
    e = estimate_wwkl(tree_from_json(conf), cfg, out_len);
  } else if (machine == "ivt") {
    const PwlFunction f = pwl_from_json(conf);
    require_sign_change(f);
    e = lv_estimate_success(ivt_machine(), f, cfg.trials, cfg.seed, {cfg.fuel},
                            out_len.value_or(cfg.precision_bits + 1));
  } else if (machine == "rdiv") {
    const Rational x = json_rational(json_field(conf, "x")), y = json_rational(json_field(conf, "y"));
    rdiv(x, y);  // range check
    const NegClosedUnit name = rdiv_auc_name(sds_from_rational(x), sds_from_rational(y));
    e = lv_estimate_success(auc_pcc_machine(), name, cfg.trials, cfg.seed, {cfg.fuel}, out_len.value_or(16));
  } else if (machine == "compose") {
    const CoTree tf = tree_from_json(json_field(conf, "f")), tg = tree_from_json(json_field(conf, "g"));
    auto h = lv_compose(lv_on_stream<std::uint8_t>(wwkl_machine_for(tf)), wwkl_machine_for(tg));
    const std::size_t len = std::max(wwkl_decisive_length(tf), wwkl_decisive_length(tg));
    e = lv_estimate_success(h, Unit{}, cfg.trials, cfg.seed, {cfg.fuel}, out_len.value_or(len));
  } else {
    throw UsageError("unknown machine '" + machine + "' (expected wwkl, rdiv, ivt or compose)");
  }
  Json out = estimate_json(e);
  out["machine"] = machine;
  emit(cfg, out);
  return kOk;
}

constexpr const char* kSchemas = R"(Input formats (files, or - for standard input):
  tree       {"excluded": ["00", "1011"]}
  function   {"breakpoints": [["0","-1"], ["2/5","0"], ["3/5","0"], ["1","1"]]}
  game       {"A": [["1","-1"], ["-1","1/2"]], "B": [["-1","1"], ["1","-1"]]}
  svc query  {"epsilon": "1/2", "word": "01", "depth": 10}
  majority   {"k": 20, "max_depth": 3, "outputs": [{"word": "000", "lo": "p/q", "hi": "p/q"}]}
  estimate   wwkl: tree; ivt: function; rdiv: {"x": "1/2", "y": "1/4"};
             compose: {"f": tree, "g": tree}
Rationals are written "p/q" or "p"; dyadics "m*2^-e".
Exit codes: 0 ok, 1 usage or malformed input, 2 recognized failure or
nothing found, 3 exhausted.)";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Las Vegas computation over infinite objects"};
  app.footer(kSchemas);
  app.require_subcommand(1);
  app.fallthrough();

  GlobalConfig cfg;
  app.add_option("--seed", cfg.seed, "Seed for advice sampling");
  app.add_option("--fuel", cfg.fuel, "Step budget per run");
  app.add_option("--precision-bits", cfg.precision_bits, "Output precision k (error 2^-k)");
  app.add_option("--trials", cfg.trials, "Number of Monte Carlo trials");
  app.add_option("--output", cfg.output, "Payload format")->check(CLI::IsMember({"json", "csv"}));

  std::string tree_path, game_path, fn_path, a_path, b_path, oracle_path, machine, config_path;
  std::string rx, ry, eps = "1/2", word;
  std::optional<std::string> query;
  std::optional<std::size_t> out_len;
  std::size_t depth = 0;
  std::optional<int> advice_b;
  std::size_t k = 2;
  bool trisect = false;

  auto* wwkl = app.add_subcommand("wwkl", "Estimate the success rate of path sampling on a tree");
  wwkl->add_option("tree", tree_path, "Tree JSON")->required();

  auto* nash = app.add_subcommand("nash", "Solve a bimatrix game by support enumeration");
  nash->add_option("game", game_path, "Game JSON")->required();

  auto* rd = app.add_subcommand("rdiv", "Robust division x/max(x,y)");
  rd->add_option("--x", rx, "x in [0,1]")->required();
  rd->add_option("--y", ry, "y in [0,1]")->required();

  auto* ivt = app.add_subcommand("ivt", "Zero of a piecewise-linear function");
  ivt->add_option("--function", fn_path, "Function JSON")->required();
  ivt->add_option("--advice-b", advice_b, "Fix the advice bit b")->check(CLI::Range(0, 1));
  ivt->add_flag("--trisect", trisect, "Run plain trisection instead");

  auto* svc = app.add_subcommand("svc", "Smith-Volterra-Cantor interval of a word");
  svc->add_option("--query", query, "SVC query JSON (overrides the flags)");
  svc->add_option("--epsilon", eps, "Dyadic epsilon in [0,1)");
  svc->add_option("--word", word, "Binary word");
  svc->add_option("--depth", depth, "Also report level sums at this depth");

  auto* density = app.add_subcommand("density", "Cylinder of relative measure at least 1 - 2^-k");
  density->add_option("--tree", tree_path, "Tree JSON")->required();
  density->add_option("--k", k, "Density exponent");

  auto* amplify = app.add_subcommand("amplify", "Co-tree of (A x 2^N) u (2^N x B)");
  amplify->add_option("--a", a_path, "Tree JSON for A")->required();
  amplify->add_option("--b", b_path, "Tree JSON for B")->required();

  auto* majority = app.add_subcommand("majority", "Majority-vote derandomization over an output table");
  majority->add_option("--oracle", oracle_path, "Majority JSON")->required();

  auto* estimate = app.add_subcommand("estimate", "Success estimate of a machine");
  estimate->add_option("machine", machine, "wwkl | rdiv | ivt | compose")->required();
  estimate->add_option("--config", config_path, "Machine JSON")->required();
  estimate->add_option("--out-len", out_len, "Output symbols a run must produce");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*wwkl) return cmd_wwkl(cfg, tree_path);
    if (*nash) return cmd_nash(cfg, game_path);
    if (*rd) return cmd_rdiv(cfg, rx, ry);
    if (*ivt) return cmd_ivt(cfg, fn_path, advice_b, trisect);
    if (*svc) return cmd_svc(cfg, query, eps, word, depth);
    if (*density) return cmd_density(cfg, tree_path, k);
    if (*amplify) return cmd_amplify(cfg, a_path, b_path);
    if (*majority) return cmd_majority(cfg, oracle_path);
    if (*estimate) return cmd_estimate(cfg, machine, config_path, out_len);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
