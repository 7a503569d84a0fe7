#include "cornu/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "cornu/ends.hpp"
#include "cornu/error.hpp"
#include "cornu/locator.hpp"
#include "cornu/svg.hpp"
#include "cornu/tm.hpp"

namespace cornu::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_value(const std::string& key, const std::string& v) {
  std::istringstream in(v);
  T out{};
  in >> out;
  if (in.fail() || !in.eof()) throw Error(ErrorCode::MalformedInput, "bad value for " + key + ": " + v);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json read_json(const std::string& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, path + ": " + e.what());
  }
}

// Writes through a temporary file so readers never see a partial output.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::MalformedInput, "cannot write " + path);
    f << text;
    if (!f) throw Error(ErrorCode::MalformedInput, "cannot write " + path);
  }
  std::filesystem::rename(tmp, path);
}

int exit_code_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::MalformedMachine:
    case ErrorCode::MalformedInput:
    case ErrorCode::DegenerateInput:
      return kInputError;
    default:
      return kDomainError;
  }
}

nlohmann::json pole_json(const HalfPlane& h) {
  const Vec3& p = h.boundary.pole();
  return {p.x0, p.x1, p.x2};
}

}  // namespace

Config parse_config(const std::string& text) {
  Config c;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::MalformedInput, "expected key=value: " + line);
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "eps") {
      c.eps = parse_value<double>(key, value);
    } else if (key == "max_depth") {
      c.max_depth = parse_value<int>(key, value);
    } else if (key == "seed") {
      c.seed = parse_value<unsigned>(key, value);
    } else if (key == "width") {
      c.width = parse_value<int>(key, value);
    } else if (key == "height") {
      c.height = parse_value<int>(key, value);
    } else {
      throw Error(ErrorCode::MalformedInput, "unknown config key " + key);
    }
  }
  if (!(c.eps > 0) || c.max_depth < 0 || c.width <= 0 || c.height <= 0) {
    throw Error(ErrorCode::MalformedInput, "config values out of range");
  }
  return c;
}

namespace {

svg::RenderSpec render_spec(const Config& cfg) {
  svg::RenderSpec s;
  s.width = cfg.width;
  s.height = cfg.height;
  return s;
}

std::string cmd_tiling(const Config& cfg, int depth, const std::string& format) {
  if (depth < 0) throw Error(ErrorCode::DegenerateInput, "depth must be non-negative");
  if (depth > cfg.max_depth) {
    throw Error(ErrorCode::BudgetExhausted, "depth " + std::to_string(depth) + " exceeds max_depth " +
                                                std::to_string(cfg.max_depth));
  }
  const std::vector<Tile> tiles = decompose(base_quarter(), depth);
  if (format == "svg") return svg::render_tiles(tiles, render_spec(cfg));
  return tiles_json(tiles).dump(1) + "\n";
}

nlohmann::json located(const Config& cfg, double x, double y) {
  LocateOptions opt;
  opt.tol = cfg.eps;
  const Tile t = locate(from_disc({x, y}), base_quarter(), opt);
  return {{"point", {x, y}}, {"path", t.path}, {"color", to_string(t.color)}, {"generation", t.generation}};
}

std::string cmd_locate(const Config& cfg, const std::vector<double>& xy, int random) {
  if (random > 0) {
    std::mt19937 rng(cfg.seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    nlohmann::json all = nlohmann::json::array();
    while (static_cast<int>(all.size()) < random) {
      const double x = u(rng), y = u(rng);
      if (x * x + y * y < 0.9) all.push_back(located(cfg, x, y));
    }
    return all.dump(1) + "\n";
  }
  if (xy.size() != 2) throw Error(ErrorCode::MalformedInput, "locate needs X Y or --random N");
  return located(cfg, xy[0], xy[1]).dump() + "\n";
}

nlohmann::json trace_with_steps(const std::vector<HatState>& states, const QuarterSeq& seq) {
  nlohmann::json t = trace_json(states);
  for (std::size_t k = 0; k + 1 < t.size(); ++k) t[k]["step"] = seq.step(k).matrix();
  return t;
}

std::string sequence_svg(const Config& cfg, const QuarterSeq& seq, std::size_t horizon,
                         const std::vector<MLine>& lines) {
  svg::RenderSpec spec = render_spec(cfg);
  svg::Canvas c(spec);
  for (const Tile& t : decompose(base_quarter(), std::min(cfg.max_depth, 3))) c.pentagon(t.pentagon, t.color);
  for (const MLine& l : lines) c.line(l, spec.line, 2.0);
  for (std::size_t k = 0; k < horizon; ++k) {
    const auto hat = seq.at(k).hat();
    c.segment(hat[0], hat[1], spec.vertex, 1.5);
    c.segment(hat[1], hat[2], spec.vertex, 1.5);
    c.dot(hat[1], 3.0, spec.vertex);
  }
  return c.str();
}

std::string verdict_line(const std::optional<Separation>& sep) {
  if (!sep) return "verdict=UnknownAtHorizon\n";
  return "verdict=Separated h1=" + pole_json(sep->h1).dump() + " h2=" + pole_json(sep->h2).dump() + "\n";
}

void cmd_tmseq(const Config& cfg, const std::string& machine_path, std::size_t input, std::size_t horizon,
               const std::string& mode, const std::string& format, const std::string& out_path, std::ostream& out) {
  if (horizon < 2) throw Error(ErrorCode::DegenerateInput, "horizon must be at least 2");
  const nlohmann::json spec = read_json(machine_path);
  if (mode == "noalgo") {
    const NoAlgoSeq s = build_noalgo_seq(machine_from_json(spec), input, horizon);
    const Classification cls = classify(s.seq, horizon);
    const NeighborhoodChain chain = track_limit(s.seq, horizon);
    const NeighborhoodChain straight =
        track_limit(build_noalgo_seq(machines::run_right_forever(), input, horizon).seq, horizon);
    std::ostringstream summary;
    summary << "mode=noalgo\n";
    summary << "turn=" << (s.turn ? std::to_string(*s.turn) : std::string("none")) << "\n";
    summary << "strict_steps=" << cls.strict_steps.size() << "\n";
    summary << "direct_so_far=" << (cls.direct_so_far ? "true" : "false") << "\n";
    summary << "restarts=" << chain.restarts << "\n";
    summary << "chain=" << to_json(chain).dump() << "\n";
    summary << verdict_line(ends_separated(straight, chain));
    std::vector<MLine> lines{s.delta0};
    if (s.delta1) lines.push_back(*s.delta1);
    const std::string body = format == "svg" ? sequence_svg(cfg, s.seq, horizon, lines)
                                             : trace_with_steps(s.states, s.seq).dump(1) + "\n";
    emit(out_path, body, out);
    out << summary.str();
    return;
  }
  if (mode != "noconv") throw Error(ErrorCode::MalformedInput, "mode is noalgo or noconv");
  const MachineRoster roster = roster_from_json(spec);
  std::ostringstream summary;
  summary << "mode=noconv\n";
  const auto ys = y_sequence(roster, input, horizon);
  for (std::size_t n = 0; n < ys.size(); ++n) {
    summary << "n=" << n << " bits=";
    for (int b : ys[n]) summary << b;
    summary << "\n";
  }
  const NoConvSeq s = build_noconv_seq(roster, input, horizon);
  summary << "chain=" << to_json(track_limit(s.seq, horizon)).dump() << "\n";
  const std::string body =
      format == "svg" ? sequence_svg(cfg, s.seq, horizon, {}) : trace_with_steps(s.states, s.seq).dump(1) + "\n";
  emit(out_path, body, out);
  out << summary.str();
}

MPoint point_of(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorCode::MalformedInput, "points are [x0, x1, x2]");
  return MPoint::from_raw({j[0].get<double>(), j[1].get<double>(), j[2].get<double>()});
}

Quarter quarter_of_hat(const nlohmann::json& h) {
  const std::array<MPoint, 3> hat{point_of(h.at(0)), point_of(h.at(1)), point_of(h.at(2))};
  return Quarter{Isometry::from_triples(base_quarter().hat(), hat)};
}

// Local steps are preferred to hats: far from O the hats no longer pin the
// relative position of consecutive quarters in double precision.
QuarterSeq sequence_of_trace(const nlohmann::json& t) {
  if (!t.is_array() || t.empty()) throw Error(ErrorCode::MalformedInput, "trace must be a non-empty array");
  const bool has_steps = std::all_of(t.begin(), t.end() - 1, [](const auto& e) { return e.contains("step"); });
  if (!has_steps) {
    std::vector<Quarter> quarters;
    for (const auto& e : t) quarters.push_back(quarter_of_hat(e.at("hat")));
    return QuarterSeq::from_quarters(quarters);
  }
  std::vector<Isometry> steps;
  for (std::size_t k = 0; k + 1 < t.size(); ++k) steps.push_back(Isometry::from_matrix(t[k]["step"].get<Mat3>()));
  return QuarterSeq(quarter_of_hat(t[0].at("hat")),
                    [steps](std::size_t k) { return k < steps.size() ? steps[k] : Isometry::identity(); });
}

int cmd_sequence(const std::string& trace_path, std::size_t horizon, const std::string& out_path, std::ostream& out) {
  const nlohmann::json t = read_json(trace_path);
  QuarterSeq seq = [&] {
    try {
      return sequence_of_trace(t);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::MalformedInput, trace_path + ": " + e.what());
    }
  }();
  const std::size_t K = horizon == 0 ? t.size() : std::min(horizon, t.size());
  if (K < 2) throw Error(ErrorCode::DegenerateInput, "a sequence needs at least two terms");
  const Classification c = classify(seq, K);
  nlohmann::json kinds = nlohmann::json::array();
  for (OneStepKind k : c.kinds) kinds.push_back(to_string(k));
  nlohmann::json report{{"classification",
                         {{"stepwise_ok", c.stepwise_ok},
                          {"violations", c.violations},
                          {"alternations", c.alternations},
                          {"strict_steps", c.strict_steps},
                          {"direct_so_far", c.direct_so_far},
                          {"kinds", kinds}}},
                        {"trace", trace_json(seq, K)}};
  int code = kOk;
  try {
    report["chain"] = to_json(track_limit(seq, K));
  } catch (const Error& e) {
    report["chain"] = nullptr;
    report["error"] = e.what();
    code = exit_code_of(e.code());
  }
  emit(out_path, report.dump(1) + "\n", out);
  return code;
}

NeighborhoodChain chain_of(const std::string& path) {
  nlohmann::json j = read_json(path);
  // a `sequence` report is accepted as is
  if (j.is_object() && j.contains("chain")) j = j["chain"];
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::MalformedInput, path + ": chain must be a non-empty array");
  NeighborhoodChain c;
  try {
    for (const auto& e : j) {
      const auto& p = e.at("pole");
      c.links.push_back({HalfPlane{MLine::from_pole({p.at(0).get<double>(), p.at(1).get<double>(),
                                                     p.at(2).get<double>()}),
                                   false},
                         e.at("from_index").get<std::size_t>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedInput, path + ": " + e.what());
  }
  return c;
}

std::string cmd_ends_separate(const std::string& p1, const std::string& p2) {
  const auto sep = ends_separated(chain_of(p1), chain_of(p2));
  if (!sep) return nlohmann::json{{"verdict", "UnknownAtHorizon"}}.dump() + "\n";
  return nlohmann::json{{"verdict", "Separated"}, {"h1", pole_json(sep->h1)}, {"h2", pole_json(sep->h2)},
                        {"i", sep->i}, {"j", sep->j}}
             .dump() +
         "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quarters, cornucopias and ends of the {5,4} pentagrid", "cornu"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  std::optional<unsigned> seed;
  app.add_option("--config", config_path, "key=value file: eps, max_depth, seed, width, height");
  app.add_option("--seed", seed, "overrides the config seed");

  int depth = 3;
  std::string format = "json", out_path = "-";
  auto* tiling = app.add_subcommand("tiling", "tiles of the quarter up to a tree depth");
  tiling->add_option("--depth", depth, "tree depth")->capture_default_str();
  tiling->add_option("--format", format)->check(CLI::IsMember({"json", "svg"}))->capture_default_str();
  tiling->add_option("--out", out_path, "output file, - for stdout");

  std::vector<double> xy;
  int random = 0;
  auto* loc = app.add_subcommand("locate", "tile containing a disc point");
  loc->add_option("xy", xy, "disc coordinates X Y")->expected(0, 2);
  loc->add_option("--random", random, "locate N seeded random points instead");
  loc->add_option("--out", out_path);

  std::string machine_path, mode = "noalgo";
  std::size_t input = 0, horizon = 20;
  auto* tm = app.add_subcommand("tmseq", "quarter sequences driven by Turing machines");
  tm->add_option("--machine", machine_path, "machine file (noalgo) or roster file (noconv)")->required();
  tm->add_option("--input", input, "input n (noalgo) or last n of the table (noconv)");
  tm->add_option("--horizon", horizon)->capture_default_str();
  tm->add_option("--mode", mode)->check(CLI::IsMember({"noalgo", "noconv"}))->capture_default_str();
  tm->add_option("--format", format)->check(CLI::IsMember({"json", "svg"}));
  tm->add_option("--out", out_path);

  std::string trace_path;
  std::size_t seq_horizon = 0;
  auto* seqc = app.add_subcommand("sequence", "classify a trace file and track its limit");
  seqc->add_option("trace", trace_path)->required();
  seqc->add_option("--horizon", seq_horizon, "terms to use, 0 for all");
  seqc->add_option("--out", out_path);

  std::string chain1, chain2;
  auto* ends = app.add_subcommand("ends-separate", "look for disjoint half-planes in two chain files or sequence reports");
  ends->add_option("chain1", chain1)->required();
  ends->add_option("chain2", chain2)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    Config cfg;
    if (!config_path.empty()) cfg = parse_config(read_file(config_path));
    if (seed) cfg.seed = *seed;
    if (tiling->parsed()) {
      emit(out_path, cmd_tiling(cfg, depth, format), out);
    } else if (loc->parsed()) {
      emit(out_path, cmd_locate(cfg, xy, random), out);
    } else if (tm->parsed()) {
      cmd_tmseq(cfg, machine_path, input, horizon, mode, format, out_path, out);
    } else if (seqc->parsed()) {
      return cmd_sequence(trace_path, seq_horizon, out_path, out);
    } else if (ends->parsed()) {
      out << cmd_ends_separate(chain1, chain2);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_of(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}

}  // namespace cornu::cli
