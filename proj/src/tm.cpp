#include "cornu/tm.hpp"

#include <algorithm>
#include <numbers>
#include <set>
#include <unordered_map>

#include "cornu/error.hpp"

namespace cornu {

namespace {

constexpr std::array<char, 3> kSymbols{'0', '1', '_'};

bool is_symbol(char c) { return std::find(kSymbols.begin(), kSymbols.end(), c) != kSymbols.end(); }

char symbol_of(const nlohmann::json& j) {
  if (!j.is_string() || j.get<std::string>().size() != 1 || !is_symbol(j.get<std::string>()[0])) {
    throw Error(ErrorCode::MalformedMachine, "symbols are \"0\", \"1\" or \"_\"");
  }
  return j.get<std::string>()[0];
}

}  // namespace

TuringMachine::TuringMachine(std::vector<std::string> states, std::string start, std::string halt,
                             std::map<std::pair<std::string, char>, Transition> table)
    : states_(std::move(states)), start_(std::move(start)), halt_(std::move(halt)), table_(std::move(table)) {
  const std::set<std::string> known(states_.begin(), states_.end());
  if (known.size() != states_.size()) throw Error(ErrorCode::MalformedMachine, "duplicate state name");
  if (!known.count(start_)) throw Error(ErrorCode::MalformedMachine, "unknown start state " + start_);
  if (!known.count(halt_)) throw Error(ErrorCode::MalformedMachine, "unknown halt state " + halt_);
  for (const auto& [key, t] : table_) {
    if (!known.count(key.first) || !known.count(t.next)) throw Error(ErrorCode::MalformedMachine, "unknown state");
    if (!is_symbol(key.second) || !is_symbol(t.write)) throw Error(ErrorCode::MalformedMachine, "unknown symbol");
    if (key.first == halt_) throw Error(ErrorCode::MalformedMachine, "transition out of the halt state");
  }
  for (const std::string& s : states_) {
    if (s == halt_) continue;
    for (char c : kSymbols) {
      if (!table_.count({s, c})) {
        throw Error(ErrorCode::MalformedMachine, "no transition for (" + s + ", " + std::string(1, c) + ")");
      }
    }
  }
}

const Transition& TuringMachine::at(const std::string& state, char symbol) const { return table_.at({state, symbol}); }

TuringMachine TuringMachine::from_json(const nlohmann::json& j) {
  try {
    std::vector<std::string> states = j.at("states").get<std::vector<std::string>>();
    std::map<std::pair<std::string, char>, Transition> table;
    for (const auto& row : j.at("transitions")) {
      if (!row.is_array() || row.size() != 5) throw Error(ErrorCode::MalformedMachine, "transition rows have 5 entries");
      const std::string mv = row[4].get<std::string>();
      if (mv != "L" && mv != "R") throw Error(ErrorCode::MalformedMachine, "moves are \"L\" or \"R\"");
      const auto key = std::make_pair(row[0].get<std::string>(), symbol_of(row[1]));
      if (table.count(key)) throw Error(ErrorCode::MalformedMachine, "nondeterministic transition");
      table[key] = Transition{row[2].get<std::string>(), symbol_of(row[3]), mv == "L" ? Move::L : Move::R};
    }
    return TuringMachine(std::move(states), j.at("start").get<std::string>(), j.at("halt").get<std::string>(),
                         std::move(table));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedMachine, e.what());
  }
}

nlohmann::json TuringMachine::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, t] : table_) {
    rows.push_back({key.first, std::string(1, key.second), t.next, std::string(1, t.write),
                    t.move == Move::L ? "L" : "R"});
  }
  return {{"states", states_}, {"start", start_}, {"halt", halt_}, {"transitions", rows}};
}

namespace machines {

TuringMachine halt_immediately() { return TuringMachine({"h"}, "h", "h", {}); }

TuringMachine run_right_forever() {
  std::map<std::pair<std::string, char>, Transition> t;
  for (char c : kSymbols) t[{"q", c}] = {"q", c, Move::R};
  return TuringMachine({"q", "h"}, "q", "h", t);
}

TuringMachine halts_at(int j) {
  if (j <= 0) return halt_immediately();
  std::vector<std::string> states;
  for (int i = 0; i < j; ++i) states.push_back("c" + std::to_string(i));
  states.push_back("h");
  std::map<std::pair<std::string, char>, Transition> t;
  for (int i = 0; i < j; ++i) {
    for (char c : kSymbols) t[{states[i], c}] = {states[i + 1], c, Move::R};
  }
  return TuringMachine(states, "c0", "h", t);
}

TuringMachine busy_beaver2() {
  std::map<std::pair<std::string, char>, Transition> t;
  for (char blank : {'0', '_'}) {
    t[{"A", blank}] = {"B", '1', Move::R};
    t[{"B", blank}] = {"A", '1', Move::L};
  }
  t[{"A", '1'}] = {"B", '1', Move::L};
  t[{"B", '1'}] = {"h", '1', Move::R};
  return TuringMachine({"A", "B", "h"}, "A", "h", t);
}

}  // namespace machines

TuringMachine machine_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("fixture")) return TuringMachine::from_json(j);
  try {
    const std::string name = j.at("fixture").get<std::string>();
    if (name == "halt_immediately") return machines::halt_immediately();
    if (name == "run_right_forever") return machines::run_right_forever();
    if (name == "busy_beaver2") return machines::busy_beaver2();
    if (name == "halts_at") return machines::halts_at(j.at("j").get<int>());
    throw Error(ErrorCode::MalformedMachine, "unknown fixture " + name);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedMachine, e.what());
  }
}

MachineRoster roster_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("roster") || !j["roster"].is_array()) {
    throw Error(ErrorCode::MalformedMachine, "expected {\"roster\": [...]}");
  }
  MachineRoster out;
  for (const auto& m : j["roster"]) out.push_back(machine_from_json(m));
  return out;
}

RunResult run(const TuringMachine& m, std::size_t input, std::size_t steps) {
  std::unordered_map<long long, char> tape;
  for (std::size_t i = 0; i < input; ++i) tape[static_cast<long long>(i)] = '1';
  long long head = 0;
  std::string state = m.start();
  for (std::size_t k = 0;; ++k) {
    if (state == m.halt()) return {true, k};
    if (k == steps) return {false, k};
    const auto it = tape.find(head);
    const Transition& t = m.at(state, it == tape.end() ? '_' : it->second);
    tape[head] = t.write;
    head += t.move == Move::R ? 1 : -1;
    state = t.next;
  }
}

int kleene(const MachineRoster& roster, std::size_t m, std::size_t n, std::size_t k) {
  if (m >= roster.size()) throw Error(ErrorCode::IndexOutOfRoster, "machine " + std::to_string(m));
  return run(roster[m], n, k).halted ? 1 : 0;
}

namespace {

// Reconstruction of the turn: delta0 seen from the quarter after the strict
// step is t1(side 5); the walk continues along whichever border of that
// quarter does not meet it.
bool turn_keeps_side5() {
  static const bool keep = is_ultraparallel(MLine{}, moves().t1(MLine{}));
  return keep;
}

}  // namespace

const Isometry& delta1_step() {
  static const Isometry step = turn_keeps_side5() ? moves().tau.inverse() : moves().tau0.inverse();
  return step;
}

namespace {

std::vector<HatState> hat_states(const QuarterSeq& seq, const std::vector<int>& bits, const std::vector<int>& flags) {
  std::vector<HatState> out;
  for (std::size_t k = 0; k < bits.size(); ++k) out.push_back({k, bits[k], flags[k], seq.at(k).hat()});
  return out;
}

}  // namespace

NoAlgoSeq build_noalgo_seq(const TuringMachine& m, std::size_t input, std::size_t horizon) {
  if (horizon == 0) throw Error(ErrorCode::DegenerateInput, "horizon must be positive");
  const RunResult r = run(m, input, horizon);
  // Step k sees A(n, n, k+1); the first k with A = 1 turns.
  std::optional<std::size_t> turn;
  if (r.halted) turn = r.step == 0 ? 0 : r.step - 1;

  const Isometry pre = moves().tau.inverse();
  const Isometry strict = moves().t1.inverse();
  const Isometry post = delta1_step();
  auto step = [turn, pre, strict, post](std::size_t k) {
    if (!turn || k < *turn) return pre;
    return k == *turn ? strict : post;
  };
  QuarterSeq seq(base_quarter(), step);

  std::vector<int> bits, flags;
  for (std::size_t k = 0; k < horizon; ++k) {
    bits.push_back(turn && k >= *turn ? 1 : 0);
    flags.push_back(turn && k > *turn ? 1 : 0);
  }

  NoAlgoSeq out{seq, MLine{}.flipped(), End{IdealPoint::at_angle(std::numbers::pi)}, {}, {}, turn,
                hat_states(seq, bits, flags)};
  if (turn) {
    const Isometry& f = seq.at(*turn + 1).frame;
    // Oriented so that the vertices walk towards the forward end.
    const MLine border = turn_keeps_side5() ? MLine{}.flipped() : MLine::from_pole({0, 1, 0});
    out.delta1 = f(border);
    out.alpha1 = End{ideal_points_of(*out.delta1).first};
  }
  return out;
}

NoConvSeq build_noconv_seq(const MachineRoster& roster, std::size_t n, std::size_t horizon) {
  if (horizon == 0) throw Error(ErrorCode::DegenerateInput, "horizon must be positive");
  std::vector<int> bits;
  for (std::size_t k = 0; k + 1 < horizon; ++k) {
    bits.push_back(k < roster.size() ? kleene(roster, k, k + 1, n) : 0);
  }
  const Isometry zero = moves().t1.inverse();
  const Isometry one = (moves().t1 * moves().rho).inverse();
  const std::vector<int> path = bits;
  QuarterSeq seq(base_quarter(), [path, zero, one](std::size_t k) { return k < path.size() && path[k] ? one : zero; });

  std::vector<int> state_bits = bits;
  state_bits.push_back(0);
  return {seq, bits, hat_states(seq, state_bits, state_bits)};
}

std::vector<std::vector<int>> y_sequence(const MachineRoster& roster, std::size_t N, std::size_t horizon) {
  std::vector<std::vector<int>> out;
  for (std::size_t n = 0; n <= N; ++n) out.push_back(build_noconv_seq(roster, n, horizon).bit_path);
  return out;
}

nlohmann::json trace_json(const std::vector<HatState>& states) {
  nlohmann::json out = nlohmann::json::array();
  for (const HatState& s : states) {
    nlohmann::json hat = nlohmann::json::array({to_json(s.hat[0]), to_json(s.hat[1]), to_json(s.hat[2])});
    out.push_back({{"k", s.k}, {"bit", s.bit}, {"hat", hat}, {"flag", s.flag}});
  }
  return out;
}

}  // namespace cornu
