#pragma once

// Turing machines, the step predicate A(m, n, k) and the two quarter
// sequence constructions driven by it.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cornu/ends.hpp"

namespace cornu {

enum class Move { L, R };

struct Transition {
  std::string next;
  char write = '_';
  Move move = Move::R;
};

/// Tape symbols are '0', '1' and the blank '_'. Input n is written in unary
/// as n '1's from the head position on an otherwise blank two-way tape.
class TuringMachine {
 public:
  /// Throws MalformedMachine: unknown states or symbols, duplicate or
  /// missing transitions on a non-halt state, transitions out of halt.
  TuringMachine(std::vector<std::string> states, std::string start, std::string halt,
                std::map<std::pair<std::string, char>, Transition> table);

  static TuringMachine from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  const std::string& start() const { return start_; }
  const std::string& halt() const { return halt_; }
  const std::vector<std::string>& states() const { return states_; }
  const Transition& at(const std::string& state, char symbol) const;

 private:
  std::vector<std::string> states_;
  std::string start_, halt_;
  std::map<std::pair<std::string, char>, Transition> table_;
};

using MachineRoster = std::vector<TuringMachine>;

/// A machine object, or {"fixture": name} with "j" for halts_at.
/// Fixture names: halt_immediately, run_right_forever, halts_at, busy_beaver2.
TuringMachine machine_from_json(const nlohmann::json& j);
/// {"roster": [machine, ...]}. Throws MalformedMachine.
MachineRoster roster_from_json(const nlohmann::json& j);

namespace machines {
TuringMachine halt_immediately();
TuringMachine run_right_forever();
/// Halts after exactly j steps on every input.
TuringMachine halts_at(int j);
/// The 2-state busy beaver; halts after 6 steps on the empty input.
TuringMachine busy_beaver2();
}  // namespace machines

struct RunResult {
  bool halted = false;
  std::size_t step = 0;  // halting step when halted, else steps simulated
};
RunResult run(const TuringMachine& m, std::size_t input, std::size_t steps);

/// 1 iff roster[m] on input n has halted within k steps. Throws IndexOutOfRoster.
int kleene(const MachineRoster& roster, std::size_t m, std::size_t n, std::size_t k);

struct HatState {
  std::size_t k = 0;
  int bit = 0;
  int flag = 0;
  std::array<MPoint, 3> hat;
};

struct NoAlgoSeq {
  QuarterSeq seq;
  MLine delta0;
  End alpha0;
  std::optional<MLine> delta1;
  std::optional<End> alpha1;
  std::optional<std::size_t> turn;  // index of the strict step
  std::vector<HatState> states;     // k = 0 .. horizon-1
};

/// F_{k+1} = F_k * tau^-1 while A(n, n, k+1) = 0, so the vertices walk along
/// delta0 towards alpha0. The first k with A = 1 is a strict step t1^-1,
/// after which the walk follows delta1 (see delta1_step). Throws DegenerateInput for horizon 0.
NoAlgoSeq build_noalgo_seq(const TuringMachine& m, std::size_t input, std::size_t horizon);

/// The direct step used after the turn: tau^-1 or tau0^-1, whichever walks
/// along a border line ultraparallel to delta0.
const Isometry& delta1_step();

struct NoConvSeq {
  QuarterSeq seq;
  std::vector<int> bit_path;  // bit k decides the step G_k -> G_{k+1}
  std::vector<HatState> states;
};

/// Bit k = A(k+1, k+1, n) with machine k+1 stored at roster[k] and read as
/// 0 past the roster. Bit 0 steps by t1^-1, bit 1 by (t1 rho)^-1; both
/// are strict one-step embeddings. Throws DegenerateInput for horizon 0.
NoConvSeq build_noconv_seq(const MachineRoster& roster, std::size_t n, std::size_t horizon);

/// bit paths of y_0 .. y_N, each of length horizon-1.
std::vector<std::vector<int>> y_sequence(const MachineRoster& roster, std::size_t N, std::size_t horizon);

nlohmann::json trace_json(const std::vector<HatState>& states);

}  // namespace cornu
