#pragma once

// Embedding calculus on quarters.

#include <cstddef>
#include <functional>
#include <vector>

#include <json.hpp>

#include "cornu/pentagrid.hpp"

namespace cornu {

enum class EmbedKind { NotEmbedded, Embedded, StrictlyEmbedded };
enum class OneStepKind { NoStep, NonStrictStep, StrictStep };

const char* to_string(EmbedKind k);
const char* to_string(OneStepKind k);

/// Ideal ends of the two borders: the end of the side-5 ray, then of the side-4 ray.
std::array<IdealPoint, 2> border_ends(const Quarter& f);

EmbedKind embeds(const Quarter& f1, const Quarter& f2, double tol = kEpsGeo);
bool same_quarter(const Quarter& f1, const Quarter& f2, double tol = 1e-7);
/// Heads are distinct tiles with exactly two common vertices.
bool heads_share_edge(const Quarter& f1, const Quarter& f2, double tol = 1e-7);
OneStepKind one_step(const Quarter& f1, const Quarter& f2, double tol = kEpsGeo);

/// Frame move from P0 to its neighbour across side k (1..5).
const Isometry& across_side(int k);
/// Frame move keeping the head and taking the quarter vertex to vertex `v` ('A'..'E').
const Isometry& at_vertex(char v);
/// The 25 quarters whose head shares an edge with the head of f: five heads, five vertices each.
std::vector<Quarter> adjacent_quarters(const Quarter& f);

/// G_1 = f1 .. G_k = f2 with one-step embeddings between consecutive terms.
/// Throws NotEmbedded, or NotStepwise when no such chain exists: this happens
/// for quarters whose vertex is not the E vertex of their head's tree frame,
/// e.g. a quarter opening back towards the root.
std::vector<Quarter> chain(const Quarter& f1, const Quarter& f2);
/// dist(S1, S2) for f1 embedded in f2. Throws NotEmbedded.
double vertex_gap(const Quarter& f1, const Quarter& f2);

/// fn <=0 fn1 <=0 fn2 non-strictly and fn strictly inside fn2. Throws NotStepwise.
bool detect_alternation(const Quarter& fn, const Quarter& fn1, const Quarter& fn2);
/// A replacement middle term f4 with fn <=0 f4 and f4 <0 fn2. Throws NoAlternation.
Quarter remove_alternation(const Quarter& fn, const Quarter& fn1, const Quarter& fn2);

/// F_0 = start, F_{i+1} = F_i * step(i). Steps are kept separately from the
/// absolute frames so that relations between nearby terms are evaluated in
/// a local frame, where double precision still holds far from the origin.
class QuarterSeq {
 public:
  using StepFn = std::function<Isometry(std::size_t)>;

  QuarterSeq(Quarter start, StepFn step);
  static QuarterSeq from_quarters(const std::vector<Quarter>& qs);

  Quarter at(std::size_t i) const;
  const Isometry& step(std::size_t i) const;
  /// frame_i^-1 * frame_j for i <= j.
  Isometry relative(std::size_t i, std::size_t j) const;
  std::vector<Quarter> prefix(std::size_t n) const;

 private:
  Quarter start_;
  StepFn step_fn_;
  mutable std::vector<Isometry> steps_;
  mutable std::vector<Isometry> frames_;
};

struct Classification {
  bool stepwise_ok = true;
  std::vector<std::size_t> violations;    // i with no one-step embedding F_i -> F_{i+1}
  std::vector<std::size_t> alternations;  // n+1 such that F_{n+1} presents an alternation
  std::vector<std::size_t> strict_steps;  // i with F_i strictly one-step embedded in F_{i+1}
  bool direct_so_far = true;              // horizon report only
  std::vector<OneStepKind> kinds;         // kinds[i] relates F_i and F_{i+1}
};
Classification classify(const QuarterSeq& seq, std::size_t horizon);

nlohmann::json trace_json(const QuarterSeq& seq, std::size_t horizon);

}  // namespace cornu
