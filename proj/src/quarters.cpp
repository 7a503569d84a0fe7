#include "cornu/quarters.hpp"

#include <algorithm>

#include "cornu/error.hpp"
#include "cornu/locator.hpp"

namespace cornu {

const char* to_string(EmbedKind k) {
  switch (k) {
    case EmbedKind::NotEmbedded: return "not_embedded";
    case EmbedKind::Embedded: return "embedded";
    case EmbedKind::StrictlyEmbedded: return "strictly_embedded";
  }
  return "?";
}

const char* to_string(OneStepKind k) {
  switch (k) {
    case OneStepKind::NoStep: return "none";
    case OneStepKind::NonStrictStep: return "non_strict";
    case OneStepKind::StrictStep: return "strict";
  }
  return "?";
}

std::array<IdealPoint, 2> border_ends(const Quarter& f) {
  const auto lines = f.border_lines();
  return {ideal_points_of(lines[0]).first, ideal_points_of(lines[1]).second};
}

namespace {

bool inside(const Vec3& x, const std::array<MLine, 2>& lines, double tol, bool strict) {
  for (const MLine& l : lines) {
    const double s = mdot(x, l.pole());
    if (strict ? !(s > tol) : !(s >= -tol)) return false;
  }
  return true;
}

}  // namespace

EmbedKind embeds(const Quarter& f1, const Quarter& f2, double tol) {
  const auto l2 = f2.border_lines();
  const auto l1 = f1.border_lines();
  const Vec3 s1 = f1.vertex().vec();
  const auto ends1 = border_ends(f1);
  // A border line of f2 with both ends strictly inside f1 cuts off part of f1.
  for (const MLine& l : l2) {
    const auto [u, v] = ideal_points_of(l);
    if (inside(u.vec(), l1, tol, true) && inside(v.vec(), l1, tol, true)) return EmbedKind::NotEmbedded;
  }
  auto all_in = [&](bool strict) {
    return inside(s1, l2, tol, strict) && inside(ends1[0].vec(), l2, tol, strict) &&
           inside(ends1[1].vec(), l2, tol, strict);
  };
  if (!all_in(false)) return EmbedKind::NotEmbedded;
  return all_in(true) ? EmbedKind::StrictlyEmbedded : EmbedKind::Embedded;
}

bool same_quarter(const Quarter& f1, const Quarter& f2, double tol) {
  const auto h1 = f1.hat(), h2 = f2.hat();
  for (int i = 0; i < 3; ++i) {
    if (dist(h1[i], h2[i]) > tol) return false;
  }
  return true;
}

bool heads_share_edge(const Quarter& f1, const Quarter& f2, double tol) {
  const Pentagon p = f1.head(), q = f2.head();
  if (dist(p.center(), q.center()) < tol) return false;
  int common = 0;
  for (const MPoint& x : p.vertices) {
    for (const MPoint& y : q.vertices) common += dist(x, y) < tol;
  }
  return common == 2;
}

OneStepKind one_step(const Quarter& f1, const Quarter& f2, double tol) {
  if (!heads_share_edge(f1, f2)) return OneStepKind::NoStep;
  switch (embeds(f1, f2, tol)) {
    case EmbedKind::NotEmbedded: return OneStepKind::NoStep;
    case EmbedKind::Embedded: return OneStepKind::NonStrictStep;
    case EmbedKind::StrictlyEmbedded: return OneStepKind::StrictStep;
  }
  return OneStepKind::NoStep;
}

namespace {

Isometry rho_power(int k) {
  Isometry g = Isometry::identity();
  for (int i = 0; i < ((k % 5) + 5) % 5; ++i) g = g * moves().rho;
  return g;
}

}  // namespace

const Isometry& across_side(int k) {
  static const std::array<Isometry, 5> table = [] {
    std::array<Isometry, 5> t;
    // rho carries side k to side k+1; t1 crosses side 2
    for (int s = 1; s <= 5; ++s) t[s - 1] = rho_power(s - 2) * moves().t1;
    return t;
  }();
  if (k < 1 || k > 5) throw Error(ErrorCode::DegenerateInput, "side index out of range");
  return table[k - 1];
}

const Isometry& at_vertex(char v) {
  static const std::array<Isometry, 5> table = [] {
    std::array<Isometry, 5> t;
    // rho^(j+1) sends E to the j-th vertex
    for (int j = 0; j < 5; ++j) t[j] = rho_power(j + 1);
    return t;
  }();
  if (v < 'A' || v > 'E') throw Error(ErrorCode::DegenerateInput, "vertex name out of range");
  return table[v - 'A'];
}

std::vector<Quarter> adjacent_quarters(const Quarter& f) {
  std::vector<Quarter> out;
  for (int k = 1; k <= 5; ++k) {
    const Isometry h = f.frame * across_side(k);
    for (char v = 'A'; v <= 'E'; ++v) out.push_back(Quarter{h * at_vertex(v)});
  }
  return out;
}

std::vector<Quarter> chain(const Quarter& f1, const Quarter& f2) {
  if (embeds(f1, f2) == EmbedKind::NotEmbedded) throw Error(ErrorCode::NotEmbedded, "chain needs f1 in f2");
  // Work in the frame of f2, where its head is the root of the tree.
  const Isometry to_local = f2.frame.inverse();
  const Quarter local1{to_local * f1.frame};
  const Tile t = locate(local1.head().center(), base_quarter());
  std::vector<Isometry> heads;
  Color c = Color::W;
  Isometry g = Isometry::identity();
  for (int i : t.path) {
    g = g * (i == 0 ? moves().tau : (c == Color::W && i == 1 ? moves().tau0 : moves().t1));
    c = sons(c)[i];
    heads.push_back(g);
  }
  // Several vertices of a branch tile can qualify; backtrack until the
  // branch ends on f1 itself.
  std::vector<Quarter> rev{base_quarter()};
  std::function<bool(std::size_t)> extend = [&](std::size_t k) {
    if (k == heads.size()) return same_quarter(rev.back(), local1);
    for (char v = 'A'; v <= 'E'; ++v) {
      const Quarter cand{heads[k] * at_vertex(v)};
      if (embeds(local1, cand) == EmbedKind::NotEmbedded) continue;
      if (one_step(cand, rev.back()) == OneStepKind::NoStep) continue;
      rev.push_back(cand);
      if (extend(k + 1)) return true;
      rev.pop_back();
    }
    return false;
  };
  if (!extend(0)) {
    // Quarters opening back towards the root of the tree can contain f1
    // without any quarter headed on the branch doing so. Search breadth
    // first over one-step predecessors that still contain f1.
    struct Node {
      Quarter q;
      int parent;
    };
    std::vector<Node> nodes{{base_quarter(), -1}};
    std::size_t begin = 0;
    int goal = -1;
    for (std::size_t depth = 0; depth <= heads.size() + 2 && goal < 0; ++depth) {
      const std::size_t end = nodes.size();
      for (std::size_t n = begin; n < end && goal < 0; ++n) {
        for (const Quarter& cand : adjacent_quarters(nodes[n].q)) {
          if (embeds(local1, cand) == EmbedKind::NotEmbedded) continue;
          if (one_step(cand, nodes[n].q) == OneStepKind::NoStep) continue;
          const bool seen = std::any_of(nodes.begin(), nodes.end(), [&](const Node& x) { return same_quarter(x.q, cand); });
          if (seen) continue;
          nodes.push_back({cand, static_cast<int>(n)});
          if (same_quarter(cand, local1)) {
            goal = static_cast<int>(nodes.size()) - 1;
            break;
          }
        }
      }
      begin = end;
    }
    if (goal < 0) throw Error(ErrorCode::NotStepwise, "no one-step chain from f2 down to f1");
    rev.clear();
    for (int n = goal; n >= 0; n = nodes[n].parent) rev.push_back(nodes[n].q);
    std::reverse(rev.begin(), rev.end());
  }
  std::vector<Quarter> out;
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) out.push_back(Quarter{f2.frame * it->frame});
  out.front() = f1;
  out.back() = f2;
  return out;
}

double vertex_gap(const Quarter& f1, const Quarter& f2) {
  if (embeds(f1, f2) == EmbedKind::NotEmbedded) throw Error(ErrorCode::NotEmbedded, "vertex_gap needs f1 in f2");
  return dist(f1.vertex(), f2.vertex());
}

bool detect_alternation(const Quarter& fn, const Quarter& fn1, const Quarter& fn2) {
  const OneStepKind s1 = one_step(fn, fn1), s2 = one_step(fn1, fn2);
  if (s1 == OneStepKind::NoStep || s2 == OneStepKind::NoStep) {
    throw Error(ErrorCode::NotStepwise, "consecutive quarters are not one-step embedded");
  }
  return s1 == OneStepKind::NonStrictStep && s2 == OneStepKind::NonStrictStep &&
         embeds(fn, fn2) == EmbedKind::StrictlyEmbedded;
}

Quarter remove_alternation(const Quarter& fn, const Quarter& fn1, const Quarter& fn2) {
  if (!detect_alternation(fn, fn1, fn2)) throw Error(ErrorCode::NoAlternation, "triple has no alternation");
  for (const Quarter& g : adjacent_quarters(fn)) {
    if (one_step(fn, g) == OneStepKind::NonStrictStep && one_step(g, fn2) == OneStepKind::StrictStep) return g;
  }
  throw Error(ErrorCode::NoAlternation, "no replacement quarter next to the head of fn");
}

// ---------------------------------------------------------------------------

QuarterSeq::QuarterSeq(Quarter start, StepFn step) : start_(std::move(start)), step_fn_(std::move(step)) {
  frames_.push_back(start_.frame);
}

QuarterSeq QuarterSeq::from_quarters(const std::vector<Quarter>& qs) {
  if (qs.empty()) throw Error(ErrorCode::DegenerateInput, "empty quarter list");
  std::vector<Isometry> steps;
  for (std::size_t i = 0; i + 1 < qs.size(); ++i) steps.push_back(qs[i].frame.inverse() * qs[i + 1].frame);
  return QuarterSeq(qs.front(), [steps](std::size_t i) {
    if (i >= steps.size()) throw Error(ErrorCode::BudgetExhausted, "sequence is shorter than requested");
    return steps[i];
  });
}

const Isometry& QuarterSeq::step(std::size_t i) const {
  while (steps_.size() <= i) steps_.push_back(step_fn_(steps_.size()));
  return steps_[i];
}

Quarter QuarterSeq::at(std::size_t i) const {
  while (frames_.size() <= i) {
    const std::size_t k = frames_.size() - 1;
    frames_.push_back(frames_[k] * step(k));
  }
  return Quarter{frames_[i]};
}

Isometry QuarterSeq::relative(std::size_t i, std::size_t j) const {
  Isometry g = Isometry::identity();
  for (std::size_t k = i; k < j; ++k) g = g * step(k);
  return g;
}

std::vector<Quarter> QuarterSeq::prefix(std::size_t n) const {
  std::vector<Quarter> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
  return out;
}

Classification classify(const QuarterSeq& seq, std::size_t horizon) {
  if (horizon < 2) throw Error(ErrorCode::DegenerateInput, "classify needs a horizon of at least 2");
  Classification c;
  const Quarter q = base_quarter();
  for (std::size_t i = 0; i + 1 < horizon; ++i) {
    const OneStepKind k = one_step(q, Quarter{seq.step(i)});
    c.kinds.push_back(k);
    if (k == OneStepKind::NoStep) {
      c.stepwise_ok = false;
      c.violations.push_back(i);
    } else if (k == OneStepKind::StrictStep) {
      c.strict_steps.push_back(i);
      c.direct_so_far = false;
    }
  }
  for (std::size_t n = 0; n + 2 < horizon; ++n) {
    if (c.kinds[n] != OneStepKind::NonStrictStep || c.kinds[n + 1] != OneStepKind::NonStrictStep) continue;
    if (embeds(q, Quarter{seq.relative(n, n + 2)}) == EmbedKind::StrictlyEmbedded) c.alternations.push_back(n + 1);
  }
  return c;
}

nlohmann::json trace_json(const QuarterSeq& seq, std::size_t horizon) {
  const Classification c = classify(seq, std::max<std::size_t>(horizon, 2));
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < horizon; ++i) {
    const auto hat = seq.at(i).hat();
    nlohmann::json h = nlohmann::json::array({to_json(hat[0]), to_json(hat[1]), to_json(hat[2])});
    const bool alt = std::find(c.alternations.begin(), c.alternations.end(), i) != c.alternations.end();
    out.push_back({{"hat", h},
                   {"step_kind", i + 1 < horizon ? to_string(c.kinds[i]) : "none"},
                   {"alternation", alt}});
  }
  return out;
}

}  // namespace cornu
