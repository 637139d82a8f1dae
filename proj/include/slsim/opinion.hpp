#pragma once
// Subjective-logic opinions and the operators the simulation needs: the
// evidence mapping, base-rate adjustment, cosine-similarity trust weight,
// discounting, consensus fusion, and per-step decay. All types are immutable
// values and all operations are pure functions.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace slsim {

// Mass-sum drift larger than this is a construction error.
inline constexpr double kMassTolerance = 1e-9;
// Drift above this (but within kMassTolerance) is renormalized away; smaller
// drift is ordinary fp rounding and is left untouched so per-step arithmetic
// stays bit-stable (the decay trajectory in particular).
inline constexpr double kRenormThreshold = 1e-12;
// Consensus treats a normalizer at or below this as degenerate.
inline constexpr double kBetaEps = 1e-12;

// An opinion about one proposition: belief, disbelief and uncertainty masses
// summing to 1, plus a base rate `a` that apportions the uncertainty mass when
// projecting to an expectation.
class Opinion {
 public:
  // Vacuous opinion with a symmetric base rate.
  Opinion() = default;

  Opinion(double b, double d, double u, double a) : b_(b), d_(d), u_(u), a_(a) {
    if (!(a_ >= 0.0 && a_ <= 1.0))
      throw std::invalid_argument("Opinion: base rate outside [0,1]");
    for (double* m : {&b_, &d_, &u_}) {
      if (!(*m >= -kMassTolerance && *m <= 1.0 + kMassTolerance))
        throw std::invalid_argument("Opinion: mass outside [0,1]");
      *m = std::clamp(*m, 0.0, 1.0);
    }
    const double sum = b_ + d_ + u_;
    if (std::abs(sum - 1.0) > kMassTolerance)
      throw std::invalid_argument("Opinion: masses must sum to 1");
    if (std::abs(sum - 1.0) > kRenormThreshold) {
      b_ /= sum;
      d_ /= sum;
      u_ /= sum;
    }
  }

  static Opinion vacuous(double base_rate = 0.5) {
    return Opinion(0.0, 0.0, 1.0, base_rate);
  }

  double b() const { return b_; }
  double d() const { return d_; }
  double u() const { return u_; }
  double a() const { return a_; }

  // Same (b,d,u,a) bit for bit.
  bool operator==(const Opinion& o) const {
    return b_ == o.b_ && d_ == o.d_ && u_ == o.u_ && a_ == o.a_;
  }

 private:
  double b_ = 0.0;
  double d_ = 0.0;
  double u_ = 1.0;
  double a_ = 0.5;
};

// Raw evidence: r positive items, s negative items, W mass of uncertain
// evidence.
struct EvidenceCounts {
  long long r = 0;
  long long s = 0;
  double w = 0.0;
};

struct Expectation {
  double belief = 0.0;
  double disbelief = 0.0;
};

// Projected decision probabilities: the uncertainty mass is split by the base
// rate. belief + disbelief == 1 up to rounding.
inline Expectation expectation(const Opinion& w) {
  return {w.b() + w.a() * w.u(), w.d() + (1.0 - w.a()) * w.u()};
}

// Evidence -> opinion mapping. Requires a positive evidence total.
inline Opinion from_evidence(const EvidenceCounts& ev, double base_rate) {
  if (ev.r < 0 || ev.s < 0 || ev.w < 0.0)
    throw std::invalid_argument("from_evidence: negative evidence");
  const double total = static_cast<double>(ev.r) + static_cast<double>(ev.s) + ev.w;
  if (!(total > 0.0))
    throw std::invalid_argument("from_evidence: total evidence must be positive");
  return Opinion(static_cast<double>(ev.r) / total,
                 static_cast<double>(ev.s) / total,
                 ev.w / total, base_rate);
}

// Competence-adjusted prior: competence above 0.5 shrinks the prior belief,
// below 0.5 inflates it. The raw multiplier spans [0.5, 1.5], so the result is
// clamped to keep the adjusted prior a valid probability.
inline double adjust_base_rate(double a, double tc) {
  if (!(a >= 0.0 && a <= 1.0))
    throw std::invalid_argument("adjust_base_rate: base rate outside [0,1]");
  if (!(tc >= 0.0 && tc <= 1.0))
    throw std::invalid_argument("adjust_base_rate: competence outside [0,1]");
  return std::clamp((1.0 - (tc - 0.5)) * a, 0.0, 1.0);
}

// Like-mindedness weight: cosine of the angle between the (b,d) components.
// A zero-norm side (a fully uncertain opinion) yields 0 — no similarity
// signal, so it blocks influence rather than granting it.
inline double similarity(const Opinion& wi, const Opinion& wj) {
  const double ni = std::hypot(wi.b(), wi.d());
  const double nj = std::hypot(wj.b(), wj.d());
  if (ni == 0.0 || nj == 0.0) return 0.0;
  const double c = (wi.b() * wj.b() + wi.d() * wj.d()) / (ni * nj);
  return std::clamp(c, 0.0, 1.0);
}

// Trust discounting: scales the sender's belief and disbelief by the trust
// weight and moves the remainder into uncertainty. Keeps the sender's base
// rate (the receiver's is reapplied at fusion).
inline Opinion discount(const Opinion& wj, double trust) {
  if (!(trust >= 0.0 && trust <= 1.0))
    throw std::invalid_argument("discount: trust outside [0,1]");
  return Opinion(trust * wj.b(), trust * wj.d(),
                 1.0 - trust * (1.0 - wj.u()), wj.a());
}

// Consensus fusion of the receiver's opinion with a (discounted) incoming
// one. Returns nullopt when both uncertainties are (numerically) zero — the
// degenerate case where the operator is undefined and the receiver keeps its
// opinion. The receiver's base rate is preserved.
inline std::optional<Opinion> consensus(const Opinion& wi, const Opinion& wj) {
  const double beta = wi.u() + wj.u() - wi.u() * wj.u();
  if (beta <= kBetaEps) return std::nullopt;
  const double b = (wi.b() * wj.u() + wj.b() * wi.u()) / beta;
  const double d = (wi.d() * wj.u() + wj.d() * wi.u()) / beta;
  return Opinion(b, d, 1.0 - b - d, wi.a());
}

// Forgetting: belief and disbelief shrink by (1-gamma), the freed mass moves
// into uncertainty. (0,0,1) is a fixed point; base rate is preserved.
inline Opinion decay(const Opinion& w, double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw std::invalid_argument("decay: gamma outside [0,1]");
  const double keep = 1.0 - gamma;
  return Opinion(keep * w.b(), keep * w.d(), w.u() + gamma * (1.0 - w.u()),
                 w.a());
}

}  // namespace slsim
