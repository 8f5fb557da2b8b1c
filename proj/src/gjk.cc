// Copyright 2026 The BaryGJK Authors
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

#include "barygjk/gjk.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "barygjk/predicates.h"
#include "barygjk/support.h"

namespace barygjk {
namespace {

constexpr double kDuplicateTolerance = 1e-12;

constexpr double kRoundingSlack = 64.0 * std::numeric_limits<double>::epsilon();

// min over P of v.p exceeds max over Q of v.q, decided exactly. Vertices
// whose rounded projection is more than 2 * tol from the extreme cannot be
// the true extreme and are skipped.
bool SeparatedAlong(Vec2 v, const ConvexPolygon& p, const ConvexPolygon& q, double tol) {
  double p_min = std::numeric_limits<double>::infinity();
  for (const Vec2& x : p.vertices()) p_min = std::min(p_min, Dot(v, x));
  double q_max = -std::numeric_limits<double>::infinity();
  for (const Vec2& x : q.vertices()) q_max = std::max(q_max, Dot(v, x));
  for (const Vec2& a : p.vertices()) {
    if (Dot(v, a) > p_min + 2 * tol) continue;
    for (const Vec2& b : q.vertices()) {
      if (Dot(v, b) < q_max - 2 * tol) continue;
      if (exact::DotOfDifference(v, a, b) <= 0) return false;
    }
  }
  return true;
}

// Closed triangle A, B, W contains the origin. Signs within `tol` of zero are
// recomputed exactly from the polygon vertices.
bool EnclosesOrigin(const SimplexVertex& a, const SimplexVertex& b, const SimplexVertex& w,
                    double tol) {
  const SimplexVertex* ring[] = {&a, &b, &w};
  bool pos = false;
  bool neg = false;
  for (int i = 0; i < 3; ++i) {
    const SimplexVertex& s = *ring[i];
    const SimplexVertex& t = *ring[(i + 1) % 3];
    const double c = Cross(s.w, t.w);
    const int sign = c > tol ? 1 : c < -tol ? -1 : exact::CrossOfDifferences(s.p, s.q, t.p, t.q);
    pos |= sign > 0;
    neg |= sign < 0;
  }
  return pos != neg;
}

bool HasVertex(const Simplex& s, const SimplexVertex& w) {
  for (std::uint8_t i = 0; i < s.count; ++i) {
    if (SquaredNorm(s.verts[i].w - w.w) <= kDuplicateTolerance * kDuplicateTolerance) {
      return true;
    }
  }
  return false;
}

// {w} followed by the current simplex vertices.
Simplex Extend(const Simplex& s, const SimplexVertex& w) {
  Simplex tau;
  tau.verts[0] = w;
  for (std::uint8_t i = 0; i < s.count; ++i) tau.verts[i + 1] = s.verts[i];
  tau.count = static_cast<std::uint8_t>(s.count + 1);
  return tau;
}

// Support-mapping state shared by both loops: the first call always scans,
// later calls hill-climb from the previous indices when enabled.
class CsoSupportMap {
 public:
  CsoSupportMap(const ConvexPolygon& p, const ConvexPolygon& q, bool hill_climb)
      : p_(p), q_(q), hill_climb_(hill_climb) {}

  SimplexVertex operator()(Vec2 dir) {
    ++calls_;
    const SimplexVertex w =
        (hill_climb_ && calls_ > 1) ? CsoSupport(p_, q_, dir, warm_) : CsoSupport(p_, q_, dir);
    warm_ = {w.ip, w.iq};
    return w;
  }

  int calls() const { return calls_; }

 private:
  const ConvexPolygon& p_;
  const ConvexPolygon& q_;
  bool hill_climb_;
  WarmStart warm_;
  int calls_ = 0;
};

template <bool kTrace>
DistanceResult DistanceImpl(const ConvexPolygon& p, const ConvexPolygon& q,
                            const QueryOptions& opts, DistanceTrace* trace) {
  const double eps = opts.epsilon;
  const double eps2 = eps * eps;
  CsoSupportMap support(p, q, opts.use_hill_climbing);

  const SimplexVertex first = support(-InitialDirection(p, q));
  Simplex simplex = Simplex::Of(first);
  Vec2 v = first.w;
  if constexpr (kTrace) trace->norms.push_back(Norm(v));

  int k = 0;
  Termination termination = Termination::kMaxIterations;
  bool exited = false;
  do {
    ++k;
    const SimplexVertex w = support(-v);
    const double vv = SquaredNorm(v);
    if (vv - Dot(v, w.w) <= eps2 * vv || HasVertex(simplex, w)) {
      termination = Termination::kConverged;
      exited = true;
      break;
    }
    const SubdistanceResult sd = Subdistance(Extend(simplex, w));
    simplex = sd.simplex;
    v = sd.v;
    if constexpr (kTrace) trace->norms.push_back(Norm(v));
    if (SquaredNorm(v) <= eps2) {
      termination = Termination::kContainsOrigin;
      exited = true;
      break;
    }
  } while (simplex.count < 3 && k < opts.max_iterations);
  if (!exited) {
    termination = simplex.count == 3 ? Termination::kSimplexFull : Termination::kMaxIterations;
  }

  DistanceResult r;
  r.separating_vector = v;
  r.distance = (termination == Termination::kContainsOrigin ||
                termination == Termination::kSimplexFull)
                   ? 0.0
                   : Norm(v);
  std::tie(r.witness_p, r.witness_q) = WitnessPoints(simplex);
  r.iterations = k;
  r.support_calls = support.calls();
  r.termination = termination;
  r.simplex = simplex;
  return r;
}

}  // namespace

DistanceResult Distance(const ConvexPolygon& p, const ConvexPolygon& q,
                        const QueryOptions& opts) {
  return DistanceImpl<false>(p, q, opts, nullptr);
}

DistanceResult Distance(const ConvexPolygon& p, const ConvexPolygon& q,
                        const QueryOptions& opts, DistanceTrace& trace) {
  return DistanceImpl<true>(p, q, opts, &trace);
}

CollisionResult Intersects(const ConvexPolygon& p, const ConvexPolygon& q,
                           const QueryOptions& opts) {
  const double eps2 = opts.epsilon * opts.epsilon;
  // Rounding-error bounds for the exit tests; inside them the exits are
  // decided exactly so neither can report a wrong answer on contact pairs.
  const double scale = p.extent() + q.extent();
  const double cross_tol = kRoundingSlack * scale * scale;
  CsoSupportMap support(p, q, opts.use_hill_climbing);

  const SimplexVertex first = support(-InitialDirection(p, q));
  Simplex simplex = Simplex::Of(first);
  Vec2 v = first.w;

  int k = 0;
  auto done = [&](bool colliding, CollisionExit exit) {
    return CollisionResult{colliding, k, support.calls(), exit};
  };
  do {
    ++k;
    const SimplexVertex w = support(-v);
    // Every point of P - Q lies on the far side of the line through the
    // origin orthogonal to v.
    const double vw = Dot(v, w.w);
    const double dot_tol = kRoundingSlack * (std::abs(v.x) + std::abs(v.y)) * scale;
    if (vw > dot_tol || (vw > -dot_tol && SeparatedAlong(v, p, q, dot_tol))) {
      return done(false, CollisionExit::kSeparatingHyperplane);
    }
    if (simplex.count == 2) {
      // w in the vertical angle of AOB: triangle A, B, w holds the origin.
      const SimplexVertex& a = simplex.verts[0];
      const SimplexVertex& b = simplex.verts[1];
      if (Cross(a.w, w.w) * Cross(b.w, w.w) <= 0.0 && EnclosesOrigin(a, b, w, cross_tol)) {
        return done(true, CollisionExit::kVerticalAngleEnclosure);
      }
    }
    const double vv = SquaredNorm(v);
    if (vv - vw <= eps2 * vv || HasVertex(simplex, w)) {
      return done(vv <= eps2, CollisionExit::kConverged);
    }
    const SubdistanceResult sd = Subdistance(Extend(simplex, w));
    simplex = sd.simplex;
    v = sd.v;
    if (SquaredNorm(v) <= eps2) return done(true, CollisionExit::kSubdistanceEnclosure);
  } while (simplex.count < 3 && k < opts.max_iterations);

  if (simplex.count == 3) return done(true, CollisionExit::kSubdistanceEnclosure);
  return done(SquaredNorm(v) < eps2, CollisionExit::kMaxIterations);
}

std::pair<Vec2, Vec2> WitnessPoints(const Simplex& simplex) {
  Vec2 wp;
  Vec2 wq;
  for (std::uint8_t i = 0; i < simplex.count; ++i) {
    wp = wp + simplex.lambdas[i] * simplex.verts[i].p;
    wq = wq + simplex.lambdas[i] * simplex.verts[i].q;
  }
  return {wp, wq};
}

std::string_view ToString(Termination t) {
  switch (t) {
    case Termination::kConverged:
      return "Converged";
    case Termination::kSimplexFull:
      return "SimplexFull";
    case Termination::kContainsOrigin:
      return "ContainsOrigin";
    case Termination::kMaxIterations:
      return "MaxIterations";
  }
  return "?";
}

std::string_view ToString(CollisionExit e) {
  switch (e) {
    case CollisionExit::kSeparatingHyperplane:
      return "SeparatingHyperplane";
    case CollisionExit::kVerticalAngleEnclosure:
      return "VerticalAngleEnclosure";
    case CollisionExit::kSubdistanceEnclosure:
      return "SubdistanceEnclosure";
    case CollisionExit::kConverged:
      return "Converged";
    case CollisionExit::kMaxIterations:
      return "MaxIterations";
  }
  return "?";
}

}  // namespace barygjk
