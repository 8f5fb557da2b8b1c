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

#include "barygjk/check.h"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "barygjk/baseline.h"

namespace barygjk {
namespace {

struct CaseOutcome {
  DistanceResult distance;
  CollisionResult collision;
  double oracle = 0.0;
  double abs_error = 0.0;
  bool sat = false;
  bool in_band = false;
  bool descent_ok = true;
};

CaseOutcome Evaluate(const PairCase& c, const QueryOptions& opts, const CheckTolerances& tol) {
  CaseOutcome o;
  DistanceTrace trace;
  o.distance = Distance(c.p, c.q, opts, trace);
  o.collision = Intersects(c.p, c.q, opts);
  o.oracle = baseline::OracleDistance(c.p, c.q).distance;
  o.sat = baseline::SatIntersects(c.p, c.q);
  o.abs_error = std::abs(o.distance.distance - o.oracle);
  o.in_band = o.oracle <= tol.contact_band &&
              baseline::SatMinOverlap(c.p, c.q) <= tol.contact_band;
  for (std::size_t i = 1; i < trace.norms.size(); ++i) {
    if (trace.norms[i] > trace.norms[i - 1] + tol.descent_slack) o.descent_ok = false;
  }
  return o;
}

}  // namespace

int CheckReport::total_cases() const {
  int n = 0;
  for (const RegimeCheck& r : regimes) n += r.cases;
  return n;
}

CheckReport CheckCases(std::span<const PairCase> cases, const QueryOptions& opts,
                       const CheckTolerances& tol, bool parallel) {
  std::vector<CaseOutcome> outcomes(cases.size());
  const auto n = static_cast<std::ptrdiff_t>(cases.size());
#pragma omp parallel for schedule(dynamic, 32) if (parallel)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    outcomes[static_cast<std::size_t>(i)] = Evaluate(cases[i], opts, tol);
  }

  CheckReport report;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const PairCase& c = cases[i];
    const CaseOutcome& o = outcomes[i];
    RegimeCheck& rc = report.regimes[static_cast<int>(c.regime)];
    auto fail = [&](std::string what) {
      report.failures.push_back({c.seed, i, c.regime, std::move(what)});
    };
    ++rc.cases;

    rc.worst_abs_error = std::max(rc.worst_abs_error, o.abs_error);
    const double allowed =
        tol.distance_relative * std::max(1.0, o.oracle) + tol.distance_absolute;
    if (!(o.abs_error <= allowed)) {
      ++rc.distance_failures;
      fail("distance " + std::to_string(o.distance.distance) + " vs oracle " +
           std::to_string(o.oracle));
    }
    if (o.distance.distance > 0.0) {
      const double gap = Norm(o.distance.witness_p - o.distance.witness_q);
      if (std::abs(gap - o.distance.distance) > 1e-9) fail("witness points do not realise distance");
    }

    const bool asserted = c.regime != Regime::kTouching || !o.in_band;
    if (o.collision.colliding != o.sat) {
      if (asserted) {
        ++rc.binary_failures;
        fail(std::string("intersects=") + (o.collision.colliding ? "true" : "false") +
             " but SAT disagrees");
      } else {
        ++rc.binary_band_disagreements;
      }
    }
    if (asserted) ++rc.binary_asserted;

    // The early exits are exact, so they are checked on contact pairs too.
    if (o.collision.exit == CollisionExit::kSeparatingHyperplane && o.sat) {
      ++report.separating_false_negatives;
      fail("separating-hyperplane exit on an intersecting pair");
    }
    if (o.collision.exit == CollisionExit::kVerticalAngleEnclosure && !o.sat) {
      ++report.vertical_false_positives;
      fail("vertical-angle exit on a disjoint pair");
    }
    if (o.collision.support_calls > o.distance.support_calls) {
      ++report.work_bound_violations;
      fail("intersects used more support calls than distance");
    }
    if (!o.descent_ok) {
      ++report.descent_violations;
      fail("|v| increased between iterations");
    }
    if (o.distance.termination == Termination::kMaxIterations ||
        o.collision.exit == CollisionExit::kMaxIterations) {
      ++report.max_iteration_exits;
    }
  }
  return report;
}

void PrintCheckReport(std::ostream& out, const CheckReport& report) {
  for (Regime r : kAllRegimes) {
    const RegimeCheck& rc = report.of(r);
    const int distance_pass = rc.cases - rc.distance_failures;
    const int binary_pass = rc.binary_asserted - rc.binary_failures;
    out << ToString(r) << ": cases=" << rc.cases << " distance_pass=" << distance_pass << "/"
        << rc.cases << " binary_pass=" << binary_pass << "/" << rc.binary_asserted
        << " contact_band_disagreements=" << rc.binary_band_disagreements
        << " worst_abs_error=" << rc.worst_abs_error << "\n";
  }
  out << "early exits: separating_false_negatives=" << report.separating_false_negatives
      << " vertical_false_positives=" << report.vertical_false_positives << "\n";
  out << "work_bound_violations=" << report.work_bound_violations
      << " descent_violations=" << report.descent_violations
      << " max_iteration_exits=" << report.max_iteration_exits << "\n";
  for (const CheckFailure& f : report.failures) {
    out << "FAIL case " << f.index << " (" << ToString(f.regime) << ", seed " << f.seed
        << "): " << f.what << "\n";
  }
  out << (report.passed() ? "PASS" : "FAIL") << " (" << report.total_cases() << " cases)\n";
}

}  // namespace barygjk
