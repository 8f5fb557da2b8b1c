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

#include "barygjk/datasets.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "json.hpp"

#include "barygjk/baseline.h"
#include "barygjk/gjk.h"

namespace barygjk {
namespace {

using nlohmann::json;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Farthest vertex from the origin; every vertex lies in this disc.
double BoundingRadius(const ConvexPolygon& poly) {
  double r = 0.0;
  for (const Vec2& v : poly.vertices()) r = std::max(r, Norm(v));
  return r;
}

bool WellConditioned(const std::vector<Vec2>& hull, double scale) {
  const std::size_t n = hull.size();
  const double min_edge = 1e-6 * scale;
  const double min_turn = 1e-10 * scale * scale;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e0 = hull[(i + 1) % n] - hull[i];
    const Vec2 e1 = hull[(i + 2) % n] - hull[(i + 1) % n];
    if (Norm(e0) < min_edge || Cross(e0, e1) < min_turn) return false;
  }
  return true;
}

// Two shapes placed at random poses, their bounding discs `gap` apart.
PairCase PlaceApart(const ConvexPolygon& p0, const ConvexPolygon& q0, double gap,
                    CaseRng& rng, const RegimeParameters& params) {
  const double ext = params.placement_extent;
  const Transform2 tp{rng.Uniform(0.0, kTwoPi), {rng.Uniform(-ext, ext), rng.Uniform(-ext, ext)}};
  const double heading = rng.Uniform(0.0, kTwoPi);
  const double separation = BoundingRadius(p0) + BoundingRadius(q0) + gap;
  const Transform2 tq{rng.Uniform(0.0, kTwoPi),
                      tp.translation + separation * Vec2{std::cos(heading), std::sin(heading)}};
  return {ApplyTransform(tp, p0), ApplyTransform(tq, q0), Regime::kDistant, 0};
}

GeneratedPair MakeDistant(const DatasetSpec& spec, CaseRng& rng, const RegimeParameters& params) {
  for (int attempt = 1; attempt <= params.max_attempts; ++attempt) {
    const ConvexPolygon p0 = RandomConvexPolygon(spec.vertex_count, rng, params.scale);
    const ConvexPolygon q0 = RandomConvexPolygon(spec.vertex_count, rng, params.scale);
    const double gap = params.scale * rng.Uniform(params.distant_margin_min, params.distant_margin_max);
    PairCase pc = PlaceApart(p0, q0, gap, rng, params);
    if (baseline::OracleDistance(pc.p, pc.q).distance > 1e-6) return {std::move(pc), attempt};
  }
  throw GenerationError("distant regime construction failed");
}

GeneratedPair MakeOverlap(const DatasetSpec& spec, CaseRng& rng, const RegimeParameters& params) {
  const double ext = params.placement_extent;
  for (int attempt = 1; attempt <= params.max_attempts; ++attempt) {
    const ConvexPolygon p0 = RandomConvexPolygon(spec.vertex_count, rng, params.scale);
    const ConvexPolygon q0 = RandomConvexPolygon(spec.vertex_count, rng, params.scale);
    const Transform2 tp{rng.Uniform(0.0, kTwoPi), {rng.Uniform(-ext, ext), rng.Uniform(-ext, ext)}};
    ConvexPolygon p = ApplyTransform(tp, p0);

    // Target for Q's centroid: a point between P's centroid and one of its vertices.
    const Vec2 c = p.VertexCentroid();
    const Vec2 corner = p[static_cast<std::size_t>(rng.Next() % p.size())];
    const Vec2 target = c + rng.Uniform(0.0, 0.9) * (corner - c);

    const double rot = rng.Uniform(0.0, kTwoPi);
    const Vec2 q_centroid = ApplyTransform(Transform2{rot, {}}, q0.VertexCentroid());
    ConvexPolygon q = ApplyTransform(Transform2{rot, target - q_centroid}, q0);
    if (baseline::SatMinOverlap(p, q) > params.overlap_min_depth) {
      return {{std::move(p), std::move(q), Regime::kOverlap, 0}, attempt};
    }
  }
  throw GenerationError("overlap regime construction failed");
}

// Distant pair, then Q slides along the separating vector until it touches P.
GeneratedPair MakeTouching(const DatasetSpec& spec, CaseRng& rng, const RegimeParameters& params) {
  for (int attempt = 1; attempt <= params.max_attempts; ++attempt) {
    GeneratedPair distant = MakeDistant(spec, rng, params);
    const ConvexPolygon& p = distant.pair.p;
    const DistanceResult d = Distance(p, distant.pair.q);
    ConvexPolygon q = ApplyTransform(Transform2{0.0, d.separating_vector}, distant.pair.q);
    if (baseline::OracleDistance(p, q).distance <= params.touching_tolerance) {
      return {{p, std::move(q), Regime::kTouching, 0}, attempt};
    }
  }
  throw GenerationError("touching regime construction failed");
}

json PolygonJson(const ConvexPolygon& poly) {
  json verts = json::array();
  for (const Vec2& v : poly.vertices()) verts.push_back({v.x, v.y});
  return json{{"vertices", std::move(verts)}};
}

ConvexPolygon PolygonFromJson(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    throw std::invalid_argument("polygon must be an object with a \"vertices\" array");
  }
  std::vector<Vec2> verts;
  for (const json& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw std::invalid_argument("vertex must be a [x, y] pair of numbers");
    }
    verts.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  PolygonOrError result = ValidatePolygon(std::move(verts));
  if (auto* err = std::get_if<PolygonError>(&result)) throw std::invalid_argument(err->Message());
  return std::get<ConvexPolygon>(std::move(result));
}

json HeaderJson(const Dataset& d) {
  const RegimeParameters& p = d.params;
  return json{{"schema", 1},
              {"vertex_count", d.spec.vertex_count},
              {"cases_per_regime", d.spec.cases_per_regime},
              {"seed", d.spec.seed},
              {"rng", d.rng_name},
              {"scale", p.scale},
              {"placement_extent", p.placement_extent},
              {"distant_margin", {p.distant_margin_min, p.distant_margin_max}},
              {"overlap_min_depth", p.overlap_min_depth},
              {"touching_tolerance", p.touching_tolerance},
              {"max_attempts", p.max_attempts}};
}

void HeaderFromJson(const json& h, Dataset& d) {
  if (!h.is_object() || h.value("schema", 0) != 1) {
    throw std::invalid_argument("expected header object with \"schema\": 1");
  }
  d.spec.vertex_count = h.at("vertex_count").get<int>();
  d.spec.cases_per_regime = h.at("cases_per_regime").get<int>();
  d.spec.seed = h.at("seed").get<std::uint64_t>();
  d.rng_name = h.at("rng").get<std::string>();
  RegimeParameters& p = d.params;
  p.scale = h.value("scale", p.scale);
  p.placement_extent = h.value("placement_extent", p.placement_extent);
  if (h.contains("distant_margin")) {
    p.distant_margin_min = h["distant_margin"].at(0).get<double>();
    p.distant_margin_max = h["distant_margin"].at(1).get<double>();
  }
  p.overlap_min_depth = h.value("overlap_min_depth", p.overlap_min_depth);
  p.touching_tolerance = h.value("touching_tolerance", p.touching_tolerance);
  p.max_attempts = h.value("max_attempts", p.max_attempts);
}

Dataset Generate(const DatasetSpec& spec, const RegimeParameters& params, GenerationStats* stats,
                 bool parallel) {
  if (spec.vertex_count < 3) throw std::invalid_argument("vertex_count must be at least 3");
  if (spec.cases_per_regime < 0) throw std::invalid_argument("cases_per_regime must be >= 0");

  const std::int64_t per = spec.cases_per_regime;
  const std::int64_t total = 3 * per;
  std::vector<std::optional<GeneratedPair>> slots(static_cast<std::size_t>(total));
  std::string failure;

#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (std::int64_t i = 0; i < total; ++i) {
    const Regime regime = kAllRegimes[i / per];
    try {
      slots[static_cast<std::size_t>(i)] =
          MakePair(spec, regime, static_cast<std::uint64_t>(i % per), params);
    } catch (const GenerationError& e) {
#pragma omp critical
      failure = e.what();
    }
  }
  if (!failure.empty()) throw GenerationError(failure);

  Dataset d;
  d.spec = spec;
  d.params = params;
  d.cases.reserve(slots.size());
  GenerationStats local;
  for (auto& slot : slots) {
    if (slot->pair.regime == Regime::kTouching) {
      ++local.touching_cases;
      if (slot->attempts > 1) {
        ++local.touching_regenerated;
        local.regenerated_seeds.push_back(slot->pair.seed);
      }
    }
    d.cases.push_back(std::move(slot->pair));
  }
  if (stats) *stats = std::move(local);
  return d;
}

}  // namespace

std::string_view ToString(Regime r) {
  switch (r) {
    case Regime::kDistant:
      return "distant";
    case Regime::kTouching:
      return "touching";
    case Regime::kOverlap:
      return "overlap";
  }
  return "?";
}

Regime ParseRegime(std::string_view name) {
  for (Regime r : kAllRegimes) {
    if (ToString(r) == name) return r;
  }
  throw std::invalid_argument("unknown regime \"" + std::string(name) + "\"");
}

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t DeriveCaseSeed(std::uint64_t seed, Regime regime, std::uint64_t index) {
  const std::uint64_t stream = SplitMix64(seed + static_cast<std::uint64_t>(regime) + 1);
  return SplitMix64(stream ^ SplitMix64(index));
}

ConvexPolygon RandomConvexPolygon(int n, CaseRng& rng, double scale) {
  if (n < 3) throw std::invalid_argument("polygon needs at least three vertices");
  if (!(scale > 0.0)) throw std::invalid_argument("scale must be positive");

  constexpr int kMaxAttempts = 1000;
  double jitter = 0.7;  // radii in [(1 - jitter) * scale, scale]
  std::vector<double> angles(static_cast<std::size_t>(n));
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    if (attempt > 0 && attempt % 10 == 0) jitter *= 0.5;
    const double aspect = rng.Uniform(0.5, 1.0);
    const double tilt = rng.Uniform(0.0, kTwoPi);
    for (double& a : angles) a = rng.Uniform(0.0, kTwoPi);
    std::sort(angles.begin(), angles.end());

    std::vector<Vec2> pts;
    pts.reserve(angles.size());
    const double c = std::cos(tilt);
    const double s = std::sin(tilt);
    for (double a : angles) {
      const double r = scale * rng.Uniform(1.0 - jitter, 1.0);
      const double ex = r * std::cos(a);
      const double ey = r * aspect * std::sin(a);
      pts.push_back({c * ex - s * ey, s * ex + c * ey});
    }
    std::vector<Vec2> hull = ConvexHull(std::move(pts));
    if (hull.size() != static_cast<std::size_t>(n) || !WellConditioned(hull, scale)) continue;
    PolygonOrError poly = ValidatePolygon(std::move(hull));
    if (auto* ok = std::get_if<ConvexPolygon>(&poly)) return std::move(*ok);
  }
  throw GenerationError("no strictly convex " + std::to_string(n) + "-gon after " +
                        std::to_string(kMaxAttempts) + " attempts");
}

GeneratedPair MakePair(const DatasetSpec& spec, Regime regime, std::uint64_t index,
                       const RegimeParameters& params) {
  const std::uint64_t seed = DeriveCaseSeed(spec.seed, regime, index);
  CaseRng rng(seed);
  GeneratedPair g = [&] {
    switch (regime) {
      case Regime::kTouching:
        return MakeTouching(spec, rng, params);
      case Regime::kOverlap:
        return MakeOverlap(spec, rng, params);
      case Regime::kDistant:
        break;
    }
    return MakeDistant(spec, rng, params);
  }();
  g.pair.regime = regime;
  g.pair.seed = seed;
  return g;
}

Dataset GenerateDataset(const DatasetSpec& spec, const RegimeParameters& params,
                        GenerationStats* stats) {
  return Generate(spec, params, stats, /*parallel=*/true);
}

Dataset GenerateDatasetSerial(const DatasetSpec& spec, const RegimeParameters& params,
                              GenerationStats* stats) {
  return Generate(spec, params, stats, /*parallel=*/false);
}

void WriteDataset(std::ostream& out, const Dataset& dataset) {
  out << HeaderJson(dataset).dump() << '\n';
  for (const PairCase& c : dataset.cases) {
    const json line{{"regime", ToString(c.regime)},
                    {"seed", c.seed},
                    {"p", PolygonJson(c.p)},
                    {"q", PolygonJson(c.q)}};
    out << line.dump() << '\n';
  }
}

void WriteDataset(const std::filesystem::path& path, const Dataset& dataset) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  WriteDataset(out, dataset);
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

Dataset ReadDataset(std::istream& in) {
  Dataset d;
  d.spec.cases_per_regime = 0;
  std::string text;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, text)) {
    ++line_no;
    if (text.empty()) continue;
    try {
      const json j = json::parse(text);
      if (!have_header) {
        HeaderFromJson(j, d);
        have_header = true;
        continue;
      }
      PairCase c{PolygonFromJson(j.at("p")), PolygonFromJson(j.at("q")),
                 ParseRegime(j.at("regime").get<std::string>()),
                 j.at("seed").get<std::uint64_t>()};
      d.cases.push_back(std::move(c));
    } catch (const std::exception& e) {
      throw DatasetError(line_no, e.what());
    }
  }
  return d;
}

Dataset ReadDataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return ReadDataset(in);
}

ConvexPolygon ReadPolygonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return PolygonFromJson(json::parse(in));
  } catch (const json::exception& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

std::string PolygonToJson(const ConvexPolygon& poly) { return PolygonJson(poly).dump(); }

}  // namespace barygjk
