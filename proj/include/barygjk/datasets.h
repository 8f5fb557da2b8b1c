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

#ifndef BARYGJK_DATASETS_H_
#define BARYGJK_DATASETS_H_

#include <cstdint>
#include <filesystem>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "barygjk/geometry.h"

namespace barygjk {

enum class Regime { kDistant, kTouching, kOverlap };

inline constexpr Regime kAllRegimes[] = {Regime::kDistant, Regime::kTouching, Regime::kOverlap};

std::string_view ToString(Regime r);
// Throws std::invalid_argument on unknown names.
Regime ParseRegime(std::string_view name);

struct PairCase {
  ConvexPolygon p;
  ConvexPolygon q;
  Regime regime;
  std::uint64_t seed;

  friend bool operator==(const PairCase&, const PairCase&) = default;
};

struct DatasetSpec {
  int vertex_count = 4;
  int cases_per_regime = 1000;
  std::uint64_t seed = 0;

  friend bool operator==(const DatasetSpec&, const DatasetSpec&) = default;
};

// Construction constants, persisted in the dataset header.
struct RegimeParameters {
  double scale = 1.0;
  double placement_extent = 5.0;      // translations drawn from [-extent, extent]^2
  double distant_margin_min = 0.05;   // extra gap beyond the bounding discs
  double distant_margin_max = 1.0;
  double overlap_min_depth = 1e-6;    // required SAT penetration
  double touching_tolerance = 1e-7;   // max oracle distance after the shift
  int max_attempts = 100;

  friend bool operator==(const RegimeParameters&, const RegimeParameters&) = default;
};

// Random source for generation: mt19937_64 seeded per case through
// SplitMix64, with doubles built from the top 53 bits so streams are
// reproducible across standard libraries.
class CaseRng {
 public:
  static constexpr std::string_view kName = "mt19937_64/splitmix64";

  explicit CaseRng(std::uint64_t seed) : engine_(seed) {}

  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }
  std::uint64_t Next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t SplitMix64(std::uint64_t x);

// Seed of case `index` in `regime` for a dataset seeded with `seed`.
std::uint64_t DeriveCaseSeed(std::uint64_t seed, Regime regime, std::uint64_t index);

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// n vertices, counter-clockwise, strictly convex, inside the disc of radius
// `scale` about the origin. Vertices sit at sorted random angles on a random
// ellipse with per-vertex radial jitter; the jitter shrinks on repeated hull
// rejections so large n still lands on exactly n vertices.
ConvexPolygon RandomConvexPolygon(int n, CaseRng& rng, double scale = 1.0);

struct GeneratedPair {
  PairCase pair;
  // Attempts consumed by the regime construction (1 = first try succeeded).
  int attempts = 1;
};

// Throws GenerationError when the regime cannot be met within max_attempts.
GeneratedPair MakePair(const DatasetSpec& spec, Regime regime, std::uint64_t index,
                       const RegimeParameters& params = {});

struct Dataset {
  DatasetSpec spec;
  RegimeParameters params;
  std::string rng_name{CaseRng::kName};
  // Grouped by regime in kAllRegimes order, cases_per_regime each.
  std::vector<PairCase> cases;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

struct GenerationStats {
  int touching_cases = 0;
  // Touching cases whose first shifted pair failed verification and had to
  // be rebuilt.
  int touching_regenerated = 0;
  std::vector<std::uint64_t> regenerated_seeds;
};

// Cases are generated in parallel (OpenMP); the result is independent of the
// thread count.
Dataset GenerateDataset(const DatasetSpec& spec, const RegimeParameters& params = {},
                        GenerationStats* stats = nullptr);
// Single-threaded reference for GenerateDataset.
Dataset GenerateDatasetSerial(const DatasetSpec& spec, const RegimeParameters& params = {},
                              GenerationStats* stats = nullptr);

class DatasetError : public std::runtime_error {
 public:
  DatasetError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// JSON lines: a header object, then one case per line.
void WriteDataset(const std::filesystem::path& path, const Dataset& dataset);
void WriteDataset(std::ostream& out, const Dataset& dataset);
Dataset ReadDataset(const std::filesystem::path& path);
Dataset ReadDataset(std::istream& in);

// Single polygon file: {"vertices": [[x, y], ...]}.
ConvexPolygon ReadPolygonFile(const std::filesystem::path& path);
std::string PolygonToJson(const ConvexPolygon& poly);

}  // namespace barygjk

#endif  // BARYGJK_DATASETS_H_
