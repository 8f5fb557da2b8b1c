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

#include "barygjk/predicates.h"

#include <array>
#include <cmath>
#include <cstddef>

namespace barygjk::exact {
namespace {

// Nonoverlapping expansion kept in increasing magnitude order, zeros dropped.
class Expansion {
 public:
  void AddProduct(double a, double b) {
    const double x = a * b;
    Add(std::fma(a, b, -x));
    Add(x);
  }

  int Sign() const {
    if (size_ == 0) return 0;
    return terms_[size_ - 1] > 0.0 ? 1 : -1;
  }

 private:
  static constexpr std::size_t kCapacity = 40;

  // Grow-expansion: the running sum absorbs each term through TwoSum.
  void Add(double b) {
    std::size_t out = 0;
    double q = b;
    for (std::size_t i = 0; i < size_; ++i) {
      const double e = terms_[i];
      const double x = q + e;
      const double bv = x - q;
      const double av = x - bv;
      const double err = (q - av) + (e - bv);
      if (err != 0.0) terms_[out++] = err;
      q = x;
    }
    if (q != 0.0) terms_[out++] = q;
    size_ = out;
  }

  std::array<double, kCapacity> terms_{};
  std::size_t size_ = 0;
};

}  // namespace

int Orient(Vec2 a, Vec2 b, Vec2 c) {
  // (b - a) x (c - a) with the a.x * a.y terms cancelled.
  Expansion e;
  e.AddProduct(b.x, c.y);
  e.AddProduct(-b.x, a.y);
  e.AddProduct(-a.x, c.y);
  e.AddProduct(-b.y, c.x);
  e.AddProduct(b.y, a.x);
  e.AddProduct(a.y, c.x);
  return e.Sign();
}

int CrossOfDifferences(Vec2 pa, Vec2 qa, Vec2 pb, Vec2 qb) {
  Expansion e;
  const Vec2 left[] = {pa, qa};
  const Vec2 right[] = {pb, qb};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double s = (i == j) ? 1.0 : -1.0;
      e.AddProduct(s * left[i].x, right[j].y);
      e.AddProduct(-s * left[i].y, right[j].x);
    }
  }
  return e.Sign();
}

int DotOfDifference(Vec2 v, Vec2 p, Vec2 q) {
  Expansion e;
  e.AddProduct(v.x, p.x);
  e.AddProduct(v.y, p.y);
  e.AddProduct(-v.x, q.x);
  e.AddProduct(-v.y, q.y);
  return e.Sign();
}

}  // namespace barygjk::exact
