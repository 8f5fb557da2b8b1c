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

#ifndef BARYGJK_PREDICATES_H_
#define BARYGJK_PREDICATES_H_

#include "barygjk/geometry.h"

// Exact sign predicates on double inputs, evaluated with floating-point
// expansions (error-free sums and products). Slow; callers use them only when
// a plain double evaluation lands inside its rounding-error bound.
// Inputs are assumed far from overflow and underflow.
namespace barygjk::exact {

// Sign of (b - a) x (c - a): +1 when c is left of the directed line a->b.
int Orient(Vec2 a, Vec2 b, Vec2 c);

// Sign of (pa - qa) x (pb - qb).
int CrossOfDifferences(Vec2 pa, Vec2 qa, Vec2 pb, Vec2 qb);

// Sign of v . (p - q).
int DotOfDifference(Vec2 v, Vec2 p, Vec2 q);

}  // namespace barygjk::exact

#endif  // BARYGJK_PREDICATES_H_
