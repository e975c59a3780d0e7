// Copyright 2026 The Persuade Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PERSUADE_LINALG_HPP_
#define PERSUADE_LINALG_HPP_

#include <cstddef>

#include "persuade/rational.hpp"

namespace persuade {

// Exact determinant of a square matrix by Gaussian elimination.
Rational determinant(RationalMatrix m);

// Fraction-free (Bareiss) determinant of an integer matrix.
Integer determinant(Matrix<Integer> m);

// Exact rank by Gaussian elimination.
std::size_t rank(RationalMatrix m);

}  // namespace persuade

#endif  // PERSUADE_LINALG_HPP_
