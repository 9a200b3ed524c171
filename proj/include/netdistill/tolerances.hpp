// Copyright 2026 The netdistill Authors
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

#pragma once

#include <cstddef>

namespace netdistill::tol {

// Hermiticity, unit trace and unit norm of constructed states.
inline constexpr double kInvariant = 1e-12;
// Smallest admissible eigenvalue for PSD and PPT checks is -kPsd.
inline constexpr double kPsd = 1e-10;
// Eigenvalues of the square-root argument above -kSqrtClamp are clamped to 0.
inline constexpr double kSqrtClamp = 1e-10;

// Dense operators are limited to 12 qubits (dimension 4096).
inline constexpr std::size_t kMaxDenseDimension = 4096;

}  // namespace netdistill::tol
