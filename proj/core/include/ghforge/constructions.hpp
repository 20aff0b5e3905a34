/**************************************************************************
 * Copyright 2026 The ghforge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include "ghforge/field_function.hpp"
#include "ghforge/gh_matrix.hpp"

namespace ghforge {

/// M(f): the q x q matrix with entry f(b - a) at row a, column b, rows and
/// columns in canonical element order. Claimed lambda is 1.
GHMatrix matrix_M(const FieldFunction& f);

/**
 * GH(q, q) of order q^2 from planar blocks: block (i, j) is M(a_i a_j + x^2).
 * Requires odd characteristic.
 */
GHMatrix construct_t31(const FiniteField& field, MatrixLimits limits = {});

/**
 * GH(q, q) of order q^2 from additive blocks: block (i, j) is M((a_i + a_j) x).
 * Any characteristic.
 */
GHMatrix construct_t32(const FiniteField& field, MatrixLimits limits = {});

/**
 * GH(q, q^2) of order q^3. With H_q = construct_t32(field), outer block
 * (i, j) is H_q with a_i a_j added to every entry.
 */
GHMatrix construct_t33(const FiniteField& field, MatrixLimits limits = {});

} // namespace ghforge
