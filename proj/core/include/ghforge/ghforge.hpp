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

#include "ghforge/constructions.hpp"
#include "ghforge/error.hpp"
#include "ghforge/field_function.hpp"
#include "ghforge/finite_field.hpp"
#include "ghforge/gh_matrix.hpp"
#include "ghforge/matrix_file.hpp"
#include "ghforge/verifier.hpp"
