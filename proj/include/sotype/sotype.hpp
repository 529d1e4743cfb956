// Copyright 2026 The sotype Authors
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

/// Umbrella header for the sotype library.

#include "sotype/arith.hpp"
#include "sotype/checks.hpp"
#include "sotype/constructions.hpp"
#include "sotype/errors.hpp"
#include "sotype/finite_field.hpp"
#include "sotype/generators_io.hpp"
#include "sotype/group.hpp"
#include "sotype/group_handle.hpp"
#include "sotype/matrix.hpp"
#include "sotype/permutation.hpp"
#include "sotype/spectrum.hpp"
#include "sotype/structure.hpp"
