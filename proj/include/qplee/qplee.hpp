// Copyright 2026 The qplee Authors
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

#include "qplee/error.hpp"
#include "qplee/finite_field.hpp"
#include "qplee/group.hpp"
#include "qplee/quadratic_subsets.hpp"
#include "qplee/subset_sums.hpp"
#include "qplee/cayley_spectrum.hpp"
#include "qplee/lee_code.hpp"
#include "qplee/lemmas.hpp"
#include "qplee/report.hpp"
