// Copyright 2026 the involut authors
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

#include "involut/coefficients.hpp"
#include "involut/identities.hpp"
#include "involut/integrals.hpp"
#include "involut/involution.hpp"
#include "involut/lambert.hpp"
#include "involut/phi.hpp"
#include "involut/power_series.hpp"
#include "involut/quadrature.hpp"
#include "involut/rational.hpp"
#include "involut/report.hpp"
