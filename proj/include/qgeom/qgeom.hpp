// Copyright 2026 The qgeom Authors.
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

// Umbrella header.

#pragma once

#include "qgeom/catk/cat_test.hpp"
#include "qgeom/catk/geodesic_space.hpp"
#include "qgeom/catk/model_space.hpp"
#include "qgeom/entropy.hpp"
#include "qgeom/error.hpp"
#include "qgeom/geometry/bdp.hpp"
#include "qgeom/geometry/curvature.hpp"
#include "qgeom/geometry/deformed_distance.hpp"
#include "qgeom/geometry/geodesic.hpp"
#include "qgeom/geometry/group.hpp"
#include "qgeom/geometry/warped_metric.hpp"
#include "qgeom/qcalc.hpp"
#include "qgeom/quadrature.hpp"
#include "qgeom/random.hpp"
#include "qgeom/superstat.hpp"
