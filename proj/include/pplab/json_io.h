// Copyright 2026 The pplab Authors
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


#ifndef PPLAB_JSON_IO_H
#define PPLAB_JSON_IO_H

#include <json.hpp>

#include "pplab/game.h"
#include "pplab/nonclassicality.h"
#include "pplab/pointer_sim.h"
#include "pplab/pseudo_projection.h"
#include "pplab/scheme.h"
#include "pplab/weak_values.h"

namespace pplab {

using Json = nlohmann::ordered_json;

/// {"re": [[...]], "im": [[...]]}.
Json matrix_to_json(const ComplexMatrix &m);
Json complex_to_json(Complex z);

/// Reads {"dim": n, "re": [[...]], "im": [[...]]}; "im" may be omitted for a real matrix.
/// Throws InvalidInput for malformed documents and for states that break a density-matrix
/// invariant (the message names the invariant).
DensityMatrix state_from_json(const Json &doc);
DensityMatrix load_state_file(const std::string &path);

Json to_json(const TestReport &r);
Json to_json(const Scheme &s);
Json to_json(const NegativityReport &r);
Json to_json(const EigenCertificate &c, const std::vector<double> &spectrum);
Json to_json(const WeakValueReport &r);
Json to_json(const PointerResult &r);
Json to_json(const ProportionalityReport &r);
Json to_json(const Trajectory &t);

/// Re-evaluates the statistic of a serialized test report from its own pseudo-probabilities
/// and components.
double statistic_from_json(const Json &report);

}  // namespace pplab

#endif
