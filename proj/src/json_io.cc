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


#include "pplab/json_io.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "pplab/errors.h"

namespace pplab {

namespace {

Json vec_to_json(const Vec3 &v) {
    return Json::array({v.x, v.y, v.z});
}

std::string_view rule_name(VerdictRule r) {
    return r == VerdictRule::kNonzero ? "nonzero" : "below_threshold";
}

std::string_view aggregate_name(Aggregate a) {
    return a == Aggregate::kMax ? "max" : "single";
}

Json labeled(const std::vector<LabeledValue> &values) {
    Json out = Json::array();
    for (const LabeledValue &v : values) {
        out.push_back({{"label", v.label}, {"value", v.value}});
    }
    return out;
}

Json scheme4_to_json(const Scheme4 &s) {
    return {{"++", s[0]}, {"--", s[1]}, {"+-", s[2]}, {"-+", s[3]}};
}

}  // namespace

Json complex_to_json(Complex z) {
    return {{"re", z.real()}, {"im", z.imag()}};
}

Json matrix_to_json(const ComplexMatrix &m) {
    Json re = Json::array();
    Json im = Json::array();
    for (std::size_t r = 0; r < m.rows(); r++) {
        Json rr = Json::array();
        Json ri = Json::array();
        for (std::size_t c = 0; c < m.cols(); c++) {
            rr.push_back(m(r, c).real());
            ri.push_back(m(r, c).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ri));
    }
    return {{"re", std::move(re)}, {"im", std::move(im)}};
}

DensityMatrix state_from_json(const Json &doc) {
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("re")) {
        throw InvalidInput("state file must be an object with \"dim\" and \"re\" (and optionally \"im\")");
    }
    if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1 ||
        doc["dim"].get<long long>() > static_cast<long long>(kMaxDim)) {
        throw InvalidInput("state file: \"dim\" must be an integer in [1, 64]");
    }
    const auto n = static_cast<std::size_t>(doc["dim"].get<long long>());
    auto read_part = [&](const char *key, std::vector<double> &out) {
        const Json &rows = doc[key];
        if (!rows.is_array() || rows.size() != n) {
            throw InvalidInput(std::string("state file: \"") + key + "\" must have dim rows");
        }
        for (const Json &row : rows) {
            if (!row.is_array() || row.size() != n) {
                throw InvalidInput(std::string("state file: each \"") + key + "\" row must have dim entries");
            }
            for (const Json &v : row) {
                if (!v.is_number()) {
                    throw InvalidInput(std::string("state file: \"") + key + "\" entries must be numbers");
                }
                out.push_back(v.get<double>());
            }
        }
    };
    std::vector<double> re;
    std::vector<double> im;
    read_part("re", re);
    if (doc.contains("im")) {
        read_part("im", im);
    } else {
        im.assign(n * n, 0.0);
    }
    std::vector<Complex> entries(n * n);
    for (std::size_t i = 0; i < n * n; i++) {
        entries[i] = {re[i], im[i]};
    }
    return DensityMatrix(ComplexMatrix(n, n, std::move(entries)));
}

DensityMatrix load_state_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open state file " + path);
    }
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw InvalidInput("state file " + path + " is not valid JSON: " + e.what());
    }
    return state_from_json(doc);
}

Json to_json(const TestReport &r) {
    Json inputs = {{"state_digest", r.inputs.state_digest}, {"state_dim", r.inputs.state_dim}};
    if (r.inputs.alpha) {
        inputs["alpha"] = *r.inputs.alpha;
    }
    Json dirs = Json::array();
    for (const Direction &d : r.inputs.directions) {
        dirs.push_back({{"label", d.label}, {"vec", vec_to_json(d.vec)}});
    }
    inputs["directions"] = std::move(dirs);

    Json weak = Json::array();
    for (const WeakTerm &t : r.weak_terms) {
        weak.push_back({{"label", t.label},
                        {"pp_index", t.pp_index},
                        {"weight", t.weight},
                        {"born_factor", t.born_factor},
                        {"weak_value", t.weak_value},
                        {"defined", t.defined},
                        {"contribution", t.contribution()}});
    }
    Json comps = Json::array();
    std::vector<double> values;
    recompute_statistic(r, &values);
    for (std::size_t i = 0; i < r.components.size(); i++) {
        Json monos = Json::array();
        for (const Monomial &m : r.components[i].monomials) {
            monos.push_back({{"coefficient", m.coefficient}, {"factors", m.factors}});
        }
        comps.push_back({{"label", r.components[i].label}, {"value", values[i]}, {"monomials", std::move(monos)}});
    }

    Json out = {
        {"test", r.test},
        {"inputs", std::move(inputs)},
        {"pseudo_probabilities", labeled(r.pseudo_probabilities)},
        {"weak_terms", std::move(weak)},
        {"components", std::move(comps)},
        {"aggregate", aggregate_name(r.aggregate)},
        {"statistic", r.statistic},
        {"threshold", r.threshold},
        {"tolerance", r.tolerance},
        {"rule", rule_name(r.rule)},
        {"verdict", r.verdict},
    };
    if (r.alpha_valid_range) {
        out["alpha_valid_range"] = Json::array({r.alpha_valid_range->first, r.alpha_valid_range->second});
        out["alpha_in_range"] = r.alpha_in_range;
    }
    out["closed_form_statistic"] = r.closed_form_statistic;
    out["closed_forms"] = labeled(r.closed_forms);
    out["flags"] = r.flags;
    out["notes"] = r.notes;
    return out;
}

double statistic_from_json(const Json &report) {
    const Json &pps = report.at("pseudo_probabilities");
    std::vector<double> values;
    for (const Json &c : report.at("components")) {
        double total = 0;
        for (const Json &m : c.at("monomials")) {
            double term = m.at("coefficient").get<double>();
            for (const Json &f : m.at("factors")) {
                term *= pps.at(f.get<std::size_t>()).at("value").get<double>();
            }
            total += term;
        }
        values.push_back(total);
    }
    if (values.empty()) {
        throw InvalidInput("report has no components");
    }
    if (report.at("aggregate").get<std::string>() == "max") {
        return *std::max_element(values.begin(), values.end());
    }
    return values[0];
}

Json to_json(const Scheme &s) {
    Json obs = Json::array();
    for (const ObservableSpec &o : s.observables) {
        Json j = {{"label", o.label}, {"subsystem", o.subsystem}};
        if (o.axis) {
            j["axis"] = vec_to_json(o.axis->vec());
        } else {
            j["matrix"] = matrix_to_json(o.matrix);
        }
        obs.push_back(std::move(j));
    }
    Json entries = Json::object();
    for (std::size_t i = 0; i < s.entries.size(); i++) {
        entries[outcome_string(i, s.size())] = s.entries[i];
    }
    return {{"observables", std::move(obs)},
            {"prescription", prescription_name(s.prescription)},
            {"subsystem_dims", s.subsystem_dims},
            {"entries", std::move(entries)}};
}

Json to_json(const NegativityReport &r) {
    Json neg = Json::array();
    for (const auto &e : r.negative_entries) {
        neg.push_back({{"outcomes", e.outcomes}, {"value", e.value}});
    }
    return {{"negative_entries", std::move(neg)},
            {"min_entry", r.min_entry},
            {"min_outcomes", r.min_outcomes},
            {"nonclassical", r.nonclassical}};
}

Json to_json(const EigenCertificate &c, const std::vector<double> &spectrum) {
    Json witness = Json::array();
    for (Complex z : c.witness) {
        witness.push_back(complex_to_json(z));
    }
    return {{"min_eigenvalue", c.min_eigenvalue}, {"witness", std::move(witness)}, {"spectrum", spectrum}};
}

Json to_json(const WeakValueReport &r) {
    return {{"operator", r.operator_label},
            {"value", complex_to_json(r.value)},
            {"spectrum_min", r.spectrum_min},
            {"spectrum_max", r.spectrum_max},
            {"anomalous", r.anomalous},
            {"overlap", r.overlap},
            {"pre", matrix_to_json(r.pre.matrix())},
            {"post", matrix_to_json(r.post.matrix())}};
}

Json to_json(const PointerResult &r) {
    return {{"pointers", r.pointers},
            {"grid_points", r.grid_points},
            {"correlation", r.correlation},
            {"pseudo_probability", r.pseudo_probability},
            {"ratio", r.ratio},
            {"prediction", r.prediction},
            {"convergence_estimate", r.convergence_estimate},
            {"norm_error", r.norm_error}};
}

Json to_json(const ProportionalityReport &r) {
    return {{"couplings", r.couplings},
            {"correlations", r.correlations},
            {"fitted_slope", r.fitted_slope},
            {"predicted_slope", r.predicted_slope},
            {"pseudo_probability", r.pseudo_probability},
            {"relative_deviation", r.relative_deviation},
            {"sign_match", r.sign_match},
            {"simulated", r.simulated}};
}

Json to_json(const Trajectory &t) {
    Json points = Json::array();
    for (const TrajectoryPoint &p : t.points) {
        points.push_back({{"t", p.t}, {"scheme", scheme4_to_json(p.scheme)}, {"score", p.score}});
    }
    const TrajectoryPoint &best = t.points.at(t.best);
    return {{"trajectory", std::move(points)},
            {"best", {{"index", t.best}, {"t", best.t}, {"score", best.score}}}};
}

}  // namespace pplab
