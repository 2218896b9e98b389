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

#include "pplab/nonclassicality.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>

#include "pplab/errors.h"
#include "pplab/weak_values.h"

namespace pplab {

const LabeledValue &TestReport::pp(std::string_view label) const {
    for (const LabeledValue &v : pseudo_probabilities) {
        if (v.label == label) {
            return v;
        }
    }
    throw InvalidInput("report has no pseudo-probability '" + std::string(label) + "'");
}

const LabeledValue &TestReport::closed_form(std::string_view label) const {
    for (const LabeledValue &v : closed_forms) {
        if (v.label == label) {
            return v;
        }
    }
    throw InvalidInput("report has no closed form '" + std::string(label) + "'");
}

bool TestReport::has_flag(std::string_view flag) const {
    return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

double recompute_statistic(const TestReport &r, std::vector<double> *component_values) {
    if (r.components.empty()) {
        throw InvalidInput("report has no statistic components");
    }
    std::vector<double> values;
    for (const Component &c : r.components) {
        double total = 0;
        for (const Monomial &m : c.monomials) {
            double term = m.coefficient;
            for (std::size_t f : m.factors) {
                if (f >= r.pseudo_probabilities.size()) {
                    throw InvalidInput("statistic component refers to a missing pseudo-probability");
                }
                term *= r.pseudo_probabilities[f].value;
            }
            total += term;
        }
        values.push_back(total);
    }
    double stat = r.aggregate == Aggregate::kMax ? *std::max_element(values.begin(), values.end()) : values[0];
    if (component_values != nullptr) {
        *component_values = std::move(values);
    }
    return stat;
}

bool decide_verdict(double statistic, double threshold, double tol, VerdictRule rule) {
    if (rule == VerdictRule::kNonzero) {
        return std::abs(statistic - threshold) > tol;
    }
    return statistic < threshold - tol;
}

double weak_term_residual(const TestReport &r) {
    std::map<std::size_t, double> sums;
    for (const WeakTerm &t : r.weak_terms) {
        sums[t.pp_index] += t.contribution();
    }
    double worst = 0;
    for (const auto &[index, sum] : sums) {
        worst = std::max(worst, std::abs(sum - r.pseudo_probabilities.at(index).value));
    }
    return worst;
}

std::string state_digest(const ComplexMatrix &m) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](double d) {
        std::uint64_t bits = std::bit_cast<std::uint64_t>(d == 0 ? 0.0 : d);
        for (int k = 0; k < 8; k++) {
            h ^= (bits >> (8 * k)) & 0xFF;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<double>(m.rows()));
    for (Complex z : m.entries()) {
        mix(z.real());
        mix(z.imag());
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

constexpr double kRouteTol = 1e-10;

void require_qubit(const DensityMatrix &state) {
    if (state.dim() != 2) {
        throw InvalidInput("this test needs a single-qubit (2x2) state");
    }
}

void require_two_qubit(const DensityMatrix &state) {
    if (state.dim() != 4) {
        throw InvalidInput("this test needs a two-qubit (4x4) state");
    }
}

std::string sign_char(int s) {
    return s > 0 ? "+" : "-";
}

TestReport start(std::string name, const DensityMatrix *state, double tol) {
    TestReport r;
    r.test = std::move(name);
    r.tolerance = tol;
    if (state != nullptr) {
        r.inputs.state_digest = state_digest(state->matrix());
        r.inputs.state_dim = state->dim();
    }
    return r;
}

std::size_t add_pp(TestReport &r, std::string label, double value) {
    r.pseudo_probabilities.push_back({std::move(label), value});
    return r.pseudo_probabilities.size() - 1;
}

void add_weak_term(
    TestReport &r,
    std::string label,
    std::size_t pp_index,
    double weight,
    const DensityMatrix &state,
    const std::vector<Projector> &factors) {
    try {
        FactorizationReport f = pp_weak_factorization(state, factors);
        r.weak_terms.push_back({std::move(label), pp_index, weight, f.born_factor, f.weak_factor, true});
    } catch (const NumericalError &) {
        double born = expectation(state, factors[0].matrix()).real();
        r.weak_terms.push_back({std::move(label), pp_index, weight, born, 0.0, false});
        if (!r.has_flag("weak_term_undefined")) {
            r.flags.push_back("weak_term_undefined");
        }
    }
}

void add_direction(TestReport &r, std::string label, const Vec3 &v) {
    r.inputs.directions.push_back({std::move(label), v});
}

void set_alpha(TestReport &r, double alpha, std::optional<std::pair<double, double>> range) {
    r.inputs.alpha = alpha;
    r.alpha_valid_range = range;
    if (range) {
        r.alpha_in_range = alpha > range->first && alpha <= range->second + kStructuralTol;
        if (!r.alpha_in_range) {
            r.flags.push_back("alpha_out_of_range");
        }
    }
}

void finish(TestReport &r) {
    r.statistic = recompute_statistic(r);
    r.verdict = decide_verdict(r.statistic, r.threshold, r.tolerance, r.rule);
    double scale = std::max(1.0, std::abs(r.closed_form_statistic));
    if (std::abs(r.statistic - r.closed_form_statistic) > kRouteTol * scale) {
        r.flags.push_back("route_mismatch");
    }
}

Monomial mono(double c, std::vector<std::size_t> f) {
    return Monomial{c, std::move(f)};
}

Component linear_sum(std::string label, const std::vector<std::size_t> &indices) {
    Component c{std::move(label), {}};
    for (std::size_t i : indices) {
        c.monomials.push_back(mono(1, {i}));
    }
    return c;
}

Projector proj(const UnitVector3 &n, int outcome) {
    return qubit_projector(n, outcome);
}

Projector pair_proj(const ComplexMatrix &a, const ComplexMatrix &b) {
    return Projector(tensor_product(a, b));
}

const ComplexMatrix &id2() {
    static const ComplexMatrix m = ComplexMatrix::identity(2);
    return m;
}

double corr(const DensityMatrix &state, const Vec3 &a, const Vec3 &b) {
    return real_expectation(state, tensor_product(sigma_dot(a), sigma_dot(b)));
}

double local(const DensityMatrix &state, const Vec3 &n, int which) {
    return real_expectation(state, lift_to_pair(sigma_dot(n), which));
}

/// Scheme over (sigma.a on qubit 0, sigma.b1 and sigma.b2 on qubit 1).
Scheme triple_scheme(const DensityMatrix &state, const UnitVector3 &a, const Doublet &b) {
    return build_scheme(
        state,
        {ObservableSpec::qubit(a, 0, "a"), ObservableSpec::qubit(b.n1, 1, "b1"), ObservableSpec::qubit(b.n2, 1, "b2")},
        Prescription::kUnit,
        {2, 2});
}

/// Adds P(a^s; b1^t, b2^t) and its weak decomposition <pi_a pi_b2> <<pi_b1>>.
std::size_t add_triple(
    TestReport &r,
    const DensityMatrix &state,
    const Scheme &sch,
    const UnitVector3 &a,
    const Doublet &b,
    int s,
    int t,
    const std::string &tag) {
    std::array<int, 3> outcomes{s, t, t};
    std::string label = "P(a" + tag + sign_char(s) + ";b1" + tag + sign_char(t) + ",b2" + tag + sign_char(t) + ")";
    std::size_t index = add_pp(r, label, sch.entries[encode_outcomes(outcomes)]);
    add_weak_term(
        r,
        label,
        index,
        1.0,
        state,
        {pair_proj(proj(a, s).matrix(), proj(b.n2, t).matrix()), pair_proj(id2(), proj(b.n1, t).matrix())});
    return index;
}

/// Adds the doublet pseudo-probability P(n1^t, n2^t) on one qubit of a pair. The weak
/// decomposition takes `first` (0 for n1, 1 for n2) as the post-selected factor.
std::size_t add_doublet_pp(
    TestReport &r,
    const DensityMatrix &state,
    const Doublet &d,
    int which,
    int t,
    int first,
    const std::string &label) {
    Scheme sch = build_scheme(
        state,
        {ObservableSpec::qubit(d.n1, static_cast<std::size_t>(which), "n1"),
         ObservableSpec::qubit(d.n2, static_cast<std::size_t>(which), "n2")},
        Prescription::kUnit,
        {2, 2});
    std::array<int, 2> outcomes{t, t};
    std::size_t index = add_pp(r, label, sch.entries[encode_outcomes(outcomes)]);
    Projector p1(lift_to_pair(proj(d.n1, t).matrix(), which));
    Projector p2(lift_to_pair(proj(d.n2, t).matrix(), which));
    std::vector<Projector> factors = first == 0 ? std::vector<Projector>{p1, p2} : std::vector<Projector>{p2, p1};
    add_weak_term(r, label, index, 1.0, state, factors);
    return index;
}

/// Born probability of sigma.n = t on one qubit of a pair, via a one-observable scheme.
std::size_t add_born(
    TestReport &r, const DensityMatrix &state, const UnitVector3 &n, int which, int t, const std::string &label) {
    Scheme sch = build_scheme(
        state, {ObservableSpec::qubit(n, static_cast<std::size_t>(which), "n")}, Prescription::kUnit, {2, 2});
    std::array<int, 1> outcomes{t};
    return add_pp(r, label, sch.entries[encode_outcomes(outcomes)]);
}

}  // namespace

TestReport coherence_test(const DensityMatrix &state, const UnitVector3 &a1, const UnitVector3 &a2, double tol) {
    require_qubit(state);
    TestReport r = start("coherence", &state, tol);
    add_direction(r, "a1", a1);
    add_direction(r, "a2", a2);
    Scheme sch = build_scheme(state, {ObservableSpec::qubit(a1, 0, "a1"), ObservableSpec::qubit(a2, 0, "a2")});
    std::array<int, 2> pp_outcomes{1, 1};
    std::size_t i = add_pp(r, "P(a1+,a2+)", sch.entries[encode_outcomes(pp_outcomes)]);
    add_weak_term(r, "P(a1+,a2+)", i, 1.0, state, {proj(a1, 1), proj(a2, 1)});
    r.components.push_back(linear_sum("P(a1+,a2+)", {i}));

    Vec3 p = bloch_vector_of(state);
    r.closed_form_statistic = 0.25 * (1 + dot(a1, a2) + dot(p, a1.vec() + a2.vec()));
    r.closed_forms.push_back({"quarter_form", r.closed_form_statistic});
    Vec3 sum = a1.vec() + a2.vec();
    if (sum.norm() > kSpectralTol) {
        double c = std::sqrt(std::max(0.0, (1 + dot(a1, a2)) / 2));
        UnitVector3 axis = UnitVector3::normalized(sum);
        r.closed_forms.push_back({"doublet_form", 0.5 * c * (c + dot(p, axis))});
    }
    finish(r);
    return r;
}

TestReport boolean_state_dep_test(
    const DensityMatrix &state, const UnitVector3 &a1, const UnitVector3 &a2, double tol) {
    require_qubit(state);
    TestReport r = start("boolean-dep", &state, tol);
    r.rule = VerdictRule::kNonzero;
    add_direction(r, "a1", a1);
    add_direction(r, "a2", a2);
    Scheme sch = build_scheme(
        state,
        {ObservableSpec::qubit(a1, 0, "a1"), ObservableSpec::qubit(a2, 0, "a2"), ObservableSpec::qubit(a1, 0, "a1")});
    std::array<int, 3> outcomes{1, 1, -1};
    std::size_t i = add_pp(r, "P(a1+,a2+,a1-)", sch.entries[encode_outcomes(outcomes)]);
    add_weak_term(r, "P(a1+,a2+,a1-)", i, 1.0, state, {proj(a1, 1), proj(a2, 1), proj(a1, -1)});
    r.components.push_back(linear_sum("P(a1+,a2+,a1-)", {i}));

    Vec3 p = bloch_vector_of(state);
    double projection = dot(p, a2.vec() - a1.vec() * dot(a1, a2));
    r.closed_form_statistic = 0.25 * projection;
    r.closed_forms.push_back({"constructive_form", 0.25 * projection});
    r.closed_forms.push_back({"eighth_form", 0.125 * projection});
    r.notes.push_back(
        "unit pseudo-projection of (pi_a1, pi_a2, pi_~a1) equals (1/4) sigma.(a2 - a1 (a1.a2)); "
        "eighth_form carries a 1/8 prefactor and is half the constructive value");
    finish(r);
    return r;
}

TestReport boolean_state_indep_test(const UnitVector3 &a1, const UnitVector3 &a2, double tol) {
    TestReport r = start("boolean-indep", nullptr, tol);
    r.rule = VerdictRule::kNonzero;
    add_direction(r, "a1", a1);
    add_direction(r, "a2", a2);
    std::vector<Projector> factors{proj(a1, 1), proj(a2, 1), proj(a1, -1), proj(a2, -1)};
    PseudoProjection pp = symmetrized_pp(factors);

    const std::array<std::pair<const char *, Vec3>, 3> canonical{
        {{"x", Vec3{1, 0, 0}}, {"y", Vec3{0, 1, 0}}, {"z", Vec3{0, 0, 1}}}};
    double lo = 0;
    double hi = 0;
    for (std::size_t k = 0; k < canonical.size(); k++) {
        DensityMatrix state = bloch_state(BlochVector(canonical[k].second));
        double v = expectation(state, pp.matrix).real();
        std::size_t i = add_pp(r, std::string("P(a1+,a2+,a1-,a2-|") + canonical[k].first + "+)", v);
        lo = k == 0 ? v : std::min(lo, v);
        hi = k == 0 ? v : std::max(hi, v);
        if (k == 0) {
            r.inputs.state_digest = state_digest(state.matrix());
            r.inputs.state_dim = 2;
            double w = 1.0 / static_cast<double>(pp.orderings.size());
            for (const Ordering &o : pp.orderings) {
                std::vector<Projector> ordered;
                std::string label = "ordering";
                for (std::size_t j : o) {
                    ordered.push_back(factors[j]);
                    label += " " + std::to_string(j);
                }
                add_weak_term(r, label, i, w, state, ordered);
            }
        }
    }
    r.components.push_back(linear_sum("P(a1+,a2+,a1-,a2-)", {0}));

    double c = dot(a1, a2);
    double scalar = pp.matrix.trace().real() / 2;
    double traceless = max_abs_diff(pp.matrix, ComplexMatrix::identity(2) * Complex{scalar, 0});
    r.closed_form_statistic = (c * c - 1) / 24;
    r.closed_forms.push_back({"constructive_constant", (c * c - 1) / 24});
    r.closed_forms.push_back({"reference_constant", (c * c - 1.0 / 3) / 8});
    r.closed_forms.push_back({"state_spread", hi - lo});
    r.closed_forms.push_back({"traceless_part", traceless});
    if (hi - lo <= kStructuralTol && traceless <= kStructuralTol) {
        r.flags.push_back("state_independent");
    }
    r.notes.push_back(
        "pseudo-projection is the equal-weight average over the 12 canonical orderings of the four factors; "
        "it is the scalar ((a1.a2)^2 - 1)/24");
    finish(r);
    return r;
}

TestReport distributivity_test(
    const DensityMatrix &state, const UnitVector3 &a1, const UnitVector3 &a2, const UnitVector3 &a3, double tol) {
    require_qubit(state);
    TestReport r = start("distributivity", &state, tol);
    r.rule = VerdictRule::kNonzero;
    add_direction(r, "a1", a1);
    add_direction(r, "a2", a2);
    add_direction(r, "a3", a3);
    auto obs = [](const UnitVector3 &n, const char *label) { return ObservableSpec::qubit(n, 0, label); };
    std::array<int, 4> plus4{1, 1, 1, 1};
    std::array<int, 3> plus3{1, 1, 1};

    Scheme lhs = build_scheme(state, {obs(a2, "a2"), obs(a1, "a1"), obs(a1, "a1"), obs(a3, "a3")});
    std::size_t i0 = add_pp(r, "P(a1a2a1a3)", lhs.entries[encode_outcomes(plus4)]);
    add_weak_term(r, "P(a1a2a1a3)", i0, 1.0, state, {proj(a2, 1), proj(a1, 1), proj(a3, 1)});

    Scheme s123 = build_scheme(state, {obs(a1, "a1"), obs(a2, "a2"), obs(a3, "a3")});
    Scheme s132 = build_scheme(state, {obs(a1, "a1"), obs(a3, "a3"), obs(a2, "a2")});
    double anti = 0.5 * (s123.entries[encode_outcomes(plus3)] + s132.entries[encode_outcomes(plus3)]);
    std::size_t i1 = add_pp(r, "{pi_a1,P(a2a3)}/2", anti);
    add_weak_term(r, "a1 a2 a3", i1, 0.5, state, {proj(a1, 1), proj(a2, 1), proj(a3, 1)});
    add_weak_term(r, "a1 a3 a2", i1, 0.5, state, {proj(a1, 1), proj(a3, 1), proj(a2, 1)});

    r.components.push_back(Component{"gap", {mono(1, {i0}), mono(-1, {i1})}});

    std::vector<Projector> pair23{proj(a2, 1), proj(a3, 1)};
    std::vector<Projector> chain{proj(a2, 1), proj(a1, 1), proj(a1, 1), proj(a3, 1)};
    ComplexMatrix gap = unit_pp(chain).matrix -
                        anticommutator(proj(a1, 1).matrix(), unit_pp(pair23).matrix) * Complex{0.5, 0};
    r.closed_form_statistic = real_expectation(state, gap);
    r.closed_forms.push_back({"gap_operator", r.closed_form_statistic});
    finish(r);
    return r;
}

ChshObservables default_chsh_observables() {
    double h = 1 / std::numbers::sqrt2;
    return ChshObservables{
        ObservableSpec::qubit(UnitVector3::ex(), 0, "A1"),
        ObservableSpec::qubit(UnitVector3::ey(), 0, "A2"),
        ObservableSpec::qubit(UnitVector3::normalized({h, h, 0}), 1, "B1"),
        ObservableSpec::qubit(UnitVector3::normalized({h, -h, 0}), 1, "B2")};
}

TestReport chsh_test(const DensityMatrix &state, const ChshObservables &obs, double tol) {
    for (const ObservableSpec *o : {&obs.a1, &obs.a2}) {
        if (o->subsystem != 0) {
            throw InvalidInput("CHSH observables A1, A2 must act on subsystem 0");
        }
    }
    for (const ObservableSpec *o : {&obs.b1, &obs.b2}) {
        if (o->subsystem != 1) {
            throw InvalidInput("CHSH observables B1, B2 must act on subsystem 1");
        }
    }
    std::size_t da = obs.a1.matrix.rows();
    std::size_t db = obs.b1.matrix.rows();
    if (obs.a2.matrix.rows() != da || obs.b2.matrix.rows() != db || da * db != state.dim()) {
        throw InvalidInput("CHSH observables do not match the bipartite state dimensions");
    }
    for (const ObservableSpec *o : {&obs.a1, &obs.a2, &obs.b1, &obs.b2}) {
        double t = o->matrix.trace().real();
        if (std::abs(std::abs(t) - static_cast<double>(o->matrix.rows())) < kSpectralTol) {
            throw InvalidInput("CHSH observable '" + o->label + "' must have both outcomes");
        }
    }
    TestReport r = start("chsh", &state, tol);
    for (const ObservableSpec *o : {&obs.a1, &obs.a2, &obs.b1, &obs.b2}) {
        if (o->axis) {
            add_direction(r, o->label, *o->axis);
        }
    }
    std::vector<std::size_t> dims{da, db};
    Scheme s1 = build_scheme(state, {obs.a1, obs.b1, obs.b2}, Prescription::kUnit, dims);
    Scheme s2 = build_scheme(state, {obs.a2, obs.b1, obs.b2}, Prescription::kUnit, dims);
    ComplexMatrix ida = ComplexMatrix::identity(da);

    struct Term {
        const Scheme *scheme;
        const ObservableSpec *a;
        int sa;
        int sb1;
        int sb2;
        const char *label;
    };
    const std::array<Term, 4> terms{{
        {&s1, &obs.a1, 1, 1, 1, "P(A1+;B1+,B2+)"},
        {&s1, &obs.a1, -1, -1, -1, "P(A1-;B1-,B2-)"},
        {&s2, &obs.a2, 1, 1, -1, "P(A2+;B1+,B2-)"},
        {&s2, &obs.a2, -1, -1, 1, "P(A2-;B1-,B2+)"},
    }};
    std::vector<std::size_t> indices;
    for (const Term &t : terms) {
        std::array<int, 3> outcomes{t.sa, t.sb1, t.sb2};
        std::size_t i = add_pp(r, t.label, t.scheme->entries[encode_outcomes(outcomes)]);
        indices.push_back(i);
        add_weak_term(
            r,
            t.label,
            i,
            1.0,
            state,
            {Projector(tensor_product(t.a->projector(t.sa), obs.b1.projector(t.sb1))),
             Projector(tensor_product(ida, obs.b2.projector(t.sb2)))});
    }
    r.components.push_back(linear_sum("P_NL", indices));

    auto ab = [&](const ObservableSpec &a, const ObservableSpec &b) {
        return real_expectation(state, tensor_product(a.matrix, b.matrix));
    };
    double chsh = ab(obs.a1, obs.b1) + ab(obs.a1, obs.b2) + ab(obs.a2, obs.b1) - ab(obs.a2, obs.b2);
    r.closed_form_statistic = 0.25 * (2 + chsh);
    r.closed_forms.push_back({"chsh_value", chsh});
    r.closed_forms.push_back({"quarter_two_plus_chsh", r.closed_form_statistic});
    finish(r);
    return r;
}

std::pair<double, double> alpha_range(LinearVariant v) {
    return {0.0, v == LinearVariant::kI ? 2 * std::numbers::pi / 3 : std::acos(-7.0 / 9)};
}

std::pair<double, double> alpha_range(NonlinearVariant v) {
    switch (v) {
        case NonlinearVariant::kI:
            return {0.0, std::numbers::pi / 2};
        case NonlinearVariant::kII:
            return {0.0, std::acos(-1.0 / 3)};
        case NonlinearVariant::kIII:
            break;
    }
    return {0.0, std::acos(-79.0 / 81)};
}

namespace {

void add_geometry(TestReport &r, const EntanglementGeometry &geom, std::size_t count, bool a_doublets) {
    for (std::size_t i = 0; i < count; i++) {
        std::string n = std::to_string(i + 1);
        add_direction(r, "a" + n, geom.a_axes[i]);
        add_direction(r, "b" + n, geom.b_axes[i]);
        add_direction(r, "b1^" + n, geom.b_doublets[i].n1);
        add_direction(r, "b2^" + n, geom.b_doublets[i].n2);
        if (a_doublets) {
            add_direction(r, "a1^" + n, geom.a_doublets[i].n1);
            add_direction(r, "a2^" + n, geom.a_doublets[i].n2);
        }
    }
}

}  // namespace

TestReport linear_ent_test(
    const DensityMatrix &state, const EntanglementGeometry &geom, LinearVariant variant, double tol) {
    require_two_qubit(state);
    std::size_t k = variant == LinearVariant::kI ? 2 : 3;
    TestReport r = start(variant == LinearVariant::kI ? "ent-linear-1" : "ent-linear-2", &state, tol);
    set_alpha(r, geom.alpha, alpha_range(variant));
    add_geometry(r, geom, k, false);

    std::vector<std::size_t> indices;
    double corr_sum = 0;
    for (std::size_t i = 0; i < k; i++) {
        std::string tag = "^" + std::to_string(i + 1);
        const UnitVector3 &a = geom.a_axes[i];
        const Doublet &b = geom.b_doublets[i];
        Scheme sch = triple_scheme(state, a, b);
        indices.push_back(add_triple(r, state, sch, a, b, 1, 1, tag));
        indices.push_back(add_triple(r, state, sch, a, b, -1, -1, tag));
        corr_sum += corr(state, a, geom.b_axes[i]);
    }
    r.components.push_back(linear_sum(k == 2 ? "P_E1" : "P_E2", indices));

    double c = std::cos(geom.alpha / 2);
    double kc = static_cast<double>(k) * c;
    r.closed_form_statistic = 0.5 * c * (kc + corr_sum);
    r.closed_forms.push_back({"inequality_expression", kc + corr_sum});
    r.closed_forms.push_back({"half_cos_times_expression", r.closed_form_statistic});
    if (variant == LinearVariant::kII) {
        r.notes.push_back(
            "each entry is (1/4)cos(alpha/2)[cos(alpha/2)(1 + s<a>) + t(<b> + s<ab>)]; at cos(alpha/2) = 1/3 "
            "a Werner state gives (1/12)(1/3 - eta) per entry, not (1/8)(1/2 - eta); the sign change at "
            "eta = 1/3 is the same");
    }
    finish(r);
    return r;
}

TestReport nonlinear_ent_test(
    const DensityMatrix &state, const EntanglementGeometry &geom, NonlinearVariant variant, double tol) {
    require_two_qubit(state);
    static constexpr std::array<const char *, 3> kNames{"ent-nl-1", "ent-nl-2", "ent-nl-3"};
    std::size_t v = static_cast<std::size_t>(variant);
    TestReport r = start(kNames[v], &state, tol);
    set_alpha(r, geom.alpha, alpha_range(variant));
    std::size_t k = variant == NonlinearVariant::kI ? 2 : 3;
    add_geometry(r, geom, k, variant == NonlinearVariant::kIII);

    double c = std::cos(geom.alpha / 2);
    Component total{"S" + std::to_string(v + 1), {}};
    double closed = 0;
    for (std::size_t i = 0; i < k; i++) {
        std::string n = std::to_string(i + 1);
        std::string tag = "^" + n;
        const UnitVector3 &a = geom.a_axes[i];
        const UnitVector3 &bax = geom.b_axes[i];
        const Doublet &b = geom.b_doublets[i];
        Scheme sch = triple_scheme(state, a, b);
        double C = corr(state, a, bax);
        if (variant != NonlinearVariant::kIII) {
            std::size_t same_p = add_triple(r, state, sch, a, b, 1, 1, tag);
            std::size_t same_m = add_triple(r, state, sch, a, b, -1, -1, tag);
            std::size_t anti_p = add_triple(r, state, sch, a, b, -1, 1, tag);
            std::size_t anti_m = add_triple(r, state, sch, a, b, 1, -1, tag);
            for (std::size_t x : {same_p, same_m}) {
                for (std::size_t y : {anti_p, anti_m}) {
                    total.monomials.push_back(mono(1, {x, y}));
                }
            }
            closed += 0.25 * c * c * (c * c - C * C);
            continue;
        }
        const Doublet &ad = geom.a_doublets[i];
        std::size_t same_p = add_triple(r, state, sch, a, b, 1, 1, tag);
        std::size_t same_m = add_triple(r, state, sch, a, b, -1, -1, tag);
        std::size_t pa = add_born(r, state, a, 0, 1, "P(a" + n + "+)");
        std::size_t pa_bar = add_born(r, state, a, 0, -1, "P(a" + n + "-)");
        std::size_t pb = add_born(r, state, bax, 1, 1, "P(b" + n + "+)");
        std::size_t pb_bar = add_born(r, state, bax, 1, -1, "P(b" + n + "-)");
        std::size_t da = add_doublet_pp(r, state, ad, 0, 1, 0, "P(a1" + tag + "+,a2" + tag + "+)");
        std::size_t da_bar = add_doublet_pp(r, state, ad, 0, -1, 0, "P(a1" + tag + "-,a2" + tag + "-)");
        std::size_t db = add_doublet_pp(r, state, b, 1, 1, 0, "P(b1" + tag + "+,b2" + tag + "+)");
        std::size_t db_bar = add_doublet_pp(r, state, b, 1, -1, 0, "P(b1" + tag + "-,b2" + tag + "-)");
        total.monomials.push_back(mono(1, {same_p}));
        total.monomials.push_back(mono(1, {same_m}));
        for (auto [x, y] : std::array<std::pair<std::size_t, std::size_t>, 8>{{
                 {pa, da_bar},
                 {pa_bar, da},
                 {pb, db_bar},
                 {pb_bar, db},
                 {pa, db_bar},
                 {pa_bar, db},
                 {da_bar, pb},
                 {da, pb_bar},
             }}) {
            total.monomials.push_back(mono(0.5, {x, y}));
        }
        double A = local(state, a, 0);
        double B = local(state, bax, 1);
        closed += 0.5 * c * (3 * c + C - 0.5 * (A + B) * (A + B));
    }
    r.components.push_back(std::move(total));
    r.closed_form_statistic = closed;

    if (variant == NonlinearVariant::kIII) {
        double inner = 9 * c;
        for (std::size_t i = 0; i < 3; i++) {
            double A = local(state, geom.a_axes[i], 0);
            double B = local(state, geom.b_axes[i], 1);
            inner += corr(state, geom.a_axes[i], geom.b_axes[i]) - 0.5 * (A + B) * (A + B);
        }
        r.closed_forms.push_back({"lambda", 0.5 * c});
        r.closed_forms.push_back({"bracket", inner});
        r.closed_forms.push_back({"lambda_times_bracket", 0.5 * c * inner});
    } else {
        double squares = 0;
        for (std::size_t i = 0; i < k; i++) {
            double C = corr(state, geom.a_axes[i], geom.b_axes[i]);
            squares += C * C;
        }
        double expr = static_cast<double>(k) * c * c - squares;
        r.closed_forms.push_back({"inequality_expression", expr});
        r.closed_forms.push_back({"quarter_cos2_times_expression", 0.25 * c * c * expr});
    }
    finish(r);
    return r;
}

TestReport discord_test(const DensityMatrix &state, double alpha, double tol, const DiscordOptions &options) {
    require_two_qubit(state);
    if (!(alpha > 0 && alpha < std::numbers::pi)) {
        throw InvalidInput("discord test needs 0 < alpha < pi radians");
    }
    TestReport r = start("discord", &state, tol);
    set_alpha(r, alpha, std::nullopt);
    r.aggregate = Aggregate::kMax;

    DensityMatrix reduced(partial_trace(state.matrix(), 2, 2, 0));
    Vec3 p = bloch_vector_of(reduced);
    std::optional<UnitVector3> a1;
    if (p.norm() > kSpectralTol) {
        a1 = UnitVector3::normalized(p);
    } else {
        a1 = UnitVector3::ez();
        r.flags.push_back("degenerate_reduced_state");
    }
    std::array<UnitVector3, 2> a_axes{*a1, mub_partner(*a1, options.rule)};
    std::array<UnitVector3, 2> b_axes = options.b_axes.value_or(a_axes);
    double c = std::cos(alpha / 2);

    double closed = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < 2; i++) {
        std::string n = std::to_string(i + 1);
        std::string tag = "^" + n;
        const UnitVector3 &a = a_axes[i];
        Doublet b = make_doublet(b_axes[i], alpha, options.rule);
        add_direction(r, "a" + n, a);
        add_direction(r, "b" + n, b_axes[i]);
        add_direction(r, "b1" + tag, b.n1);
        add_direction(r, "b2" + tag, b.n2);

        Scheme sch = triple_scheme(state, a, b);
        std::size_t same_p = add_triple(r, state, sch, a, b, 1, 1, tag);
        std::size_t same_m = add_triple(r, state, sch, a, b, -1, -1, tag);
        std::size_t pa = add_born(r, state, a, 0, 1, "P(a" + n + "+)");
        std::size_t pa_bar = add_born(r, state, a, 0, -1, "P(a" + n + "-)");
        std::size_t db = add_doublet_pp(r, state, b, 1, 1, 1, "P(b1" + tag + "+,b2" + tag + "+)");
        std::size_t db_bar = add_doublet_pp(r, state, b, 1, -1, 1, "P(b1" + tag + "-,b2" + tag + "-)");
        r.components.push_back(Component{
            "P_D^" + n, {mono(1, {same_p}), mono(1, {same_m}), mono(1, {pa, db_bar}), mono(1, {pa_bar, db})}});

        double A = local(state, a, 0);
        double B = local(state, b_axes[i], 1);
        double C = corr(state, a, b_axes[i]);
        double value = 0.5 * c * (2 * c + C - A * B);
        double lambda = c / 4;
        r.closed_forms.push_back({"P_D^" + n, value});
        r.closed_forms.push_back({"lambda_form^" + n, lambda * (16 * lambda + 2 * C - 2 * A * B)});
        closed = std::max(closed, value);
    }
    r.closed_form_statistic = closed;
    finish(r);
    return r;
}

}  // namespace pplab
