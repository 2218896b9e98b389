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

#include "pplab/scheme.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pplab/errors.h"

namespace pplab {

ObservableSpec ObservableSpec::qubit(const UnitVector3 &axis, std::size_t subsystem, std::string label) {
    return ObservableSpec{subsystem, sigma_dot(axis.vec()), std::move(label), axis};
}

ObservableSpec ObservableSpec::general(ComplexMatrix m, std::size_t subsystem, std::string label) {
    if (!m.is_hermitian(kStructuralTol)) {
        throw InvalidInput("observable '" + label + "' is not Hermitian");
    }
    for (double v : hermitian_eigen(m).values) {
        if (std::abs(v - 1) > kSpectralTol && std::abs(v + 1) > kSpectralTol) {
            throw InvalidInput("observable '" + label + "' is not dichotomic (spectrum must lie in {-1, +1})");
        }
    }
    return ObservableSpec{subsystem, std::move(m), std::move(label), std::nullopt};
}

ComplexMatrix ObservableSpec::projector(int outcome) const {
    return (ComplexMatrix::identity(matrix.rows()) + matrix * Complex{static_cast<double>(outcome), 0}) *
           Complex{0.5, 0};
}

int Scheme::outcome(std::size_t index, std::size_t k) const {
    return ((index >> (size() - 1 - k)) & 1) ? -1 : 1;
}

double Scheme::entry(std::span<const int> outcomes) const {
    if (outcomes.size() != size()) {
        throw InvalidInput("outcome tuple length does not match the scheme");
    }
    return entries[encode_outcomes(outcomes)];
}

double Scheme::total() const {
    double t = 0;
    for (double v : entries) {
        t += v;
    }
    return t;
}

std::size_t encode_outcomes(std::span<const int> outcomes) {
    std::size_t index = 0;
    for (int o : outcomes) {
        if (o != 1 && o != -1) {
            throw InvalidInput("outcomes must be +1 or -1");
        }
        index = (index << 1) | (o == -1 ? 1 : 0);
    }
    return index;
}

std::string outcome_string(std::size_t index, std::size_t n) {
    std::string s(n, '+');
    for (std::size_t k = 0; k < n; k++) {
        if ((index >> (n - 1 - k)) & 1) {
            s[k] = '-';
        }
    }
    return s;
}

std::size_t parse_outcome_string(std::string_view text, std::size_t n) {
    static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
    std::size_t index = 0;
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        int bit;
        if (text[i] == '+') {
            bit = 0;
            i++;
        } else if (text[i] == '-') {
            bit = 1;
            i++;
        } else if (text.substr(i, kUnicodeMinus.size()) == kUnicodeMinus) {
            bit = 1;
            i += kUnicodeMinus.size();
        } else {
            throw InvalidInput("outcome string may contain only '+' and '-'");
        }
        index = (index << 1) | static_cast<std::size_t>(bit);
        count++;
    }
    if (count != n) {
        throw InvalidInput("outcome string has the wrong length");
    }
    return index;
}

namespace {

std::vector<std::size_t> resolve_dims(
    const DensityMatrix &state, const std::vector<ObservableSpec> &observables, std::vector<std::size_t> dims) {
    if (dims.empty()) {
        std::size_t count = 0;
        for (const ObservableSpec &o : observables) {
            count = std::max(count, o.subsystem + 1);
        }
        if (count == 1) {
            dims = {state.dim()};
        } else {
            dims.assign(count, 2);
        }
    }
    std::size_t product = 1;
    for (std::size_t d : dims) {
        if (d == 0) {
            throw InvalidInput("subsystem dimensions must be positive");
        }
        product *= d;
        if (product > kMaxDim) {
            throw InvalidInput("subsystem dimensions exceed the matrix size limit");
        }
    }
    if (product != state.dim()) {
        throw InvalidInput("subsystem dimensions do not multiply to the state dimension");
    }
    for (const ObservableSpec &o : observables) {
        if (o.subsystem >= dims.size()) {
            throw InvalidInput("observable '" + o.label + "' refers to a missing subsystem");
        }
        if (o.matrix.rows() != dims[o.subsystem] || !o.matrix.is_square()) {
            throw InvalidInput("observable '" + o.label + "' does not match its subsystem dimension");
        }
    }
    return dims;
}

}  // namespace

ComplexMatrix scheme_operator(
    const std::vector<ObservableSpec> &observables,
    std::span<const std::size_t> subsystem_dims,
    Prescription prescription,
    std::size_t index) {
    const std::size_t n = observables.size();
    std::vector<ComplexMatrix> locals;
    locals.reserve(subsystem_dims.size());
    for (std::size_t sub = 0; sub < subsystem_dims.size(); sub++) {
        std::vector<ComplexMatrix> factors;
        for (std::size_t k = 0; k < n; k++) {
            if (observables[k].subsystem == sub) {
                int outcome = ((index >> (n - 1 - k)) & 1) ? -1 : 1;
                factors.push_back(observables[k].projector(outcome));
            }
        }
        if (factors.empty()) {
            locals.push_back(ComplexMatrix::identity(subsystem_dims[sub]));
        } else if (prescription == Prescription::kSymmetrized) {
            locals.push_back(symmetrized_pp_matrix(factors));
        } else {
            locals.push_back(unit_pp_matrix(factors));
        }
    }
    return tensor_product(locals);
}

Scheme build_scheme(
    const DensityMatrix &state,
    std::vector<ObservableSpec> observables,
    Prescription prescription,
    std::vector<std::size_t> subsystem_dims) {
    if (observables.empty() || observables.size() > kMaxSchemeObservables) {
        throw InvalidInput("a scheme needs between 1 and 8 observables");
    }
    if (prescription != Prescription::kUnit && prescription != Prescription::kSymmetrized) {
        throw InvalidInput("schemes support the unit and symmetrized prescriptions");
    }
    Scheme s;
    s.subsystem_dims = resolve_dims(state, observables, std::move(subsystem_dims));
    s.observables = std::move(observables);
    s.prescription = prescription;
    const std::size_t count = std::size_t{1} << s.size();
    s.entries.resize(count);
    for (std::size_t index = 0; index < count; index++) {
        s.entries[index] = expectation(state, scheme_operator(s.observables, s.subsystem_dims, prescription, index)).real();
    }

    if (std::abs(s.total() - 1) > kSpectralTol) {
        throw NumericalError("scheme entries do not sum to 1");
    }
    for (std::size_t k = 0; k < s.size(); k++) {
        double marginal = 0;
        for (std::size_t index = 0; index < count; index++) {
            if (s.outcome(index, k) == 1) {
                marginal += s.entries[index];
            }
        }
        std::vector<ComplexMatrix> lifted;
        for (std::size_t sub = 0; sub < s.subsystem_dims.size(); sub++) {
            lifted.push_back(
                sub == s.observables[k].subsystem ? s.observables[k].projector(1)
                                                  : ComplexMatrix::identity(s.subsystem_dims[sub]));
        }
        double born = expectation(state, tensor_product(lifted)).real();
        if (std::abs(marginal - born) > kSpectralTol) {
            throw NumericalError("scheme marginal of '" + s.observables[k].label + "' differs from the Born rule");
        }
    }
    return s;
}

Scheme marginalize(const Scheme &s, std::size_t drop_index) {
    if (s.size() < 2) {
        throw InvalidInput("marginalize needs a scheme with at least 2 observables");
    }
    if (drop_index >= s.size()) {
        throw InvalidInput("marginalize: observable index out of range");
    }
    Scheme out;
    out.prescription = s.prescription;
    out.subsystem_dims = s.subsystem_dims;
    for (std::size_t k = 0; k < s.size(); k++) {
        if (k != drop_index) {
            out.observables.push_back(s.observables[k]);
        }
    }
    out.entries.assign(std::size_t{1} << out.size(), 0.0);
    const std::size_t low_bits = s.size() - 1 - drop_index;
    for (std::size_t index = 0; index < s.entries.size(); index++) {
        std::size_t high = index >> (low_bits + 1);
        std::size_t low = index & ((std::size_t{1} << low_bits) - 1);
        out.entries[(high << low_bits) | low] += s.entries[index];
    }
    return out;
}

NegativityReport negativity_report(const Scheme &s, double tol) {
    NegativityReport r{{}, std::numeric_limits<double>::infinity(), "", false};
    for (std::size_t index = 0; index < s.entries.size(); index++) {
        double v = s.entries[index];
        if (v < r.min_entry) {
            r.min_entry = v;
            r.min_outcomes = outcome_string(index, s.size());
        }
        if (v < -tol) {
            r.negative_entries.push_back({outcome_string(index, s.size()), v});
        }
    }
    r.nonclassical = r.min_entry < -tol;
    return r;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::size_t resolve_term(std::string_view term, const std::vector<ObservableSpec> &observables) {
    for (std::size_t k = 0; k < observables.size(); k++) {
        if (observables[k].label == term) {
            return k;
        }
    }
    if (!term.empty() && std::all_of(term.begin(), term.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        std::size_t k = std::stoul(std::string(term));
        if (k < observables.size()) {
            return k;
        }
    }
    throw InvalidInput("pattern term '" + std::string(term) + "' names no observable");
}

}  // namespace

EqualityPattern EqualityPattern::parse(std::string_view text, const std::vector<ObservableSpec> &observables) {
    EqualityPattern p;
    for (std::string_view chain_text : split(text, ',')) {
        std::vector<Literal> chain;
        for (std::string_view raw : split(chain_text, '=')) {
            std::string_view term = trim(raw);
            bool negated = false;
            while (!term.empty() && term.front() == '~') {
                negated = !negated;
                term = trim(term.substr(1));
            }
            if (term.empty()) {
                throw InvalidInput("malformed equality pattern '" + std::string(text) + "'");
            }
            chain.push_back({resolve_term(term, observables), negated});
        }
        if (chain.size() < 2) {
            throw InvalidInput("each equality chain needs at least two terms");
        }
        p.chains.push_back(std::move(chain));
    }
    return p;
}

bool EqualityPattern::matches(const Scheme &s, std::size_t index) const {
    for (const auto &chain : chains) {
        auto value = [&](const Literal &l) { return s.outcome(index, l.index) * (l.negated ? -1 : 1); };
        int first = value(chain[0]);
        for (std::size_t j = 1; j < chain.size(); j++) {
            if (value(chain[j]) != first) {
                return false;
            }
        }
    }
    return true;
}

double equality_sum(const Scheme &s, const EqualityPattern &pattern) {
    for (const auto &chain : pattern.chains) {
        for (const auto &l : chain) {
            if (l.index >= s.size()) {
                throw InvalidInput("equality pattern refers to a missing observable");
            }
        }
    }
    double total = 0;
    for (std::size_t index = 0; index < s.entries.size(); index++) {
        if (pattern.matches(s, index)) {
            total += s.entries[index];
        }
    }
    return total;
}

double equality_sum(const Scheme &s, std::string_view pattern) {
    return equality_sum(s, EqualityPattern::parse(pattern, s.observables));
}

}  // namespace pplab
