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


#include "pplab/cli.h"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>

#include "pplab/errors.h"
#include "pplab/json_io.h"

namespace pplab {

namespace {

double parse_real(std::string_view text, std::string_view what) {
    std::string_view t = text;
    while (!t.empty() && t.front() == ' ') {
        t.remove_prefix(1);
    }
    while (!t.empty() && t.back() == ' ') {
        t.remove_suffix(1);
    }
    if (!t.empty() && t.front() == '+') {
        t.remove_prefix(1);
    }
    double v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) {
        throw InvalidInput(std::string(what) + ": '" + std::string(text) + "' is not a finite number");
    }
    return v;
}

/// Radians only; anything carrying a degree marker is refused.
double parse_angle(std::string_view text, std::string_view what) {
    for (std::string_view marker : {"deg", "DEG", "Deg", "\xC2\xB0", "d"}) {
        if (text.find(marker) != std::string_view::npos) {
            throw InvalidInput(std::string(what) + ": angles are given in radians; degree input '" +
                               std::string(text) + "' is not accepted");
        }
    }
    return parse_real(text, what);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

Vec3 parse_vec3(std::string_view text, std::string_view what) {
    static const std::map<std::string_view, Vec3, std::less<>> named{
        {"x", {1, 0, 0}}, {"+x", {1, 0, 0}}, {"-x", {-1, 0, 0}}, {"y", {0, 1, 0}}, {"+y", {0, 1, 0}},
        {"-y", {0, -1, 0}}, {"z", {0, 0, 1}}, {"+z", {0, 0, 1}}, {"-z", {0, 0, -1}},
    };
    if (auto it = named.find(text); it != named.end()) {
        return it->second;
    }
    auto parts = split(text, ',');
    if (parts.size() != 3) {
        throw InvalidInput(std::string(what) + ": expected X,Y,Z or one of x, y, z, -x, -y, -z; got '" +
                           std::string(text) + "'");
    }
    return {parse_real(parts[0], what), parse_real(parts[1], what), parse_real(parts[2], what)};
}

UnitVector3 parse_axis(std::string_view text, std::string_view what) {
    return UnitVector3::normalized(parse_vec3(text, what));
}

/// "AXIS" or "AXIS@QUBIT".
struct QubitAxis {
    UnitVector3 axis;
    std::size_t qubit;
};

QubitAxis parse_qubit_axis(std::string_view text, std::string_view what) {
    std::size_t at = text.find('@');
    std::size_t qubit = 0;
    if (at != std::string_view::npos) {
        std::string_view q = text.substr(at + 1);
        auto [ptr, ec] = std::from_chars(q.data(), q.data() + q.size(), qubit);
        if (q.empty() || ec != std::errc() || ptr != q.data() + q.size()) {
            throw InvalidInput(std::string(what) + ": bad qubit index in '" + std::string(text) + "'");
        }
        text = text.substr(0, at);
    }
    return {parse_axis(text, what), qubit};
}

std::vector<double> parse_real_list(std::string_view text, std::string_view what) {
    std::vector<double> out;
    for (std::string_view part : split(text, ',')) {
        out.push_back(parse_real(part, what));
    }
    return out;
}

double verdict_tolerance() {
    const char *env = std::getenv("PPLAB_TOL");
    if (env == nullptr || *env == '\0') {
        return kVerdictTol;
    }
    double tol = parse_real(env, "PPLAB_TOL");
    if (tol < 0) {
        throw InvalidInput("PPLAB_TOL must be non-negative");
    }
    return tol;
}

struct StateFlags {
    std::string werner;
    std::string bloch;
    std::string file;

    void attach(CLI::App *cmd) {
        cmd->add_option("--werner", werner, "Werner state (1 - eta sigma.sigma)/4 with this eta");
        cmd->add_option("--bloch", bloch, "single-qubit state with Bloch vector X,Y,Z");
        cmd->add_option("--state", file, "JSON state file {\"dim\", \"re\", \"im\"}");
    }

    std::size_t count() const {
        return !werner.empty() + !bloch.empty() + !file.empty();
    }

    std::optional<DensityMatrix> load_optional() const {
        if (count() > 1) {
            throw InvalidInput("give exactly one of --werner, --bloch, --state");
        }
        if (!werner.empty()) {
            return werner_state(parse_real(werner, "--werner"));
        }
        if (!bloch.empty()) {
            return bloch_state(BlochVector(parse_vec3(bloch, "--bloch")));
        }
        if (!file.empty()) {
            return load_state_file(file);
        }
        return std::nullopt;
    }

    DensityMatrix load() const {
        auto s = load_optional();
        if (!s) {
            throw InvalidInput("a state is required: give one of --werner, --bloch, --state");
        }
        return *s;
    }
};

/// Projectors onto the + eigenspace of sigma.axis on the given qubit of an n-qubit register.
std::vector<Projector> qubit_projectors(const std::vector<QubitAxis> &axes, std::size_t qubits) {
    std::vector<Projector> out;
    for (const QubitAxis &qa : axes) {
        if (qa.qubit >= qubits) {
            throw InvalidInput("projector qubit index out of range");
        }
        std::vector<ComplexMatrix> parts;
        for (std::size_t q = 0; q < qubits; q++) {
            parts.push_back(q == qa.qubit ? qubit_projector(qa.axis, +1).matrix() : ComplexMatrix::identity(2));
        }
        out.emplace_back(tensor_product(parts));
    }
    return out;
}

std::vector<QubitAxis> parse_axes(const std::vector<std::string> &specs, std::string_view what) {
    std::vector<QubitAxis> out;
    for (const std::string &s : specs) {
        out.push_back(parse_qubit_axis(s, what));
    }
    return out;
}

std::size_t qubits_needed(const std::vector<QubitAxis> &axes, std::size_t requested) {
    std::size_t n = std::max<std::size_t>(requested, 1);
    for (const QubitAxis &a : axes) {
        n = std::max(n, a.qubit + 1);
    }
    if (n > 6) {
        throw InvalidInput("at most 6 qubits are supported");
    }
    return n;
}

Json validated(const TestReport &r) {
    Json j = to_json(r);
    double again = statistic_from_json(j);
    if (std::abs(again - r.statistic) > 1e-10 * std::max(1.0, std::abs(r.statistic))) {
        throw NumericalError("report self-check failed: serialized statistic does not reproduce");
    }
    return j;
}

struct TestFlags {
    std::string name;
    StateFlags state;
    std::string alpha;
    std::string alpha_scan;
    std::string a1 = "z";
    std::string a2 = "x";
    std::string a3 = "x";
    std::string b1;
    std::string b2;
    std::string rule = "default";
};

const std::map<std::string, double, std::less<>> &default_alphas() {
    static const std::map<std::string, double, std::less<>> m{
        {"ent-linear-1", 2 * std::numbers::pi / 3}, {"ent-linear-2", std::acos(-7.0 / 9.0)},
        {"ent-nl-1", std::numbers::pi / 2},        {"ent-nl-2", std::acos(-1.0 / 3.0)},
        {"ent-nl-3", std::acos(-79.0 / 81.0)},     {"discord", 3 * std::numbers::pi / 4},
    };
    return m;
}

AzimuthRule parse_rule(std::string_view s) {
    if (s == "default") {
        return AzimuthRule::kDefault;
    }
    if (s == "rotated") {
        return AzimuthRule::kRotated;
    }
    throw InvalidInput("--rule must be 'default' or 'rotated'");
}

std::vector<double> alpha_grid(std::string_view spec) {
    auto parts = split(spec, ':');
    if (parts.size() != 3) {
        throw InvalidInput("--alpha-scan expects START:STOP:STEP in radians");
    }
    double a = parse_angle(parts[0], "--alpha-scan");
    double b = parse_angle(parts[1], "--alpha-scan");
    double s = parse_angle(parts[2], "--alpha-scan");
    if (!(s > 0) || b < a) {
        throw InvalidInput("--alpha-scan needs STEP > 0 and STOP >= START");
    }
    std::vector<double> out;
    for (std::size_t k = 0;; k++) {
        double v = a + static_cast<double>(k) * s;
        if (v > b + 1e-12 * std::max(1.0, std::abs(b))) {
            break;
        }
        out.push_back(v);
        if (out.size() > 100000) {
            throw InvalidInput("--alpha-scan grid has too many points");
        }
    }
    return out;
}

Json run_test(const TestFlags &f) {
    const double tol = verdict_tolerance();
    const std::string &name = f.name;
    const bool uses_alpha = default_alphas().contains(name);
    if (!uses_alpha && (!f.alpha.empty() || !f.alpha_scan.empty())) {
        throw InvalidInput("test " + name + " takes no angle");
    }
    if (!f.alpha.empty() && !f.alpha_scan.empty()) {
        throw InvalidInput("give at most one of --alpha and --alpha-scan");
    }
    UnitVector3 a1 = parse_axis(f.a1, "--a1");
    UnitVector3 a2 = parse_axis(f.a2, "--a2");
    UnitVector3 a3 = parse_axis(f.a3, "--a3");
    AzimuthRule rule = parse_rule(f.rule);

    if (name == "boolean-indep") {
        if (f.state.count() != 0) {
            throw InvalidInput("boolean-indep is state independent and takes no state");
        }
        return validated(boolean_state_indep_test(a1, a2, tol));
    }
    const DensityMatrix state = f.state.load();
    if (name == "coherence") {
        return validated(coherence_test(state, a1, a2, tol));
    }
    if (name == "boolean-dep") {
        return validated(boolean_state_dep_test(state, a1, a2, tol));
    }
    if (name == "distributivity") {
        return validated(distributivity_test(state, a1, a2, a3, tol));
    }
    if (name == "chsh") {
        return validated(chsh_test(state, default_chsh_observables(), tol));
    }
    if (!uses_alpha) {
        throw InvalidInput("unknown test '" + name + "'");
    }

    std::function<TestReport(double)> run;
    if (name == "discord") {
        DiscordOptions opt;
        opt.rule = rule;
        if (!f.b1.empty() || !f.b2.empty()) {
            if (f.b1.empty() || f.b2.empty()) {
                throw InvalidInput("give both --b1 and --b2");
            }
            opt.b_axes = std::array<UnitVector3, 2>{parse_axis(f.b1, "--b1"), parse_axis(f.b2, "--b2")};
        }
        run = [&, opt](double alpha) { return discord_test(state, alpha, tol, opt); };
    } else if (name.starts_with("ent-linear-")) {
        LinearVariant v = name == "ent-linear-1" ? LinearVariant::kI : LinearVariant::kII;
        run = [&, v](double alpha) {
            return linear_ent_test(state, make_entanglement_geometry(alpha, standard_frame(), standard_frame(), rule),
                                   v, tol);
        };
    } else {
        NonlinearVariant v = name == "ent-nl-1"   ? NonlinearVariant::kI
                             : name == "ent-nl-2" ? NonlinearVariant::kII
                                                  : NonlinearVariant::kIII;
        run = [&, v](double alpha) {
            return nonlinear_ent_test(
                state, make_entanglement_geometry(alpha, standard_frame(), standard_frame(), rule), v, tol);
        };
    }
    if (!f.alpha_scan.empty()) {
        Json out = Json::array();
        for (double alpha : alpha_grid(f.alpha_scan)) {
            out.push_back(validated(run(alpha)));
        }
        return out;
    }
    double alpha = f.alpha.empty() ? default_alphas().find(name)->second : parse_angle(f.alpha, "--alpha");
    return validated(run(alpha));
}

struct SchemeFlags {
    StateFlags state;
    std::vector<std::string> obs;
    std::string prescription = "unit";
    std::string pattern;
};

Json run_scheme(const SchemeFlags &f) {
    const DensityMatrix state = f.state.load();
    if (f.obs.empty()) {
        throw InvalidInput("give at least one --obs AXIS[@QUBIT]");
    }
    auto axes = parse_axes(f.obs, "--obs");
    std::vector<ObservableSpec> observables;
    for (std::size_t i = 0; i < axes.size(); i++) {
        observables.push_back(ObservableSpec::qubit(axes[i].axis, axes[i].qubit, "O" + std::to_string(i + 1)));
    }
    Scheme s = build_scheme(state, observables, parse_prescription(f.prescription));
    Json out = {{"scheme", to_json(s)}, {"total", s.total()}, {"negativity", to_json(negativity_report(s))}};
    if (!f.pattern.empty()) {
        out["pattern"] = f.pattern;
        out["equality_sum"] = equality_sum(s, f.pattern);
    }
    return out;
}

struct PpFlags {
    std::vector<std::string> proj;
    std::size_t qubits = 0;
    std::string prescription = "unit";
};

Json run_pp(const PpFlags &f) {
    if (f.proj.empty()) {
        throw InvalidInput("give at least one --proj AXIS[@QUBIT]");
    }
    auto axes = parse_axes(f.proj, "--proj");
    std::vector<Projector> ps = qubit_projectors(axes, qubits_needed(axes, f.qubits));
    Prescription p = parse_prescription(f.prescription);
    PseudoProjection pp = p == Prescription::kSymmetrized ? symmetrized_pp(ps) : unit_pp(ps);
    EigenCertificate cert = min_eigen_certificate(pp);
    Json out = to_json(cert, hermitian_eigen(pp.matrix).values);
    out["prescription"] = prescription_name(pp.prescription);
    out["negative"] = cert.min_eigenvalue < -kStructuralTol;
    out["matrix"] = matrix_to_json(pp.matrix);
    return out;
}

struct WeakFlags {
    std::string pre;
    std::string post;
    std::string op;
    std::vector<std::string> proj;
};

Json run_weak(const WeakFlags &f) {
    if (f.pre.empty() || f.post.empty()) {
        throw InvalidInput("weak value needs --pre and --post Bloch vectors");
    }
    if (f.op.empty() == f.proj.empty()) {
        throw InvalidInput("give exactly one of --op X,Y,Z and --proj AXIS (repeatable)");
    }
    DensityMatrix pre = bloch_state(BlochVector(parse_vec3(f.pre, "--pre")));
    DensityMatrix post = bloch_state(BlochVector(parse_vec3(f.post, "--post")));
    if (!f.op.empty()) {
        return to_json(weak_value(sigma_dot(parse_vec3(f.op, "--op")), pre, post, "sigma." + f.op));
    }
    std::vector<ComplexMatrix> mats;
    std::string label;
    for (const std::string &s : f.proj) {
        mats.push_back(qubit_projector(parse_axis(s, "--proj"), +1).matrix());
        label += (label.empty() ? "pi(" : " pi(") + s + ")";
    }
    return to_json(weak_value(ordered_product(mats), pre, post, label));
}

struct PointerFlags {
    StateFlags state;
    std::vector<std::string> proj;
    std::string post = "0,0,0";
    double sigma = 1.0;
    double g = 0.05;
    double t = 1.0;
    std::size_t grid_points = 0;
    double grid_halfwidth = 8.0;
    bool no_convergence = false;
    std::string couplings;
};

Json run_pointer(const PointerFlags &f) {
    const DensityMatrix state = f.state.load();
    if (f.proj.empty()) {
        throw InvalidInput("give at least one --proj AXIS");
    }
    std::vector<Projector> ps;
    for (const std::string &s : f.proj) {
        ps.push_back(qubit_projector(parse_axis(s, "--proj"), +1));
    }
    DensityMatrix post = bloch_state(BlochVector(parse_vec3(f.post, "--post")));
    PointerConfig cfg;
    cfg.sigma = f.sigma;
    cfg.g = f.g;
    cfg.t = f.t;
    cfg.grid_points = f.grid_points;
    cfg.grid_halfwidth = f.grid_halfwidth;
    cfg.estimate_convergence = !f.no_convergence;
    cfg.validate();
    Json out = Json::object();
    if (ps.size() <= kMaxPointers || f.couplings.empty()) {
        out["result"] = to_json(simulate_pointers(state, ps, post, cfg));
    }
    if (!f.couplings.empty()) {
        out["proportionality"] = to_json(proportionality_check(state, ps, post, cfg, parse_real_list(f.couplings, "--couplings")));
    }
    return out;
}

struct GameFlags {
    std::string bloch;
    std::string axis = "z";
    std::string omega = "1";
    std::string t_min = "0";
    std::string t_max;
    std::size_t t_steps = 17;
    std::string theta = "0";
    std::size_t scan = 0;
};

Json run_game(const GameFlags &f) {
    if (f.bloch.empty()) {
        throw InvalidInput("game run needs --bloch X,Y,Z");
    }
    double t_min = parse_angle(f.t_min, "--t-min");
    double t_max = f.t_max.empty() ? 2 * std::numbers::pi : parse_angle(f.t_max, "--t-max");
    double omega = parse_real(f.omega, "--omega");
    double theta = parse_angle(f.theta, "--theta");
    std::vector<double> grid = time_grid(t_min, t_max, f.t_steps);
    Trajectory tr = evaluate_strategy(BlochVector(parse_vec3(f.bloch, "--bloch")), parse_axis(f.axis, "--axis"),
                                      omega, grid, theta);
    Json out = to_json(tr);
    if (f.scan != 0) {
        StrategyCandidate c = scan_strategies(f.scan, omega, grid, theta);
        out["scan"] = {{"bloch", {c.bloch.x, c.bloch.y, c.bloch.z}},
                       {"axis", {c.axis.x, c.axis.y, c.axis.z}},
                       {"t", c.t},
                       {"score", c.score}};
    }
    return out;
}

void emit(const Json &doc, const std::string &path, int indent, std::ostream &out) {
    std::string text = doc.dump(indent);
    if (path.empty()) {
        out << text << '\n';
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw InvalidInput("cannot write " + path);
    }
    file << text << '\n';
}

}  // namespace

int parse_and_dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Pseudo-projection toolkit: schemes, weak values and nonclassicality tests", "pplab"};
    app.require_subcommand(1);
    std::string out_path;
    int indent = 2;
    app.add_option("--out", out_path, "write JSON here instead of stdout");
    app.add_option("--json-indent", indent, "JSON indentation; negative for a single line");

    CLI::App *scheme = app.add_subcommand("scheme", "joint pseudo-probability tables")->require_subcommand(1);
    SchemeFlags sf;
    CLI::App *scheme_build = scheme->add_subcommand("build", "build a scheme for qubit observables sigma.n");
    sf.state.attach(scheme_build);
    scheme_build->add_option("--obs", sf.obs, "observable axis, AXIS[@QUBIT]; repeat per observable");
    scheme_build->add_option("--prescription", sf.prescription, "unit or symmetrized");
    scheme_build->add_option("--pattern", sf.pattern, "equality pattern over O1, O2, ... e.g. O1=~O2");

    CLI::App *pp = app.add_subcommand("pp", "pseudo-projection operators")->require_subcommand(1);
    PpFlags pf;
    CLI::App *pp_eig = pp->add_subcommand("eig", "spectrum and minimum-eigenvalue witness");
    pp_eig->add_option("--proj", pf.proj, "projector onto sigma.n = +1, AXIS[@QUBIT]; repeatable");
    pp_eig->add_option("--qubits", pf.qubits, "register size (default: smallest that fits)");
    pp_eig->add_option("--prescription", pf.prescription, "unit or symmetrized");

    CLI::App *weak = app.add_subcommand("weak", "weak values")->require_subcommand(1);
    WeakFlags wf;
    CLI::App *weak_value_cmd = weak->add_subcommand("value", "qubit weak value Tr(post A pre)/Tr(post pre)");
    weak_value_cmd->add_option("--pre", wf.pre, "pre-selected Bloch vector");
    weak_value_cmd->add_option("--post", wf.post, "post-selected Bloch vector");
    weak_value_cmd->add_option("--op", wf.op, "operator sigma.v for a real vector V");
    weak_value_cmd->add_option("--proj", wf.proj, "product of projectors onto sigma.n = +1; repeatable");

    CLI::App *test = app.add_subcommand("test", "nonclassicality tests");
    TestFlags tf;
    test->add_option("name", tf.name,
                     "coherence | boolean-dep | boolean-indep | distributivity | chsh | ent-linear-1 | "
                     "ent-linear-2 | ent-nl-1 | ent-nl-2 | ent-nl-3 | discord")
        ->required();
    tf.state.attach(test);
    test->add_option("--alpha", tf.alpha, "doublet angle in radians");
    test->add_option("--alpha-scan", tf.alpha_scan, "START:STOP:STEP in radians; one report per point");
    test->add_option("--a1", tf.a1, "first axis (default z)");
    test->add_option("--a2", tf.a2, "second axis (default x)");
    test->add_option("--a3", tf.a3, "third axis (default x)");
    test->add_option("--b1", tf.b1, "discord: first axis on qubit 2");
    test->add_option("--b2", tf.b2, "discord: second axis on qubit 2");
    test->add_option("--rule", tf.rule, "azimuth rule for perpendicular directions: default or rotated");

    CLI::App *pointer = app.add_subcommand("pointer", "weak-measurement pointer models")->require_subcommand(1);
    PointerFlags ptf;
    CLI::App *pointer_sim = pointer->add_subcommand("sim", "simulate N Gaussian pointers on a qubit");
    ptf.state.attach(pointer_sim);
    pointer_sim->add_option("--proj", ptf.proj, "coupled projector onto sigma.n = +1; repeat per pointer");
    pointer_sim->add_option("--post", ptf.post, "post-selected Bloch vector (default 0,0,0)");
    pointer_sim->add_option("--sigma", ptf.sigma, "pointer width");
    pointer_sim->add_option("--g", ptf.g, "coupling");
    pointer_sim->add_option("--t", ptf.t, "interaction time");
    pointer_sim->add_option("--grid-points", ptf.grid_points, "points per pointer axis (power of two)");
    pointer_sim->add_option("--grid-halfwidth", ptf.grid_halfwidth, "grid half-width in units of sigma");
    pointer_sim->add_flag("--no-convergence", ptf.no_convergence, "skip the grid-refinement estimate");
    pointer_sim->add_option("--couplings", ptf.couplings, "G1,G2,G3,... fit correlation against (g t)^N");

    CLI::App *game = app.add_subcommand("game", "pseudo-probability game")->require_subcommand(1);
    GameFlags gf;
    CLI::App *game_run = game->add_subcommand("run", "score a strategy over a time window");
    game_run->add_option("--bloch", gf.bloch, "initial Bloch vector");
    game_run->add_option("--axis", gf.axis, "Hamiltonian axis (default z)");
    game_run->add_option("--omega", gf.omega, "Larmor frequency");
    game_run->add_option("--t-min", gf.t_min, "window start (default 0)");
    game_run->add_option("--t-max", gf.t_max, "window end (default 2 pi)");
    game_run->add_option("--t-steps", gf.t_steps, "time points (default 17)");
    game_run->add_option("--theta", gf.theta, "observable rotation in radians");
    game_run->add_option("--scan", gf.scan, "also brute-force scan strategies at this resolution");

    for (CLI::App *sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (CLI::App *leaf : sub->get_subcommands({})) {
            leaf->fallthrough();
        }
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "pplab: " << e.what() << "\n\n" << app.help();
        return kExitInvalidInput;
    }

    try {
        Json doc;
        if (scheme_build->parsed()) {
            doc = run_scheme(sf);
        } else if (pp_eig->parsed()) {
            doc = run_pp(pf);
        } else if (weak_value_cmd->parsed()) {
            doc = run_weak(wf);
        } else if (test->parsed()) {
            doc = run_test(tf);
        } else if (pointer_sim->parsed()) {
            doc = run_pointer(ptf);
        } else if (game_run->parsed()) {
            doc = run_game(gf);
        } else {
            err << "pplab: unknown command\n\n" << app.help();
            return kExitInvalidInput;
        }
        emit(doc, out_path, indent < 0 ? -1 : indent, out);
        return kExitOk;
    } catch (const InvalidInput &e) {
        err << "pplab: invalid input: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const ResourceError &e) {
        err << "pplab: resource limit: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const NumericalError &e) {
        err << "pplab: numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const nlohmann::json::exception &e) {
        err << "pplab: invalid input: " << e.what() << '\n';
        return kExitInvalidInput;
    }
}

}  // namespace pplab
