#include "susy/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "susy/engine.hpp"
#include "susy/models.hpp"
#include "susy/pauli_landau.hpp"
#include "susy/pdm.hpp"

namespace susy::cli {

namespace {

using nlohmann::json;

const std::vector<std::string> kCommands = {"catalog", "spectrum", "wavefunction", "verify", "pdm", "landau"};

std::string g12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// ---- problem names ----------------------------------------------------------------

struct Problem {
    bool is_model = false;
    Kind kind = Kind::Inverse;
    std::string model;
};

Problem resolve(const std::string& name) {
    if (name.empty()) throw config_error("a problem name is required (--problem)");
    for (const auto& m : model_names())
        if (name == m) return {true, Kind::Inverse, m};
    std::string family, base = name;
    if (const auto dot = name.find('.'); dot != std::string::npos) {
        family = name.substr(0, dot);
        base = name.substr(dot + 1);
    }
    static const std::vector<std::pair<std::string, std::string>> aliases = {
        {"pot1", "inverse"}, {"pot2", "exp"}, {"pot3", "tan"}, {"pot4", "tanh"}, {"pot5", "cotanh"}};
    for (const auto& [a, k] : aliases)
        if (base == a) base = k;
    const auto kind = kind_from_name(base);
    if (!kind) throw config_error("unknown problem '" + name + "'");
    if (!family.empty()) {
        const Family f = info(*kind).family;
        const bool ok = (family == "scalar" && f == Family::Scalar) ||
                        (family == "matrix2" && (f == Family::Matrix2Diag || f == Family::Matrix2Dual ||
                                                 f == Family::Matrix2NonDiag)) ||
                        (family == "matrix3" && f == Family::Matrix3);
        if (!ok) throw config_error("problem '" + name + "': kind '" + base + "' is not in family '" + family + "'");
    }
    return {false, *kind, {}};
}

SuperpotentialInstance instance_for(const RunConfig& c, ModelDescriptor* model_out = nullptr) {
    const Problem p = resolve(c.problem);
    if (p.is_model) {
        const ModelDescriptor m = model_by_name(p.model, c.params);
        if (model_out) *model_out = m;
        return m.instance();
    }
    return SuperpotentialInstance(p.kind, params_from_json(c.params));
}

Grid grid_for(const SuperpotentialInstance& w, const RunConfig& c, int default_m, int n_max) {
    const int m = c.grid_m > 0 ? c.grid_m : default_m;
    if (c.grid_m < 0 || c.grid_L < 0.0) throw config_error("grid: L and m must be positive");
    if (c.grid_L == 0.0) return standard_grid(w, m, n_max);
    const Domain d = natural_domain(w.kind(), w.params());
    const double a = std::isfinite(d.a) ? d.a : -c.grid_L;
    const double b = std::isfinite(d.b) ? d.b : c.grid_L;
    if (!(b > a)) throw config_error("grid: L does not reach past the finite end of the domain");
    return Grid::interior(a, b, m);
}

// ---- commands ---------------------------------------------------------------------

Artifact cmd_catalog(const RunConfig& c) {
    if (c.format == "json") {
        json rows = json::array();
        for (const auto& s : pdm_catalog()) rows.push_back(s.to_json());
        const json doc = {{"kinds", catalog_json()}, {"pdm_rows", rows}, {"models", model_names()}};
        return {doc.dump(2) + "\n"};
    }
    std::ostringstream os;
    os << "name,family,dim,shifted,domain,c_formula\n";
    static const char* families[] = {"scalar", "matrix2-diag", "matrix2-dual", "matrix2-nondiag", "matrix3"};
    static const char* shifts[] = {"kappa", "nu", "mu"};
    for (const auto& k : catalog())
        os << k.name << ',' << families[int(k.family)] << ',' << k.dim << ',' << shifts[int(k.shifted)] << ",\""
           << k.domain << "\",\"" << k.c_formula << "\"\n";
    return {os.str()};
}

Artifact cmd_spectrum(const RunConfig& c) {
    ModelDescriptor model;
    const Problem pr = resolve(c.problem);
    const SuperpotentialInstance w = instance_for(c, &model);
    if (c.n_max < 0) throw config_error("n_max must be >= 0");
    require_gate(w);
    SpectrumTable t = energy_levels(w.kind(), w.params(), c.n_max);
    const Grid g = grid_for(w, c, 4000, c.n_max);
    // matrix kinds can repeat levels; each analytic row takes the nearest of the lowest dim (n+1)
    const auto num = numeric_levels(w, g, w.dim() * (c.n_max + 1));
    std::vector<double> paired;
    for (const auto& r : t.rows)
        paired.push_back(*std::min_element(num.begin(), num.end(), [&](double a, double b) {
            return std::abs(a - r.e_analytic) < std::abs(b - r.e_analytic);
        }));
    t.attach_numeric(paired);
    if (c.format == "json") {
        json doc = t.to_json();
        doc["problem"] = c.problem;
        doc["grid"] = {{"a", g.x0 - g.h}, {"b", g.back() + g.h}, {"m", g.m}};
        doc["numeric_eigenvalues"] = num;
        if (pr.is_model) doc["model"] = model.to_json();
        return {doc.dump(2) + "\n"};
    }
    return {t.to_csv()};
}

Artifact cmd_wavefunction(const RunConfig& c) {
    const SuperpotentialInstance w = instance_for(c);
    if (c.n < 0) throw config_error("n must be >= 0");
    const Grid g = grid_for(w, c, 4000, c.n);
    const LadderProblem lp(w, g, c.n);
    const BoundState s = excited_state(lp, c.n);
    if (c.format == "json") {
        json comps = json::array();
        for (int i = 0; i < s.samples.rows(); ++i) {
            json re = json::array(), im = json::array();
            for (int j = 0; j < g.m; ++j) {
                re.push_back(s.samples(i, j).real());
                im.push_back(s.samples(i, j).imag());
            }
            comps.push_back({{"re", re}, {"im", im}});
        }
        json xs = json::array();
        for (int j = 0; j < g.m; ++j) xs.push_back(g.x(j));
        const json doc = {{"problem", c.problem}, {"n", c.n},        {"energy", s.energy},
                          {"provenance", to_string(s.provenance)}, {"x", xs}, {"components", comps}};
        return {doc.dump() + "\n"};
    }
    std::ostringstream os;
    os << "x";
    for (int i = 0; i < s.samples.rows(); ++i) os << ",re" << i + 1 << ",im" << i + 1;
    os << '\n';
    for (int j = 0; j < g.m; ++j) {
        os << g12(g.x(j));
        for (int i = 0; i < s.samples.rows(); ++i)
            os << ',' << g12(s.samples(i, j).real()) << ',' << g12(s.samples(i, j).imag());
        os << '\n';
    }
    return {os.str()};
}

struct Check {
    std::string name;
    double value;
    double tolerance;
    bool pass() const { return value <= tolerance; }
};

Artifact cmd_verify(const RunConfig& c) {
    const SuperpotentialInstance w = instance_for(c);
    const Kind k = w.kind();
    const ParamSet& p = w.params();
    const Interval iv = sample_interval(k, p);
    const Grid samples = Grid::closed(iv.lo, iv.hi, 200);
    std::vector<Check> checks;

    const GateCheck gate = check_gate(w);
    checks.push_back({"gate" + (gate.gate.empty() ? "" : " " + gate.gate) + (gate.passed ? "" : " (" + gate.inequality + ")"), gate.passed ? 0.0 : 1.0,
                      0.0});
    checks.push_back({"shape invariance", shape_invariance_residual(k, p, samples), 1e-10});

    double herm = 0.0;
    for (int j = 0; j < samples.m; ++j) {
        const Mat W = evaluate(w, samples.x(j));
        const Mat V = hat_potential(w, samples.x(j));
        herm = std::max({herm, (W - W.adjoint()).norm() / std::max(1.0, W.norm()),
                         (V - V.adjoint()).norm() / std::max(1.0, V.norm())});
    }
    checks.push_back({"hermiticity", herm, 1e-13});

    if (k == Kind::Inverse || k == Kind::Tan || k == Kind::Cotanh)
        checks.push_back({"duality", dual_factorization(k, p).residual, 1e-10});

    if (info(k).family == Family::Matrix2Diag) {
        const auto d = decomposition(w);
        std::vector<DecompositionSample> ds;
        for (int j = 0; j < samples.m; ++j) ds.push_back(decomposition_at(w, samples.x(j)));
        checks.push_back({"classifying equations", classification_residual(ds, d).max(), 1e-10});
    }

    const Grid fine = Grid::closed(iv.lo, iv.hi, 4000);
    double inter = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
        inter = std::max(inter, intertwining_residual(w, fine, random_bump_spinor(fine, w.dim(), seed)));
    checks.push_back({"intertwining", inter, 1e-6});

    Artifact a;
    for (const auto& ch : checks) a.all_pass = a.all_pass && ch.pass();
    if (c.format == "json") {
        json rows = json::array();
        for (const auto& ch : checks)
            rows.push_back({{"invariant", ch.name}, {"value", ch.value}, {"tolerance", ch.tolerance}, {"pass", ch.pass()}});
        a.text = json{{"problem", c.problem}, {"kind", info(k).name}, {"checks", rows}, {"all_pass", a.all_pass}}.dump(2) +
                 "\n";
        return a;
    }
    std::ostringstream os;
    os << "invariant,value,tolerance,pass\n";
    for (const auto& ch : checks)
        os << ch.name << ',' << g12(ch.value) << ',' << g12(ch.tolerance) << ',' << (ch.pass() ? "pass" : "FAIL") << '\n';
    a.text = os.str();
    return a;
}

Artifact cmd_pdm(const RunConfig& c) {
    if (c.row.empty()) throw config_error("a PDM row is required (--row)");
    const PdmSystem& sys = pdm_row(c.row);
    PdmParams p;
    p.l = c.l;
    for (auto it = c.params.begin(); it != c.params.end(); ++it) {
        if (!it.value().is_number()) throw config_error("parameter '" + it.key() + "' must be a number");
        if (it.key() == "alpha") p.alpha = it.value().get<double>();
        else if (it.key() == "nu") p.nu = it.value().get<double>();
        else throw config_error("pdm: unknown parameter '" + it.key() + "' (expected alpha, nu)");
    }
    NumericOptions opt;
    if (c.grid_m > 0) opt.m = c.grid_m;
    const PdmSpectrum s = pdm_spectrum(sys, p, c.n_max, opt);
    return {c.format == "json" ? s.to_json().dump(2) + "\n" : s.to_csv()};
}

Artifact cmd_landau(const RunConfig& c) {
    double B = 1.0;
    for (auto it = c.params.begin(); it != c.params.end(); ++it) {
        if (it.key() != "omega" || !it.value().is_number())
            throw config_error("landau: the only parameter is omega (the field strength B)");
        B = it.value().get<double>();
    }
    const double L = c.grid_L > 0.0 ? c.grid_L : 9.0;
    const int m = c.grid_m > 0 ? c.grid_m : 2000;
    const int k = 2 * c.n_max + 1;
    const Grid g = Grid::interior(-L, L, m);
    const auto r = landau_reduction(B, LandauSector::Cartesian, g, 0.0, c.n_max);
    const auto E = landau_spectrum(r, -L, L, m, k);
    // levels 0, 2B, 2B, 4B, 4B, ...
    auto analytic = [B](int i) { return 2.0 * B * ((i + 1) / 2); };
    if (c.format == "json") {
        json rows = json::array();
        for (int i = 0; i < k; ++i)
            rows.push_back({{"index", i}, {"E_analytic", analytic(i)}, {"E_numeric", E[i]},
                            {"multiplicity", i == 0 ? 1 : 2}});
        const auto study = residual_study(VectorPotential::constant_field(B), 2, Extension::N2, {32, 64, 128}, 6.0, 4, 7);
        return {json{{"B", B}, {"levels", rows}, {"superalgebra", to_json(study)}}.dump(2) + "\n"};
    }
    std::ostringstream os;
    os << "index,E_analytic,E_numeric,multiplicity\n";
    for (int i = 0; i < k; ++i) os << i << ',' << g12(analytic(i)) << ',' << g12(E[i]) << ',' << (i == 0 ? 1 : 2) << '\n';
    return {os.str()};
}

// ---- schema -----------------------------------------------------------------------

json schema_document() {
    const json number = {{"type", "number"}};
    json run = {
        {"type", "object"},
        {"additionalProperties", false},
        {"required", {"command"}},
        {"properties",
         {{"command", {{"enum", kCommands}}},
          {"problem", {{"type", "string"}}},
          {"row", {{"type", "string"}}},
          {"params", {{"type", "object"}, {"additionalProperties", number}}},
          {"grid",
           {{"type", "object"},
            {"additionalProperties", false},
            {"properties", {{"L", {{"type", "number"}, {"exclusiveMinimum", 0}}}, {"m", {{"type", "integer"}, {"minimum", 50}}}}}}},
          {"n_max", {{"type", "integer"}, {"minimum", 0}}},
          {"n", {{"type", "integer"}, {"minimum", 0}}},
          {"l", {{"type", "integer"}, {"minimum", 0}}},
          {"out", {{"type", "string"}}},
          {"format", {{"enum", {"csv", "json"}}}}}}};
    return {{"$schema", "https://json-schema.org/draft/2020-12/schema"},
            {"title", "susyspec run configuration"},
            {"oneOf",
             {{{"$ref", "#/$defs/run"}},
              {{"type", "object"},
               {"additionalProperties", false},
               {"required", {"runs"}},
               {"properties", {{"runs", {{"type", "array"}, {"items", {{"$ref", "#/$defs/run"}}}}}}}}}},
            {"$defs", {{"run", run}}}};
}

void expect(bool ok, const std::string& what) {
    if (!ok) throw config_error("config: " + what);
}

void validate_run(const json& j) {
    expect(j.is_object(), "a run must be a JSON object");
    static const std::vector<std::string> keys = {"command", "problem", "row", "params", "grid",
                                                  "n_max",   "n",       "l",   "out",    "format"};
    for (auto it = j.begin(); it != j.end(); ++it)
        expect(std::find(keys.begin(), keys.end(), it.key()) != keys.end(), "unknown key '" + it.key() + "'");
    expect(j.contains("command") && j["command"].is_string(), "'command' is required and must be a string");
    expect(std::find(kCommands.begin(), kCommands.end(), j["command"].get<std::string>()) != kCommands.end(),
           "unknown command '" + j["command"].get<std::string>() + "'");
    for (const char* s : {"problem", "row", "out"})
        if (j.contains(s)) expect(j[s].is_string(), std::string("'") + s + "' must be a string");
    if (j.contains("format"))
        expect(j["format"] == "csv" || j["format"] == "json", "'format' must be csv or json");
    for (const char* s : {"n_max", "n", "l"})
        if (j.contains(s))
            expect(j[s].is_number_integer() && j[s].get<long>() >= 0, std::string("'") + s + "' must be an integer >= 0");
    if (j.contains("params")) {
        expect(j["params"].is_object(), "'params' must be an object");
        for (auto it = j["params"].begin(); it != j["params"].end(); ++it)
            expect(it.value().is_number(), "parameter '" + it.key() + "' must be a number");
    }
    if (j.contains("grid")) {
        const json& g = j["grid"];
        expect(g.is_object(), "'grid' must be an object");
        for (auto it = g.begin(); it != g.end(); ++it) expect(it.key() == "L" || it.key() == "m", "unknown grid key '" + it.key() + "'");
        if (g.contains("L")) expect(g["L"].is_number() && g["L"].get<double>() > 0.0, "grid.L must be a number > 0");
        if (g.contains("m")) expect(g["m"].is_number_integer() && g["m"].get<long>() >= 50, "grid.m must be an integer >= 50");
    }
}

} // namespace

RunConfig RunConfig::from_json(const json& j) {
    validate_run(j);
    RunConfig c;
    c.command = j["command"];
    c.problem = j.value("problem", "");
    c.row = j.value("row", "");
    if (j.contains("params")) c.params = j["params"];
    if (j.contains("grid")) {
        c.grid_L = j["grid"].value("L", 0.0);
        c.grid_m = j["grid"].value("m", 0);
    }
    c.n_max = j.value("n_max", 3);
    c.n = j.value("n", 0);
    c.l = j.value("l", 0);
    c.out = j.value("out", "");
    c.format = j.value("format", "csv");
    return c;
}

json RunConfig::to_json() const {
    json j = {{"command", command}, {"params", params}, {"n_max", n_max}, {"n", n}, {"l", l}, {"format", format}};
    if (!problem.empty()) j["problem"] = problem;
    if (!row.empty()) j["row"] = row;
    json g = json::object();
    if (grid_L > 0.0) g["L"] = grid_L;
    if (grid_m > 0) g["m"] = grid_m;
    if (!g.empty()) j["grid"] = g;
    if (!out.empty()) j["out"] = out;
    return j;
}

void validate(const json& doc) {
    if (doc.is_object() && doc.contains("runs")) {
        expect(doc.size() == 1, "a batch document holds only 'runs'");
        expect(doc["runs"].is_array() && !doc["runs"].empty(), "'runs' must be a non-empty array");
        for (const auto& r : doc["runs"]) validate_run(r);
        return;
    }
    validate_run(doc);
}

std::vector<RunConfig> parse_document(const json& doc) {
    validate(doc);
    std::vector<RunConfig> out;
    if (doc.contains("runs"))
        for (const auto& r : doc["runs"]) out.push_back(RunConfig::from_json(r));
    else
        out.push_back(RunConfig::from_json(doc));
    return out;
}

Artifact run(const RunConfig& c) {
    if (c.format != "csv" && c.format != "json") throw config_error("format must be csv or json");
    if (c.command == "catalog") return cmd_catalog(c);
    if (c.command == "spectrum") return cmd_spectrum(c);
    if (c.command == "wavefunction") return cmd_wavefunction(c);
    if (c.command == "verify") return cmd_verify(c);
    if (c.command == "pdm") return cmd_pdm(c);
    if (c.command == "landau") return cmd_landau(c);
    throw config_error("unknown command '" + c.command + "'");
}

int exit_code(const std::exception& e) {
    if (const auto* err = dynamic_cast<const Error*>(&e)) {
        switch (err->kind()) {
        case ErrorKind::Gate: return 3;
        case ErrorKind::NonConvergence: return 4;
        case ErrorKind::InvalidConfig:
        case ErrorKind::Domain: return 2;
        }
    }
    if (dynamic_cast<const nlohmann::json::exception*>(&e)) return 2;
    return 1;
}

int worker_cap() {
    if (const char* s = std::getenv("SUSYSPEC_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(s, &end, 10);
        if (end != s && *end == '\0' && v >= 1) return int(v);
        throw config_error("SUSYSPEC_WORKERS must be a positive integer");
    }
    return int(std::max(1u, std::thread::hardware_concurrency()));
}

int run_batch(const std::vector<RunConfig>& runs, int workers, std::ostream& err) {
    std::vector<std::string> outs;
    for (const auto& r : runs) {
        if (r.out.empty()) throw config_error("config: every run of a batch needs its own 'out' file");
        if (std::find(outs.begin(), outs.end(), r.out) != outs.end())
            throw config_error("config: two runs write to '" + r.out + "'");
        outs.push_back(r.out);
    }
    std::vector<int> status(runs.size(), 0);
    std::vector<std::string> messages(runs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < runs.size(); i = next++) {
            try {
                const Artifact a = run(runs[i]);
                std::ofstream f(runs[i].out, std::ios::binary);
                if (!f) throw config_error("cannot write '" + runs[i].out + "'");
                f << a.text;
                if (!a.all_pass) status[i] = 1;
            } catch (const std::exception& e) {
                status[i] = exit_code(e);
                messages[i] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    const int n = std::max(1, std::min<int>(workers, int(runs.size())));
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    int first = 0;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (!messages[i].empty()) err << "run " << i << " (" << runs[i].command << "): " << messages[i] << '\n';
        if (first == 0) first = status[i];
    }
    return first;
}

const json& config_schema() {
    static const json s = schema_document();
    return s;
}

} // namespace susy::cli
