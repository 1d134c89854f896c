// susyspec: spectra, wavefunctions and invariant checks for shape-invariant problems.
//
//   susyspec catalog [--format json]
//   susyspec spectrum --problem matrix2.pot1 --nu 1 --mu 0 --omega 1 --n-max 3
//   susyspec wavefunction --problem inverse --nu 2 --n 1
//   susyspec verify --problem matrix2.tan
//   susyspec pdm --row t2.10 --alpha 13 --nu 0 --l 0 --n-max 2
//   susyspec landau --omega 1 --n-max 3
//   susyspec run --config batch.json
//
// Every subcommand also takes --config FILE; flags override values from the file.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "susy/cli.hpp"
#include "susy/types.hpp"

namespace {

using nlohmann::json;

struct Flags {
    std::string config;
    std::optional<std::string> problem, row, out, format;
    std::optional<double> nu, mu, omega, lambda, kappa, alpha, grid_L;
    std::optional<int> l, n_max, n, grid_m;
};

void add_flags(CLI::App* sub, Flags& f, bool with_config) {
    if (with_config) sub->add_option("--config", f.config, "JSON run configuration")->check(CLI::ExistingFile);
    sub->add_option("--problem", f.problem, "catalog kind (e.g. matrix2.pot1, tan, coulomb) or model name");
    sub->add_option("--row", f.row, "PDM row id, t1.1 .. t2.10");
    sub->add_option("--nu", f.nu);
    sub->add_option("--mu", f.mu);
    sub->add_option("--omega", f.omega);
    sub->add_option("--lambda", f.lambda);
    sub->add_option("--kappa", f.kappa);
    sub->add_option("--alpha", f.alpha);
    sub->add_option("--l", f.l, "angular momentum (pdm)");
    sub->add_option("--n-max", f.n_max, "highest level index");
    sub->add_option("--n", f.n, "level index (wavefunction)");
    sub->add_option("--grid-L", f.grid_L, "half-width kept on infinite sides");
    sub->add_option("--grid-m", f.grid_m, "grid nodes");
    sub->add_option("--out", f.out, "output file (default: standard output)");
    sub->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

json load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw susy::config_error("cannot read '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw susy::config_error("'" + path + "' is not valid JSON: " + e.what());
    }
}

json merged(const std::string& command, const Flags& f) {
    json j = f.config.empty() ? json::object() : load(f.config);
    if (j.contains("runs")) throw susy::config_error("batch documents run with 'susyspec run --config'");
    if (j.contains("command") && j["command"] != command)
        throw susy::config_error("config is for '" + j["command"].get<std::string>() + "', not '" + command + "'");
    j["command"] = command;
    if (f.problem) j["problem"] = *f.problem;
    if (f.row) j["row"] = *f.row;
    if (f.out) j["out"] = *f.out;
    if (f.format) j["format"] = *f.format;
    if (f.l) j["l"] = *f.l;
    if (f.n_max) j["n_max"] = *f.n_max;
    if (f.n) j["n"] = *f.n;
    if (f.grid_L) j["grid"]["L"] = *f.grid_L;
    if (f.grid_m) j["grid"]["m"] = *f.grid_m;
    const std::pair<const char*, const std::optional<double>*> params[] = {
        {"nu", &f.nu}, {"mu", &f.mu}, {"omega", &f.omega}, {"lambda", &f.lambda}, {"kappa", &f.kappa}, {"alpha", &f.alpha}};
    for (const auto& [name, v] : params)
        if (*v) j["params"][name] = **v;
    return j;
}

int emit(const susy::cli::RunConfig& rc) {
    const auto a = susy::cli::run(rc);
    if (rc.out.empty()) {
        std::cout << a.text;
    } else {
        std::ofstream f(rc.out, std::ios::binary);
        if (!f) throw susy::config_error("cannot write '" + rc.out + "'");
        f << a.text;
    }
    return a.all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shape-invariant supersymmetric quantum mechanics: spectra and checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "susyspec 1.0");

    Flags flags;
    bool print_schema = false;
    app.add_flag("--schema", print_schema, "print the JSON schema of the config document and exit");

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"catalog", "list superpotential kinds, PDM rows and models"},
        {"spectrum", "analytic levels with an eigensolver cross-check"},
        {"wavefunction", "ladder-built bound state on a grid"},
        {"verify", "invariant suite for one kind"},
        {"pdm", "position-dependent-mass levels with a numeric cross-check"},
        {"landau", "Landau levels and the superalgebra residuals"}};
    for (const auto& [name, help] : commands) add_flags(app.add_subcommand(name, help), flags, true);
    CLI::App* batch = app.add_subcommand("run", "run a config document, possibly a batch");
    std::string batch_path;
    batch->add_option("--config", batch_path, "JSON document")->required()->check(CLI::ExistingFile);

    // --schema works without a subcommand
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--schema") {
            std::cout << susy::cli::config_schema().dump(2) << '\n';
            return 0;
        }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (batch->parsed()) {
            const auto runs = susy::cli::parse_document(load(batch_path));
            if (runs.size() == 1 && runs[0].out.empty()) return emit(runs[0]);
            return susy::cli::run_batch(runs, susy::cli::worker_cap(), std::cerr);
        }
        for (const auto& [name, help] : commands) {
            (void)help;
            if (app.got_subcommand(name)) {
                const json doc = merged(name, flags);
                return emit(susy::cli::RunConfig::from_json(doc));
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return susy::cli::exit_code(e);
    }
    return 2;
}
