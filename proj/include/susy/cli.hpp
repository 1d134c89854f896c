#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace susy::cli {

// One run of the command-line tool. Params stay as raw JSON because the named models take
// keys (p, j) that are not catalog parameters.
struct RunConfig {
    std::string command;   // catalog, spectrum, wavefunction, verify, pdm, landau
    std::string problem;   // catalog kind ("pot1", "matrix2.tan", "coulomb") or model name
    std::string row;       // PDM row id
    nlohmann::json params = nlohmann::json::object();
    double grid_L = 0.0;   // 0: chosen from the problem
    int grid_m = 0;        // 0: command default
    int n_max = 3;
    int n = 0;             // level index for wavefunction
    int l = 0;
    std::string out;       // empty: standard output
    std::string format = "csv";

    static RunConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

// A config document is either one run or {"runs": [...]}.
std::vector<RunConfig> parse_document(const nlohmann::json& doc);

struct Artifact {
    std::string text;
    bool all_pass = true; // verify only
};

Artifact run(const RunConfig& config);

// Exit status for an exception escaping run(): 2 invalid config, 3 gate rejection,
// 4 non-convergence, 1 anything else.
int exit_code(const std::exception& e);

// Runs concurrently up to the worker cap, each writing its own file. Returns the first
// nonzero status in run order, or 0.
int run_batch(const std::vector<RunConfig>& runs, int workers, std::ostream& err);

// Worker cap from SUSYSPEC_WORKERS, defaulting to the hardware concurrency.
int worker_cap();

// JSON schema of the config document.
const nlohmann::json& config_schema();

// Validates a document against the schema's shape (keys and types); throws config_error.
void validate(const nlohmann::json& doc);

} // namespace susy::cli
