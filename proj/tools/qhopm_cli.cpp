// Copyright 2026 The QHOPM Authors
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
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qhopm/circuits.hpp"
#include "qhopm/errors.hpp"
#include "qhopm/experiment.hpp"

namespace {

using namespace qhopm;

struct Overrides {
    std::string config;
    std::vector<std::string> targets;
    std::optional<std::size_t> inits;
    std::optional<std::uint64_t> seed;
    std::optional<double> epsilon;
    std::optional<std::size_t> max_iter;
    std::optional<std::size_t> min_iter;
    std::optional<std::string> variant;
    std::optional<double> beta;
    std::optional<std::string> mode;
    std::optional<std::uint64_t> shots;
    std::vector<double> noise_p;
    std::optional<std::size_t> depth;
    bool mitigate = false;
    std::string mitigate_with;
    bool no_tomography_noise = false;
    std::optional<std::size_t> restarts;
    std::optional<std::string> out_csv;
    std::optional<std::string> out_json;
    std::optional<int> jobs;
};

void add_common(CLI::App *cmd, Overrides &o) {
    cmd->add_option("--config", o.config, "JSON config file");
    cmd->add_option("--target", o.targets, "FAMILY:n[:seed], repeatable");
    cmd->add_option("--inits", o.inits, "Random initializations per target");
    cmd->add_option("--seed", o.seed, "Master seed");
    cmd->add_option("--epsilon", o.epsilon, "Stopping tolerance on lambda");
    cmd->add_option("--max-iter", o.max_iter, "Sweep limit");
    cmd->add_option("--min-iter", o.min_iter, "Sweeps before the stopping rule applies");
    cmd->add_option("--variant", o.variant, "hopm, gsm or shopm");
    cmd->add_option("--beta", o.beta, "Shift for gsm/shopm");
    cmd->add_option("--mode", o.mode, "exact or shots");
    cmd->add_option("--shots", o.shots, "Shots per setting (implies --mode shots)");
    cmd->add_option("--noise-p", o.noise_p, "Depolarizing rate, repeatable");
    cmd->add_option("--depth", o.depth, "Noise depth override");
    cmd->add_flag("--mitigate", o.mitigate, "Add mitigated E_G columns");
    cmd->add_option("--mitigate-with", o.mitigate_with,
                    "Mitigate with p_hat from an estimate-noise JSON file");
    cmd->add_flag("--no-tomography-noise", o.no_tomography_noise,
                  "Only the overlap measurement is noisy");
    cmd->add_option("--restarts", o.restarts, "Classical oracle restarts");
    cmd->add_option("--out-csv", o.out_csv, "CSV output path ('-' for stdout)");
    cmd->add_option("--out-json", o.out_json, "JSON summary path");
    cmd->add_option("--jobs", o.jobs, "Worker threads (0 = all)");
}

ExperimentConfig resolve(const Overrides &o) {
    ExperimentConfig c = o.config.empty() ? ExperimentConfig{} : ExperimentConfig::load(o.config);
    if (!o.targets.empty()) {
        c.targets.clear();
        for (const auto &t : o.targets) c.targets.push_back(parse_target(t));
    }
    if (o.inits) c.inits = *o.inits;
    if (o.seed) c.seed = *o.seed;
    if (o.epsilon) c.solver.epsilon = *o.epsilon;
    if (o.max_iter) c.solver.max_iter = *o.max_iter;
    if (o.min_iter) c.solver.min_iter = *o.min_iter;
    if (o.variant) {
        try {
            c.solver.variant = parse_variant(*o.variant);
        } catch (const ContractViolation &e) {
            throw ConfigError(e.what());
        }
    }
    if (o.beta) c.solver.beta = *o.beta;
    if (o.mode) {
        if (*o.mode == "exact") c.mode = ShotMode::Exact;
        else if (*o.mode == "shots") c.mode = ShotMode::Shots;
        else throw ConfigError("--mode must be 'exact' or 'shots'");
    }
    if (o.shots) {
        c.shots = *o.shots;
        if (!o.mode) c.mode = ShotMode::Shots;
    }
    if (!o.noise_p.empty()) c.noise_p = o.noise_p;
    if (o.depth) c.depth = *o.depth;
    if (o.mitigate) c.mitigate = true;
    if (!o.mitigate_with.empty()) {
        c.mitigate = true;
        c.mitigation_p = read_noise_estimate(o.mitigate_with);
    }
    if (o.no_tomography_noise) c.tomography_noise = false;
    if (o.restarts) c.oracle_restarts = *o.restarts;
    if (o.out_csv) c.out_csv = *o.out_csv;
    if (o.out_json) c.out_json = *o.out_json;
    if (o.jobs) c.jobs = *o.jobs;
    c.validate();
    return c;
}

template <typename Writer> void emit(const std::string &path, Writer &&write) {
    if (path.empty() || path == "-") {
        write(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path + "'");
    write(out);
}

void write_json_file(const std::string &path, const nlohmann::json &j) {
    emit(path, [&](std::ostream &os) { os << j.dump(2) << '\n'; });
}

int cmd_run(const Overrides &o) {
    const ExperimentConfig c = resolve(o);
    const ExperimentResult r = run_experiment(c);
    emit(c.out_csv, [&](std::ostream &os) { write_run_csv(os, c, r); });
    if (!c.out_json.empty()) write_json_file(c.out_json, summary_json(c, r));
    return 0;
}

int cmd_oracle(const Overrides &o) {
    ExperimentConfig c = resolve(o);
    if (!o.epsilon && o.config.empty()) c.solver.epsilon = 1e-10;
    const auto rows = run_oracle(c);
    emit(c.out_csv, [&](std::ostream &os) { write_oracle_csv(os, rows); });
    return 0;
}

int cmd_estimate_noise(const Overrides &o) {
    const ExperimentConfig c = resolve(o);
    const NoiseEstimate e = estimate_noise(c);
    const auto j = to_json(e);
    if (c.out_json.empty()) std::cout << j.dump(2) << '\n';
    else write_json_file(c.out_json, j);
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Geometric entanglement via quantum higher-order power iteration"};
    app.require_subcommand(1);

    Overrides run_o, oracle_o, noise_o;
    auto *run_cmd = app.add_subcommand("run", "Run QHOPM over a grid of targets, rates and inits");
    add_common(run_cmd, run_o);
    auto *oracle_cmd = app.add_subcommand("oracle", "Classical HOPM reference values");
    add_common(oracle_cmd, oracle_o);
    auto *noise_cmd =
        app.add_subcommand("estimate-noise", "Estimate p from a GHZ reference run");
    add_common(noise_cmd, noise_o);

    std::string family;
    std::size_t n = 0;
    std::optional<std::uint64_t> gen_seed;
    std::string gen_out;
    auto *gen_cmd = app.add_subcommand("gen-state", "Write a target preparation circuit");
    gen_cmd->add_option("--family", family, "GHZ, W, RING or RANDOM")->required();
    gen_cmd->add_option("--n", n, "Qubits")->required();
    gen_cmd->add_option("--seed", gen_seed, "Seed for RANDOM");
    gen_cmd->add_option("--out", gen_out, "Output path ('-' for stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) return cmd_run(run_o);
        if (*oracle_cmd) return cmd_oracle(oracle_o);
        if (*noise_cmd) return cmd_estimate_noise(noise_o);
        if (*gen_cmd) {
            TargetSpec t;
            try {
                t.family = parse_family(family);
                t.n = n;
                t.seed = gen_seed;
                t.validate();
            } catch (const ContractViolation &e) {
                throw ConfigError(e.what());
            }
            const std::string text = to_text(build_target(t));
            emit(gen_out, [&](std::ostream &os) { os << text; });
            return 0;
        }
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const NegativeRate &e) {
        std::cerr << "noise estimate: " << e.what() << '\n';
        return 3;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
