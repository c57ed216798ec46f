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
#include "qhopm/experiment.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <sstream>

#include <omp.h>

#include "qhopm/errors.hpp"
#include "qhopm/noise_mitigation.hpp"
#include "qhopm/rng.hpp"
#include "qhopm/tensor_core.hpp"

namespace qhopm {

namespace {

using nlohmann::json;

std::uint64_t target_seed_part(const TargetSpec &t) {
    return t.seed.value_or(0);
}

template <typename T> T get_as(const json &j, const char *key) {
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        throw ConfigError(std::string("config key '") + key + "': " + e.what());
    }
}

std::optional<double> opt_double(const json &j) {
    if (j.is_null()) return std::nullopt;
    return j.get<double>();
}

int thread_count(int jobs) {
    return jobs > 0 ? jobs : omp_get_max_threads();
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

TargetSpec parse_target(const std::string &text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() < 2 || parts.size() > 3)
        throw ConfigError("target '" + text + "': expected FAMILY:n[:seed]");
    TargetSpec t;
    try {
        t.family = parse_family(parts[0]);
        std::size_t used = 0;
        t.n = std::stoul(parts[1], &used);
        if (used != parts[1].size()) throw ConfigError("bad qubit count");
        if (parts.size() == 3) {
            t.seed = std::stoull(parts[2], &used);
            if (used != parts[2].size()) throw ConfigError("bad seed");
        }
        t.validate();
    } catch (const std::exception &e) {
        throw ConfigError("target '" + text + "': " + e.what());
    }
    return t;
}

std::string format_target(const TargetSpec &t) {
    std::string s = to_string(t.family) + ":" + std::to_string(t.n);
    if (t.seed) s += ":" + std::to_string(*t.seed);
    return s;
}

void ExperimentConfig::validate() const {
    if (targets.empty()) throw ConfigError("no targets");
    if (inits == 0) throw ConfigError("inits must be >= 1");
    if (noise_p.empty()) throw ConfigError("noise_p must list at least one rate");
    for (double p : noise_p)
        if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("noise rate outside [0, 1]");
    if (mitigation_p && !(*mitigation_p >= 0.0 && *mitigation_p < 1.0))
        throw ConfigError("mitigation rate outside [0, 1)");
    if (mode == ShotMode::Shots && shots == 0) throw ConfigError("shots must be >= 1");
    if (depth && *depth == 0) throw ConfigError("depth override must be >= 1");
    if (jobs < 0) throw ConfigError("jobs must be >= 0");
    try {
        solver.validate();
        for (const auto &t : targets) t.validate();
    } catch (const ContractViolation &e) {
        throw ConfigError(e.what());
    }
}

ExperimentConfig ExperimentConfig::from_json(const json &j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    static const std::vector<std::string> known = {
        "targets",  "inits",     "seed",          "epsilon",          "max_iter",
        "min_iter", "variant",   "beta",          "mode",             "shots",
        "noise_p",  "depth",     "mitigate",      "mitigation_p",     "tomography_noise",
        "oracle_restarts",       "out_csv",       "out_json",         "jobs"};
    for (const auto &[key, value] : j.items())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ConfigError("unknown config key '" + key + "'");

    ExperimentConfig c;
    if (j.contains("targets")) {
        c.targets.clear();
        for (const auto &t : j.at("targets")) {
            if (!t.is_string()) throw ConfigError("targets must be strings");
            c.targets.push_back(parse_target(t.get<std::string>()));
        }
    }
    if (j.contains("inits")) c.inits = get_as<std::size_t>(j, "inits");
    if (j.contains("seed")) c.seed = get_as<std::uint64_t>(j, "seed");
    if (j.contains("epsilon")) c.solver.epsilon = get_as<double>(j, "epsilon");
    if (j.contains("max_iter")) c.solver.max_iter = get_as<std::size_t>(j, "max_iter");
    if (j.contains("min_iter")) c.solver.min_iter = get_as<std::size_t>(j, "min_iter");
    if (j.contains("beta")) c.solver.beta = get_as<double>(j, "beta");
    try {
        if (j.contains("variant"))
            c.solver.variant = parse_variant(get_as<std::string>(j, "variant"));
    } catch (const ContractViolation &e) {
        throw ConfigError(e.what());
    }
    if (j.contains("mode")) {
        const auto m = get_as<std::string>(j, "mode");
        if (m == "exact") c.mode = ShotMode::Exact;
        else if (m == "shots") c.mode = ShotMode::Shots;
        else throw ConfigError("mode must be 'exact' or 'shots'");
    }
    if (j.contains("shots")) c.shots = get_as<std::uint64_t>(j, "shots");
    if (j.contains("noise_p")) {
        const auto &np = j.at("noise_p");
        c.noise_p = np.is_array() ? np.get<std::vector<double>>()
                                  : std::vector<double>{np.get<double>()};
    }
    if (j.contains("depth") && !j.at("depth").is_null())
        c.depth = get_as<std::size_t>(j, "depth");
    if (j.contains("mitigate")) c.mitigate = get_as<bool>(j, "mitigate");
    if (j.contains("mitigation_p")) c.mitigation_p = opt_double(j.at("mitigation_p"));
    if (j.contains("tomography_noise"))
        c.tomography_noise = get_as<bool>(j, "tomography_noise");
    if (j.contains("oracle_restarts"))
        c.oracle_restarts = get_as<std::size_t>(j, "oracle_restarts");
    if (j.contains("out_csv")) c.out_csv = get_as<std::string>(j, "out_csv");
    if (j.contains("out_json")) c.out_json = get_as<std::string>(j, "out_json");
    if (j.contains("jobs")) c.jobs = get_as<int>(j, "jobs");
    return c;
}

ExperimentConfig ExperimentConfig::load(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path + "'");
    try {
        return from_json(json::parse(in));
    } catch (const json::parse_error &e) {
        throw ConfigError("config '" + path + "': " + e.what());
    }
}

json ExperimentConfig::to_json() const {
    json j;
    j["targets"] = json::array();
    for (const auto &t : targets) j["targets"].push_back(format_target(t));
    j["inits"] = inits;
    j["seed"] = seed;
    j["epsilon"] = solver.epsilon;
    j["max_iter"] = solver.max_iter;
    j["min_iter"] = solver.min_iter;
    j["variant"] = to_string(solver.variant);
    j["beta"] = solver.beta;
    j["mode"] = mode == ShotMode::Exact ? "exact" : "shots";
    j["shots"] = shots;
    j["noise_p"] = noise_p;
    j["depth"] = depth ? json(*depth) : json(nullptr);
    j["mitigate"] = mitigate;
    j["mitigation_p"] = mitigation_p ? json(*mitigation_p) : json(nullptr);
    j["tomography_noise"] = tomography_noise;
    j["oracle_restarts"] = oracle_restarts;
    return j;
}

std::vector<Cell> enumerate_cells(const ExperimentConfig &cfg) {
    std::vector<Cell> cells;
    cells.reserve(cfg.targets.size() * cfg.noise_p.size() * cfg.inits);
    for (const auto &t : cfg.targets)
        for (double p : cfg.noise_p)
            for (std::size_t i = 0; i < cfg.inits; ++i)
                cells.push_back(Cell{cells.size(), t, p, i});
    return cells;
}

std::vector<QubitAngles> cell_init(const ExperimentConfig &cfg, const TargetSpec &target,
                                   std::size_t init_id) {
    Rng rng(derive_seed(cfg.seed, hash_string("init"), hash_string(to_string(target.family)),
                        target.n, target_seed_part(target), init_id));
    return random_angles(target.n, rng);
}

std::uint64_t cell_stream_seed(const ExperimentConfig &cfg, const Cell &cell) {
    return derive_seed(cfg.seed, hash_string("shots"),
                       hash_string(to_string(cell.target.family)), cell.target.n,
                       target_seed_part(cell.target), cell.init_id,
                       std::bit_cast<std::uint64_t>(cell.p));
}

ExperimentResult run_experiment(const ExperimentConfig &cfg) {
    cfg.validate();
    ExperimentResult result;
    result.cells = enumerate_cells(cfg);
    result.runs.resize(result.cells.size());
    const auto count = static_cast<std::ptrdiff_t>(result.cells.size());
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic) num_threads(thread_count(cfg.jobs))
    for (std::ptrdiff_t idx = 0; idx < count; ++idx) {
        try {
            const Cell &cell = result.cells[static_cast<std::size_t>(idx)];
            const std::uint64_t stream = cell_stream_seed(cfg, cell);
            MeasurementBackend backend = cfg.mode == ShotMode::Exact
                                             ? MeasurementBackend::exact()
                                             : MeasurementBackend::sampled(cfg.shots, stream);
            if (cell.p > 0.0 || cfg.depth)
                backend.with_noise(DepolarizingNoise{cell.p, cfg.tomography_noise, cfg.depth});
            QhopmRun run = make_run(cell.target, cell_init(cfg, cell.target, cell.init_id),
                                    cfg.solver, std::move(backend));
            if (cfg.mitigate) run.mitigation_p = cfg.mitigation_p.value_or(cell.p);
            run.reseed = derive_seed(stream, hash_string("reseed"));
            result.runs[static_cast<std::size_t>(idx)] = run_qhopm(std::move(run));
        } catch (...) {
#pragma omp critical(qhopm_experiment_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return result;
}

void write_run_csv(std::ostream &os, const ExperimentConfig &cfg,
                   const ExperimentResult &result) {
    os << kRunCsvHeader << '\n';
    const std::uint64_t shots = cfg.mode == ShotMode::Exact ? 0 : cfg.shots;
    for (std::size_t c = 0; c < result.cells.size(); ++c) {
        const Cell &cell = result.cells[c];
        const QhopmRun &run = result.runs[c];
        const std::string seed = cell.target.seed ? std::to_string(*cell.target.seed) : "";
        for (const auto &rec : run.records) {
            os << cell.run_id << ',' << to_string(cell.target.family) << ','
               << cell.target.n << ',' << seed << ',' << cell.init_id << ',' << rec.k
               << ',' << format_double(rec.lambda) << ',' << format_double(rec.gamma)
               << ',' << format_double(rec.e_g) << ','
               << (rec.e_g_mitigated ? format_double(*rec.e_g_mitigated) : "") << ','
               << format_double(cell.p) << ',' << rec.depth << ',' << shots << ','
               << rec.settings_used << '\n';
        }
    }
}

json summary_json(const ExperimentConfig &cfg, const ExperimentResult &result) {
    json j;
    j["master_seed"] = cfg.seed;
    j["config"] = cfg.to_json();
    j["groups"] = json::array();
    const std::span<const QhopmRun> runs(result.runs);
    for (std::size_t start = 0; start < result.cells.size(); start += cfg.inits) {
        const Cell &head = result.cells[start];
        const auto block = runs.subspan(start, cfg.inits);
        const RunSummary s = summarize(block);
        json g;
        g["target"] = head.target.label();
        g["family"] = to_string(head.target.family);
        g["n"] = head.target.n;
        g["target_seed"] = head.target.seed ? json(*head.target.seed) : json(nullptr);
        g["p"] = head.p;
        g["d"] = block.front().initial.depth;
        g["runs"] = block.size();
        g["converged_runs"] = static_cast<std::size_t>(std::count_if(
            block.begin(), block.end(), [](const QhopmRun &r) { return r.converged; }));
        g["e_bar"] = s.e_bar;
        g["iqr"] = s.iqr;
        g["e_bar_mitigated"] = s.e_bar_mitigated ? json(*s.e_bar_mitigated) : json(nullptr);
        g["iqr_mitigated"] = s.iqr_mitigated ? json(*s.iqr_mitigated) : json(nullptr);
        g["mitigation_p"] = block.front().mitigation_p ? json(*block.front().mitigation_p)
                                                       : json(nullptr);
        g["window"] = s.window;
        json seeds = json::array();
        for (std::size_t i = 0; i < block.size(); ++i)
            seeds.push_back(cell_stream_seed(cfg, result.cells[start + i]));
        g["stream_seeds"] = seeds;
        if (cfg.oracle_restarts > 0) {
            const StateTensor psi = run(build_target(head.target));
            SolverConfig oc = cfg.solver;
            oc.epsilon = 1e-12;
            oc.max_iter = std::max<std::size_t>(oc.max_iter, 2000);
            const auto best = multistart_lambda(
                psi, cfg.oracle_restarts, oc,
                derive_seed(cfg.seed, hash_string("oracle"), hash_string(head.target.label())));
            g["oracle_e_g"] = best.best.e_g;
        }
        j["groups"].push_back(std::move(g));
    }
    return j;
}

std::vector<OracleRow> run_oracle(const ExperimentConfig &cfg) {
    cfg.validate();
    std::vector<OracleRow> rows;
    for (const auto &t : cfg.targets)
        for (std::size_t i = 0; i < cfg.inits; ++i) rows.push_back(OracleRow{t, i, {}, 0.0, {}});
    const auto count = static_cast<std::ptrdiff_t>(rows.size());
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic) num_threads(thread_count(cfg.jobs))
    for (std::ptrdiff_t idx = 0; idx < count; ++idx) {
        try {
            OracleRow &row = rows[static_cast<std::size_t>(idx)];
            const StateTensor psi = run(build_target(row.target));
            const auto init = cell_init(cfg, row.target, row.init_id);
            row.result = hopm(psi, init, cfg.solver);
            if (row.target.n == 2) {
                const double s = schmidt_lambda_bipartite(psi);
                row.schmidt_e_g = e_g_from_lambda(s);
            }
        } catch (...) {
#pragma omp critical(qhopm_oracle_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    for (std::size_t start = 0; start < rows.size(); start += cfg.inits) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < cfg.inits; ++i)
            best = std::min(best, rows[start + i].result.e_g);
        if (cfg.oracle_restarts > 0) {
            const auto &t = rows[start].target;
            const auto ms = multistart_lambda(
                run(build_target(t)), cfg.oracle_restarts, cfg.solver,
                derive_seed(cfg.seed, hash_string("oracle"), hash_string(t.label())));
            best = std::min(best, ms.best.e_g);
        }
        for (std::size_t i = 0; i < cfg.inits; ++i) rows[start + i].best_e_g = best;
    }
    return rows;
}

void write_oracle_csv(std::ostream &os, const std::vector<OracleRow> &rows) {
    os << kOracleCsvHeader << '\n';
    for (const auto &r : rows) {
        os << to_string(r.target.family) << ',' << r.target.n << ','
           << (r.target.seed ? std::to_string(*r.target.seed) : "") << ',' << r.init_id
           << ',' << format_double(r.result.lambda) << ',' << format_double(r.result.e_g)
           << ',' << r.result.iterations << ',' << (r.result.converged ? 1 : 0) << ','
           << format_double(r.best_e_g) << ','
           << (r.schmidt_e_g ? format_double(*r.schmidt_e_g) : "") << '\n';
    }
}

NoiseEstimate estimate_noise(const ExperimentConfig &cfg) {
    if (cfg.targets.size() != 1 || cfg.targets.front().family != TargetFamily::GHZ)
        throw ConfigError("estimate-noise needs exactly one GHZ reference target");
    if (cfg.noise_p.size() != 1)
        throw ConfigError("estimate-noise needs exactly one noise rate");
    ExperimentConfig c = cfg;
    c.mitigate = false;
    const ExperimentResult r = run_experiment(c);
    const RunSummary s = summarize(r.runs);
    NoiseEstimate e;
    e.reference = c.targets.front();
    e.injected_p = c.noise_p.front();
    e.e_bar_reference = s.e_bar;
    e.d = r.runs.front().initial.depth;
    e.p_hat = estimate_p(s.e_bar, 0.5, e.d);
    return e;
}

json to_json(const NoiseEstimate &e) {
    json j;
    j["reference"] = e.reference.label();
    j["injected_p"] = e.injected_p;
    j["e_bar_reference"] = e.e_bar_reference;
    j["d"] = e.d;
    j["p_hat"] = e.p_hat;
    return j;
}

double read_noise_estimate(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open noise estimate '" + path + "'");
    try {
        const json j = json::parse(in);
        return j.at("p_hat").get<double>();
    } catch (const json::exception &e) {
        throw ConfigError("noise estimate '" + path + "': " + e.what());
    }
}

} // namespace qhopm
