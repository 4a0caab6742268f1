#include "minersel/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <fmt/core.h>

#include "minersel/errors.hpp"

namespace minersel {

using nlohmann::json;

namespace {

void require_object(const json& doc, const std::string& where) {
    if (!doc.is_object()) throw ConfigError(where + ": expected an object");
}

void reject_unknown(const json& doc, const std::string& where,
                    std::initializer_list<const char*> known) {
    for (const auto& [key, value] : doc.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw ConfigError(fmt::format("{}: unknown field '{}'", where, key));
    }
}

double get_real(const json& doc, const char* key, const std::string& where) {
    const json& v = doc.at(key);
    if (!v.is_number()) throw ConfigError(fmt::format("{}.{}: expected a number", where, key));
    return v.get<double>();
}

std::uint64_t get_unsigned(const json& doc, const char* key, const std::string& where) {
    const json& v = doc.at(key);
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0))
        throw ConfigError(fmt::format("{}.{}: expected a non-negative integer", where, key));
    return v.get<std::uint64_t>();
}

void read_distribution(const json& doc, const char* key, double& mean, double& spread) {
    if (!doc.contains(key)) return;
    const json& d = doc.at(key);
    const std::string where = key;
    require_object(d, where);
    reject_unknown(d, where, {"mean", "spread"});
    if (d.contains("mean")) mean = get_real(d, "mean", where);
    if (d.contains("spread")) spread = get_real(d, "spread", where);
}

} // namespace

ObjectiveSettings objective_settings_from_json(const json& doc, ObjectiveSettings base) {
    const std::string where = "objectives";
    require_object(doc, where);
    reject_unknown(doc, where, {"reputation_weight", "aggregation"});
    if (doc.contains("reputation_weight")) {
        base.reputation_weight = get_real(doc, "reputation_weight", where);
        if (!(base.reputation_weight >= 0.0 && base.reputation_weight <= 1.0))
            throw ConfigError("objectives.reputation_weight must lie in [0, 1]");
    }
    if (doc.contains("aggregation")) {
        const json& v = doc.at("aggregation");
        if (v == "sum") base.aggregation = Aggregation::sum;
        else if (v == "mean") base.aggregation = Aggregation::mean;
        else throw ConfigError("objectives.aggregation: expected \"sum\" or \"mean\"");
    }
    return base;
}

GenerateSpec generate_spec_from_json(const json& doc) {
    const std::string where = "generator";
    require_object(doc, where);
    reject_unknown(doc, where,
                   {"n_miners", "n_blocks", "block_subsidy", "fee_distribution",
                    "hash_power_distribution", "initial_stake_distribution", "device_catalog",
                    "seed", "objectives"});
    GenerateSpec spec;
    GeneratorConfig& g = spec.generator;
    if (doc.contains("n_miners")) g.n_miners = get_unsigned(doc, "n_miners", where);
    if (doc.contains("n_blocks")) {
        const json& v = doc.at("n_blocks");
        if (!v.is_number_integer()) throw ConfigError("generator.n_blocks: expected an integer");
        g.n_blocks = v.get<std::int64_t>();
    }
    if (doc.contains("block_subsidy")) g.block_subsidy = get_real(doc, "block_subsidy", where);
    read_distribution(doc, "fee_distribution", g.fee_mean, g.fee_spread);
    read_distribution(doc, "initial_stake_distribution", g.stake_mean, g.stake_spread);
    if (doc.contains("hash_power_distribution")) {
        const json& h = doc.at("hash_power_distribution");
        require_object(h, "hash_power_distribution");
        reject_unknown(h, "hash_power_distribution", {"model", "shape"});
        if (h.contains("model")) {
            if (h.at("model") == "pareto") g.hash_power_model = HashPowerModel::pareto;
            else if (h.at("model") == "uniform") g.hash_power_model = HashPowerModel::uniform;
            else throw ConfigError("hash_power_distribution.model: expected \"pareto\" or \"uniform\"");
        }
        if (h.contains("shape")) g.hash_power_shape = get_real(h, "shape", "hash_power_distribution");
    }
    if (doc.contains("device_catalog")) {
        const json& cat = doc.at("device_catalog");
        if (!cat.is_array()) throw ConfigError("generator.device_catalog: expected an array");
        g.device_catalog.clear();
        for (std::size_t i = 0; i < cat.size(); ++i) {
            const std::string w = fmt::format("device_catalog[{}]", i);
            require_object(cat[i], w);
            reject_unknown(cat[i], w, {"name", "power_watts", "hash_rate"});
            DeviceTemplate t;
            t.name = cat[i].value("name", fmt::format("device-{}", i));
            if (!cat[i].contains("power_watts") || !cat[i].contains("hash_rate"))
                throw ConfigError(w + ": power_watts and hash_rate are required");
            t.power_watts = get_real(cat[i], "power_watts", w);
            t.hash_rate = get_real(cat[i], "hash_rate", w);
            g.device_catalog.push_back(std::move(t));
        }
    }
    if (doc.contains("seed")) g.seed = get_unsigned(doc, "seed", where);
    if (doc.contains("objectives")) spec.objectives = objective_settings_from_json(doc.at("objectives"));
    g.validate();
    return spec;
}

AlgorithmConfig algorithm_config_from_json(const json& doc, AlgorithmConfig base) {
    const std::string where = "algorithm_config";
    require_object(doc, where);
    reject_unknown(doc, where,
                   {"population_size", "archive_size", "evaluation_budget", "crossover_rate",
                    "mutation_rate", "tournament_size", "seed"});
    if (doc.contains("population_size")) base.population_size = get_unsigned(doc, "population_size", where);
    if (doc.contains("archive_size")) base.archive_size = get_unsigned(doc, "archive_size", where);
    if (doc.contains("evaluation_budget")) base.evaluation_budget = get_unsigned(doc, "evaluation_budget", where);
    if (doc.contains("crossover_rate")) base.crossover_rate = get_real(doc, "crossover_rate", where);
    if (doc.contains("mutation_rate")) {
        if (doc.at("mutation_rate").is_null()) base.mutation_rate.reset();
        else base.mutation_rate = get_real(doc, "mutation_rate", where);
    }
    if (doc.contains("tournament_size")) base.tournament_size = get_unsigned(doc, "tournament_size", where);
    if (doc.contains("seed")) base.seed = get_unsigned(doc, "seed", where);
    base.validate();
    return base;
}

const AlgorithmConfig& ExperimentConfig::config_for(Algorithm algorithm) const {
    switch (algorithm) {
    case Algorithm::nsga2: return nsga2;
    case Algorithm::spea2: return spea2;
    case Algorithm::random_search: return random;
    }
    return nsga2;
}

AlgorithmConfig& ExperimentConfig::config_for(Algorithm algorithm) {
    return const_cast<AlgorithmConfig&>(std::as_const(*this).config_for(algorithm));
}

void ExperimentConfig::validate() const {
    if (algorithms.empty()) throw ConfigError("experiment needs at least one algorithm");
    for (std::size_t i = 0; i < algorithms.size(); ++i)
        for (std::size_t j = i + 1; j < algorithms.size(); ++j)
            if (algorithms[i] == algorithms[j])
                throw ConfigError(fmt::format("algorithm '{}' listed twice", algorithm_name(algorithms[i])));
    if (runs_per_algorithm < 1) throw ConfigError("runs_per_algorithm must be at least 1");
    for (Algorithm a : algorithms) {
        const auto& c = config_for(a);
        c.validate();
        if (a != Algorithm::random_search && c.evaluation_budget < c.population_size)
            throw ConfigError(fmt::format("{}: evaluation_budget must be at least population_size",
                                          algorithm_name(a)));
    }
    if (const auto* spec = std::get_if<GenerateSpec>(&instance_source)) spec->generator.validate();
}

ExperimentConfig experiment_config_from_json(const json& doc, const std::filesystem::path& base_dir) {
    const std::string where = "experiment";
    require_object(doc, where);
    reject_unknown(doc, where,
                   {"instance", "objectives", "algorithms", "runs_per_algorithm", "base_seed",
                    "algorithm_config", "algorithm_overrides", "output_dir", "threads"});
    ExperimentConfig cfg;
    if (doc.contains("instance")) {
        const json& src = doc.at("instance");
        require_object(src, "instance");
        reject_unknown(src, "instance", {"generate", "path"});
        if (src.contains("generate") == src.contains("path"))
            throw ConfigError("instance: give exactly one of 'generate' or 'path'");
        if (src.contains("generate")) {
            cfg.instance_source = generate_spec_from_json(src.at("generate"));
        } else {
            if (!src.at("path").is_string()) throw ConfigError("instance.path: expected a string");
            std::filesystem::path p = src.at("path").get<std::string>();
            cfg.instance_source = p.is_relative() && !base_dir.empty() ? base_dir / p : p;
        }
    }
    if (doc.contains("objectives")) cfg.objectives = objective_settings_from_json(doc.at("objectives"));
    if (doc.contains("algorithms")) {
        const json& list = doc.at("algorithms");
        if (!list.is_array()) throw ConfigError("experiment.algorithms: expected an array");
        cfg.algorithms.clear();
        for (const auto& name : list) {
            if (!name.is_string()) throw ConfigError("experiment.algorithms: expected names");
            cfg.algorithms.push_back(parse_algorithm(name.get<std::string>()));
        }
    }
    if (doc.contains("runs_per_algorithm"))
        cfg.runs_per_algorithm = get_unsigned(doc, "runs_per_algorithm", where);
    if (doc.contains("base_seed")) cfg.base_seed = get_unsigned(doc, "base_seed", where);
    AlgorithmConfig common;
    if (doc.contains("algorithm_config")) common = algorithm_config_from_json(doc.at("algorithm_config"));
    cfg.nsga2 = cfg.spea2 = cfg.random = common;
    if (doc.contains("algorithm_overrides")) {
        const json& ov = doc.at("algorithm_overrides");
        require_object(ov, "algorithm_overrides");
        for (const auto& [name, body] : ov.items()) {
            auto& target = cfg.config_for(parse_algorithm(name));
            target = algorithm_config_from_json(body, target);
        }
    }
    if (doc.contains("output_dir")) {
        if (!doc.at("output_dir").is_string()) throw ConfigError("experiment.output_dir: expected a string");
        std::filesystem::path p = doc.at("output_dir").get<std::string>();
        cfg.output_dir = p.is_relative() && !base_dir.empty() ? base_dir / p : p;
    }
    if (doc.contains("threads")) cfg.threads = get_unsigned(doc, "threads", where);
    cfg.validate();
    return cfg;
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return json::parse(buffer.str());
    } catch (const json::parse_error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

} // namespace minersel
