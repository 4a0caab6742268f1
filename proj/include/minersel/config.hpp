#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "minersel/instance.hpp"
#include "minersel/moea.hpp"

namespace minersel {

/// Generator settings plus the objective settings baked into the instance.
struct GenerateSpec {
    GeneratorConfig generator;
    ObjectiveSettings objectives;
};

struct ExperimentConfig {
    /// Either a generator spec or the path of an instance file.
    std::variant<GenerateSpec, std::filesystem::path> instance_source = GenerateSpec{};
    /// Replaces the instance's objective settings when present.
    std::optional<ObjectiveSettings> objectives;
    std::vector<Algorithm> algorithms{Algorithm::nsga2, Algorithm::spea2, Algorithm::random_search};
    std::size_t runs_per_algorithm = 100;
    /// Run i of every algorithm uses seed base_seed + i.
    std::uint64_t base_seed = 1;
    AlgorithmConfig nsga2;
    AlgorithmConfig spea2;
    AlgorithmConfig random;
    std::filesystem::path output_dir = "results";
    /// Worker threads; 0 picks the hardware concurrency.
    std::size_t threads = 0;

    const AlgorithmConfig& config_for(Algorithm algorithm) const;
    AlgorithmConfig& config_for(Algorithm algorithm);

    /// Throws ConfigError.
    void validate() const;
};

// All parsers reject unknown keys and throw ConfigError naming the field.
GenerateSpec generate_spec_from_json(const nlohmann::json& doc);
AlgorithmConfig algorithm_config_from_json(const nlohmann::json& doc, AlgorithmConfig base = {});
ObjectiveSettings objective_settings_from_json(const nlohmann::json& doc, ObjectiveSettings base = {});
/// Relative instance paths are resolved against base_dir.
ExperimentConfig experiment_config_from_json(const nlohmann::json& doc,
                                             const std::filesystem::path& base_dir = {});

/// Reads a JSON document; syntax errors become ConfigError with line and column.
nlohmann::json read_json_file(const std::filesystem::path& path);

} // namespace minersel
