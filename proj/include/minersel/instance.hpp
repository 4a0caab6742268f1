#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "minersel/rng.hpp"

namespace minersel {

struct Device {
    std::string name;
    double power_watts = 0.0;
    double hash_rate = 0.0;

    bool operator==(const Device&) const = default;
};

struct Miner {
    std::size_t id = 0;
    std::vector<Device> devices;
    double stake = 0.0;
    std::int64_t blocks_mined = 0;
    double rewards_earned = 0.0;
    double fees_earned = 0.0;

    double hash_rate() const;

    bool operator==(const Miner&) const = default;
};

/// How member reputations combine into the subset-level trust objective.
enum class Aggregation { sum, mean };

struct ObjectiveSettings {
    /// Weight of the stake term in a miner's reputation; 1 - weight goes to blocks.
    double reputation_weight = 0.5;
    Aggregation aggregation = Aggregation::sum;

    bool operator==(const ObjectiveSettings&) const = default;
};

/// Energy drawn by a miner's devices over one day, in kWh.
double miner_energy(const Miner& miner);

/// Convex combination of max-normalized stake and block count.
/// A zero maximum makes the corresponding term zero.
double miner_reputation(const Miner& miner, double max_stake, std::int64_t max_blocks,
                        double alpha);

/// Miner pool plus cached maxima, per-miner objective terms, and totals.
/// Immutable once constructed.
class Instance {
public:
    /// Throws ConfigError if the pool is empty, ids are not 0..n-1, or any
    /// quantity is negative. Block totals that disagree with total_blocks
    /// and reward/fee records that disagree with blocks_mined are accepted
    /// and reported through warnings().
    Instance(std::vector<Miner> miners, std::int64_t total_blocks, std::uint64_t seed = 0,
             ObjectiveSettings settings = {});

    Instance with_settings(ObjectiveSettings settings) const;

    std::size_t size() const { return miners_.size(); }
    const std::vector<Miner>& miners() const { return miners_; }
    const Miner& miner(std::size_t i) const { return miners_[i]; }
    std::int64_t total_blocks() const { return total_blocks_; }
    std::uint64_t seed() const { return seed_; }
    const ObjectiveSettings& settings() const { return settings_; }

    double max_stake() const { return max_stake_; }
    std::int64_t max_blocks() const { return max_blocks_; }

    double energy_of(std::size_t i) const { return energy_[i]; }
    double reputation_of(std::size_t i) const { return reputation_[i]; }
    double total_energy_kwh() const { return total_energy_; }
    double total_reputation() const { return total_reputation_; }
    double max_reputation() const { return max_reputation_; }

    bool blocks_consistent() const { return blocks_consistent_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    bool operator==(const Instance& other) const {
        return miners_ == other.miners_ && total_blocks_ == other.total_blocks_ &&
               seed_ == other.seed_ && settings_ == other.settings_;
    }

private:
    std::vector<Miner> miners_;
    std::int64_t total_blocks_;
    std::uint64_t seed_;
    ObjectiveSettings settings_;

    double max_stake_ = 0.0;
    std::int64_t max_blocks_ = 0;
    std::vector<double> energy_;
    std::vector<double> reputation_;
    double total_energy_ = 0.0;
    double total_reputation_ = 0.0;
    double max_reputation_ = 0.0;
    bool blocks_consistent_ = true;
    std::vector<std::string> warnings_;
};

double miner_reputation(const Miner& miner, const Instance& instance, double alpha);

enum class HashPowerModel {
    pareto,  ///< heavy-tailed, shape = hash_power_shape
    uniform, ///< every miner gets the same hash power
};

struct DeviceTemplate {
    std::string name;
    double power_watts = 0.0;
    double hash_rate = 0.0;
};

struct GeneratorConfig {
    std::size_t n_miners = 160;
    std::int64_t n_blocks = 4073;
    double block_subsidy = 6.25;
    double fee_mean = 0.12;
    double fee_spread = 0.08;
    HashPowerModel hash_power_model = HashPowerModel::pareto;
    double hash_power_shape = 1.5;
    std::vector<DeviceTemplate> device_catalog = default_device_catalog();
    double stake_mean = 50.0;
    double stake_spread = 25.0;
    std::uint64_t seed = 2021;

    static std::vector<DeviceTemplate> default_device_catalog();

    /// Throws ConfigError naming the offending field.
    void validate() const;
};

/// Synthetic mining history: heavy-tailed hash power, devices drawn from the
/// catalog, and blocks assigned proportionally to hash rate.
Instance generate_instance(const GeneratorConfig& config, ObjectiveSettings settings = {});

void save_instance(const Instance& instance, const std::filesystem::path& path);
Instance load_instance(const std::filesystem::path& path);

std::string to_json_text(const Instance& instance);
Instance instance_from_json_text(const std::string& text);

} // namespace minersel
