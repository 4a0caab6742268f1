#include "minersel/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <fmt/core.h>
#include <json.hpp>

#include "minersel/errors.hpp"

namespace minersel {

using nlohmann::json;

double Miner::hash_rate() const {
    double total = 0.0;
    for (const auto& d : devices) total += d.hash_rate;
    return total;
}

double miner_energy(const Miner& miner) {
    double watts = 0.0;
    for (const auto& d : miner.devices) watts += d.power_watts;
    return watts * 24.0 / 1000.0;
}

double miner_reputation(const Miner& miner, double max_stake, std::int64_t max_blocks,
                        double alpha) {
    const double stake_term = max_stake > 0.0 ? miner.stake / max_stake : 0.0;
    const double block_term =
        max_blocks > 0 ? static_cast<double>(miner.blocks_mined) / static_cast<double>(max_blocks)
                       : 0.0;
    return alpha * stake_term + (1.0 - alpha) * block_term;
}

double miner_reputation(const Miner& miner, const Instance& instance, double alpha) {
    return miner_reputation(miner, instance.max_stake(), instance.max_blocks(), alpha);
}

namespace {

void check_non_negative(double value, const std::string& what) {
    if (!(value >= 0.0) || !std::isfinite(value))
        throw ConfigError(fmt::format("{} must be a finite non-negative number (got {})", what, value));
}

} // namespace

Instance::Instance(std::vector<Miner> miners, std::int64_t total_blocks, std::uint64_t seed,
                   ObjectiveSettings settings)
    : miners_(std::move(miners)), total_blocks_(total_blocks), seed_(seed), settings_(settings) {
    if (miners_.empty()) throw ConfigError("instance must contain at least one miner");
    if (total_blocks_ < 1) throw ConfigError("total_blocks must be positive");
    if (!(settings_.reputation_weight >= 0.0 && settings_.reputation_weight <= 1.0))
        throw ConfigError("reputation_weight must lie in [0, 1]");

    std::int64_t block_sum = 0;
    for (std::size_t i = 0; i < miners_.size(); ++i) {
        const Miner& m = miners_[i];
        const std::string where = fmt::format("miners[{}]", i);
        if (m.id != i) throw ConfigError(fmt::format("{}.id must equal its position {}", where, i));
        check_non_negative(m.stake, where + ".stake");
        check_non_negative(m.rewards_earned, where + ".rewards_earned");
        check_non_negative(m.fees_earned, where + ".fees_earned");
        if (m.blocks_mined < 0) throw ConfigError(where + ".blocks_mined must be non-negative");
        if (m.blocks_mined > total_blocks_)
            throw ConfigError(where + ".blocks_mined exceeds total_blocks");
        for (std::size_t d = 0; d < m.devices.size(); ++d) {
            const std::string dev = fmt::format("{}.devices[{}]", where, d);
            check_non_negative(m.devices[d].power_watts, dev + ".power_watts");
            check_non_negative(m.devices[d].hash_rate, dev + ".hash_rate");
        }
        const bool mined = m.blocks_mined > 0;
        if ((m.rewards_earned > 0.0) != mined || (m.fees_earned > 0.0) != mined)
            warnings_.push_back(fmt::format(
                "{}: rewards/fees do not match blocks_mined = {}", where, m.blocks_mined));
        block_sum += m.blocks_mined;
        max_stake_ = std::max(max_stake_, m.stake);
        max_blocks_ = std::max(max_blocks_, m.blocks_mined);
    }
    if (block_sum != total_blocks_) {
        blocks_consistent_ = false;
        warnings_.push_back(fmt::format("blocks_mined sums to {} but total_blocks is {}", block_sum,
                                        total_blocks_));
    }

    energy_.reserve(miners_.size());
    reputation_.reserve(miners_.size());
    for (const auto& m : miners_) {
        energy_.push_back(miner_energy(m));
        reputation_.push_back(
            miner_reputation(m, max_stake_, max_blocks_, settings_.reputation_weight));
        total_energy_ += energy_.back();
        total_reputation_ += reputation_.back();
        max_reputation_ = std::max(max_reputation_, reputation_.back());
    }
}

Instance Instance::with_settings(ObjectiveSettings settings) const {
    return Instance(miners_, total_blocks_, seed_, settings);
}

std::vector<DeviceTemplate> GeneratorConfig::default_device_catalog() {
    // power in W, hash rate in TH/s
    return {
        {"antminer-s9", 1323.0, 13.5},
        {"antminer-s17", 2520.0, 56.0},
        {"antminer-s19", 3250.0, 95.0},
        {"whatsminer-m20s", 3360.0, 68.0},
        {"avalon-1066", 3250.0, 50.0},
    };
}

void GeneratorConfig::validate() const {
    if (n_miners < 1) throw ConfigError("n_miners must be at least 1");
    if (n_blocks < 1) throw ConfigError("n_blocks must be at least 1");
    auto positive = [](double v, const char* what) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw ConfigError(fmt::format("{} must be strictly positive (got {})", what, v));
    };
    positive(block_subsidy, "block_subsidy");
    positive(fee_mean, "fee_distribution.mean");
    positive(fee_spread, "fee_distribution.spread");
    if (fee_spread >= fee_mean)
        throw ConfigError("fee_distribution.spread must be smaller than its mean");
    positive(hash_power_shape, "hash_power_distribution.shape");
    positive(stake_mean, "initial_stake_distribution.mean");
    positive(stake_spread, "initial_stake_distribution.spread");
    if (stake_spread > stake_mean)
        throw ConfigError("initial_stake_distribution.spread must not exceed its mean");
    if (device_catalog.empty()) throw ConfigError("device_catalog must not be empty");
    for (const auto& t : device_catalog) {
        check_non_negative(t.power_watts, "device_catalog." + t.name + ".power_watts");
        check_non_negative(t.hash_rate, "device_catalog." + t.name + ".hash_rate");
    }
}

Instance generate_instance(const GeneratorConfig& config, ObjectiveSettings settings) {
    config.validate();
    Rng rng(config.seed);

    std::vector<Miner> miners(config.n_miners);
    for (std::size_t i = 0; i < miners.size(); ++i) {
        Miner& m = miners[i];
        m.id = i;
        double power = 1.0;
        if (config.hash_power_model == HashPowerModel::pareto)
            power = std::pow(1.0 - rng.uniform01(), -1.0 / config.hash_power_shape);
        const DeviceTemplate& t = config.device_catalog[rng.below(config.device_catalog.size())];
        const auto count = std::max<long long>(1, std::llround(power));
        m.devices.assign(static_cast<std::size_t>(count), Device{t.name, t.power_watts, t.hash_rate});
    }

    std::vector<double> initial_stake(miners.size());
    for (auto& s : initial_stake) s = config.stake_mean + config.stake_spread * (2.0 * rng.uniform01() - 1.0);

    std::vector<double> cumulative(miners.size());
    double running = 0.0;
    for (std::size_t i = 0; i < miners.size(); ++i) {
        running += miners[i].hash_rate();
        cumulative[i] = running;
    }
    if (!(running > 0.0))
        throw ConfigError("every miner has zero hash rate; blocks cannot be assigned");
    // last miner that can actually win a block, in case rounding pushes a draw past the end
    std::size_t last_positive = miners.size() - 1;
    while (miners[last_positive].hash_rate() <= 0.0) --last_positive;

    for (std::int64_t b = 0; b < config.n_blocks; ++b) {
        const double target = rng.uniform01() * running;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
        auto winner = static_cast<std::size_t>(it - cumulative.begin());
        if (winner > last_positive) winner = last_positive;
        Miner& m = miners[winner];
        m.blocks_mined += 1;
        m.rewards_earned += config.block_subsidy;
        m.fees_earned += config.fee_mean + config.fee_spread * (2.0 * rng.uniform01() - 1.0);
    }

    for (std::size_t i = 0; i < miners.size(); ++i)
        miners[i].stake = initial_stake[i] + miners[i].rewards_earned + miners[i].fees_earned;

    return Instance(std::move(miners), config.n_blocks, config.seed, settings);
}

// ---------------------------------------------------------------------------
// instance file

namespace {

constexpr const char* kFormatName = "minersel-instance";
constexpr int kFormatVersion = 1;

const char* aggregation_name(Aggregation a) { return a == Aggregation::sum ? "sum" : "mean"; }

template <typename T>
T field(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key))
        throw ParseError(fmt::format("{}: missing field '{}'", where, key));
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ParseError(fmt::format("{}.{}: wrong type ({})", where, key, obj.at(key).dump()));
    }
}

double real_field(const json& obj, const std::string& key, const std::string& where) {
    const auto& v = obj.contains(key) ? obj.at(key) : json();
    if (!v.is_number()) throw ParseError(fmt::format("{}.{}: expected a number", where, key));
    return v.get<double>();
}

std::int64_t int_field(const json& obj, const std::string& key, const std::string& where) {
    const auto& v = obj.contains(key) ? obj.at(key) : json();
    if (!v.is_number_integer())
        throw ParseError(fmt::format("{}.{}: expected an integer", where, key));
    return v.get<std::int64_t>();
}

} // namespace

std::string to_json_text(const Instance& instance) {
    json doc;
    doc["format"] = kFormatName;
    doc["version"] = kFormatVersion;
    doc["header"] = {
        {"n_miners", instance.size()},
        {"total_blocks", instance.total_blocks()},
        {"seed", instance.seed()},
        {"reputation_weight", instance.settings().reputation_weight},
        {"aggregation", aggregation_name(instance.settings().aggregation)},
    };
    json miners = json::array();
    for (const auto& m : instance.miners()) {
        json devices = json::array();
        for (const auto& d : m.devices)
            devices.push_back({{"name", d.name}, {"power_watts", d.power_watts}, {"hash_rate", d.hash_rate}});
        miners.push_back({
            {"id", m.id},
            {"stake", m.stake},
            {"blocks_mined", m.blocks_mined},
            {"rewards_earned", m.rewards_earned},
            {"fees_earned", m.fees_earned},
            {"devices", std::move(devices)},
        });
    }
    doc["miners"] = std::move(miners);
    return doc.dump(2) + "\n";
}

Instance instance_from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann reports "parse error at line L, column C: ..."
        throw ParseError(e.what());
    }
    if (!doc.is_object()) throw ParseError("instance file: top level must be an object");
    if (field<std::string>(doc, "format", "instance") != kFormatName)
        throw ParseError("instance.format: not a minersel instance file");

    const json& header = doc.contains("header") ? doc.at("header") : json();
    if (!header.is_object()) throw ParseError("instance: missing field 'header'");
    const auto n_miners = int_field(header, "n_miners", "header");
    const auto total_blocks = int_field(header, "total_blocks", "header");
    const auto seed = field<std::uint64_t>(header, "seed", "header");
    ObjectiveSettings settings;
    if (header.contains("reputation_weight"))
        settings.reputation_weight = real_field(header, "reputation_weight", "header");
    if (header.contains("aggregation")) {
        const auto agg = field<std::string>(header, "aggregation", "header");
        if (agg == "sum") settings.aggregation = Aggregation::sum;
        else if (agg == "mean") settings.aggregation = Aggregation::mean;
        else throw ParseError("header.aggregation: expected 'sum' or 'mean'");
    }

    const json& rows = doc.contains("miners") ? doc.at("miners") : json();
    if (!rows.is_array()) throw ParseError("instance: 'miners' must be an array");
    if (static_cast<std::int64_t>(rows.size()) != n_miners)
        throw ParseError(fmt::format("header.n_miners is {} but {} miner records follow", n_miners,
                                     rows.size()));

    std::vector<Miner> miners;
    miners.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string where = fmt::format("miners[{}]", i);
        const json& row = rows[i];
        Miner m;
        const auto id = int_field(row, "id", where);
        if (id < 0) throw ParseError(where + ".id: must be non-negative");
        m.id = static_cast<std::size_t>(id);
        m.stake = real_field(row, "stake", where);
        m.blocks_mined = int_field(row, "blocks_mined", where);
        m.rewards_earned = real_field(row, "rewards_earned", where);
        m.fees_earned = real_field(row, "fees_earned", where);
        const json& devs = row.contains("devices") ? row.at("devices") : json();
        if (!devs.is_array()) throw ParseError(where + ".devices: expected an array");
        for (std::size_t d = 0; d < devs.size(); ++d) {
            const std::string dw = fmt::format("{}.devices[{}]", where, d);
            Device dev;
            dev.name = devs[d].contains("name") ? field<std::string>(devs[d], "name", dw) : "";
            dev.power_watts = real_field(devs[d], "power_watts", dw);
            dev.hash_rate = real_field(devs[d], "hash_rate", dw);
            m.devices.push_back(std::move(dev));
        }
        miners.push_back(std::move(m));
    }

    try {
        return Instance(std::move(miners), total_blocks, seed, settings);
    } catch (const ConfigError& e) {
        throw ParseError(e.what());
    }
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << to_json_text(instance);
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

Instance load_instance(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return instance_from_json_text(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

} // namespace minersel
