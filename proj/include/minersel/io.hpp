#pragma once

// Comma-separated result files. Every file starts with a header row; reals
// are written in shortest round-trip form.
//
//   front file    mask,energy_kwh,reputation,f1,f2
//   hv table      algorithm,run,seed,hypervolume
//   stats report  pair,U,p,method,A12,verdict
//   plot data     series,energy_kwh,reputation

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "minersel/front.hpp"
#include "minersel/instance.hpp"
#include "minersel/objectives.hpp"
#include "minersel/stats.hpp"

namespace minersel {

struct FrontRow {
    SelectionMask mask;
    ObjectiveVector objectives;
    NormalizedPoint point;
};

/// Throws std::logic_error if the front is not internally non-dominated.
std::string front_csv(const FrontSet& front, const Instance& instance);
void write_front_csv(const std::filesystem::path& path, const FrontSet& front, const Instance& instance);
/// Throws ParseError (with line number) on malformed rows or a front that
/// is not internally non-dominated.
std::vector<FrontRow> read_front_csv(const std::filesystem::path& path);
std::vector<FrontRow> parse_front_csv(const std::string& text);

struct HypervolumeRow {
    std::string algorithm;
    std::size_t run = 0;
    std::uint64_t seed = 0;
    double hypervolume = 0.0;
};

std::string hypervolume_csv(const std::vector<HypervolumeRow>& rows);
std::vector<HypervolumeRow> parse_hypervolume_csv(const std::string& text);
std::vector<HypervolumeRow> read_hypervolume_csv(const std::filesystem::path& path);

struct PairReport {
    std::string first;
    std::string second;
    stats::TestReport test;
};

inline constexpr double kSignificance = 0.05;

/// "significant", "not-significant" or "degenerate" at kSignificance.
std::string verdict(const stats::TestReport& report);

/// Pairwise tests between algorithms in first-appearance order.
std::vector<PairReport> pairwise_reports(const std::vector<HypervolumeRow>& rows);
std::string stats_csv(const std::vector<PairReport>& reports);

struct PlotSeries {
    std::string name;
    FrontSet front;
};

std::string plot_data_csv(const std::vector<PlotSeries>& series);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

} // namespace minersel
