#include "minersel/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <fmt/core.h>

#include "minersel/errors.hpp"

namespace minersel {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

double parse_real(const std::string& s, std::size_t line, const char* column) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError(fmt::format("line {}: column '{}' is not a number: '{}'", line, column, s));
}

std::uint64_t parse_unsigned(const std::string& s, std::size_t line, const char* column) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw ParseError(fmt::format("line {}: column '{}' is not a non-negative integer: '{}'", line, column, s));
    return v;
}

void expect_header(const std::vector<std::string>& lines, const char* header) {
    if (lines.empty() || lines.front() != header)
        throw ParseError(fmt::format("line 1: expected header '{}'", header));
}

} // namespace

std::string front_csv(const FrontSet& front, const Instance& instance) {
    if (!is_nondominated_set(front.members()))
        throw std::logic_error("refusing to write a front with dominated or duplicate members");
    std::string out = "mask,energy_kwh,reputation,f1,f2\n";
    for (const auto& m : front) {
        const auto p = normalize(m.objectives, instance);
        out += fmt::format("{},{},{},{},{}\n", m.mask.to_string(), m.objectives.energy_kwh,
                           m.objectives.reputation, p.f1, p.f2);
    }
    return out;
}

void write_front_csv(const std::filesystem::path& path, const FrontSet& front, const Instance& instance) {
    write_text_file(path, front_csv(front, instance));
}

std::vector<FrontRow> parse_front_csv(const std::string& text) {
    const auto lines = lines_of(text);
    expect_header(lines, "mask,energy_kwh,reputation,f1,f2");
    std::vector<FrontRow> rows;
    std::vector<FrontMember> members;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        const auto f = split(lines[i]);
        const std::size_t ln = i + 1;
        if (f.size() != 5) throw ParseError(fmt::format("line {}: expected 5 columns, found {}", ln, f.size()));
        FrontRow row;
        try {
            row.mask = SelectionMask::from_string(f[0]);
        } catch (const std::invalid_argument&) {
            throw ParseError(fmt::format("line {}: column 'mask' is not a bitstring", ln));
        }
        row.objectives = {parse_real(f[1], ln, "energy_kwh"), parse_real(f[2], ln, "reputation")};
        row.point = {parse_real(f[3], ln, "f1"), parse_real(f[4], ln, "f2")};
        members.push_back({row.mask, row.objectives});
        rows.push_back(std::move(row));
    }
    if (!is_nondominated_set(members)) throw ParseError("front file contains dominated or duplicate rows");
    return rows;
}

std::vector<FrontRow> read_front_csv(const std::filesystem::path& path) {
    try {
        return parse_front_csv(read_text_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

std::string hypervolume_csv(const std::vector<HypervolumeRow>& rows) {
    std::string out = "algorithm,run,seed,hypervolume\n";
    for (const auto& r : rows) out += fmt::format("{},{},{},{}\n", r.algorithm, r.run, r.seed, r.hypervolume);
    return out;
}

std::vector<HypervolumeRow> parse_hypervolume_csv(const std::string& text) {
    const auto lines = lines_of(text);
    expect_header(lines, "algorithm,run,seed,hypervolume");
    std::vector<HypervolumeRow> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        const auto f = split(lines[i]);
        const std::size_t ln = i + 1;
        if (f.size() != 4) throw ParseError(fmt::format("line {}: expected 4 columns, found {}", ln, f.size()));
        if (f[0].empty()) throw ParseError(fmt::format("line {}: empty algorithm name", ln));
        HypervolumeRow row;
        row.algorithm = f[0];
        row.run = parse_unsigned(f[1], ln, "run");
        row.seed = parse_unsigned(f[2], ln, "seed");
        row.hypervolume = parse_real(f[3], ln, "hypervolume");
        if (!std::isfinite(row.hypervolume))
            throw ParseError(fmt::format("line {}: hypervolume must be finite", ln));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<HypervolumeRow> read_hypervolume_csv(const std::filesystem::path& path) {
    try {
        return parse_hypervolume_csv(read_text_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

std::string verdict(const stats::TestReport& report) {
    if (report.degenerate) return "degenerate";
    return report.p_value < kSignificance ? "significant" : "not-significant";
}

std::vector<PairReport> pairwise_reports(const std::vector<HypervolumeRow>& rows) {
    std::vector<std::string> names;
    std::vector<std::vector<double>> values;
    for (const auto& r : rows) {
        std::size_t k = 0;
        while (k < names.size() && names[k] != r.algorithm) ++k;
        if (k == names.size()) {
            names.push_back(r.algorithm);
            values.emplace_back();
        }
        values[k].push_back(r.hypervolume);
    }
    std::vector<PairReport> reports;
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            const stats::Sample x(values[i], names[i]);
            const stats::Sample y(values[j], names[j]);
            reports.push_back({names[i], names[j], stats::rank_sum_test(x, y)});
        }
    return reports;
}

std::string stats_csv(const std::vector<PairReport>& reports) {
    std::string out = "pair,U,p,method,A12,verdict\n";
    for (const auto& r : reports)
        out += fmt::format("{}-vs-{},{},{},{},{},{}\n", r.first, r.second, r.test.u_statistic,
                           r.test.p_value, stats::method_name(r.test.method), r.test.a12, verdict(r.test));
    return out;
}

std::string plot_data_csv(const std::vector<PlotSeries>& series) {
    std::string out = "series,energy_kwh,reputation\n";
    for (const auto& s : series)
        for (const auto& m : s.front)
            out += fmt::format("{},{},{}\n", s.name, m.objectives.energy_kwh, m.objectives.reputation);
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

} // namespace minersel
