#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace glnq::cli {

enum class Format { csv, json, pretty };

// Everything a subcommand needs; parsed by the CLI front end, constructed
// directly by tests.
struct RunConfig {
    std::string command;
    std::uint64_t q = 3;
    std::optional<std::uint64_t> q_max;
    unsigned n = 2;
    std::optional<unsigned> n_max;
    std::uint64_t X = 1000;
    std::uint64_t ell = 2;
    long long r = 1;
    unsigned k = 1;
    unsigned n0 = 1;
    Format format = Format::pretty;
    std::string out_path;
    unsigned jobs = 1;
    std::uint64_t budget = 1ull << 24;
    std::optional<double> density_tol; // verify-only override
};

// Tabular result with pre-rendered cells, so the CSV and JSON emitters
// carry byte-identical numerics.
struct Report {
    std::string title;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> verdicts;
};

void render_csv(const Report& r, std::ostream& os);
void render_json(const Report& r, std::ostream& os);
void render_pretty(const Report& r, std::ostream& os);
void render(const Report& r, Format f, std::ostream& os);
std::string render_to_string(const Report& r, Format f);

// Fixed-point decimal num/den with 9 digits, integer math only.
std::string ratio_string(std::uint64_t num, std::uint64_t den);
// Exact fraction "num/den".
std::string fraction_string(std::uint64_t num, std::uint64_t den);

} // namespace glnq::cli
