#include "glnq/report.hpp"

#include <algorithm>
#include <sstream>

#include "glnq/check.hpp"

namespace glnq::cli {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default: out += c;
        }
    }
    return out;
}

bool needs_csv_quotes(const std::string& s) {
    return s.find_first_of(",\"\n") != std::string::npos;
}

} // namespace

void render_csv(const Report& r, std::ostream& os) {
    auto cell = [&](const std::string& s) {
        if (!needs_csv_quotes(s)) { os << s; return; }
        os << '"';
        for (char c : s) { if (c == '"') os << '"'; os << c; }
        os << '"';
    };
    for (std::size_t i = 0; i < r.columns.size(); ++i) {
        if (i) os << ',';
        cell(r.columns[i]);
    }
    os << '\n';
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            cell(row[i]);
        }
        os << '\n';
    }
}

void render_json(const Report& r, std::ostream& os) {
    os << "{\"config\":{";
    for (std::size_t i = 0; i < r.config.size(); ++i) {
        if (i) os << ',';
        os << '"' << json_escape(r.config[i].first) << "\":\""
           << json_escape(r.config[i].second) << '"';
    }
    os << "},\"columns\":[";
    for (std::size_t i = 0; i < r.columns.size(); ++i) {
        if (i) os << ',';
        os << '"' << json_escape(r.columns[i]) << '"';
    }
    os << "],\"rows\":[";
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < r.rows[i].size(); ++j) {
            if (j) os << ',';
            os << '"' << json_escape(r.rows[i][j]) << '"';
        }
        os << ']';
    }
    os << "],\"verdicts\":[";
    for (std::size_t i = 0; i < r.verdicts.size(); ++i) {
        if (i) os << ',';
        os << '"' << json_escape(r.verdicts[i]) << '"';
    }
    os << "]}\n";
}

void render_pretty(const Report& r, std::ostream& os) {
    if (!r.title.empty()) os << "# " << r.title << '\n';
    for (const auto& [k, v] : r.config) os << "#   " << k << " = " << v << '\n';
    std::vector<std::size_t> width(r.columns.size(), 0);
    for (std::size_t i = 0; i < r.columns.size(); ++i) width[i] = r.columns[i].size();
    for (const auto& row : r.rows)
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) os << "  ";
            os << cells[i];
            if (i + 1 < cells.size())
                os << std::string(width[i] - std::min(width[i], cells[i].size()), ' ');
        }
        os << '\n';
    };
    line(r.columns);
    for (const auto& row : r.rows) line(row);
    for (const auto& v : r.verdicts) os << v << '\n';
}

void render(const Report& r, Format f, std::ostream& os) {
    switch (f) {
        case Format::csv: render_csv(r, os); break;
        case Format::json: render_json(r, os); break;
        case Format::pretty: render_pretty(r, os); break;
    }
}

std::string render_to_string(const Report& r, Format f) {
    std::ostringstream os;
    render(r, f, os);
    return os.str();
}

std::string ratio_string(std::uint64_t num, std::uint64_t den) {
    if (den == 0) return "nan";
    std::uint64_t ip = num / den;
    std::uint64_t rem = num % den;
    std::string out = std::to_string(ip) + ".";
    for (int i = 0; i < 9; ++i) {
        rem *= 10;
        out += static_cast<char>('0' + rem / den);
        rem %= den;
    }
    return out;
}

std::string fraction_string(std::uint64_t num, std::uint64_t den) {
    std::uint64_t a = num, b = den;
    while (b) { std::uint64_t t = a % b; a = b; b = t; }
    if (a == 0) a = 1;
    return std::to_string(num / a) + "/" + std::to_string(den / a);
}

} // namespace glnq::cli
