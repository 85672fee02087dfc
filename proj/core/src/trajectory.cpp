#include "metaopt/trajectory.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "metaopt/diagnostics.hpp"

namespace metaopt {

std::string format_real(double value) {
    char buf[32];
    const int len = std::snprintf(buf, sizeof buf, "%.17g", value);
    return std::string(buf, static_cast<std::size_t>(len));
}

}  // namespace metaopt

namespace metaopt::diagnostics {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream in(line);
    std::string cell;
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

double parse_real(const std::string& text) {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("bad number '" + text + "'");
    return v;
}

std::uint64_t parse_unsigned(const std::string& text) {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument("bad integer '" + text + "'");
    return v;
}

}  // namespace

void write_trajectory_csv(const TrajectoryRecord& record, std::ostream& out) {
    const std::size_t d =
        record.checkpoints.empty() ? 0 : record.checkpoints.front().state.size();
    out << "run_id,seed,evaluations,t";
    for (std::size_t j = 0; j < d; ++j) out << ",x" << j;
    out << ",f,f_best\n";
    for (const auto& c : record.checkpoints) {
        if (c.state.size() != d) {
            throw std::invalid_argument("trajectory: checkpoints have mixed dimensions");
        }
        out << record.run_id << ',' << record.seed << ',' << record.evaluations << ',' << c.t;
        for (double x : c.state) out << ',' << format_real(x);
        out << ',' << format_real(c.f) << ',' << format_real(c.f_best) << '\n';
    }
}

TrajectoryRecord read_trajectory_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("trajectory: missing header");
    const auto header = split_csv_line(line);
    if (header.size() < 6 || header[0] != "run_id" || header[1] != "seed" ||
        header[2] != "evaluations" || header[3] != "t" || header[header.size() - 2] != "f" ||
        header.back() != "f_best") {
        throw std::runtime_error("trajectory: unexpected header '" + line + "'");
    }
    const std::size_t d = header.size() - 6;
    TrajectoryRecord record;
    bool first = true;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        const auto cells = split_csv_line(line);
        if (cells.size() != header.size()) {
            throw std::runtime_error("trajectory: row " + std::to_string(row) +
                                     " has the wrong number of columns");
        }
        try {
            const auto run_id = parse_unsigned(cells[0]);
            const auto seed = parse_unsigned(cells[1]);
            const auto evals = parse_unsigned(cells[2]);
            if (first) {
                record.run_id = run_id;
                record.seed = seed;
                record.evaluations = evals;
                first = false;
            }
            Checkpoint c;
            c.t = parse_unsigned(cells[3]);
            c.state.resize(d);
            for (std::size_t j = 0; j < d; ++j) c.state[j] = parse_real(cells[4 + j]);
            c.f = parse_real(cells[4 + d]);
            c.f_best = parse_real(cells[5 + d]);
            record.checkpoints.push_back(std::move(c));
        } catch (const std::logic_error& e) {
            throw std::runtime_error("trajectory: row " + std::to_string(row) + ": " + e.what());
        }
    }
    return record;
}

void export_trajectory(const TrajectoryRecord& record, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    write_trajectory_csv(record, out);
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

TrajectoryRecord import_trajectory(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    try {
        return read_trajectory_csv(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

}  // namespace metaopt::diagnostics
