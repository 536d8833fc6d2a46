#include "picardop/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "picardop/errors.hpp"

namespace picardop {

std::string format_sig12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

double round_sig12(double v) { return std::strtod(format_sig12(v).c_str(), nullptr); }

void CsvTable::add_row(const std::vector<double>& row) {
    std::vector<std::string> cells;
    cells.reserve(row.size());
    for (double v : row) cells.push_back(format_sig12(v));
    rows_.push_back(std::move(cells));
}

void CsvTable::add_row_mixed(const std::vector<std::string>& row) { rows_.push_back(row); }

std::string CsvTable::to_string() const {
    std::ostringstream oss;
    for (std::size_t i = 0; i < header_.size(); ++i) oss << (i ? "," : "") << header_[i];
    oss << '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) oss << (i ? "," : "") << row[i];
        oss << '\n';
    }
    return oss.str();
}

void CsvTable::write(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw config_error("cannot open '" + path.string() + "' for writing");
    out << to_string();
}

std::string dataset_csv_string(const std::vector<TrajectorySample>& data, const GridSpec& grid,
                               double horizon) {
    std::ostringstream oss;
    oss << "# picard-op dataset\n";
    oss << "# schema,1\n";
    oss << "# dim," << grid.dim << "\n";
    oss << "# points_per_axis," << grid.points_per_axis << "\n";
    oss << "# time_nodes," << grid.time_nodes << "\n";
    oss << "# horizon," << format_sig12(horizon) << "\n";
    oss << "# blocks," << data.size() << "\n";
    oss << "row,block,payload\n";
    for (std::size_t i = 0; i < data.size(); ++i) {
        oss << "u0," << i;
        for (double v : data[i].u0.values()) oss << ',' << format_sig12(v);
        oss << '\n';
        for (std::size_t j = 0; j < data[i].queries.size(); ++j) {
            const auto [x, t] = data[i].queries[j];
            oss << "query," << i << ',' << x << ',' << t << ','
                << format_sig12(data[i].targets[j]) << '\n';
        }
    }
    return oss.str();
}

void write_dataset_csv(const std::filesystem::path& path, const std::vector<TrajectorySample>& data,
                       const GridSpec& grid, double horizon) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw config_error("cannot open '" + path.string() + "' for writing");
    out << dataset_csv_string(data, grid, horizon);
}

} // namespace picardop
