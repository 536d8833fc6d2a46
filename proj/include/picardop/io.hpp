#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "picardop/grid.hpp"
#include "picardop/risk.hpp"

namespace picardop {

/// Shortest form with 12 significant digits; all numbers cross a serialization
/// boundary through this, which makes reruns byte-identical.
std::string format_sig12(double v);

/// Round to the double nearest its 12-significant-digit decimal form.
double round_sig12(double v);

/// Minimal CSV emitter: one header row, %.12g numbers, LF line endings.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}
    void add_row(const std::vector<double>& row);
    void add_row_mixed(const std::vector<std::string>& row);
    std::string to_string() const;
    void write(const std::filesystem::path& path) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// Dataset export: a GridSpec/meta header (comment lines), then one `u0` row
/// per block with the flat field values and one `query` row per query point.
void write_dataset_csv(const std::filesystem::path& path, const std::vector<TrajectorySample>& data,
                       const GridSpec& grid, double horizon);
std::string dataset_csv_string(const std::vector<TrajectorySample>& data, const GridSpec& grid,
                               double horizon);

} // namespace picardop
