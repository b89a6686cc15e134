// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>

#include <iosfwd>
#include <string>
#include <vector>

namespace tafnoise::io {

/// Comma-separated table with a header row. Lines starting with '#' and
/// blank lines are comments; columns are addressed by name, never by
/// position. Numeric parsing failures report the original 1-based line.
class CsvTable {
public:
    static CsvTable read_file(const std::string& path);
    static CsvTable read_stream(std::istream& in);

    static CsvTable with_columns(std::vector<std::string> names);

    std::size_t row_count() const { return rows_.size(); }
    std::size_t column_count() const { return header_.size(); }
    const std::vector<std::string>& columns() const { return header_; }

    bool has_column(const std::string& name) const;
    std::size_t column_index(const std::string& name) const;  // throws

    const std::string& cell(std::size_t row, const std::string& column) const;
    double number(std::size_t row, const std::string& column) const;
    Eigen::ArrayXd numeric_column(const std::string& column) const;

    void append_row(const std::vector<std::string>& cells);
    /// Adds (or replaces) a numeric column, formatted with %.12g.
    void set_column(const std::string& name, const Eigen::ArrayXd& values);

    /// Deterministic serialization (header + rows, '\n' line ends).
    std::string to_string() const;
    void write_file(const std::string& path) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
    std::vector<std::size_t> source_lines_;  // for parse diagnostics
};

/// %.12g rendering used for all numeric CSV output.
std::string format_number(double v);

}  // namespace tafnoise::io
