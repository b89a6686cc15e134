// SPDX-License-Identifier: Apache-2.0
#include "tafnoise/io/csv.hpp"

#include "tafnoise/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace tafnoise::io {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_row(const std::string& line)
{
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ','))
        cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',')
        cells.emplace_back();
    return cells;
}

}  // namespace

std::string format_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

CsvTable CsvTable::read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInputError("cannot open '" + path + "' for reading");
    return read_stream(in);
}

CsvTable CsvTable::read_stream(std::istream& in)
{
    CsvTable t;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#')
            continue;
        auto cells = split_row(stripped);
        if (!have_header) {
            t.header_ = std::move(cells);
            for (const auto& h : t.header_)
                if (h.empty())
                    throw ParseError("empty column name in header", line_no);
            have_header = true;
            continue;
        }
        if (cells.size() != t.header_.size())
            throw ParseError("row has " + std::to_string(cells.size()) +
                                 " cells, header has " +
                                 std::to_string(t.header_.size()),
                             line_no);
        t.rows_.push_back(std::move(cells));
        t.source_lines_.push_back(line_no);
    }
    if (!have_header)
        throw ParseError("file contains no header row", line_no ? line_no : 1);
    return t;
}

CsvTable CsvTable::with_columns(std::vector<std::string> names)
{
    CsvTable t;
    t.header_ = std::move(names);
    return t;
}

bool CsvTable::has_column(const std::string& name) const
{
    return std::find(header_.begin(), header_.end(), name) != header_.end();
}

std::size_t CsvTable::column_index(const std::string& name) const
{
    const auto it = std::find(header_.begin(), header_.end(), name);
    if (it == header_.end())
        throw InvalidInputError("missing required column '" + name + "'");
    return static_cast<std::size_t>(it - header_.begin());
}

const std::string& CsvTable::cell(std::size_t row,
                                  const std::string& column) const
{
    return rows_.at(row)[column_index(column)];
}

double CsvTable::number(std::size_t row, const std::string& column) const
{
    const std::string& text = cell(row, column);
    double value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        const std::size_t line =
            row < source_lines_.size() ? source_lines_[row] : row + 2;
        throw ParseError("cannot parse '" + text + "' in column '" + column +
                             "' as a number",
                         line);
    }
    return value;
}

Eigen::ArrayXd CsvTable::numeric_column(const std::string& column) const
{
    Eigen::ArrayXd out(static_cast<Eigen::Index>(row_count()));
    for (std::size_t r = 0; r < row_count(); ++r)
        out[static_cast<Eigen::Index>(r)] = number(r, column);
    return out;
}

void CsvTable::append_row(const std::vector<std::string>& cells)
{
    if (cells.size() != header_.size())
        throw InvalidInputError("row width does not match header");
    rows_.push_back(cells);
    source_lines_.push_back(0);
}

void CsvTable::set_column(const std::string& name,
                          const Eigen::ArrayXd& values)
{
    if (static_cast<std::size_t>(values.size()) != row_count())
        throw InvalidInputError("column length does not match table");
    std::size_t idx;
    if (has_column(name)) {
        idx = column_index(name);
    } else {
        header_.push_back(name);
        idx = header_.size() - 1;
        for (auto& row : rows_)
            row.emplace_back();
    }
    for (std::size_t r = 0; r < row_count(); ++r)
        rows_[r][idx] = format_number(values[static_cast<Eigen::Index>(r)]);
}

std::string CsvTable::to_string() const
{
    std::ostringstream out;
    for (std::size_t c = 0; c < header_.size(); ++c)
        out << header_[c] << (c + 1 < header_.size() ? "," : "");
    out << '\n';
    for (const auto& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << row[c] << (c + 1 < row.size() ? "," : "");
        out << '\n';
    }
    return out.str();
}

void CsvTable::write_file(const std::string& path) const
{
    const std::string body = to_string();  // compose first, then write
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        throw InvalidInputError("cannot open '" + path + "' for writing");
    out << body;
    if (!out)
        throw InvalidInputError("failed writing '" + path + "'");
}

}  // namespace tafnoise::io
