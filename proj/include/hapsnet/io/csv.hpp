#pragma once

#include "hapsnet/error.hpp"

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

namespace hapsnet::io
{

/// Nine significant digits so diffs between runs stay meaningful.
inline std::string fmt9(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

struct CsvTable
{
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add(std::vector<std::string> row)
    {
        require(row.size() == header.size(), "csv: row width does not match header");
        rows.push_back(std::move(row));
    }

    /// Comma-separated, header first, LF line endings.
    std::string str() const
    {
        std::string out;
        auto line = [&out](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i)
                out += (i ? "," : "") + cells[i];
            out += '\n';
        };
        line(header);
        for (const auto& r : rows)
            line(r);
        return out;
    }
};

inline void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

} // namespace hapsnet::io
