#pragma once

#include <string>

#include "incidence.hpp"

namespace hypernest {

/// CSV form of a matrix: header row of column labels behind the row-kind
/// cell, one line per row, integer cells, LF line endings.
inline std::string to_csv(const IncidenceMatrix& m) {
    std::string out = m.row_kind;
    for (const std::string& label : m.col_labels) out += "," + label;
    out += "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += m.row_labels[r];
        for (std::size_t c = 0; c < m.columns(); ++c) out += "," + std::to_string(m.cells[r][c]);
        out += "\n";
    }
    return out;
}

} // namespace hypernest
