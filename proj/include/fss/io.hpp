#pragma once

// Text formats read by the command line tool and the table/json/csv writers.
//
//   map n m            braid n
//   e2                 s1 s2'
//   e2 e1 E2           s1
//
// Blank lines and lines starting with '#' are skipped. A map file holds one
// word per source edge; a braid file holds any number of token lines, read
// as one word.

#include "fss/braid.hpp"
#include "fss/homology.hpp"
#include "fss/maps.hpp"

#include <json.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace fss {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what);
    [[nodiscard]] int line() const { return line_; }

private:
    int line_;
};

GraphMap parse_map(std::istream& in);
BraidWord parse_braid(std::istream& in);
GraphMap read_map_file(const std::string& path);
BraidWord read_braid_file(const std::string& path);

enum class Format { Table, Json, Csv };

Format parse_format(const std::string& name);

/// A labelled integer grid; every writer emits exact decimal strings.
struct Grid {
    std::string corner;
    std::vector<std::string> column_labels;
    std::vector<std::string> row_labels;
    std::vector<std::vector<Integer>> cells;
};

/// Table: tab separated. Csv: comma separated with quoted labels. Json: an
/// object with "columns", "rows" and "values" (integers as strings).
void write_grid(std::ostream& out, const Grid& grid, Format format);
nlohmann::ordered_json grid_json(const Grid& grid);

Grid matrix_grid(const IntMatrix& m, const std::vector<EdgeTuple>& row_legend,
                 const std::vector<EdgeTuple>& column_legend);

}  // namespace fss
