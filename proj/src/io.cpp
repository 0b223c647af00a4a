#include "fss/io.hpp"

#include <fstream>
#include <sstream>

namespace fss {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
{
}

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> content_lines(std::istream& in)
{
    std::vector<Line> out;
    std::string text;
    int number = 0;
    while (std::getline(in, text)) {
        ++number;
        std::istringstream ls(text);
        Line line{number, {}};
        for (std::string tok; ls >> tok;) line.tokens.push_back(tok);
        if (line.tokens.empty() || line.tokens.front()[0] == '#') continue;
        out.push_back(std::move(line));
    }
    return out;
}

int parse_count(const Line& line, const std::string& tok, const char* what)
{
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != tok.size() || tok.empty() || value < 1)
        throw ParseError(line.number, std::string("expected a positive ") + what + ", got '" + tok + "'");
    return value;
}

std::ifstream open(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return in;
}

}  // namespace

GraphMap parse_map(std::istream& in)
{
    const auto lines = content_lines(in);
    if (lines.empty()) throw ParseError(0, "empty map file");
    const Line& head = lines.front();
    if (head.tokens.size() != 3 || head.tokens[0] != "map") throw ParseError(head.number, "expected header 'map n m'");
    const int n = parse_count(head, head.tokens[1], "source edge count");
    const int m = parse_count(head, head.tokens[2], "target edge count");
    if (static_cast<int>(lines.size()) - 1 != n)
        throw ParseError(lines.back().number, "expected " + std::to_string(n) + " word lines, found " +
                                                  std::to_string(lines.size() - 1));
    std::vector<EdgeWord> words;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        std::vector<Letter> letters;
        for (const auto& tok : line.tokens) {
            if (tok == "1") {
                if (line.tokens.size() > 1) throw ParseError(line.number, "'1' must stand alone");
                continue;
            }
            if (tok.size() < 2 || (tok[0] != 'e' && tok[0] != 'E'))
                throw ParseError(line.number, "bad letter '" + tok + "'");
            const int edge = parse_count(line, tok.substr(1), "edge index");
            if (edge > m) throw ParseError(line.number, "edge " + std::to_string(edge) + " exceeds m = " + std::to_string(m));
            letters.push_back({edge, tok[0] == 'e' ? 1 : -1});
        }
        words.emplace_back(m, letters);
    }
    return GraphMap(n, m, std::move(words));
}

BraidWord parse_braid(std::istream& in)
{
    const auto lines = content_lines(in);
    if (lines.empty()) throw ParseError(0, "empty braid file");
    const Line& head = lines.front();
    if (head.tokens.size() != 2 || head.tokens[0] != "braid") throw ParseError(head.number, "expected header 'braid n'");
    const int n = parse_count(head, head.tokens[1], "strand count");
    std::vector<BraidLetter> letters;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        for (std::string tok : line.tokens) {
            int exponent = 1;
            if (!tok.empty() && tok.back() == '\'') {
                exponent = -1;
                tok.pop_back();
            }
            if (tok.size() < 2 || tok[0] != 's') throw ParseError(line.number, "bad generator '" + tok + "'");
            const int g = parse_count(line, tok.substr(1), "generator index");
            if (g > n - 1) throw ParseError(line.number, "generator s" + std::to_string(g) + " not in B_" + std::to_string(n));
            letters.push_back({g, exponent});
        }
    }
    return BraidWord(n, std::move(letters));
}

GraphMap read_map_file(const std::string& path)
{
    auto in = open(path);
    return parse_map(in);
}

BraidWord read_braid_file(const std::string& path)
{
    auto in = open(path);
    return parse_braid(in);
}

Format parse_format(const std::string& name)
{
    if (name == "table") return Format::Table;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw std::invalid_argument("unknown format '" + name + "'");
}

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

void write_grid(std::ostream& out, const Grid& grid, Format format)
{
    if (format == Format::Json) {
        out << grid_json(grid).dump(2) << '\n';
        return;
    }
    const char sep = format == Format::Csv ? ',' : '\t';
    auto field = [&](const std::string& s) { return format == Format::Csv ? csv_field(s) : s; };
    out << field(grid.corner);
    for (const auto& c : grid.column_labels) out << sep << field(c);
    out << '\n';
    for (std::size_t r = 0; r < grid.cells.size(); ++r) {
        out << field(grid.row_labels[r]);
        for (const auto& v : grid.cells[r]) out << sep << v;
        out << '\n';
    }
}

nlohmann::ordered_json grid_json(const Grid& grid)
{
    nlohmann::ordered_json j;
    j["columns"] = grid.column_labels;
    j["rows"] = grid.row_labels;
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (const auto& row : grid.cells) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& v : row) r.push_back(v.get_str());
        values.push_back(std::move(r));
    }
    j["values"] = std::move(values);
    return j;
}

Grid matrix_grid(const IntMatrix& m, const std::vector<EdgeTuple>& row_legend,
                 const std::vector<EdgeTuple>& column_legend)
{
    Grid g;
    g.corner = "row/col";
    for (const auto& j : column_legend) g.column_labels.push_back(j.str());
    for (const auto& j : row_legend) g.row_labels.push_back(j.str());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<Integer> row;
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        g.cells.push_back(std::move(row));
    }
    return g;
}

}  // namespace fss
