#include "codegb/text_io.hpp"

#include <fstream>
#include <sstream>

#include "codegb/errors.hpp"

namespace codegb {

namespace {

std::string strip_comment(const std::string& line) {
    const std::size_t hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& why) {
    throw ParseError("line " + std::to_string(line_no) + ": " + why);
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return in;
}

}  // namespace

BinaryMatrix parse_matrix(std::istream& in) {
    std::vector<BitVec> rows;
    std::size_t cols = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string content = strip_comment(line);
        if (blank(content)) continue;
        std::vector<bool> bits;
        for (char c : content) {
            if (c == '0' || c == '1')
                bits.push_back(c == '1');
            else if (c != ' ' && c != '\t' && c != '\r')
                fail(line_no, std::string("unexpected character '") + c + "' in matrix row");
        }
        if (rows.empty())
            cols = bits.size();
        else if (bits.size() != cols)
            fail(line_no, "row has " + std::to_string(bits.size()) + " entries, expected " +
                              std::to_string(cols));
        BitVec row(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i]) row.set(i, true);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("no matrix rows found");
    return BinaryMatrix::from_rows(std::move(rows), cols);
}

BinaryMatrix parse_matrix_file(const std::string& path) {
    auto in = open_or_throw(path);
    try {
        return parse_matrix(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Graph parse_graph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t vertex_count = 0;
    std::vector<Graph::Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string content = strip_comment(line);
        if (blank(content)) continue;
        std::istringstream fields(content);
        if (!have_header) {
            std::string tag;
            fields >> tag;
            if (tag != "V") fail(line_no, "expected 'V <count>' header, got '" + content + "'");
            if (!(fields >> vertex_count)) fail(line_no, "bad vertex count");
            std::string extra;
            if (fields >> extra) fail(line_no, "unexpected token '" + extra + "' after header");
            have_header = true;
            continue;
        }
        std::size_t u = 0;
        std::size_t v = 0;
        if (!(fields >> u >> v)) fail(line_no, "expected edge 'u v', got '" + content + "'");
        std::string extra;
        if (fields >> extra) fail(line_no, "unexpected token '" + extra + "' after edge");
        edges.push_back({u, v});
    }
    if (!have_header) throw ParseError("missing 'V <count>' header");
    try {
        return Graph(vertex_count, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Graph parse_graph_file(const std::string& path) {
    auto in = open_or_throw(path);
    try {
        return parse_graph(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

BitVec parse_bit_string(std::string_view text) {
    if (text.empty()) throw ParseError("empty bit string");
    BitVec out(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            out.set(i, true);
        else if (text[i] != '0')
            throw ParseError("bad bit string '" + std::string(text) +
                             "': only '0'/'1' allowed");
    }
    return out;
}

}  // namespace codegb
