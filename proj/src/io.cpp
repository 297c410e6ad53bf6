#include "mincut/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace mincut {

namespace {

struct LineReader {
    std::string_view text;
    std::size_t pos = 0;
    int line_no = 0;

    // next non-comment line; returns false at end of input
    bool next(std::string_view& out) {
        while (pos < text.size()) {
            std::size_t eol = text.find('\n', pos);
            if (eol == std::string_view::npos) eol = text.size();
            std::string_view line = text.substr(pos, eol - pos);
            pos = eol + 1;
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            if (!line.empty() && line.front() == '#') continue;
            out = line;
            return true;
        }
        return false;
    }
};

// splits on blanks; every field must parse as a nonnegative integer
std::vector<long long> parse_fields(std::string_view line, int line_no, const char* what) {
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        const std::string_view tok = line.substr(i, j - i);
        if (tok.front() == '-') throw ParseError(line_no, std::string("negative capacity in ") + what);
        long long value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError(line_no, std::string("malformed ") + what);
        out.push_back(value);
        i = j;
    }
    if (out.empty()) throw ParseError(line_no, std::string("malformed ") + what);
    return out;
}

}  // namespace

ContractibleGraph parse_graph(std::string_view text) {
    LineReader reader{text};
    std::string_view line;
    if (!reader.next(line)) throw ParseError(1, "malformed header: empty input");
    const auto header = parse_fields(line, reader.line_no, "header");
    if (header.size() != 2) throw ParseError(reader.line_no, "malformed header: expected \"n m\"");
    const long long n = header[0];
    const long long m = header[1];
    if (n < 2) throw ParseError(reader.line_no, "malformed header: need at least 2 vertices");
    if (m < 0) throw ParseError(reader.line_no, "malformed header: negative edge count");

    std::vector<EdgeSpec<long long>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long k = 0; k < m; ++k) {
        if (!reader.next(line))
            throw ParseError(reader.line_no, "wrong edge count: expected " + std::to_string(m) +
                                                 " edges, got " + std::to_string(k));
        const auto f = parse_fields(line, reader.line_no, "edge");
        if (f.size() != 3) throw ParseError(reader.line_no, "malformed edge: expected \"u v w\"");
        if (f[0] >= n || f[1] >= n)
            throw ParseError(reader.line_no, "vertex id out of range");
        if (f[0] == f[1]) throw ParseError(reader.line_no, "self-loop edge");
        if (f[0] > f[1])
            throw ParseError(reader.line_no, "edge endpoints must satisfy u < v");
        edges.push_back({static_cast<VertexId>(f[0]), static_cast<VertexId>(f[1]), f[2]});
    }
    if (reader.next(line))
        throw ParseError(reader.line_no, "wrong edge count: extra data after " +
                                             std::to_string(m) + " edges");
    return ContractibleGraph::build<long long>(static_cast<int>(n), edges);
}

std::string serialize_graph(const ContractibleGraph& g) {
    if (g.size() != g.original_size())
        throw InvalidArgument("serialize_graph: graph must be uncontracted");
    const int n = g.size();
    std::ostringstream body;
    long long m = 0;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const auto w = g.capacity(a, b);
            if (w == 0) continue;
            body << a << ' ' << b << ' ' << w << '\n';
            ++m;
        }
    }
    std::ostringstream out;
    out << n << ' ' << m << '\n' << body.str();
    return out.str();
}

ContractibleGraph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

void save_graph_file(const ContractibleGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write graph file: " + path);
    out << serialize_graph(g);
}

}  // namespace mincut
