#include "tollcvx/io.hpp"

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

namespace tollcvx {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

bool parse_two_ints(const std::string& s, long& a, long& b) {
    std::istringstream in(s);
    std::string tail;
    if (!(in >> a >> b)) return false;
    if (in >> tail) return false;
    return true;
}

}  // namespace

Graph parse_edgelist(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip_comment(raw);
        if (blank(line)) continue;
        long a, b;
        if (!parse_two_ints(line, a, b))
            throw ParseError("line " + std::to_string(line_no) + ": expected two integers", line_no);
        if (n < 0) {
            if (a < 0 || b < 0)
                throw ParseError("line " + std::to_string(line_no) + ": malformed header", line_no);
            n = a;
            m = b;
            continue;
        }
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw ParseError("line " + std::to_string(line_no) + ": index " +
                                 std::to_string(a < 0 || a >= n ? a : b) + " out of range for n=" +
                                 std::to_string(n),
                             line_no);
        if (a == b)
            throw ParseError("line " + std::to_string(line_no) + ": self-loop " +
                                 std::to_string(a) + " " + std::to_string(b),
                             line_no);
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    if (n < 0) throw ParseError("missing header line \"n m\"");
    if (static_cast<long>(edges.size()) != m)
        throw ParseError("header announced " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string serialize_edgelist(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.vertex_count() << ' ' << es.size() << '\n';
    for (const auto& [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    // optional format header, then trailing whitespace
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw ParseError("empty graph6 string");

    unsigned char first = static_cast<unsigned char>(s[0]);
    if (first == 126) throw ParseError("extended graph6 size headers are not supported");
    if (first < 63 || first > 126)
        throw ParseError("graph6 byte out of range: " + std::to_string(first));
    int n = first - 63;

    int bits = n * (n - 1) / 2;
    std::size_t need = 1 + static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() != need)
        throw ParseError("graph6 length mismatch: expected " + std::to_string(need) +
                         " bytes for n=" + std::to_string(n) + ", got " + std::to_string(s.size()));

    Graph g(n);
    int bit = 0;
    // upper triangle, column-major: (0,1); (0,2),(1,2); (0,3),...
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            unsigned char c = static_cast<unsigned char>(s[1 + static_cast<std::size_t>(bit / 6)]);
            if (c < 63 || c > 126)
                throw ParseError("graph6 byte out of range: " + std::to_string(c));
            if ((c - 63) >> (5 - bit % 6) & 1) g.add_edge(u, v);
        }
    }
    // padding bits must be zero for a canonical string; tolerate them on input
    return g;
}

std::string serialize_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62) throw ParseError("graph6 output supports at most 62 vertices");
    std::string s(1, static_cast<char>(n + 63));
    int bits = n * (n - 1) / 2;
    std::string data(static_cast<std::size_t>((bits + 5) / 6), 0);
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (g.has_edge(u, v)) data[static_cast<std::size_t>(bit / 6)] |= 1 << (5 - bit % 6);
    for (char& c : data) c = static_cast<char>(c + 63);
    return s + data;
}

Graph GraphDocument::parse() const {
    return format == GraphFormat::edgelist ? parse_edgelist(payload) : parse_graph6(payload);
}

GraphDocument GraphDocument::from_graph(const Graph& g, GraphFormat format) {
    GraphDocument doc;
    doc.format = format;
    doc.payload = format == GraphFormat::edgelist ? serialize_edgelist(g) : serialize_graph6(g);
    return doc;
}

namespace named {

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph star(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph fig3_spider() {
    return Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}});
}

Graph fig3_gprime() {
    // b0,b1,b2 = 0,1,2; t0,t1,t2 = 3,4,5; l = 6; r = 7
    return Graph::from_edges(8, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 6}, {6, 3},
                                 {2, 7}, {7, 5}, {6, 2}, {3, 1}, {3, 7}, {4, 2}});
}

}  // namespace named

Graph named_graph(const std::string& spec) {
    std::string name = spec;
    std::optional<int> param;
    auto pos = spec.find(':');
    if (pos != std::string::npos) {
        name = spec.substr(0, pos);
        try {
            param = std::stoi(spec.substr(pos + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid parameter in \"" + spec + "\"");
        }
    }
    auto need = [&](const char* what) {
        if (!param) throw std::invalid_argument(std::string(what) + " requires a parameter");
        return *param;
    };
    if (name == "path") return named::path(need("path"));
    if (name == "cycle") return named::cycle(need("cycle"));
    if (name == "complete") return named::complete(need("complete"));
    if (name == "star") return named::star(need("star"));
    if (name == "fig3-spider") return named::fig3_spider();
    if (name == "fig3-gprime") return named::fig3_gprime();
    throw std::invalid_argument("unknown graph family \"" + name + "\"");
}

}  // namespace tollcvx
