#include "mkp/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <sstream>

namespace mkp {

std::optional<std::size_t> WeightedGraph::edge_index(int a, int b) const {
    Edge e = make_edge(a, b);
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges.begin());
}

double WeightedGraph::weight_of(int a, int b) const {
    auto idx = edge_index(a, b);
    if (!idx) throw std::out_of_range("no such edge");
    return weights[*idx];
}

WeightedGraph make_graph(int n, std::vector<std::pair<Edge, double>> items) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    WeightedGraph g;
    g.n = n;
    g.edges.reserve(items.size());
    g.weights.reserve(items.size());
    for (const auto& [e, w] : items) {
        if (e.u < 1 || e.v > n) throw std::invalid_argument("vertex out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop");
        if (e.u > e.v) throw std::invalid_argument("edge not normalized");
        if (!g.edges.empty() && g.edges.back() == e) throw std::invalid_argument("duplicate edge");
        g.edges.push_back(e);
        g.weights.push_back(w);
    }
    return g;
}

std::string format_number(double x) {
    if (x == 0.0) return "0";  // avoid "-0"
    double r = std::round(x);
    if (r == x && std::abs(x) < 9.2e18) {
        return std::to_string(static_cast<long long>(r));
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

namespace {

// One whitespace-separated token scan of a .wg line; '#' cuts a comment.
std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == '#') break;
        if (c == ' ' || c == '\t' || c == '\r') {
            if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

long long parse_int(const std::string& tok, int line) {
    long long v = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw ParseError(line, "expected integer, got '" + tok + "'");
    return v;
}

double parse_decimal(const std::string& tok, int line) {
    double v = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw ParseError(line, "expected decimal weight, got '" + tok + "'");
    return v;
}

}  // namespace

WeightedGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    int n = -1;
    long long m = -1;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks.size() != 2) throw ParseError(lineno, "header must be 'n m'");
        n = static_cast<int>(parse_int(toks[0], lineno));
        m = parse_int(toks[1], lineno);
        if (n < 1) throw ParseError(lineno, "vertex count must be positive");
        if (m < 0) throw ParseError(lineno, "negative edge count");
        break;
    }
    if (n < 0) throw ParseError(lineno, "missing header");

    WeightedGraph g;
    g.n = n;
    std::vector<std::pair<Edge, double>> items;
    long long seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks.size() != 3) throw ParseError(lineno, "edge line must be 'i j w'");
        int i = static_cast<int>(parse_int(toks[0], lineno));
        int j = static_cast<int>(parse_int(toks[1], lineno));
        double w = parse_decimal(toks[2], lineno);
        if (i < 1 || i > n || j < 1 || j > n)
            throw ParseError(lineno, "vertex index out of range 1.." + std::to_string(n));
        if (i == j) throw ParseError(lineno, "self-loop at vertex " + std::to_string(i));
        if (i > j) throw ParseError(lineno, "edge endpoints must satisfy i < j");
        items.push_back({Edge{i, j}, w});
        ++seen;
        if (seen > m) throw ParseError(lineno, "more edges than declared");
    }
    if (seen != m)
        throw ParseError(lineno, "declared " + std::to_string(m) + " edges, found " +
                                     std::to_string(seen));

    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t t = 0; t + 1 < items.size(); ++t) {
        if (items[t].first == items[t + 1].first) {
            // Re-scan for the offending line number.
            std::istringstream again(text);
            int ln = 0;
            int hits = 0;
            while (std::getline(again, line)) {
                ++ln;
                auto toks = tokens_of(line);
                if (toks.size() == 3 &&
                    parse_int(toks[0], ln) == items[t].first.u &&
                    parse_int(toks[1], ln) == items[t].first.v &&
                    ++hits == 2)
                    throw ParseError(ln, "duplicate edge {" + std::to_string(items[t].first.u) +
                                             "," + std::to_string(items[t].first.v) + "}");
            }
            throw ParseError(lineno, "duplicate edge");
        }
    }
    for (auto& [e, w] : items) {
        g.edges.push_back(e);
        g.weights.push_back(w);
    }
    return g;
}

std::string emit_graph(const WeightedGraph& g) {
    std::string out = std::to_string(g.n) + " " + std::to_string(g.edges.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        out += "\n" + std::to_string(g.edges[i].u) + " " + std::to_string(g.edges[i].v) + " " +
               format_number(g.weights[i]);
    }
    return out;
}

bool is_connected(const WeightedGraph& g) {
    if (g.n <= 1) return true;
    std::vector<std::vector<int>> adj(g.n + 1);
    for (const Edge& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<uint8_t> seen(g.n + 1, 0);
    std::vector<int> stack = {1};
    seen[1] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == g.n;
}

std::vector<int> AdjMatrix::neighbors(int v) const {
    std::vector<int> out;
    for (int w = 1; w <= n; ++w)
        if (w != v && at(v, w)) out.push_back(w);
    return out;
}

std::vector<Edge> AdjMatrix::edge_list() const {
    std::vector<Edge> out;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (at(u, v)) out.push_back({u, v});
    return out;
}

AdjMatrix adjacency(const WeightedGraph& g) { return adjacency(g.n, g.edges); }

AdjMatrix adjacency(int n, const std::vector<Edge>& edges) {
    AdjMatrix a(n);
    for (const Edge& e : edges) a.add(e.u, e.v);
    return a;
}

std::vector<Edge> complete_edge_set(int n) {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) out.push_back({u, v});
    return out;
}

}  // namespace mkp
