#ifndef MKP_GRAPH_HPP
#define MKP_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mkp {

/// Unordered vertex pair, stored with u < v. Vertices are 1-based.
struct Edge {
    int u = 0;
    int v = 0;
    auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Undirected simple graph with real edge weights. Edges are kept sorted
/// by (u, v) so iteration order is deterministic.
struct WeightedGraph {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<double> weights;  // parallel to edges

    std::size_t edge_count() const { return edges.size(); }
    std::optional<std::size_t> edge_index(int a, int b) const;
    bool has_edge(int a, int b) const { return edge_index(a, b).has_value(); }
    double weight_of(int a, int b) const;

    bool operator==(const WeightedGraph&) const = default;
};

/// Builds a graph from an unsorted edge/weight list, validating the
/// simple-graph invariants (no loops, no duplicates, endpoints in 1..n).
WeightedGraph make_graph(int n, std::vector<std::pair<Edge, double>> items);

/// Raised on malformed .wg input; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Parses the .wg format: header "n m", then m lines "i j w" with i < j.
/// '#' starts a comment line.
WeightedGraph parse_graph(const std::string& text);

/// Canonical .wg text; parse_graph(emit_graph(g)) == g.
std::string emit_graph(const WeightedGraph& g);

/// True iff a traversal from vertex 1 reaches every vertex (n >= 1).
bool is_connected(const WeightedGraph& g);

/// Shortest decimal representation that parses back to the same double;
/// integral values are printed without a decimal point.
std::string format_number(double x);

/// Adjacency-matrix view used by the structural algorithms. 1-based.
struct AdjMatrix {
    int n = 0;
    std::vector<uint8_t> cells;  // (n+1)*(n+1), row-major

    explicit AdjMatrix(int n_ = 0) : n(n_), cells((n_ + 1) * (n_ + 1), 0) {}
    bool at(int a, int b) const { return cells[a * (n + 1) + b] != 0; }
    void add(int a, int b) { cells[a * (n + 1) + b] = cells[b * (n + 1) + a] = 1; }
    void remove(int a, int b) { cells[a * (n + 1) + b] = cells[b * (n + 1) + a] = 0; }
    std::vector<int> neighbors(int v) const;
    std::vector<Edge> edge_list() const;
};

AdjMatrix adjacency(const WeightedGraph& g);
AdjMatrix adjacency(int n, const std::vector<Edge>& edges);

/// All pairs {i, j}, i < j over vertices 1..n, sorted.
std::vector<Edge> complete_edge_set(int n);

}  // namespace mkp

#endif
