#ifndef MKP_CHORDAL_HPP
#define MKP_CHORDAL_HPP

#include <array>
#include <vector>

#include "mkp/graph.hpp"

namespace mkp {

/// Chordal extension (V, F) of a graph together with the elimination
/// trace that produced it and the maximal cliques of the extension.
struct ChordalDecomposition {
    WeightedGraph base;
    std::vector<Edge> extension;              // F, sorted; E is a subset
    std::vector<Edge> fill;                   // F minus E, sorted
    std::vector<int> order;                   // elimination sequence v_0..v_{n-2}
    std::vector<std::vector<int>> recorded;   // clique recorded at each step
    std::vector<std::vector<int>> cliques;    // maximal cliques, lex-sorted

    std::size_t max_clique_size() const;
};

/// Number of non-adjacent neighbor pairs of v in h.
int fill_in(const AdjMatrix& h, int v);
int fill_in(const WeightedGraph& g, int v);

/// Greedy fill-in elimination: repeatedly removes a vertex with the fewest
/// missing neighbor pairs (ties to the smallest index), completing its
/// neighborhood and recording the closed neighborhood as a clique. Runs
/// until one vertex remains so the recorded list covers every edge of F.
ChordalDecomposition greedy_fill_in(const WeightedGraph& g);

struct ChordalityCheck {
    bool chordal = false;
    std::vector<int> witness;  // a chordless cycle of length >= 4 when not chordal
};

/// Maximum-cardinality-search test; the witness cycle is normalized to
/// start at its smallest vertex and take the smaller neighbor first.
ChordalityCheck is_chordal(const AdjMatrix& g);
ChordalityCheck is_chordal(int n, const std::vector<Edge>& edges);

/// Drops every recorded set contained in another and sorts the survivors
/// lexicographically.
std::vector<std::vector<int>> extract_maximal_cliques(const std::vector<std::vector<int>>& recorded);

/// Unique maximal clique of the chordal graph (V, F) containing edge
/// {u, v}: {u, v} plus the common neighborhood. Throws if {u, v} is not
/// in F.
std::vector<int> maximal_clique_containing(const ChordalDecomposition& decomp, int u, int v);
std::vector<int> maximal_clique_containing(const AdjMatrix& chordal_graph, int u, int v);

/// Constraint index tuples drawn from the maximal cliques with duplicates
/// across overlapping cliques removed.
struct TupleSets {
    std::vector<std::array<int, 3>> triangles;   // 3-subsets of cliques of size >= 3
    std::vector<std::vector<int>> cliques;       // (k+1)-subsets of cliques of size >= k+1
};

TupleSets dedupe_tuples(const std::vector<std::vector<int>>& cliques, int k);

/// Row count of the naive per-clique generation (before deduplication):
/// sum of 3*C(|C_r|, 3) plus sum of C(|C_r|, k+1).
uint64_t prededupe_row_bound(const std::vector<std::vector<int>>& cliques, int k);

/// C(n, r) saturating at uint64 max.
uint64_t binomial(uint64_t n, uint64_t r);

}  // namespace mkp

#endif
