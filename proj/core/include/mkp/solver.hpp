#ifndef MKP_SOLVER_HPP
#define MKP_SOLVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "mkp/chordal.hpp"
#include "mkp/completion.hpp"
#include "mkp/graph.hpp"
#include "mkp/sdp_model.hpp"

namespace mkp {

/// Node-to-color labeling into at most k blocks; blocks may be empty.
struct Partition {
    int k = 1;
    std::vector<int> color;  // 1-based: color[v] for v in 1..n, color[0] unused

    int n() const { return static_cast<int>(color.size()) - 1; }
    bool operator==(const Partition&) const = default;
};

struct SolveResult {
    double optimum = 0.0;
    Partition partition;
    uint64_t nodes_explored = 0;  // complete assignments evaluated
    double elapsed_seconds = 0.0;
};

/// Total weight of edges with both endpoints in the same block.
double objective(const WeightedGraph& g, const Partition& p);

/// Co-membership bit per domain edge.
EdgeAssignment partition_to_edges(const Partition& p, const std::vector<Edge>& domain);

/// Partition recovered from the components of the x = 1 subgraph, colored
/// in order of each component's smallest vertex.
Partition partition_from_edges(const EdgeAssignment& x, int n, int k);

/// Exact optimum by enumerating restricted growth strings with at most k
/// blocks. Guarded at n <= 14. Ties break to the lexicographically
/// smallest optimal string.
SolveResult brute_force_solve(const WeightedGraph& g, int k);

/// Exact optimum by depth-first color assignment with restricted-growth
/// symmetry breaking and the bound accumulated-cost + remaining negative
/// weight. Matches brute_force_solve wherever both run.
SolveResult branch_and_bound_solve(const WeightedGraph& g, int k);

struct Verdict {
    bool feasible = true;
    std::string violated;  // row or block identifier when infeasible

    explicit operator bool() const { return feasible; }
};

/// Checks all triangle and clique rows of the edge formulation; x must
/// cover the complete edge set V^2.
Verdict check_feasible_edge_model(const EdgeAssignment& x, int k);

/// Checks the deduped triangle and clique rows of the clique system on F.
Verdict check_feasible_clique_model(const EdgeAssignment& x_F, const ChordalDecomposition& decomp,
                                    int k);

/// Symmetric dense matrix, row-major.
struct SymMatrix {
    int n = 0;
    std::vector<double> a;

    explicit SymMatrix(int n_ = 0) : n(n_), a(n_ * n_, 0.0) {}
    double& at(int i, int j) { return a[i * n + j]; }
    double at(int i, int j) const { return a[i * n + j]; }
};

/// PSD test by diagonal-pivoted symmetric elimination: true iff the
/// factorization completes with every pivot >= -tol. Throws on
/// asymmetric input (beyond tol).
bool is_psd(const SymMatrix& m, double tol = 1e-9);

/// Maps the bits through x = -1/(k-1) + k/(k-1)*y, assembles every block
/// of the model and requires each to be PSD at tolerance 1e-9.
Verdict verify_isdp_point(const EdgeAssignment& y, const SdpModel& model, int k);

/// Numeric block assembly at a given scalar vector (by scalar index).
SymMatrix assemble_block(const SdpBlock& block, const std::vector<double>& scalar_values);

/// Optimality gap percentage (optimum - lower_bound) / |optimum| * 100;
/// empty when the optimum is zero.
std::optional<double> gap(double optimum, double lower_bound);

}  // namespace mkp

#endif
