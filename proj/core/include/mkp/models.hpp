#ifndef MKP_MODELS_HPP
#define MKP_MODELS_HPP

#include <cstdint>
#include <stdexcept>
#include <variant>

#include "mkp/chordal.hpp"
#include "mkp/graph.hpp"
#include "mkp/linear_model.hpp"
#include "mkp/sdp_model.hpp"

namespace mkp {

inline constexpr uint64_t kDefaultRowCap = 10'000'000;

/// Thrown by builders when the generated row count would exceed the cap.
class RowCapExceeded : public std::runtime_error {
public:
    RowCapExceeded(uint64_t rows, uint64_t cap)
        : std::runtime_error("model would generate " + std::to_string(rows) +
                             " rows, exceeding the cap of " + std::to_string(cap)),
          rows_(rows) {}
    uint64_t rows() const { return rows_; }

private:
    uint64_t rows_;
};

/// Edge formulation over the complete graph: C(n,2) binaries, 3*C(n,3)
/// triangle rows, C(n,k+1) clique rows.
LinearModel build_edge_model(const WeightedGraph& g, int k, uint64_t row_cap = kDefaultRowCap);

/// Node-edge formulation: k*n assignment binaries plus one binary per
/// edge, n assignment equalities and 3*k*m coupling rows.
LinearModel build_node_edge_model(const WeightedGraph& g, int k);

/// Clique-based reformulation over F: one binary per extension edge,
/// triangle and clique rows restricted to the maximal cliques. Deduped by
/// default; dedupe=false exposes the naive per-clique generation.
LinearModel build_clique_ilp(const WeightedGraph& g, const ChordalDecomposition& decomp, int k,
                             uint64_t row_cap = kDefaultRowCap, bool dedupe = true);

/// Full-matrix integer SDP: one n x n block with unit diagonal over all
/// C(n,2) scalars. relax=true turns the two-point domain into the lower
/// bound -1/(k-1).
SdpModel build_isdp(const WeightedGraph& g, int k, bool relax);

/// Clique-block integer SDP over F: one block per maximal clique, shared
/// edges referencing the same scalar.
SdpModel build_clique_isdp(const WeightedGraph& g, const ChordalDecomposition& decomp, int k,
                           bool relax);

struct ModelSize {
    uint64_t n_binary = 0;
    uint64_t n_continuous = 0;
    uint64_t n_linear_constraints = 0;
    uint64_t n_psd_blocks = 0;
    uint64_t max_block_dim = 0;

    bool operator==(const ModelSize&) const = default;
};

ModelSize model_size(const LinearModel& m);
ModelSize model_size(const SdpModel& m);

}  // namespace mkp

#endif
