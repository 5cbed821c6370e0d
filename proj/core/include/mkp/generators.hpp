#ifndef MKP_GENERATORS_HPP
#define MKP_GENERATORS_HPP

#include <cstdint>

#include "mkp/graph.hpp"

namespace mkp {

/// Band graph: edges {i, j} with j - i <= k + 1, weights +-1 (fair coin,
/// -1 on heads), drawn in sorted edge order.
WeightedGraph gen_band(int n, int k, uint64_t seed);

/// Toroidal rows x cols grid with Gaussian interactions: weights are
/// round(1e5 * N(0,1)), zeros redrawn. Parallel wrap-around edges of
/// 2-wide grids collapse to the first-drawn weight.
WeightedGraph gen_spinglass2g(int rows, int cols, uint64_t seed);

/// Toroidal grid with +-1 weights, negative with probability 1/2.
WeightedGraph gen_spinglass2pm(int rows, int cols, uint64_t seed);

/// G(n, density) with unit weights, resampled from substreams
/// derive_stream(seed, attempt) until connected; throws after 1000 attempts.
WeightedGraph gen_rndgraph(int n, double density, uint64_t seed);

}  // namespace mkp

#endif
