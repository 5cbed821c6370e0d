#ifndef MKP_COMPLETION_HPP
#define MKP_COMPLETION_HPP

#include <cstdint>
#include <vector>

#include "mkp/chordal.hpp"
#include "mkp/graph.hpp"

namespace mkp {

/// 0/1 vector indexed by a sorted edge set (F or the complete V^2).
struct EdgeAssignment {
    std::vector<Edge> domain;     // sorted, unique
    std::vector<uint8_t> value;   // parallel to domain

    int at(int a, int b) const;   // throws when the edge is outside the domain
    int find(int a, int b) const; // -1 when absent
    void set(int a, int b, int bit);

    bool operator==(const EdgeAssignment&) const = default;
};

EdgeAssignment make_assignment(std::vector<Edge> domain);

/// Missing edges ordered so each prefix addition keeps the graph chordal,
/// ending at the complete graph.
struct GroneSequence {
    std::vector<Edge> steps;
};

/// Builds the sequence by scanning missing edges lexicographically and
/// taking the first whose addition stays chordal; chordality is
/// re-verified at every step.
GroneSequence grone_sequence(const ChordalDecomposition& decomp);

/// Value for the next Grone edge e = {i1, j1}: 1 when the containing
/// maximal clique is the edge itself, when no common neighbor touches
/// either endpoint, or when some common neighbor touches both; 0 when a
/// common neighbor touches exactly one. Throws when both the
/// exactly-one and the both cases occur, which no feasible input allows.
int extend_one(const EdgeAssignment& x, const AdjMatrix& current, Edge e, int k);

/// Extends a feasible clique-system assignment on F to the complete graph
/// along the Grone sequence. The restriction to F is unchanged, so the
/// objective value is too.
EdgeAssignment complete_solution(const EdgeAssignment& x_F, const ChordalDecomposition& decomp,
                                 int k);

/// The affine bijection between co-membership bits and SDP entries:
/// x = -1/(k-1) + k/(k-1) * y.
double map_y_to_x(int y, int k);
/// Inverse of map_y_to_x; throws when x is not within 1e-9 of the
/// two-point set.
int map_x_to_y(double x, int k);

/// k unit vectors in dimension k-1 with pairwise inner product -1/(k-1)
/// (regular simplex). Row-major, vectors[l] is the l-th vector (0-based).
struct UnitVectorSet {
    int k = 0;
    std::vector<std::vector<double>> vectors;
};

UnitVectorSet unit_vectors(int k);

/// Matrix B whose column for the r-th clique vertex is the unit vector of
/// that vertex's color; B^T B equals the clique's X block. colors are
/// 1-based and at most k distinct values may occur.
std::vector<std::vector<double>> gram_certificate(const std::vector<int>& colors,
                                                  const std::vector<int>& clique, int k);

/// det of the unit-diagonal 3x3 block: 1 + 2abc - a^2 - b^2 - c^2.
double psd_check_3x3_violation(double x_ij, double x_ih, double x_jh);

}  // namespace mkp

#endif
