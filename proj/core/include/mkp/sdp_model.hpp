#ifndef MKP_SDP_MODEL_HPP
#define MKP_SDP_MODEL_HPP

#include <string>
#include <vector>

#include "mkp/graph.hpp"

namespace mkp {

/// One scalar variable of an SDP model, tied to an edge of the complete
/// graph. In integer mode its domain is the two-point set
/// {-1/(k-1), 1}; in relaxed mode it is bounded below by -1/(k-1).
struct SdpScalar {
    std::string name;
    Edge edge;
    double objective = 0.0;

    bool operator==(const SdpScalar&) const = default;
};

struct BlockEntry {
    int i = 0;  // block-local, 1-based, i <= j
    int j = 0;
    double value = 0.0;

    bool operator==(const BlockEntry&) const = default;
};

/// Affine symmetric matrix required PSD: constant part plus one entry set
/// per referenced scalar.
struct SdpBlock {
    std::vector<int> vertices;  // sorted global vertex ids; dim = vertices.size()
    std::vector<BlockEntry> constant;
    std::vector<std::pair<int, BlockEntry>> terms;  // (scalar index, entry)

    int dim() const { return static_cast<int>(vertices.size()); }
    bool operator==(const SdpBlock&) const = default;
};

struct SdpModel {
    int n = 0;
    int k = 2;
    bool relaxed = false;  // integer mode keeps the two-point domain as metadata
    std::vector<SdpScalar> scalars;
    std::vector<SdpBlock> blocks;
    double objective_offset = 0.0;

    double scalar_lower() const { return -1.0 / (k - 1); }
    int scalar_index(const Edge& e) const;  // -1 when absent

    bool operator==(const SdpModel&) const = default;
};

/// SDPA sparse (.dat-s) text for a relaxed model: the clique blocks plus a
/// trailing diagonal block encoding the scalar lower bounds. Throws on
/// integer-mode input (the format cannot carry the two-point domain).
std::string emit_sdpa(const SdpModel& m);

/// Raw image of a .dat-s file, as read back for round-trip checks.
struct SdpaFile {
    int m = 0;
    std::vector<int> block_sizes;  // negative size marks a diagonal block
    std::vector<double> costs;
    struct Entry {
        int matno, blkno, i, j;
        double value;
        bool operator==(const Entry&) const = default;
    };
    std::vector<Entry> entries;

    bool operator==(const SdpaFile&) const = default;
};

SdpaFile parse_sdpa(const std::string& text);
std::string emit_sdpa(const SdpaFile& f);

}  // namespace mkp

#endif
