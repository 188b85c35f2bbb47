#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "dw/triangulation.hpp"

namespace dw {

/// A local order: one direction per edge class such that no face carries
/// a directed 3-cycle. Each tetrahedron then orders its vertices by
/// outgoing-edge count, which is what the state sum reads.
struct Branching {
    /// +1 keeps the class's canonical direction, -1 reverses it.
    std::vector<std::int8_t> edge_orientation;
};

/// Direction of tetrahedron edge e of tet t under the branching:
/// +1 means low vertex -> high vertex.
int branch_direction(const Branching& b, const std::vector<std::array<std::int32_t, 6>>& cls_lut, const std::vector<std::array<std::int8_t, 6>>& orient_lut, int tet, int edge);

/// Vertex order (v0,v1,v2,v3) of tet t: v_i is the vertex with i
/// outgoing edges. Requires a valid branching.
std::array<int, 4> tet_order(const Branching& b, const std::vector<std::array<std::int32_t, 6>>& cls_lut, const std::vector<std::array<std::int8_t, 6>>& orient_lut, int tet);

/// First branching in lexicographic search order, if any.
std::optional<Branching> find_branching(const Triangulation& t);

/// Check the two branching invariants on every face and tetrahedron.
bool branching_valid(const Triangulation& t, const Branching& b);

/// Sign of each tetrahedron: does the order-induced orientation agree
/// with the orientation certificate.
std::vector<std::int8_t> tet_signs(const Triangulation& t, const Branching& b);
std::vector<std::int8_t> tet_signs(const Triangulation& t, const Branching& b, const std::vector<std::int8_t>& orientation);

struct OrderableResult {
    Triangulation triangulation;
    std::vector<std::pair<int, int>> moves;  // (tet, face) of each positive (2,3) move
    Branching branching;
};

/// Search over positive (2,3) moves (iterative deepening, lexicographic
/// face order, canonical-form memoization) for a triangulation that
/// admits a local order. Throws SearchExhaustedError past max_moves.
OrderableResult make_orderable(const Triangulation& t, int max_moves = 8);

} // namespace dw
