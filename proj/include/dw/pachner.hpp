#pragma once

#include <cstdint>
#include <vector>

#include "dw/triangulation.hpp"

namespace dw {

/// Bistellar (2,3) exchange across face (tet, face). The two tetrahedra
/// on either side must be distinct; the result has one more tetrahedron
/// (the positive direction). New tetrahedra are appended at the end and
/// the removed pair's indices are compacted away.
Triangulation pachner_23(const Triangulation& t, int tet, int face);

/// Inverse move: collapse the star of a trivalent edge class whose three
/// incidences lie in three distinct tetrahedra.
Triangulation pachner_32(const Triangulation& t, const EdgeClass& e);

/// Star subdivision of one tetrahedron around a new interior vertex;
/// adds three tetrahedra.
Triangulation pachner_14(const Triangulation& t, int tet);

/// Apply n pseudo-randomly chosen admissible moves (mix of (2,3), (3,2),
/// (1,4)), deterministic for a given seed. Inadmissible picks are skipped.
Triangulation random_moves(const Triangulation& t, int n, std::uint64_t seed);

} // namespace dw
