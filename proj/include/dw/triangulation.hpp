#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dw/perm4.hpp"

namespace dw {

/// One side of a face identification: the partner tetrahedron and the
/// vertex-label permutation carrying this tetrahedron's labels to the
/// partner's. perm[f] is the partner's vertex opposite the glued face.
struct Gluing {
    std::int32_t tet = -1;
    Perm4 perm;

    bool operator==(const Gluing&) const = default;
};

/// Face-gluing table of a closed oriented pseudo-manifold triangulation
/// (singular triangulations allowed; every face glued, no boundary).
/// Face f of a tetrahedron is the face opposite vertex f.
class Triangulation {
  public:
    Triangulation(int tet_count, std::vector<std::array<Gluing, 4>> gluings);

    int size() const { return static_cast<int>(glue_.size()); }
    const Gluing& gluing(int tet, int face) const { return glue_[static_cast<std::size_t>(tet)][static_cast<std::size_t>(face)]; }
    const std::vector<std::array<Gluing, 4>>& table() const { return glue_; }

  private:
    std::vector<std::array<Gluing, 4>> glue_;
};

/// Endpoints of the six tetrahedron edges, indexed 0..5.
inline constexpr std::array<std::array<int, 2>, 6> kEdgeEndpoints{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Edge index of the vertex pair {a,b}, a != b.
int edge_index(int a, int b);

struct EdgeMember {
    std::int32_t tet;
    std::int32_t edge;   // 0..5
    std::int8_t orient;  // +1 if the low->high direction agrees with the class direction

    auto operator<=>(const EdgeMember&) const = default;
};

/// Orbit of tetrahedron edges under the face identifications. The class
/// direction is the low->high vertex direction of the lexicographically
/// least member, which therefore always carries orient = +1.
struct EdgeClass {
    std::vector<EdgeMember> members;

    int valence() const { return static_cast<int>(members.size()); }
};

enum class VertexKind { Interior, Ideal };

struct VertexClass {
    std::vector<std::pair<std::int32_t, std::int32_t>> members;  // (tet, vertex)
    int link_euler = 0;
    VertexKind kind = VertexKind::Interior;
};

struct FaceClass {
    // The two sides (tet, face), lexicographically ordered.
    std::pair<std::int32_t, std::int32_t> side0;
    std::pair<std::int32_t, std::int32_t> side1;
};

/// Partition of the 6n tetrahedron edges into identification classes,
/// ordered by least member. Throws EdgeOrientationError if an orbit
/// identifies an edge with itself reversing direction.
std::vector<EdgeClass> edge_classes(const Triangulation& t);

/// Partition of the 4n tetrahedron vertices into identification classes,
/// each carrying the Euler characteristic of its link surface.
std::vector<VertexClass> vertex_classes(const Triangulation& t);

std::vector<FaceClass> face_classes(const Triangulation& t);

int count_interior_vertices(const Triangulation& t);

/// Per-tetrahedron signs s with s = +1 on the least tetrahedron of each
/// connected component, such that every gluing is orientation-reversing
/// on the shared face (s * s' = -sign(perm)). Throws NonOrientableError.
std::vector<std::int8_t> validate_orientation(const Triangulation& t);

/// Gluing table of the orientation-reversed manifold: every tetrahedron
/// is relabelled by the transposition (2 3).
Triangulation mirror(const Triangulation& t);

/// Label-invariant encoding; equal encodings <=> combinatorially
/// isomorphic triangulations. Used by tests and the orderability search.
std::vector<std::int32_t> canonical_form(const Triangulation& t);

bool isomorphic(const Triangulation& a, const Triangulation& b);

/// Parse the JSON gluing document:
///   { "tets": N, "gluings": [ [ {"tet": int, "perm": [p0,p1,p2,p3]}, x4 ] xN ] }
Triangulation parse_triangulation(const std::string& text);

std::string triangulation_to_json(const Triangulation& t);

/// (tet, edge) -> index of its class in edge_classes(t).
std::vector<std::array<std::int32_t, 6>> edge_class_lookup(const Triangulation& t, const std::vector<EdgeClass>& classes);

/// (tet, edge) -> orientation of the member inside its class.
std::vector<std::array<std::int8_t, 6>> edge_orient_lookup(const Triangulation& t, const std::vector<EdgeClass>& classes);

} // namespace dw
