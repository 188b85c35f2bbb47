#include "dw/branching.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dw/errors.hpp"
#include "dw/pachner.hpp"

namespace dw {

namespace {

// The three edges of face f, with their endpoints sorted a < b < c:
// (a,b), (b,c), (a,c).
struct FaceEdges {
    std::array<int, 3> edge;     // edge indices within the tetrahedron
    std::array<int, 3> lo, hi;   // endpoints of each edge
};

FaceEdges face_edges(int f) {
    std::array<int, 3> verts{};
    int k = 0;
    for (int v = 0; v < 4; ++v)
        if (v != f) verts[static_cast<std::size_t>(k++)] = v;
    const int a = verts[0], b = verts[1], c = verts[2];
    FaceEdges fe;
    fe.edge = {edge_index(a, b), edge_index(b, c), edge_index(a, c)};
    fe.lo = {a, b, a};
    fe.hi = {b, c, c};
    return fe;
}

// Directed 3-cycle test for one embedded face given the directions of
// its three edges (+1 = low->high endpoint).
bool face_cyclic(const FaceEdges& fe, const std::array<int, 3>& dir) {
    // Outdegrees of the three face vertices; a cyclic triangle has all 1.
    // Edges: (a,b), (b,c), (a,c) with dir +1 pointing to the second.
    int out_a = (dir[0] > 0 ? 1 : 0) + (dir[2] > 0 ? 1 : 0);
    int out_b = (dir[0] > 0 ? 0 : 1) + (dir[1] > 0 ? 1 : 0);
    int out_c = (dir[1] > 0 ? 0 : 1) + (dir[2] > 0 ? 0 : 1);
    return out_a == 1 && out_b == 1 && out_c == 1;
}

} // namespace

int branch_direction(const Branching& b, const std::vector<std::array<std::int32_t, 6>>& cls_lut, const std::vector<std::array<std::int8_t, 6>>& orient_lut, int tet, int edge) {
    const int cls = cls_lut[static_cast<std::size_t>(tet)][static_cast<std::size_t>(edge)];
    return b.edge_orientation[static_cast<std::size_t>(cls)] * orient_lut[static_cast<std::size_t>(tet)][static_cast<std::size_t>(edge)];
}

std::array<int, 4> tet_order(const Branching& b, const std::vector<std::array<std::int32_t, 6>>& cls_lut, const std::vector<std::array<std::int8_t, 6>>& orient_lut, int tet) {
    std::array<int, 4> outdeg{0, 0, 0, 0};
    for (int e = 0; e < 6; ++e) {
        const int d = branch_direction(b, cls_lut, orient_lut, tet, e);
        const int src = (d > 0) ? kEdgeEndpoints[static_cast<std::size_t>(e)][0] : kEdgeEndpoints[static_cast<std::size_t>(e)][1];
        ++outdeg[static_cast<std::size_t>(src)];
    }
    std::array<int, 4> order{-1, -1, -1, -1};
    for (int v = 0; v < 4; ++v) {
        if (outdeg[static_cast<std::size_t>(v)] > 3) throw Error("branching does not order this tetrahedron");
        if (order[static_cast<std::size_t>(outdeg[static_cast<std::size_t>(v)])] != -1) throw Error("branching does not order this tetrahedron");
        order[static_cast<std::size_t>(outdeg[static_cast<std::size_t>(v)])] = v;
    }
    return order;
}

namespace {

struct FaceConstraint {
    std::array<std::int32_t, 3> cls;
    std::array<std::int8_t, 3> rel;  // orientation of the member edge inside its class
    FaceEdges fe;
};

std::vector<FaceConstraint> face_constraints(const Triangulation& t, const std::vector<EdgeClass>& classes) {
    const auto cls_lut = edge_class_lookup(t, classes);
    const auto orient_lut = edge_orient_lookup(t, classes);
    std::vector<FaceConstraint> out;
    for (const auto& fc : face_classes(t)) {
        const int tt = fc.side0.first;
        const int f = fc.side0.second;
        FaceConstraint c;
        c.fe = face_edges(f);
        for (int i = 0; i < 3; ++i) {
            const int e = c.fe.edge[static_cast<std::size_t>(i)];
            c.cls[static_cast<std::size_t>(i)] = cls_lut[static_cast<std::size_t>(tt)][static_cast<std::size_t>(e)];
            c.rel[static_cast<std::size_t>(i)] = orient_lut[static_cast<std::size_t>(tt)][static_cast<std::size_t>(e)];
        }
        out.push_back(c);
    }
    return out;
}

bool search(const std::vector<FaceConstraint>& faces, const std::vector<std::vector<int>>& faces_of_class, std::vector<std::int8_t>& assign, std::size_t next) {
    if (next == assign.size()) return true;
    for (int choice : {+1, -1}) {
        assign[next] = static_cast<std::int8_t>(choice);
        bool ok = true;
        for (int fi : faces_of_class[next]) {
            const FaceConstraint& c = faces[static_cast<std::size_t>(fi)];
            std::array<int, 3> dir{};
            bool complete = true;
            for (int i = 0; i < 3 && complete; ++i) {
                const int cls = c.cls[static_cast<std::size_t>(i)];
                if (static_cast<std::size_t>(cls) > next || assign[static_cast<std::size_t>(cls)] == 0)
                    complete = false;
                else
                    dir[static_cast<std::size_t>(i)] = assign[static_cast<std::size_t>(cls)] * c.rel[static_cast<std::size_t>(i)];
            }
            if (complete && face_cyclic(c.fe, dir)) {
                ok = false;
                break;
            }
        }
        if (ok && search(faces, faces_of_class, assign, next + 1)) return true;
    }
    assign[next] = 0;
    return false;
}

} // namespace

std::optional<Branching> find_branching(const Triangulation& t) {
    const auto classes = edge_classes(t);
    const auto faces = face_constraints(t, classes);
    std::vector<std::vector<int>> faces_of_class(classes.size());
    for (std::size_t fi = 0; fi < faces.size(); ++fi)
        for (int i = 0; i < 3; ++i) faces_of_class[static_cast<std::size_t>(faces[fi].cls[static_cast<std::size_t>(i)])].push_back(static_cast<int>(fi));

    std::vector<std::int8_t> assign(classes.size(), 0);
    if (!search(faces, faces_of_class, assign, 0)) return std::nullopt;
    return Branching{std::move(assign)};
}

bool branching_valid(const Triangulation& t, const Branching& b) {
    const auto classes = edge_classes(t);
    if (b.edge_orientation.size() != classes.size()) return false;
    for (auto v : b.edge_orientation)
        if (v != 1 && v != -1) return false;
    const auto cls_lut = edge_class_lookup(t, classes);
    const auto orient_lut = edge_orient_lookup(t, classes);
    for (const auto& c : face_constraints(t, classes)) {
        std::array<int, 3> dir{};
        for (int i = 0; i < 3; ++i) dir[static_cast<std::size_t>(i)] = b.edge_orientation[static_cast<std::size_t>(c.cls[static_cast<std::size_t>(i)])] * c.rel[static_cast<std::size_t>(i)];
        if (face_cyclic(c.fe, dir)) return false;
    }
    for (int tt = 0; tt < t.size(); ++tt) {
        try {
            tet_order(b, cls_lut, orient_lut, tt);
        } catch (const Error&) {
            return false;
        }
    }
    return true;
}

std::vector<std::int8_t> tet_signs(const Triangulation& t, const Branching& b) {
    return tet_signs(t, b, validate_orientation(t));
}

std::vector<std::int8_t> tet_signs(const Triangulation& t, const Branching& b, const std::vector<std::int8_t>& orientation) {
    const auto classes = edge_classes(t);
    const auto cls_lut = edge_class_lookup(t, classes);
    const auto orient_lut = edge_orient_lookup(t, classes);
    std::vector<std::int8_t> signs(static_cast<std::size_t>(t.size()));
    for (int tt = 0; tt < t.size(); ++tt) {
        const auto order = tet_order(b, cls_lut, orient_lut, tt);
        Perm4 p(order[0], order[1], order[2], order[3]);
        signs[static_cast<std::size_t>(tt)] = static_cast<std::int8_t>(p.sign() * orientation[static_cast<std::size_t>(tt)]);
    }
    return signs;
}

OrderableResult make_orderable(const Triangulation& t, int max_moves) {
    validate_orientation(t);
    for (int depth = 0; depth <= max_moves; ++depth) {
        std::set<std::vector<std::int32_t>> seen;

        struct Frame {
            Triangulation tri;
            std::vector<std::pair<int, int>> moves;
        };
        // Depth-first over positive (2,3) moves, faces in lexicographic
        // order, stopping at the first ordered triangulation.
        std::vector<Frame> stack;
        stack.push_back({t, {}});
        while (!stack.empty()) {
            Frame cur = std::move(stack.back());
            stack.pop_back();
            if (static_cast<int>(cur.moves.size()) == depth) {
                if (auto br = find_branching(cur.tri)) return {cur.tri, cur.moves, *br};
                continue;
            }
            std::vector<Frame> children;
            for (const auto& fc : face_classes(cur.tri)) {
                const int tt = fc.side0.first;
                const int f = fc.side0.second;
                if (cur.tri.gluing(tt, f).tet == tt) continue;  // not a (2,3) candidate
                auto key_tri = pachner_23(cur.tri, tt, f);
                auto key = canonical_form(key_tri);
                if (!seen.insert(std::move(key)).second) continue;
                auto moves = cur.moves;
                moves.emplace_back(tt, f);
                children.push_back({std::move(key_tri), std::move(moves)});
            }
            // Preserve lexicographic exploration order under the stack.
            for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
        }
    }
    throw SearchExhaustedError("no orderable triangulation within the move budget");
}

} // namespace dw
