#include <algorithm>
#include <vector>

#include "doctest.h"
#include "dw/errors.hpp"
#include "dw/fixtures.hpp"
#include "dw/pachner.hpp"
#include "dw/triangulation.hpp"

using namespace dw;

namespace {

std::vector<VertexKind> kind_multiset(const Triangulation& t) {
    std::vector<VertexKind> kinds;
    for (const auto& v : vertex_classes(t)) kinds.push_back(v.kind);
    std::sort(kinds.begin(), kinds.end());
    return kinds;
}

// The edge created by a (2,3) move: the last three tetrahedra share it
// with valence 3.
const EdgeClass* created_edge(const std::vector<EdgeClass>& classes, int tet_count) {
    for (const auto& e : classes) {
        if (e.valence() != 3) continue;
        bool all_new = true;
        for (const auto& m : e.members)
            if (m.tet < tet_count - 3) all_new = false;
        if (all_new) return &e;
    }
    return nullptr;
}

} // namespace

TEST_CASE("2-3 move on the sphere double") {
    const Triangulation t = fixture_triangulation("s3_double");
    const Triangulation t23 = pachner_23(t, 0, 0);
    CHECK(t23.size() == 3);
    validate_orientation(t23);
    CHECK(kind_multiset(t23) == kind_multiset(t));
    const int chi = t23.size() - 2 * t23.size() + static_cast<int>(edge_classes(t23).size()) - count_interior_vertices(t23);
    CHECK(chi == 0);

    // Collapsing the created edge restores the original triangulation.
    const auto classes = edge_classes(t23);
    const EdgeClass* fresh = created_edge(classes, t23.size());
    REQUIRE(fresh != nullptr);
    const Triangulation back = pachner_32(t23, *fresh);
    CHECK(isomorphic(back, t));
}

TEST_CASE("2-3 move on census fixtures") {
    const Triangulation m003 = fixture_triangulation("m003");
    for (const auto& fc : face_classes(m003)) {
        if (fc.side0.first == fc.side1.first) continue;
        const Triangulation moved = pachner_23(m003, fc.side0.first, fc.side0.second);
        CHECK(moved.size() == 3);
        CHECK(kind_multiset(moved) == kind_multiset(m003));

        const auto classes = edge_classes(moved);
        const EdgeClass* fresh = created_edge(classes, moved.size());
        REQUIRE(fresh != nullptr);
        CHECK(isomorphic(pachner_32(moved, *fresh), m003));
    }
}

TEST_CASE("2-3 move rejects a self-adjacent face") {
    const Triangulation t = fixture_triangulation("one_tet_loop");
    CHECK_THROWS_AS(pachner_23(t, 0, 0), FaceSelfAdjacentError);
}

TEST_CASE("3-2 move preconditions") {
    const Triangulation t = fixture_triangulation("s3_double");
    const auto classes = edge_classes(t);
    // Every edge of the double has valence 2.
    CHECK_THROWS_AS(pachner_32(t, classes[0]), EdgeNotTrivalentError);

    // m004 has no trivalent edges either (both classes have valence 6).
    const Triangulation m004 = fixture_triangulation("m004");
    for (const auto& e : edge_classes(m004)) {
        CHECK(e.valence() == 6);
        CHECK_THROWS_AS(pachner_32(m004, e), EdgeNotTrivalentError);
    }

    // A trivalent star that revisits a tetrahedron is rejected.
    EdgeClass degenerate;
    degenerate.members = {{0, 0, +1}, {0, 5, +1}, {1, 0, +1}};
    CHECK_THROWS_AS(pachner_32(t, degenerate), TetrahedraNotDistinctError);
}

TEST_CASE("1-4 move adds one interior vertex") {
    const Triangulation t = fixture_triangulation("s3_double");
    const Triangulation t14 = pachner_14(t, 1);
    CHECK(t14.size() == 5);
    CHECK(count_interior_vertices(t14) == 5);
    validate_orientation(t14);

    const Triangulation m004 = fixture_triangulation("m004");
    const Triangulation m = pachner_14(m004, 0);
    CHECK(m.size() == 5);
    const auto kinds = kind_multiset(m);
    CHECK(std::count(kinds.begin(), kinds.end(), VertexKind::Ideal) == 1);
    CHECK(std::count(kinds.begin(), kinds.end(), VertexKind::Interior) == 1);
}

TEST_CASE("random moves are deterministic and stay valid") {
    const Triangulation m004 = fixture_triangulation("m004");
    CHECK(isomorphic(random_moves(m004, 0, 99), m004));

    const Triangulation a = random_moves(m004, 4, 1);
    const Triangulation b = random_moves(m004, 4, 1);
    CHECK(a.table().size() == b.table().size());
    CHECK(canonical_form(a) == canonical_form(b));
    validate_orientation(a);

    // Moves preserve the multiset of vertex kinds except (1,4), which
    // adds interior classes.
    const auto kinds = kind_multiset(a);
    CHECK(std::count(kinds.begin(), kinds.end(), VertexKind::Ideal) == 1);

    const Triangulation s3 = random_moves(fixture_triangulation("s3_double"), 6, 7);
    validate_orientation(s3);
    const int chi = s3.size() - 2 * s3.size() + static_cast<int>(edge_classes(s3).size()) - count_interior_vertices(s3);
    CHECK(chi == 0);
}

TEST_CASE("every move output passes full validation") {
    for (const char* name : {"s3_double", "m004", "m003"}) {
        const Triangulation t = fixture_triangulation(name);
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            const Triangulation moved = random_moves(t, 5, seed);
            validate_orientation(moved);
            edge_classes(moved);
            int members = 0;
            for (const auto& e : edge_classes(moved)) members += e.valence();
            CHECK(members == 6 * moved.size());
        }
    }
}
