#include "dw/pachner.hpp"

#include <algorithm>
#include <random>

#include "dw/errors.hpp"

namespace dw {

namespace {

// Index map after deleting a set of tetrahedra and appending fresh ones.
struct Reindex {
    std::vector<int> fresh;  // old index -> new index, -1 for deleted
    int appended_base = 0;

    Reindex(int old_count, std::vector<int> removed) {
        std::sort(removed.begin(), removed.end());
        fresh.assign(static_cast<std::size_t>(old_count), -1);
        int next = 0;
        for (int i = 0; i < old_count; ++i) {
            if (std::binary_search(removed.begin(), removed.end(), i)) continue;
            fresh[static_cast<std::size_t>(i)] = next++;
        }
        appended_base = next;
    }
};

Perm4 compose(const Perm4& outer, const Perm4& inner) {
    return outer.after(inner);
}

// Copy surviving tetrahedra into the new table, remapping targets that
// are themselves survivors. Entries pointing at removed tetrahedra are
// overwritten by the move-specific rewiring afterwards.
void copy_survivors(const Triangulation& t, const Reindex& idx, std::vector<std::array<Gluing, 4>>& glue) {
    for (int s = 0; s < t.size(); ++s) {
        if (idx.fresh[static_cast<std::size_t>(s)] == -1) continue;
        for (int f = 0; f < 4; ++f) {
            Gluing g = t.gluing(s, f);
            if (idx.fresh[static_cast<std::size_t>(g.tet)] != -1) g.tet = idx.fresh[static_cast<std::size_t>(g.tet)];
            glue[static_cast<std::size_t>(idx.fresh[static_cast<std::size_t>(s)])][static_cast<std::size_t>(f)] = g;
        }
    }
}

} // namespace

Triangulation pachner_23(const Triangulation& t, int tet, int face) {
    if (tet < 0 || tet >= t.size() || face < 0 || face > 3) throw Error("pachner_23: bad face");
    const Gluing main = t.gluing(tet, face);
    const int tet2 = main.tet;
    if (tet2 == tet) throw FaceSelfAdjacentError("both sides of the face lie in one tetrahedron");
    const Perm4 pi = main.perm;

    const int u = face;  // apex label in tet
    std::array<int, 3> A{};
    {
        int k = 0;
        for (int v = 0; v < 4; ++v)
            if (v != u) A[static_cast<std::size_t>(k++)] = v;
    }

    // Chart of the new tetrahedron N_z into tet: 0 -> apex, 1,2 -> the
    // two equatorial vertices (increasing), 3 -> z.
    auto chart_t = [&](int z) {
        std::array<int, 2> xy{};
        int k = 0;
        for (int v : A)
            if (v != z) xy[static_cast<std::size_t>(k++)] = v;
        return Perm4(u, xy[0], xy[1], z);
    };
    // Chart of N_z into tet2: swap apex/opposite roles, then map through pi.
    auto chart_t2 = [&](int z) {
        const Perm4 psi = chart_t(z);
        const Perm4 tau03 = Perm4::transposition(0, 3);
        return compose(pi, compose(psi, tau03));
    };

    const Reindex idx(t.size(), {tet, tet2});
    auto new_of = [&](int z) {  // new index of N_z
        for (int i = 0; i < 3; ++i)
            if (A[static_cast<std::size_t>(i)] == z) return idx.appended_base + i;
        throw Error("pachner_23: internal label error");
    };

    std::vector<std::array<Gluing, 4>> glue(static_cast<std::size_t>(t.size()) + 1);
    copy_survivors(t, idx, glue);

    // Resolve an old outer face of the bipyramid to its new home.
    struct Home {
        int new_tet;
        Perm4 chart;  // new labels -> old labels of the containing tetrahedron
    };
    auto home_of = [&](int old_tet, int old_face) -> Home {
        if (old_tet == tet) return {new_of(old_face), chart_t(old_face)};
        const int c = pi.inverse()[old_face];
        return {new_of(c), chart_t2(c)};
    };

    for (int zi = 0; zi < 3; ++zi) {
        const int z = A[static_cast<std::size_t>(zi)];
        const int nt = new_of(z);
        const Perm4 psi = chart_t(z);
        const Perm4 psi2 = chart_t2(z);

        // Face 3: the old outer face (tet, z).
        {
            const Gluing& g = t.gluing(tet, z);
            if (g.tet != tet && g.tet != tet2) {
                glue[static_cast<std::size_t>(nt)][3] = {idx.fresh[static_cast<std::size_t>(g.tet)], compose(g.perm, psi)};
            } else {
                const Home h = home_of(g.tet, g.perm[z]);
                glue[static_cast<std::size_t>(nt)][3] = {h.new_tet, compose(h.chart.inverse(), compose(g.perm, psi))};
            }
        }
        // Face 0: the old outer face (tet2, pi(z)).
        {
            const Gluing& g = t.gluing(tet2, pi[z]);
            if (g.tet != tet && g.tet != tet2) {
                glue[static_cast<std::size_t>(nt)][0] = {idx.fresh[static_cast<std::size_t>(g.tet)], compose(g.perm, psi2)};
            } else {
                const Home h = home_of(g.tet, g.perm[pi[z]]);
                glue[static_cast<std::size_t>(nt)][0] = {h.new_tet, compose(h.chart.inverse(), compose(g.perm, psi2))};
            }
        }
        // Faces 1,2: internal gluings around the new edge.
        for (int L = 1; L <= 2; ++L) {
            const int x = psi[L];  // equatorial vertex opposite this face
            const Perm4 psix = chart_t(x);
            std::array<std::uint8_t, 4> img{};
            img[0] = 0;
            img[3] = 3;
            img[static_cast<std::size_t>(L)] = static_cast<std::uint8_t>(psix.inverse()[z]);
            const int other = 3 - L;  // the remaining label in {1,2}
            img[static_cast<std::size_t>(other)] = static_cast<std::uint8_t>(psix.inverse()[psi[other]]);
            glue[static_cast<std::size_t>(nt)][static_cast<std::size_t>(L)] = {new_of(x), Perm4(img[0], img[1], img[2], img[3])};
        }
    }

    // Outside tetrahedra that pointed at the removed pair get rewired to
    // the new homes.
    for (int s = 0; s < t.size(); ++s) {
        if (s == tet || s == tet2) continue;
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = t.gluing(s, f);
            if (g.tet != tet && g.tet != tet2) continue;
            const Home h = home_of(g.tet, g.perm[f]);
            glue[static_cast<std::size_t>(idx.fresh[static_cast<std::size_t>(s)])][static_cast<std::size_t>(f)] = {h.new_tet, compose(h.chart.inverse(), g.perm)};
        }
    }

    return Triangulation(t.size() + 1, std::move(glue));
}

Triangulation pachner_32(const Triangulation& t, const EdgeClass& e) {
    if (e.valence() != 3) throw EdgeNotTrivalentError("edge class does not have exactly three incidences");
    {
        std::array<int, 3> tets{e.members[0].tet, e.members[1].tet, e.members[2].tet};
        std::sort(tets.begin(), tets.end());
        if (tets[0] == tets[1] || tets[1] == tets[2]) throw TetrahedraNotDistinctError("edge star repeats a tetrahedron");
    }

    // Walk the star. S[i] is the i-th tetrahedron around the edge; u/w
    // are the edge endpoints. The abstract equatorial vertex r_i lies on
    // the face shared by S[i] and S[i+1]; S[i] holds r_{i-1} (local
    // r_prev) and r_i (local r_cur), and exits through the face opposite
    // r_prev, which carries r_cur into S[i+1].
    struct StarTet {
        int tet;
        int u, w;
        int r_prev, r_cur;
    };
    std::array<StarTet, 3> star{};
    {
        const EdgeMember& m0 = e.members.front();
        const int a = kEdgeEndpoints[static_cast<std::size_t>(m0.edge)][0];
        const int b = kEdgeEndpoints[static_cast<std::size_t>(m0.edge)][1];
        star[0].tet = m0.tet;
        star[0].u = a;
        star[0].w = b;
        std::array<int, 2> eq{};
        int k = 0;
        for (int v = 0; v < 4; ++v)
            if (v != a && v != b) eq[static_cast<std::size_t>(k++)] = v;
        star[0].r_prev = eq[0];  // r_2
        star[0].r_cur = eq[1];   // r_0
        for (int i = 0; i < 2; ++i) {
            const StarTet& cur = star[static_cast<std::size_t>(i)];
            const Gluing& g = t.gluing(cur.tet, cur.r_prev);
            StarTet& nxt = star[static_cast<std::size_t>(i + 1)];
            nxt.tet = g.tet;
            nxt.u = g.perm[cur.u];
            nxt.w = g.perm[cur.w];
            nxt.r_prev = g.perm[cur.r_cur];
            nxt.r_cur = g.perm[cur.r_prev];  // the vertex off the shared face
        }
        // The walk must close back to the start.
        const Gluing& last = t.gluing(star[2].tet, star[2].r_prev);
        if (last.tet != star[0].tet || last.perm[star[2].u] != star[0].u || last.perm[star[2].w] != star[0].w || last.perm[star[2].r_cur] != star[0].r_prev)
            throw Error("pachner_32: edge star does not close");
    }

    const Reindex idx(t.size(), {star[0].tet, star[1].tet, star[2].tet});
    const int top = idx.appended_base;
    const int bot = idx.appended_base + 1;

    // The face of top missing r_j lives in the tetrahedron holding the
    // other two equatorials, which is S[(j+2)%3].
    auto tet_of_pair = [&](int j) { return (j + 2) % 3; };

    auto local_of_r = [&](int m, int ri) -> int {
        const StarTet& s = star[static_cast<std::size_t>(m)];
        return (ri == m) ? s.r_cur : s.r_prev;
    };
    // Chart of top/bot into S[m]: top labels are 0 -> u, 1+i -> r_i;
    // the equatorial missing from S[m] maps to the face's opposite vertex.
    auto chart_top = [&](int m) {
        const int j = (m + 1) % 3;
        std::array<std::uint8_t, 4> img{};
        img[0] = static_cast<std::uint8_t>(star[static_cast<std::size_t>(m)].u);
        for (int ri = 0; ri < 3; ++ri)
            img[static_cast<std::size_t>(1 + ri)] = static_cast<std::uint8_t>(ri == j ? star[static_cast<std::size_t>(m)].w : local_of_r(m, ri));
        return Perm4(img[0], img[1], img[2], img[3]);
    };
    auto chart_bot = [&](int m) {
        const int j = (m + 1) % 3;
        std::array<std::uint8_t, 4> img{};
        img[0] = static_cast<std::uint8_t>(star[static_cast<std::size_t>(m)].w);
        for (int ri = 0; ri < 3; ++ri)
            img[static_cast<std::size_t>(1 + ri)] = static_cast<std::uint8_t>(ri == j ? star[static_cast<std::size_t>(m)].u : local_of_r(m, ri));
        return Perm4(img[0], img[1], img[2], img[3]);
    };

    std::vector<std::array<Gluing, 4>> glue(static_cast<std::size_t>(t.size()) - 1);
    copy_survivors(t, idx, glue);

    struct Home {
        int new_tet;
        Perm4 chart;
    };
    auto home_of = [&](int old_tet, int old_face) -> Home {
        for (int m = 0; m < 3; ++m) {
            if (star[static_cast<std::size_t>(m)].tet != old_tet) continue;
            if (old_face == star[static_cast<std::size_t>(m)].w) return {top, chart_top(m)};
            if (old_face == star[static_cast<std::size_t>(m)].u) return {bot, chart_bot(m)};
            throw Error("pachner_32: outer face expected");
        }
        throw Error("pachner_32: home lookup outside the star");
    };
    auto is_star_tet = [&](int s) { return s == star[0].tet || s == star[1].tet || s == star[2].tet; };

    // Equatorial face between top and bot.
    glue[static_cast<std::size_t>(top)][0] = {bot, Perm4()};
    glue[static_cast<std::size_t>(bot)][0] = {top, Perm4()};

    for (int j = 0; j < 3; ++j) {
        const int m = tet_of_pair(j);
        const StarTet& s = star[static_cast<std::size_t>(m)];
        // Top face 1+j: old face (S[m], opposite w).
        {
            const Gluing& g = t.gluing(s.tet, s.w);
            const Perm4 chart = chart_top(m);
            if (!is_star_tet(g.tet)) {
                glue[static_cast<std::size_t>(top)][static_cast<std::size_t>(1 + j)] = {idx.fresh[static_cast<std::size_t>(g.tet)], compose(g.perm, chart)};
            } else {
                const Home h = home_of(g.tet, g.perm[s.w]);
                glue[static_cast<std::size_t>(top)][static_cast<std::size_t>(1 + j)] = {h.new_tet, compose(h.chart.inverse(), compose(g.perm, chart))};
            }
        }
        // Bottom face 1+j: old face (S[m], opposite u).
        {
            const Gluing& g = t.gluing(s.tet, s.u);
            const Perm4 chart = chart_bot(m);
            if (!is_star_tet(g.tet)) {
                glue[static_cast<std::size_t>(bot)][static_cast<std::size_t>(1 + j)] = {idx.fresh[static_cast<std::size_t>(g.tet)], compose(g.perm, chart)};
            } else {
                const Home h = home_of(g.tet, g.perm[s.u]);
                glue[static_cast<std::size_t>(bot)][static_cast<std::size_t>(1 + j)] = {h.new_tet, compose(h.chart.inverse(), compose(g.perm, chart))};
            }
        }
    }

    for (int s = 0; s < t.size(); ++s) {
        if (idx.fresh[static_cast<std::size_t>(s)] == -1) continue;
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = t.gluing(s, f);
            if (!is_star_tet(g.tet)) continue;
            const Home h = home_of(g.tet, g.perm[f]);
            glue[static_cast<std::size_t>(idx.fresh[static_cast<std::size_t>(s)])][static_cast<std::size_t>(f)] = {h.new_tet, compose(h.chart.inverse(), g.perm)};
        }
    }

    return Triangulation(t.size() - 1, std::move(glue));
}

Triangulation pachner_14(const Triangulation& t, int tet) {
    if (tet < 0 || tet >= t.size()) throw Error("pachner_14: bad tetrahedron");
    const Reindex idx(t.size(), {tet});
    std::vector<std::array<Gluing, 4>> glue(static_cast<std::size_t>(t.size()) + 3);
    copy_survivors(t, idx, glue);

    auto piece = [&](int i) { return idx.appended_base + i; };  // M_i sits over face i

    for (int i = 0; i < 4; ++i) {
        // Outer face i of M_i inherits the old gluing of (tet, i).
        const Gluing& g = t.gluing(tet, i);
        if (g.tet != tet) {
            glue[static_cast<std::size_t>(piece(i))][static_cast<std::size_t>(i)] = {idx.fresh[static_cast<std::size_t>(g.tet)], g.perm};
        } else {
            glue[static_cast<std::size_t>(piece(i))][static_cast<std::size_t>(i)] = {piece(g.perm[i]), g.perm};
        }
        // Internal faces: M_i meets M_j across the face missing both.
        for (int j = 0; j < 4; ++j) {
            if (j == i) continue;
            glue[static_cast<std::size_t>(piece(i))][static_cast<std::size_t>(j)] = {piece(j), Perm4::transposition(i, j)};
        }
    }

    for (int s = 0; s < t.size(); ++s) {
        if (s == tet) continue;
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = t.gluing(s, f);
            if (g.tet != tet) continue;
            glue[static_cast<std::size_t>(idx.fresh[static_cast<std::size_t>(s)])][static_cast<std::size_t>(f)] = {piece(g.perm[f]), g.perm};
        }
    }

    return Triangulation(t.size() + 3, std::move(glue));
}

Triangulation random_moves(const Triangulation& t, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Triangulation cur = t;
    for (int step = 0; step < n; ++step) {
        const int kind = static_cast<int>(rng() % 3);
        if (kind == 0) {
            std::vector<std::pair<int, int>> candidates;
            for (const auto& fc : face_classes(cur))
                if (fc.side0.first != fc.side1.first) candidates.emplace_back(fc.side0.first, fc.side0.second);
            if (candidates.empty()) continue;
            const auto& pick = candidates[rng() % candidates.size()];
            cur = pachner_23(cur, pick.first, pick.second);
        } else if (kind == 1) {
            std::vector<EdgeClass> candidates;
            for (auto& ec : edge_classes(cur)) {
                if (ec.valence() != 3) continue;
                if (ec.members[0].tet == ec.members[1].tet || ec.members[1].tet == ec.members[2].tet || ec.members[0].tet == ec.members[2].tet) continue;
                candidates.push_back(std::move(ec));
            }
            if (candidates.empty()) continue;
            cur = pachner_32(cur, candidates[rng() % candidates.size()]);
        } else {
            cur = pachner_14(cur, static_cast<int>(rng() % static_cast<std::uint64_t>(cur.size())));
        }
    }
    return cur;
}

} // namespace dw
