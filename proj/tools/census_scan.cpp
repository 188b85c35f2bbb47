// Exhaustive scan over small closed orientable gluing tables, used to
// locate and regenerate the bundled census fixtures offline. Candidate
// tables are generated with every gluing permutation odd (which forces a
// coherent orientation with all tetrahedron signs +1), new tetrahedra
// introduced in index order, and edge orbits pruned as soon as an edge
// would be identified with itself reversed.
//
// Filters identify a manifold by its combinatorial signature: number of
// cusps, vertex link Euler characteristics, coloring counts over probe
// groups, and finally the exact state sum against a bundled reduced
// formula for every generator power (directly or mirrored).

#include <array>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dw/branching.hpp"
#include "dw/cochain.hpp"
#include "dw/cyclotomic.hpp"
#include "dw/errors.hpp"
#include "dw/fixtures.hpp"
#include "dw/statesum.hpp"
#include "dw/triangulation.hpp"

using namespace dw;

namespace {

struct Options {
    int tets = 2;
    int cusps = 1;                    // required ideal vertex count (0 = no requirement)
    bool torus_links = true;          // require every link to be a torus
    bool one_edge_class = false;      // require a single edge class
    bool all_parities = false;        // also enumerate orientation-incoherent tables
    std::string formula;              // identify against this bundled formula
    int formula_group = 0;            // cyclic group order for the formula sweep
    std::string colsig;               // "m:count,m:count,..."
    int limit = 1;
    bool verbose = false;
};

struct PartialState {
    std::vector<std::array<Gluing, 4>> glue;
    // Union-find over (tet, edge) slots with an orientation parity bit
    // relative to the root; detects reversed self-identifications early.
    std::vector<int> parent;
    std::vector<std::int8_t> parity;  // orientation of slot relative to parent
    int used_tets = 0;

    explicit PartialState(int n) : glue(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(6 * n)), parity(static_cast<std::size_t>(6 * n), 1) {
        for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    }

    std::pair<int, int> find(int x) {
        int sign = 1;
        while (parent[static_cast<std::size_t>(x)] != x) {
            sign *= parity[static_cast<std::size_t>(x)];
            x = parent[static_cast<std::size_t>(x)];
        }
        return {x, sign};
    }

    // Union with relative orientation; false on a parity clash.
    bool unite(int a, int b, int rel) {
        auto [ra, sa] = find(a);
        auto [rb, sb] = find(b);
        if (ra == rb) return sa * rel == sb;
        parent[static_cast<std::size_t>(ra)] = rb;
        parity[static_cast<std::size_t>(ra)] = static_cast<std::int8_t>(sa * rel * sb);
        return true;
    }
};

// The three odd extensions of bijections between two faces: the gluing
// permutation maps face vertices across and the opposite vertices to
// each other.
std::vector<Perm4> face_perms(int face_a, int face_b, bool all_parities) {
    std::vector<Perm4> out;
    std::array<int, 3> va{}, vb{};
    int i = 0, j = 0;
    for (int v = 0; v < 4; ++v) {
        if (v != face_a) va[static_cast<std::size_t>(i++)] = v;
        if (v != face_b) vb[static_cast<std::size_t>(j++)] = v;
    }
    static const std::array<std::array<int, 3>, 6> threes{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& s : threes) {
        std::array<std::uint8_t, 4> img{};
        img[static_cast<std::size_t>(face_a)] = static_cast<std::uint8_t>(face_b);
        for (int k = 0; k < 3; ++k) img[static_cast<std::size_t>(va[static_cast<std::size_t>(k)])] = static_cast<std::uint8_t>(vb[static_cast<std::size_t>(s[static_cast<std::size_t>(k)])]);
        const Perm4 p(img[0], img[1], img[2], img[3]);
        // Odd permutations keep the labelling coherently oriented.
        if (all_parities || p.sign() < 0) out.push_back(p);
    }
    return out;
}

class Scanner {
  public:
    Scanner(const Options& opt) : opt_(opt) {
        if (!opt_.formula.empty()) {
            formula_ = fixture_formula(opt_.formula);
            group_ = FiniteGroup(cyclic_group(opt_.formula_group));
            for (int p = 0; p < opt_.formula_group; ++p) {
                const Cochain3 alpha = cyclic_generator_cocycle(opt_.formula_group, p);
                targets_.push_back(reduced_sum_oracle(*formula_, *group_, alpha));
            }
        }
        if (!opt_.colsig.empty()) {
            std::size_t pos = 0;
            while (pos < opt_.colsig.size()) {
                const std::size_t colon = opt_.colsig.find(':', pos);
                const std::size_t comma = opt_.colsig.find(',', pos);
                const std::size_t end = comma == std::string::npos ? opt_.colsig.size() : comma;
                const int m = std::stoi(opt_.colsig.substr(pos, colon - pos));
                const std::uint64_t count = std::stoull(opt_.colsig.substr(colon + 1, end - colon - 1));
                col_probes_.emplace_back(cyclic_group(m), count);
                pos = end + (comma == std::string::npos ? 0 : 1);
                if (comma == std::string::npos) break;
            }
        }
    }

    void run() {
        PartialState st(opt_.tets);
        st.used_tets = 1;
        extend(st);
        std::cerr << "visited " << visited_ << " complete tables, emitted " << emitted_ << " matches\n";
    }

  private:
    void extend(PartialState& st) {
        if (opt_.limit > 0 && emitted_ >= opt_.limit) return;
        // First unglued face in lexicographic order.
        int t0 = -1, f0 = -1;
        for (int t = 0; t < st.used_tets && t0 < 0; ++t)
            for (int f = 0; f < 4; ++f)
                if (st.glue[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)].tet < 0) {
                    t0 = t;
                    f0 = f;
                    break;
                }
        if (t0 < 0) {
            if (st.used_tets == opt_.tets) finish(st);
            return;
        }
        // Candidate partner faces: anything open in a used tetrahedron,
        // or face 0 of the next unused tetrahedron.
        const int tet_limit = std::min(opt_.tets - 1, st.used_tets);
        for (int t1 = t0; t1 <= tet_limit; ++t1) {
            const bool fresh = (t1 == st.used_tets);
            for (int f1 = 0; f1 < 4; ++f1) {
                if (t1 == t0 && f1 <= f0) continue;
                if (fresh && f1 > 0) break;  // symmetry: enter a fresh tet through face 0
                if (st.glue[static_cast<std::size_t>(t1)][static_cast<std::size_t>(f1)].tet >= 0) continue;
                for (const Perm4& p : face_perms(f0, f1, opt_.all_parities)) {
                    PartialState next = st;
                    next.glue[static_cast<std::size_t>(t0)][static_cast<std::size_t>(f0)] = {t1, p};
                    next.glue[static_cast<std::size_t>(t1)][static_cast<std::size_t>(f1)] = {t0, p.inverse()};
                    if (fresh) ++next.used_tets;
                    if (!merge_edges(next, t0, f0, p)) continue;
                    extend(next);
                    if (opt_.limit > 0 && emitted_ >= opt_.limit) return;
                }
            }
        }
    }

    bool merge_edges(PartialState& st, int t0, int f0, const Perm4& p) {
        const int t1 = st.glue[static_cast<std::size_t>(t0)][static_cast<std::size_t>(f0)].tet;
        for (int e = 0; e < 6; ++e) {
            const int a = kEdgeEndpoints[static_cast<std::size_t>(e)][0];
            const int b = kEdgeEndpoints[static_cast<std::size_t>(e)][1];
            if (a == f0 || b == f0) continue;
            const int ia = p[a], ib = p[b];
            const int ie = edge_index(ia, ib);
            const int rel = (ia < ib) ? 1 : -1;
            if (!st.unite(6 * t0 + e, 6 * t1 + ie, rel)) return false;
        }
        return true;
    }

    void finish(const PartialState& st) {
        ++visited_;
        Triangulation t(opt_.tets, st.glue);

        std::vector<VertexClass> verts;
        try {
            edge_classes(t);
            verts = vertex_classes(t);
        } catch (const Error&) {
            return;
        }

        if (opt_.one_edge_class && edge_classes(t).size() != 1) return;
        if (opt_.cusps > 0) {
            if (static_cast<int>(verts.size()) != opt_.cusps) return;
            for (const auto& v : verts)
                if (v.kind != VertexKind::Ideal) return;
        }
        if (opt_.torus_links) {
            for (const auto& v : verts)
                if (v.link_euler != 0) return;
        }
        for (const auto& [g, count] : col_probes_)
            if (count_colorings(t, g) != count) return;

        int mirror_flag = -1;
        if (formula_) {
            mirror_flag = formula_match(t);
            if (mirror_flag < 0) return;
        }

        const auto key = canonical_form(t);
        if (!seen_.insert(key).second) return;

        ++emitted_;
        std::cout << (mirror_flag == 1 ? "MATCH(mirrored) " : "MATCH ") << triangulation_to_json(mirror_flag == 1 ? mirror(t) : t) << "\n";
        std::cout.flush();
    }

    // 0: matches as-is for every generator power, 1: mirrored table
    // matches, -1: no match.
    int formula_match(const Triangulation& t) {
        try {
            InvariantOptions opts;
            opts.parallel = false;
            opts.check_cocycle = false;
            bool direct = true, mirrored = true;
            for (std::size_t p = 0; p < targets_.size(); ++p) {
                const Cochain3 alpha = cyclic_generator_cocycle(opt_.formula_group, static_cast<long long>(p));
                const Cyclotomic z = invariant(t, *group_, alpha, opts).value;
                if (z != targets_[p]) direct = false;
                if (z.conjugate() != targets_[p]) mirrored = false;
                if (!direct && !mirrored) return -1;
            }
            if (direct) return 0;
            return mirrored ? 1 : -1;
        } catch (const Error& e) {
            if (opt_.verbose) std::cerr << "candidate rejected: " << e.what() << "\n";
            return -1;
        }
    }

    Options opt_;
    std::optional<ReducedFormula> formula_;
    std::optional<FiniteGroup> group_;
    std::vector<Cyclotomic> targets_;
    std::vector<std::pair<FiniteGroup, std::uint64_t>> col_probes_;
    std::set<std::vector<std::int32_t>> seen_;
    std::uint64_t visited_ = 0;
    int emitted_ = 0;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"scan small gluing tables for census triangulations"};
    Options opt;
    app.add_option("--tets", opt.tets, "number of tetrahedra")->required();
    app.add_option("--cusps", opt.cusps, "required number of (ideal) vertex classes, 0 to skip");
    app.add_flag("!--no-torus-links", opt.torus_links, "do not require torus links");
    app.add_flag("--one-edge-class", opt.one_edge_class, "require a single edge class");
    app.add_flag("--all-parities", opt.all_parities, "enumerate orientation-incoherent tables too");
    app.add_option("--formula", opt.formula, "bundled reduced formula to match");
    app.add_option("--formula-group", opt.formula_group, "cyclic group order for the formula sweep");
    app.add_option("--colsig", opt.colsig, "coloring-count signature m:count,m:count,...");
    app.add_option("--limit", opt.limit, "stop after this many matches (0 = exhaustive)");
    app.add_flag("--verbose", opt.verbose, "log rejected candidates");
    CLI11_PARSE(app, argc, argv);

    if (!opt.formula.empty() && opt.formula_group <= 0) {
        std::cerr << "--formula requires --formula-group\n";
        return 1;
    }

    try {
        Scanner scanner(opt);
        scanner.run();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
