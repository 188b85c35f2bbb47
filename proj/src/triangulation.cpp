#include "dw/triangulation.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dw/errors.hpp"

namespace dw {

namespace {

int checked_int(const nlohmann::json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string("expected integer for ") + what);
    return j.get<int>();
}

} // namespace

int edge_index(int a, int b) {
    if (a > b) std::swap(a, b);
    for (int e = 0; e < 6; ++e)
        if (kEdgeEndpoints[e][0] == a && kEdgeEndpoints[e][1] == b) return e;
    throw Error("edge_index: bad vertex pair");
}

Triangulation::Triangulation(int tet_count, std::vector<std::array<Gluing, 4>> gluings) : glue_(std::move(gluings)) {
    if (tet_count < 1) throw GluingError("triangulation needs at least one tetrahedron");
    if (static_cast<int>(glue_.size()) != tet_count) throw GluingError("gluing table size does not match tet count");
    for (int t = 0; t < tet_count; ++t) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = glue_[t][f];
            if (g.tet < 0 || g.tet >= tet_count) {
                std::ostringstream os;
                os << "face (" << t << "," << f << ") has no valid gluing target";
                throw GluingError(os.str());
            }
            if (!g.perm.is_valid()) throw GluingError("gluing permutation is not a permutation");
            if (g.tet == t && g.perm[f] == f) {
                std::ostringstream os;
                os << "face (" << t << "," << f << ") glued to itself";
                throw GluingError(os.str());
            }
            const Gluing& back = glue_[g.tet][g.perm[f]];
            if (back.tet != t || back.perm != g.perm.inverse()) {
                std::ostringstream os;
                os << "gluing is not an involution at face (" << t << "," << f << ")";
                throw GluingError(os.str());
            }
        }
    }
}

std::vector<EdgeClass> edge_classes(const Triangulation& t) {
    const int n = t.size();
    std::vector<std::array<std::int8_t, 6>> orient(n, {0, 0, 0, 0, 0, 0});
    std::vector<EdgeClass> classes;

    for (int t0 = 0; t0 < n; ++t0) {
        for (int e0 = 0; e0 < 6; ++e0) {
            if (orient[t0][e0] != 0) continue;
            EdgeClass cls;
            orient[t0][e0] = +1;
            std::queue<std::pair<int, int>> todo;
            todo.emplace(t0, e0);
            cls.members.push_back({t0, e0, +1});
            while (!todo.empty()) {
                auto [tt, ee] = todo.front();
                todo.pop();
                const int a = kEdgeEndpoints[ee][0];
                const int b = kEdgeEndpoints[ee][1];
                const std::int8_t cur = orient[tt][ee];
                // The edge lies in the two faces opposite its missing vertices.
                for (int f = 0; f < 4; ++f) {
                    if (f == a || f == b) continue;
                    const Gluing& g = t.gluing(tt, f);
                    const int ia = g.perm[a];
                    const int ib = g.perm[b];
                    const int ie = edge_index(ia, ib);
                    const std::int8_t flip = (ia < ib) ? std::int8_t{1} : std::int8_t{-1};
                    const std::int8_t next = static_cast<std::int8_t>(cur * flip);
                    std::int8_t& slot = orient[g.tet][ie];
                    if (slot == 0) {
                        slot = next;
                        cls.members.push_back({g.tet, ie, next});
                        todo.emplace(g.tet, ie);
                    } else if (slot != next) {
                        std::ostringstream os;
                        os << "edge orbit through (" << t0 << "," << e0 << ") is identified with itself reversed";
                        throw EdgeOrientationError(os.str());
                    }
                }
            }
            std::sort(cls.members.begin(), cls.members.end());
            classes.push_back(std::move(cls));
        }
    }
    return classes;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

std::vector<VertexClass> vertex_classes(const Triangulation& t) {
    const int n = t.size();

    UnionFind verts(4 * n);
    // Link corners: one per (vertex, incident edge) pair of a tetrahedron.
    // Corner id = 12*t + 2*e + (v == high endpoint of e).
    UnionFind corners(12 * n);

    for (int tt = 0; tt < n; ++tt) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = t.gluing(tt, f);
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                verts.unite(4 * tt + v, 4 * g.tet + g.perm[v]);
            }
            for (int e = 0; e < 6; ++e) {
                const int a = kEdgeEndpoints[e][0];
                const int b = kEdgeEndpoints[e][1];
                if (a == f || b == f) continue;  // edge not in face f
                const int ia = g.perm[a];
                const int ib = g.perm[b];
                const int ie = edge_index(ia, ib);
                const int lo = std::min(ia, ib);
                corners.unite(12 * tt + 2 * e + 0, 12 * g.tet + 2 * ie + (ia == lo ? 0 : 1));
                corners.unite(12 * tt + 2 * e + 1, 12 * g.tet + 2 * ie + (ib == lo ? 0 : 1));
            }
        }
    }

    // Group (tet, vertex) incidences by class root, ordered by least member.
    std::map<int, std::vector<std::pair<std::int32_t, std::int32_t>>> groups;
    for (int tt = 0; tt < n; ++tt)
        for (int v = 0; v < 4; ++v) groups[verts.find(4 * tt + v)].push_back({tt, v});

    // Count distinct corner orbits per vertex class.
    std::map<int, std::vector<int>> corner_roots;  // vertex root -> corner roots
    for (int tt = 0; tt < n; ++tt) {
        for (int e = 0; e < 6; ++e) {
            for (int end = 0; end < 2; ++end) {
                const int v = kEdgeEndpoints[e][end];
                corner_roots[verts.find(4 * tt + v)].push_back(corners.find(12 * tt + 2 * e + end));
            }
        }
    }

    std::vector<VertexClass> classes;
    std::vector<std::pair<std::pair<int, int>, int>> order;  // (least member, root)
    for (auto& [root, mem] : groups) {
        std::sort(mem.begin(), mem.end());
        order.push_back({{mem.front().first, mem.front().second}, root});
    }
    std::sort(order.begin(), order.end());

    for (auto& [least, root] : order) {
        VertexClass vc;
        vc.members = groups[root];
        const int faces = static_cast<int>(vc.members.size());  // one link triangle per incidence
        auto& cr = corner_roots[root];
        std::sort(cr.begin(), cr.end());
        cr.erase(std::unique(cr.begin(), cr.end()), cr.end());
        const int link_vertices = static_cast<int>(cr.size());
        const int link_edges = 3 * faces / 2;
        vc.link_euler = link_vertices - link_edges + faces;
        vc.kind = (vc.link_euler == 2) ? VertexKind::Interior : VertexKind::Ideal;
        classes.push_back(std::move(vc));
    }
    return classes;
}

std::vector<FaceClass> face_classes(const Triangulation& t) {
    std::vector<FaceClass> classes;
    for (int tt = 0; tt < t.size(); ++tt) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = t.gluing(tt, f);
            const std::pair<std::int32_t, std::int32_t> here{tt, f};
            const std::pair<std::int32_t, std::int32_t> there{g.tet, g.perm[f]};
            if (there < here) continue;
            classes.push_back({here, there});
        }
    }
    return classes;
}

int count_interior_vertices(const Triangulation& t) {
    int a = 0;
    for (const auto& vc : vertex_classes(t))
        if (vc.kind == VertexKind::Interior) ++a;
    return a;
}

std::vector<std::int8_t> validate_orientation(const Triangulation& t) {
    const int n = t.size();
    std::vector<std::int8_t> sign(n, 0);
    for (int start = 0; start < n; ++start) {
        if (sign[start] != 0) continue;
        sign[start] = +1;
        std::queue<int> todo;
        todo.push(start);
        while (!todo.empty()) {
            int tt = todo.front();
            todo.pop();
            for (int f = 0; f < 4; ++f) {
                const Gluing& g = t.gluing(tt, f);
                // A gluing must reverse orientation across the face:
                // odd permutations join same-sign tetrahedra.
                const std::int8_t expect = static_cast<std::int8_t>(-sign[tt] * g.perm.sign());
                if (sign[g.tet] == 0) {
                    sign[g.tet] = expect;
                    todo.push(g.tet);
                } else if (sign[g.tet] != expect) {
                    throw NonOrientableError("no consistent tetrahedron orientation exists");
                }
            }
        }
    }
    return sign;
}

Triangulation mirror(const Triangulation& t) {
    const Perm4 swap23 = Perm4::transposition(2, 3);
    std::vector<std::array<Gluing, 4>> glue(static_cast<std::size_t>(t.size()));
    for (int tt = 0; tt < t.size(); ++tt) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = t.gluing(tt, swap23[f]);
            glue[tt][f] = {g.tet, swap23.after(g.perm.after(swap23))};
        }
    }
    return Triangulation(t.size(), std::move(glue));
}

namespace {

std::vector<std::int32_t> bfs_encoding(const Triangulation& t, int start, const Perm4& start_perm) {
    const int n = t.size();
    std::vector<int> new_index(n, -1);
    std::vector<Perm4> relabel(n);  // old labels -> new labels
    std::vector<int> order;
    order.reserve(n);

    new_index[start] = 0;
    relabel[start] = start_perm;
    order.push_back(start);

    std::vector<std::int32_t> enc;
    enc.reserve(n * 8);

    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const int told = order[pos];
        for (int fnew = 0; fnew < 4; ++fnew) {
            const int fold = relabel[told].inverse()[fnew];
            const Gluing& g = t.gluing(told, fold);
            if (new_index[g.tet] == -1) {
                new_index[g.tet] = static_cast<int>(order.size());
                // Choose the partner's relabelling so this gluing reads as identity.
                relabel[g.tet] = relabel[told].after(g.perm.inverse());
                order.push_back(g.tet);
            }
            const Perm4 pnew = relabel[g.tet].after(g.perm.after(relabel[told].inverse()));
            enc.push_back(new_index[g.tet]);
            enc.push_back(pnew.lex_index());
        }
    }
    return enc;
}

} // namespace

std::vector<std::int32_t> canonical_form(const Triangulation& t) {
    std::vector<std::int32_t> best;
    for (int start = 0; start < t.size(); ++start) {
        for (int p = 0; p < 24; ++p) {
            auto enc = bfs_encoding(t, start, Perm4::from_lex_index(p));
            if (best.empty() || enc < best) best = std::move(enc);
        }
    }
    best.insert(best.begin(), t.size());
    return best;
}

bool isomorphic(const Triangulation& a, const Triangulation& b) {
    if (a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

Triangulation parse_triangulation(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("triangulation document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("tets") || !doc.contains("gluings"))
        throw ParseError("triangulation document needs \"tets\" and \"gluings\"");
    const int n = checked_int(doc["tets"], "tets");
    if (n < 1) throw ParseError("tets must be positive");
    const auto& gl = doc["gluings"];
    if (!gl.is_array() || static_cast<int>(gl.size()) != n)
        throw ParseError("gluings must list one entry per tetrahedron");
    std::vector<std::array<Gluing, 4>> table(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        const auto& row = gl[static_cast<std::size_t>(t)];
        if (!row.is_array() || row.size() != 4) throw ParseError("each tetrahedron needs four face gluings");
        for (int f = 0; f < 4; ++f) {
            const auto& cell = row[static_cast<std::size_t>(f)];
            if (!cell.is_object() || !cell.contains("tet") || !cell.contains("perm"))
                throw ParseError("face gluing needs \"tet\" and \"perm\"");
            const int target = checked_int(cell["tet"], "tet");
            const auto& pj = cell["perm"];
            if (!pj.is_array() || pj.size() != 4) throw ParseError("perm must have four entries");
            Perm4 perm(checked_int(pj[0], "perm"), checked_int(pj[1], "perm"), checked_int(pj[2], "perm"), checked_int(pj[3], "perm"));
            if (!perm.is_valid()) throw ParseError("perm is not a permutation of 0..3");
            table[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)] = {target, perm};
        }
    }
    return Triangulation(n, std::move(table));  // involution etc. checked here
}

std::string triangulation_to_json(const Triangulation& t) {
    nlohmann::json doc;
    doc["tets"] = t.size();
    nlohmann::json rows = nlohmann::json::array();
    for (int tt = 0; tt < t.size(); ++tt) {
        nlohmann::json row = nlohmann::json::array();
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = t.gluing(tt, f);
            row.push_back({{"tet", g.tet}, {"perm", {g.perm[0], g.perm[1], g.perm[2], g.perm[3]}}});
        }
        rows.push_back(std::move(row));
    }
    doc["gluings"] = std::move(rows);
    return doc.dump();
}

std::vector<std::array<std::int32_t, 6>> edge_class_lookup(const Triangulation& t, const std::vector<EdgeClass>& classes) {
    std::vector<std::array<std::int32_t, 6>> lut(static_cast<std::size_t>(t.size()), {-1, -1, -1, -1, -1, -1});
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (const auto& m : classes[c].members) lut[static_cast<std::size_t>(m.tet)][static_cast<std::size_t>(m.edge)] = static_cast<std::int32_t>(c);
    return lut;
}

std::vector<std::array<std::int8_t, 6>> edge_orient_lookup(const Triangulation& t, const std::vector<EdgeClass>& classes) {
    std::vector<std::array<std::int8_t, 6>> lut(static_cast<std::size_t>(t.size()), {0, 0, 0, 0, 0, 0});
    for (const auto& cls : classes)
        for (const auto& m : cls.members) lut[static_cast<std::size_t>(m.tet)][static_cast<std::size_t>(m.edge)] = m.orient;
    return lut;
}

} // namespace dw
