#include "dw/statesum.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include <nlohmann/json.hpp>

#include "dw/errors.hpp"
#include "dw/pachner.hpp"

namespace dw {

namespace {

// One face relation phi(a->b) * phi(b->c) = phi(a->c) over edge classes,
// with rel the member orientations translating class colors to the
// low->high readings.
struct Relation {
    std::array<std::int32_t, 3> cls;
    std::array<std::int8_t, 3> rel;
};

std::vector<Relation> face_relations(const Triangulation& t, const std::vector<EdgeClass>& classes) {
    const auto cls_lut = edge_class_lookup(t, classes);
    const auto orient_lut = edge_orient_lookup(t, classes);
    std::vector<Relation> out;
    for (const auto& fc : face_classes(t)) {
        const int tt = fc.side0.first;
        const int f = fc.side0.second;
        std::array<int, 3> verts{};
        int k = 0;
        for (int v = 0; v < 4; ++v)
            if (v != f) verts[static_cast<std::size_t>(k++)] = v;
        const int a = verts[0], b = verts[1], c = verts[2];
        Relation r;
        const std::array<int, 3> edges{edge_index(a, b), edge_index(b, c), edge_index(a, c)};
        for (int i = 0; i < 3; ++i) {
            r.cls[static_cast<std::size_t>(i)] = cls_lut[static_cast<std::size_t>(tt)][static_cast<std::size_t>(edges[static_cast<std::size_t>(i)])];
            r.rel[static_cast<std::size_t>(i)] = orient_lut[static_cast<std::size_t>(tt)][static_cast<std::size_t>(edges[static_cast<std::size_t>(i)])];
        }
        out.push_back(r);
    }
    return out;
}

// Depth-first enumeration with unit propagation: a face with two known
// edge colors forces the third.
class Enumerator {
  public:
    Enumerator(const FiniteGroup& g, std::size_t num_classes, std::vector<Relation> relations) : g_(g), relations_(std::move(relations)), assign_(num_classes, -1) {
        rel_of_class_.resize(num_classes);
        for (std::size_t ri = 0; ri < relations_.size(); ++ri)
            for (int i = 0; i < 3; ++i) rel_of_class_[static_cast<std::size_t>(relations_[ri].cls[static_cast<std::size_t>(i)])].push_back(static_cast<int>(ri));
        // Variable order: descending constraint degree, then class index.
        order_.resize(num_classes);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return rel_of_class_[a].size() > rel_of_class_[b].size(); });
    }

    std::size_t variables() const { return order_.size(); }
    std::size_t first_variable() const { return order_.front(); }

    /// Enumerate all colorings; when pin >= 0 the first search variable
    /// is fixed to that element (used by the parallel partition).
    void run(const std::function<void(const Coloring&)>& visit, int pin = -1) {
        if (order_.empty()) {
            visit(assign_);
            return;
        }
        std::vector<std::size_t> trail;
        if (pin >= 0) {
            if (set_and_propagate(order_.front(), pin, trail)) descend(1, visit);
            undo(trail);
            return;
        }
        descend(0, visit);
    }

  private:
    void descend(std::size_t depth, const std::function<void(const Coloring&)>& visit) {
        // Propagation may have filled everything past this depth.
        while (depth < order_.size() && assign_[order_[depth]] >= 0) ++depth;
        if (depth == order_.size()) {
            visit(assign_);
            return;
        }
        const std::size_t var = order_[depth];
        for (int val = 0; val < g_.order(); ++val) {
            std::vector<std::size_t> trail;
            if (set_and_propagate(var, val, trail)) descend(depth + 1, visit);
            undo(trail);
        }
    }

    bool set_and_propagate(std::size_t var, int val, std::vector<std::size_t>& trail) {
        assign_[var] = val;
        trail.push_back(var);
        std::vector<std::size_t> queue{var};
        while (!queue.empty()) {
            const std::size_t v = queue.back();
            queue.pop_back();
            for (int ri : rel_of_class_[v]) {
                const Relation& r = relations_[static_cast<std::size_t>(ri)];
                int known = 0, missing = -1;
                for (int i = 0; i < 3; ++i) {
                    if (assign_[static_cast<std::size_t>(r.cls[static_cast<std::size_t>(i)])] >= 0)
                        ++known;
                    else
                        missing = i;
                }
                if (known == 3) {
                    if (!satisfied(r)) return false;
                } else if (known == 2) {
                    const int forced = solve(r, missing);
                    const std::size_t target = static_cast<std::size_t>(r.cls[static_cast<std::size_t>(missing)]);
                    assign_[target] = forced;
                    trail.push_back(target);
                    queue.push_back(target);
                }
            }
        }
        return true;
    }

    void undo(const std::vector<std::size_t>& trail) {
        for (std::size_t v : trail) assign_[v] = -1;
    }

    int oriented(const Relation& r, int i) const {
        const int v = assign_[static_cast<std::size_t>(r.cls[static_cast<std::size_t>(i)])];
        return r.rel[static_cast<std::size_t>(i)] > 0 ? v : g_.inv(v);
    }

    bool satisfied(const Relation& r) const {
        return g_.mul(oriented(r, 0), oriented(r, 1)) == oriented(r, 2);
    }

    // Solve phi0 * phi1 = phi2 for the missing position.
    int solve(const Relation& r, int missing) const {
        int value;
        switch (missing) {
            case 0: value = g_.mul(oriented(r, 2), g_.inv(oriented(r, 1))); break;
            case 1: value = g_.mul(g_.inv(oriented(r, 0)), oriented(r, 2)); break;
            default: value = g_.mul(oriented(r, 0), oriented(r, 1)); break;
        }
        return r.rel[static_cast<std::size_t>(missing)] > 0 ? value : g_.inv(value);
    }

    const FiniteGroup& g_;
    std::vector<Relation> relations_;
    std::vector<std::vector<int>> rel_of_class_;
    std::vector<std::size_t> order_;
    Coloring assign_;
};

// Per-tetrahedron reading plan: the three order edges as (class, sign)
// plus the tetrahedron sign.
struct TetPlan {
    std::array<std::int32_t, 3> cls;
    std::array<std::int8_t, 3> sgn;
    std::int8_t eps;
};

std::vector<TetPlan> tet_plans(const Triangulation& t, const Branching& b) {
    const auto classes = edge_classes(t);
    const auto cls_lut = edge_class_lookup(t, classes);
    const auto orient_lut = edge_orient_lookup(t, classes);
    const auto eps = tet_signs(t, b);
    std::vector<TetPlan> plans(static_cast<std::size_t>(t.size()));
    for (int tt = 0; tt < t.size(); ++tt) {
        const auto order = tet_order(b, cls_lut, orient_lut, tt);
        TetPlan& p = plans[static_cast<std::size_t>(tt)];
        p.eps = eps[static_cast<std::size_t>(tt)];
        for (int i = 0; i < 3; ++i) {
            const int x = order[static_cast<std::size_t>(i)];
            const int y = order[static_cast<std::size_t>(i + 1)];
            const int e = edge_index(x, y);
            p.cls[static_cast<std::size_t>(i)] = cls_lut[static_cast<std::size_t>(tt)][static_cast<std::size_t>(e)];
            const std::int8_t rel = orient_lut[static_cast<std::size_t>(tt)][static_cast<std::size_t>(e)];
            // phi(x->y): along the class direction when x < y matches rel.
            p.sgn[static_cast<std::size_t>(i)] = (x < y) ? rel : static_cast<std::int8_t>(-rel);
        }
    }
    return plans;
}

long long coloring_exponent(const std::vector<TetPlan>& plans, const FiniteGroup& g, const Cochain3& alpha, const Coloring& phi) {
    long long e = 0;
    for (const TetPlan& p : plans) {
        std::array<int, 3> elt{};
        for (int i = 0; i < 3; ++i) {
            const int v = phi[static_cast<std::size_t>(p.cls[static_cast<std::size_t>(i)])];
            elt[static_cast<std::size_t>(i)] = p.sgn[static_cast<std::size_t>(i)] > 0 ? v : g.inv(v);
        }
        e += static_cast<long long>(p.eps) * alpha.exponent(elt[0], elt[1], elt[2]);
    }
    return e;
}

std::vector<std::uint64_t> histogram_impl(const Triangulation& t, const Branching& b, const FiniteGroup& g, const Cochain3& alpha, bool parallel) {
    const auto classes = edge_classes(t);
    const auto relations = face_relations(t, classes);
    const auto plans = tet_plans(t, b);
    const int modulus = alpha.modulus();

    auto make_hist = [&]() { return std::vector<std::uint64_t>(static_cast<std::size_t>(modulus), 0); };

    if (!parallel || classes.empty()) {
        auto hist = make_hist();
        Enumerator en(g, classes.size(), relations);
        en.run([&](const Coloring& phi) {
            long long e = coloring_exponent(plans, g, alpha, phi) % modulus;
            if (e < 0) e += modulus;
            ++hist[static_cast<std::size_t>(e)];
        });
        return hist;
    }

    // Partition on the first search variable; exact integer merge keeps
    // the result independent of scheduling.
    std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(g.order()), make_hist());
#pragma omp parallel for schedule(dynamic)
    for (int val = 0; val < g.order(); ++val) {
        Enumerator en(g, classes.size(), relations);
        auto& hist = partial[static_cast<std::size_t>(val)];
        en.run(
            [&](const Coloring& phi) {
                long long e = coloring_exponent(plans, g, alpha, phi) % modulus;
                if (e < 0) e += modulus;
                ++hist[static_cast<std::size_t>(e)];
            },
            val);
    }
    auto hist = make_hist();
    for (const auto& part : partial)
        for (std::size_t j = 0; j < hist.size(); ++j) hist[j] += part[j];
    return hist;
}

Cyclotomic histogram_to_value(const std::vector<std::uint64_t>& hist, int modulus) {
    Cyclotomic sum(modulus);
    for (std::size_t j = 0; j < hist.size(); ++j) {
        if (hist[j] == 0) continue;
        sum = sum + Cyclotomic::root_of_unity(modulus, static_cast<long long>(j)).scaled(Rational(hist[j]));
    }
    return sum;
}

} // namespace

std::vector<Coloring> enumerate_colorings(const Triangulation& t, const FiniteGroup& g) {
    std::vector<Coloring> out;
    for_each_coloring(t, g, [&](const Coloring& phi) { out.push_back(phi); });
    return out;
}

std::uint64_t count_colorings(const Triangulation& t, const FiniteGroup& g) {
    std::uint64_t n = 0;
    for_each_coloring(t, g, [&](const Coloring&) { ++n; });
    return n;
}

void for_each_coloring(const Triangulation& t, const FiniteGroup& g, const std::function<void(const Coloring&)>& visit) {
    const auto classes = edge_classes(t);
    Enumerator en(g, classes.size(), face_relations(t, classes));
    en.run(visit);
}

Cyclotomic symbol(const Triangulation& t, const Branching& b, int tet, const Coloring& phi, const FiniteGroup& g, const Cochain3& alpha) {
    const auto plans = tet_plans(t, b);
    const TetPlan& p = plans[static_cast<std::size_t>(tet)];
    std::array<int, 3> elt{};
    for (int i = 0; i < 3; ++i) {
        const int v = phi[static_cast<std::size_t>(p.cls[static_cast<std::size_t>(i)])];
        elt[static_cast<std::size_t>(i)] = p.sgn[static_cast<std::size_t>(i)] > 0 ? v : g.inv(v);
    }
    return Cyclotomic::root_of_unity(alpha.modulus(), static_cast<long long>(p.eps) * alpha.exponent(elt[0], elt[1], elt[2]));
}

std::vector<std::uint64_t> statesum_histogram_serial(const Triangulation& t, const Branching& b, const FiniteGroup& g, const Cochain3& alpha) {
    return histogram_impl(t, b, g, alpha, false);
}

std::vector<std::uint64_t> statesum_histogram_parallel(const Triangulation& t, const Branching& b, const FiniteGroup& g, const Cochain3& alpha) {
    return histogram_impl(t, b, g, alpha, true);
}

InvariantResult invariant(const Triangulation& t, const FiniteGroup& g, const Cochain3& alpha, const InvariantOptions& opts) {
    validate_orientation(t);
    if (opts.check_cocycle) {
        if (alpha.group_order() != g.order() || !alpha.is_normalized(g) || !is_cocycle(g, alpha)) throw NotACocycleError("the cochain is not a normalized 3-cocycle");
    }

    Triangulation ordered = t;
    Branching branching{{}};
    int moves = 0;
    if (auto b = find_branching(t)) {
        branching = std::move(*b);
    } else {
        OrderableResult r = make_orderable(t, opts.max_moves);
        ordered = std::move(r.triangulation);
        branching = std::move(r.branching);
        moves = static_cast<int>(r.moves.size());
    }

    const auto hist = histogram_impl(ordered, branching, g, alpha, opts.parallel);
    std::uint64_t total = 0;
    for (auto c : hist) total += c;

    Cyclotomic value = histogram_to_value(hist, alpha.modulus());
    const int a = count_interior_vertices(ordered);
    Rational scale(1);
    for (int i = 0; i < a; ++i) scale /= g.order();
    value = value.scaled(scale);

    return {std::move(value), moves, total, ordered.size()};
}

namespace {

Word parse_word(const std::string& text, const std::vector<std::string>& vars) {
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        // Longest-match variable name.
        int var = -1;
        std::size_t len = 0;
        for (std::size_t v = 0; v < vars.size(); ++v) {
            const auto& name = vars[v];
            if (name.size() > len && text.compare(i, name.size(), name) == 0) {
                var = static_cast<int>(v);
                len = name.size();
            }
        }
        if (var < 0) throw ParseError("unknown variable in word: " + text);
        i += len;
        long long power = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            bool neg = false;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                neg = text[i] == '-';
                ++i;
            }
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("malformed exponent in word: " + text);
            long long mag = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) mag = mag * 10 + (text[i++] - '0');
            power = neg ? -mag : mag;
        }
        w.emplace_back(var, power);
    }
    return w;
}

} // namespace

ReducedFormula parse_reduced_formula(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("reduced formula document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vars") || !doc.contains("constraints") || !doc.contains("factors"))
        throw ParseError("reduced formula needs \"vars\", \"constraints\", \"factors\"");
    ReducedFormula f;
    for (const auto& v : doc["vars"]) f.vars.push_back(v.get<std::string>());
    for (const auto& c : doc["constraints"]) f.constraints.push_back(parse_word(c.get<std::string>(), f.vars));
    for (const auto& fac : doc["factors"]) {
        if (!fac.is_object() || !fac.contains("args")) throw ParseError("factor needs \"args\"");
        const auto& args = fac["args"];
        if (!args.is_array() || args.size() != 3) throw ParseError("factor args must be three words");
        ReducedFactor rf;
        for (int i = 0; i < 3; ++i) rf.args[static_cast<std::size_t>(i)] = parse_word(args[static_cast<std::size_t>(i)].get<std::string>(), f.vars);
        rf.sign = fac.value("sign", 1);
        if (rf.sign != 1 && rf.sign != -1) throw ParseError("factor sign must be +1 or -1");
        f.factors.push_back(std::move(rf));
    }
    return f;
}

int evaluate_word(const Word& w, const FiniteGroup& g, const std::vector<int>& assignment) {
    int acc = g.identity();
    for (const auto& [var, power] : w) acc = g.mul(acc, g.pow(assignment[static_cast<std::size_t>(var)], power));
    return acc;
}

Cyclotomic reduced_sum_oracle(const ReducedFormula& formula, const FiniteGroup& g, const Cochain3& alpha) {
    const int modulus = alpha.modulus();
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(modulus), 0);
    std::vector<int> assignment(formula.vars.size(), 0);

    const std::size_t nvars = formula.vars.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < nvars; ++i) total *= static_cast<std::uint64_t>(g.order());

    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (std::size_t i = 0; i < nvars; ++i) {
            assignment[i] = static_cast<int>(c % static_cast<std::uint64_t>(g.order()));
            c /= static_cast<std::uint64_t>(g.order());
        }
        bool ok = true;
        for (const auto& w : formula.constraints)
            if (evaluate_word(w, g, assignment) != g.identity()) {
                ok = false;
                break;
            }
        if (!ok) continue;
        long long e = 0;
        for (const auto& fac : formula.factors) {
            const int x = evaluate_word(fac.args[0], g, assignment);
            const int y = evaluate_word(fac.args[1], g, assignment);
            const int z = evaluate_word(fac.args[2], g, assignment);
            e += static_cast<long long>(fac.sign) * alpha.exponent(x, y, z);
        }
        e %= modulus;
        if (e < 0) e += modulus;
        ++hist[static_cast<std::size_t>(e)];
    }
    return histogram_to_value(hist, modulus);
}

} // namespace dw
