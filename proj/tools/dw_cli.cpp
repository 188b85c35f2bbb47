#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dw/branching.hpp"
#include "dw/cochain.hpp"
#include "dw/errors.hpp"
#include "dw/fixtures.hpp"
#include "dw/pachner.hpp"
#include "dw/statesum.hpp"
#include "dw/triangulation.hpp"

using namespace dw;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitInvalid = 3;     // NonOrientable / NotACocycle
constexpr int kExitExhausted = 4;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct GroupSpec {
    FiniteGroup group;
    bool cyclic;
    int order;
};

GroupSpec load_group(const std::string& spec) {
    if ((spec.size() > 1) && (spec[0] == 'Z' || spec[0] == 'z')) {
        const int m = std::stoi(spec.substr(1));
        return {cyclic_group(m), true, m};
    }
    if (spec.rfind("table:", 0) == 0) {
        FiniteGroup g = parse_group(slurp(spec.substr(6)));
        const int n = g.order();
        return {std::move(g), false, n};
    }
    throw ParseError("group must be Zm or table:FILE");
}

Cochain3 load_cocycle(const std::string& spec, const GroupSpec& g) {
    if (spec.rfind("gen:", 0) == 0) {
        if (!g.cyclic) throw ParseError("gen:p cocycles need a cyclic group Zm");
        return cyclic_generator_cocycle(g.order, std::stoll(spec.substr(4)));
    }
    if (spec.rfind("file:", 0) == 0) return parse_cochain3(slurp(spec.substr(5)));
    throw ParseError("cocycle must be gen:p or file:FILE");
}

int default_max_moves() {
    if (const char* env = std::getenv("DW_MAX_MOVES")) return std::atoi(env);
    return 8;
}

int run_compute(const std::string& tri_path, const std::string& group_spec, const std::string& cocycle_spec, int max_moves, bool json, bool serial) {
    const Triangulation t = parse_triangulation(slurp(tri_path));
    const GroupSpec g = load_group(group_spec);
    const Cochain3 alpha = load_cocycle(cocycle_spec, g);

    InvariantOptions opts;
    opts.max_moves = max_moves;
    opts.parallel = !serial;
    const InvariantResult r = invariant(t, g.group, alpha, opts);

    if (json) {
        nlohmann::json out;
        out["exact"] = nlohmann::json::parse(r.value.to_json());
        out["approx"] = r.value.approx_string();
        out["moves_used"] = r.moves_used;
        out["colorings"] = r.colorings;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << r.value.to_string() << "\n";
        std::cout << "moves_used: " << r.moves_used << "  colorings: " << r.colorings << "  tetrahedra: " << r.tetrahedra << "\n";
    }
    return 0;
}

int run_order(const std::string& tri_path, int max_moves) {
    const Triangulation t = parse_triangulation(slurp(tri_path));
    const OrderableResult r = make_orderable(t, max_moves);
    std::cout << "moves: " << r.moves.size() << "\n";
    for (const auto& [tet, face] : r.moves) std::cout << "  (2,3) at tet " << tet << " face " << face << "\n";
    std::cout << "branching over " << r.branching.edge_orientation.size() << " edge classes:";
    for (const auto d : r.branching.edge_orientation) std::cout << ' ' << (d > 0 ? '+' : '-');
    std::cout << "\n";
    return 0;
}

struct SuiteResult {
    int checks = 0;
    int failures = 0;
};

void report(SuiteResult& sr, bool ok, const std::string& what) {
    ++sr.checks;
    if (!ok) {
        ++sr.failures;
        std::cout << "MISMATCH: " << what << "\n";
    }
}

// The group and generator power used for a fixture in the verify suites.
int suite_group_order(const std::string& name) {
    if (name == "m009" || name == "m010") return 3;
    if (name == "s778" || name == "s788") return 12;
    if (name == "s3_double" || name == "one_tet_loop") return 2;
    return 5;
}

int run_verify(const std::string& suite, std::uint64_t seed) {
    SuiteResult sr;
    for (const auto& name : fixture_names()) {
        if (name == "one_tet_loop") continue;  // not orientable; parser fixture only
        const Triangulation t = fixture_triangulation(name);
        const int m = suite_group_order(name);
        const FiniteGroup g = cyclic_group(m);
        const Cochain3 alpha = cyclic_generator_cocycle(m, 1);

        if (suite == "moves") {
            const Cyclotomic base = invariant(t, g, alpha).value;
            for (std::uint64_t s = 0; s < 20; ++s) {
                const Triangulation moved = random_moves(t, 4, seed + s);
                const Cyclotomic z = invariant(moved, g, alpha).value;
                report(sr, z == base, name + " seed " + std::to_string(seed + s) + ": " + z.to_string() + " != " + base.to_string());
                if (sr.failures) return 1;
            }
        } else if (suite == "cohomology") {
            const Cyclotomic base = invariant(t, g, alpha).value;
            for (std::uint64_t s = 0; s < 10; ++s) {
                const Cochain2 beta = random_normalized_cochain2(g, alpha.modulus(), seed + s);
                const Cyclotomic z = invariant(t, g, cochain_product(alpha, coboundary2(g, beta))).value;
                report(sr, z == base, name + " beta seed " + std::to_string(seed + s));
                if (sr.failures) return 1;
            }
        } else if (suite == "mirror") {
            const Cyclotomic direct = invariant(t, g, alpha).value;
            const Cyclotomic reflected = invariant(mirror(t), g, alpha).value;
            report(sr, reflected == direct.conjugate(), name + ": mirror " + reflected.to_string() + " vs conj " + direct.conjugate().to_string());
            if (sr.failures) return 1;
        } else if (suite == "oracle") {
            if (name == "s3_double") continue;  // closed manifold, no bundled formula
            const ReducedFormula f = fixture_formula(name);
            for (int p = 0; p < m; ++p) {
                const Cochain3 ap = cyclic_generator_cocycle(m, p);
                const Cyclotomic z = invariant(t, g, ap).value;
                const Cyclotomic o = reduced_sum_oracle(f, g, ap);
                report(sr, z == o, name + " p=" + std::to_string(p) + ": " + z.to_string() + " != " + o.to_string());
                if (sr.failures) return 1;
            }
        } else {
            std::cerr << "unknown suite: " << suite << "\n";
            return kExitParse;
        }
    }
    std::cout << "suite " << suite << ": " << sr.checks << " checks passed\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Dijkgraaf-Witten invariants of triangulated 3-manifolds"};
    app.require_subcommand(1);

    std::string tri_path, group_spec = "Z5", cocycle_spec = "gen:1", suite;
    int max_moves = default_max_moves();
    bool json = false, serial = false;
    std::uint64_t seed = 1;

    auto* compute = app.add_subcommand("compute", "compute the invariant of a triangulation");
    compute->add_option("--triangulation", tri_path, "gluing table JSON")->required();
    compute->add_option("--group", group_spec, "Zm or table:FILE");
    compute->add_option("--cocycle", cocycle_spec, "gen:p or file:FILE");
    compute->add_option("--max-moves", max_moves, "positive (2,3) move budget for ordering");
    compute->add_flag("--json", json, "machine-readable output");
    compute->add_flag("--serial", serial, "disable the parallel state sum");

    auto* verify = app.add_subcommand("verify", "run an invariance property suite on the bundled fixtures");
    verify->add_option("--suite", suite, "moves|cohomology|mirror|oracle")->required();
    verify->add_option("--seed", seed, "base seed for randomized suites");

    auto* order = app.add_subcommand("order", "find a local order, applying positive (2,3) moves if needed");
    order->add_option("--triangulation", tri_path, "gluing table JSON")->required();
    order->add_option("--max-moves", max_moves, "positive (2,3) move budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitParse : 0;
    }

    try {
        if (compute->parsed()) return run_compute(tri_path, group_spec, cocycle_spec, max_moves, json, serial);
        if (order->parsed()) return run_order(tri_path, max_moves);
        if (verify->parsed()) return run_verify(suite, seed);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const GluingError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const SearchExhaustedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitExhausted;
    } catch (const NonOrientableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const NotACocycleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
