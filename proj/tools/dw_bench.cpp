// Timing comparison between the serial reference kernels and their
// OpenMP counterparts. Both kernels must produce identical results; the
// benchmark aborts if they disagree.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "dw/branching.hpp"
#include "dw/cochain.hpp"
#include "dw/fixtures.hpp"
#include "dw/pachner.hpp"
#include "dw/statesum.hpp"

using namespace dw;

namespace {

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
#endif
}

template <typename F>
double time_best_of(int repeat, F&& f) {
    double best = 1e100;
    for (int i = 0; i < repeat; ++i) {
        const double t0 = now();
        f();
        best = std::min(best, now() - t0);
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP kernel timings"};
    int m = 32;
    int group = 5;
    int moves = 7;
    int repeat = 3;
    app.add_option("--m", m, "cyclic group order for the cocycle-check kernel");
    app.add_option("--group", group, "cyclic group order for the state-sum kernel");
    app.add_option("--moves", moves, "number of (1,4) subdivisions applied to the base sphere");
    app.add_option("--repeat", repeat, "take the best of this many runs");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; both columns run serially\n";
#endif

    {
        const FiniteGroup g = cyclic_group(m);
        const Cochain3 alpha = cyclic_generator_cocycle(m, 1);
        bool rs = true, rp = true;
        const double ts = time_best_of(repeat, [&] { rs = is_cocycle(g, alpha); });
        const double tp = time_best_of(repeat, [&] { rp = is_cocycle_parallel(g, alpha); });
        if (rs != rp) {
            std::cerr << "kernel mismatch in cocycle check\n";
            return 1;
        }
        std::cout << "cocycle check  Z_" << m << " (" << static_cast<long long>(m) * m * m * m << " quadruples)\n";
        std::cout << "  serial   " << ts * 1e3 << " ms\n";
        std::cout << "  parallel " << tp * 1e3 << " ms   speedup x" << ts / tp << "\n";
    }

    {
        // A closed fixture subdivided by (1,4) moves: each subdivision
        // multiplies the coloring count by the group order.
        Triangulation t = fixture_triangulation("s3_double");
        for (int i = 0; i < moves; ++i) t = pachner_14(t, i % t.size());
        const auto b = find_branching(t);
        if (!b) {
            std::cerr << "unexpected: subdivided sphere not orderable\n";
            return 1;
        }
        const FiniteGroup g = cyclic_group(group);
        const Cochain3 alpha = cyclic_generator_cocycle(group, 1);
        std::vector<std::uint64_t> hs, hp;
        const double ts = time_best_of(repeat, [&] { hs = statesum_histogram_serial(t, *b, g, alpha); });
        const double tp = time_best_of(repeat, [&] { hp = statesum_histogram_parallel(t, *b, g, alpha); });
        if (hs != hp) {
            std::cerr << "kernel mismatch in state sum\n";
            return 1;
        }
        std::uint64_t colorings = 0;
        for (auto c : hs) colorings += c;
        std::cout << "state sum      " << t.size() << " tets over Z_" << group << " (" << colorings << " colorings)\n";
        std::cout << "  serial   " << ts * 1e3 << " ms\n";
        std::cout << "  parallel " << tp * 1e3 << " ms   speedup x" << ts / tp << "\n";
    }
    return 0;
}
