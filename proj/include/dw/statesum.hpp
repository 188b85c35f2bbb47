#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dw/branching.hpp"
#include "dw/cochain.hpp"
#include "dw/cyclotomic.hpp"
#include "dw/group.hpp"
#include "dw/triangulation.hpp"

namespace dw {

/// One group element per edge class, read along the class direction.
using Coloring = std::vector<int>;

/// All colorings of t by g, in the deterministic order of the
/// propagation search (variables by descending face-constraint degree).
std::vector<Coloring> enumerate_colorings(const Triangulation& t, const FiniteGroup& g);

std::uint64_t count_colorings(const Triangulation& t, const FiniteGroup& g);

/// Visit every coloring without materializing the list.
void for_each_coloring(const Triangulation& t, const FiniteGroup& g, const std::function<void(const Coloring&)>& visit);

/// Symbol of one colored tetrahedron: alpha(g,h,k)^eps with g,h,k the
/// colors of the order edges v0v1, v1v2, v2v3 read along increasing
/// order, inverting a class color where its direction opposes the read.
Cyclotomic symbol(const Triangulation& t, const Branching& b, int tet, const Coloring& phi, const FiniteGroup& g, const Cochain3& alpha);

/// Exponent histogram of the state sum: result[j] counts colorings whose
/// symbol product is zeta_N^j. Serial reference implementation.
std::vector<std::uint64_t> statesum_histogram_serial(const Triangulation& t, const Branching& b, const FiniteGroup& g, const Cochain3& alpha);

/// OpenMP variant partitioned by the first edge-class assignment;
/// bit-identical to the serial histogram.
std::vector<std::uint64_t> statesum_histogram_parallel(const Triangulation& t, const Branching& b, const FiniteGroup& g, const Cochain3& alpha);

struct InvariantOptions {
    int max_moves = 8;
    bool parallel = true;
    bool check_cocycle = true;
};

struct InvariantResult {
    Cyclotomic value;
    int moves_used = 0;
    std::uint64_t colorings = 0;
    int tetrahedra = 0;
};

/// The full invariant: find a local order (searching over positive (2,3)
/// moves when necessary), sum symbol products over all colorings, and
/// divide by |G|^(interior vertices).
InvariantResult invariant(const Triangulation& t, const FiniteGroup& g, const Cochain3& alpha, const InvariantOptions& opts = {});

/// A word in the formula variables: product of (variable, power) steps.
using Word = std::vector<std::pair<int, long long>>;

struct ReducedFactor {
    std::array<Word, 3> args;
    int sign = +1;
};

/// Sum over variable tuples satisfying constraint words == identity of a
/// product of cocycle factors. The independent cross-check for the full
/// state sum.
struct ReducedFormula {
    std::vector<std::string> vars;
    std::vector<Word> constraints;
    std::vector<ReducedFactor> factors;
};

ReducedFormula parse_reduced_formula(const std::string& text);

int evaluate_word(const Word& w, const FiniteGroup& g, const std::vector<int>& assignment);

Cyclotomic reduced_sum_oracle(const ReducedFormula& formula, const FiniteGroup& g, const Cochain3& alpha);

} // namespace dw
