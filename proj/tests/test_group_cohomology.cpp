#include "doctest.h"
#include "dw/cochain.hpp"
#include "dw/errors.hpp"
#include "dw/group.hpp"

using namespace dw;

TEST_CASE("cyclic group tables") {
    const FiniteGroup z1 = cyclic_group(1);
    CHECK(z1.order() == 1);
    CHECK(z1.identity() == 0);

    const FiniteGroup z5 = cyclic_group(5);
    CHECK(z5.mul(2, 3) == 0);
    CHECK(z5.inv(2) == 3);

    const FiniteGroup z12 = cyclic_group(12);
    CHECK(z12.order() == 12);
    CHECK(z12.inv(6) == 6);
    CHECK(z12.pow(5, -1) == 7);
}

TEST_CASE("group table parsing and validation") {
    CHECK_THROWS_AS(parse_group("[1,2]"), ParseError);
    // Z2 as an explicit table.
    const FiniteGroup z2 = parse_group(R"({"order": 2, "table": [[0,1],[1,0]]})");
    CHECK(z2.identity() == 0);
    // A latin square that is not associative.
    CHECK_THROWS_AS(parse_group(R"({"table": [
        [0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],[3,2,4,0,1],[4,3,1,2,0]]})"),
        ParseError);
}

TEST_CASE("generator cocycle values") {
    const Cochain3 a = cyclic_generator_cocycle(5, 1);
    CHECK(a.modulus() == 25);
    CHECK(a.exponent(1, 1, 1) == 0);   // 1 + 1 - 2 = 0, no carry
    CHECK(a.exponent(3, 4, 2) == 15);  // carry: 4 + 2 - 1 = 5; 3 * 5 = 15
    for (int g = 0; g < 5; ++g)
        for (int h = 0; h < 5; ++h) CHECK(a.exponent(0, g, h) == 0);
    CHECK(a.is_normalized(cyclic_group(5)));
}

TEST_CASE("generator cocycles satisfy the cocycle condition") {
    for (int m : {2, 3, 5, 12}) {
        const FiniteGroup g = cyclic_group(m);
        for (int p = 0; p < m; ++p) {
            const Cochain3 a = cyclic_generator_cocycle(m, p);
            CHECK(a.is_normalized(g));
            CHECK(is_cocycle(g, a));
        }
    }
}

TEST_CASE("perturbing one entry breaks the cocycle condition") {
    const FiniteGroup g = cyclic_group(3);
    Cochain3 a = cyclic_generator_cocycle(3, 0);
    CHECK(is_cocycle(g, a));
    a.set_exponent(1, 1, 1, a.exponent(1, 1, 1) + 1);
    CHECK_FALSE(is_cocycle(g, a));
}

TEST_CASE("coboundaries are cocycles and the trivial class") {
    const FiniteGroup g = cyclic_group(5);
    // beta == 0 gives the trivial cocycle.
    const Cochain3 trivial = coboundary2(g, Cochain2(5, 25));
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y)
            for (int z = 0; z < 5; ++z) CHECK(trivial.exponent(x, y, z) == 0);

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Cochain2 b = random_normalized_cochain2(g, 25, seed);
        CHECK(b.is_normalized(g));
        const Cochain3 db = coboundary2(g, b);
        CHECK(db.is_normalized(g));
        CHECK(is_cocycle(g, db));
    }

    // Exponent identity on one triple.
    const Cochain2 b = random_normalized_cochain2(g, 25, 3);
    const Cochain3 db = coboundary2(g, b);
    const int x = 2, y = 3, z = 4;
    const int expect = ((b.exponent(y, z) - b.exponent(g.mul(x, y), z) + b.exponent(x, g.mul(y, z)) - b.exponent(x, y)) % 25 + 25) % 25;
    CHECK(db.exponent(x, y, z) == expect);
}

TEST_CASE("cochain products") {
    const FiniteGroup g = cyclic_group(5);
    const Cochain3 a1 = cyclic_generator_cocycle(5, 1);
    const Cochain3 a2 = cyclic_generator_cocycle(5, 2);

    // alpha * alpha^-1 is trivial.
    const Cochain3 unit = cochain_product(a1, cochain_inverse(a1));
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y)
            for (int z = 0; z < 5; ++z) CHECK(unit.exponent(x, y, z) == 0);

    // Exponent linearity in the generator power.
    const Cochain3 sum = cochain_product(a1, a1);
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y)
            for (int z = 0; z < 5; ++z) CHECK(sum.exponent(x, y, z) == a2.exponent(x, y, z));

    // Products with coboundaries stay cocycles.
    const Cochain3 db = coboundary2(g, random_normalized_cochain2(g, 25, 11));
    CHECK(is_cocycle(g, cochain_product(a2, db)));

    const Cochain3 other(5, 7);
    CHECK_THROWS_AS(cochain_product(a1, other, false), ModulusMismatchError);
}

TEST_CASE("generator power is periodic mod m") {
    for (int m : {2, 3, 5, 12}) {
        for (int p = 0; p < m; ++p) {
            const Cochain3 a = cyclic_generator_cocycle(m, p);
            const Cochain3 b = cyclic_generator_cocycle(m, p + m);
            CHECK(a.raw() == b.raw());
        }
    }
}

TEST_CASE("cocycle file parsing") {
    const Cochain3 a = parse_cochain3(R"({"m": 5, "p": 2})");
    CHECK(a.modulus() == 25);
    CHECK(a.raw() == cyclic_generator_cocycle(5, 2).raw());

    const Cochain3 b = parse_cochain3(R"({"N": 4, "exponents": [[[0,0],[0,0]],[[0,0],[0,2]]]})");
    CHECK(b.modulus() == 4);
    CHECK(b.exponent(1, 1, 1) == 2);
    CHECK(is_cocycle(cyclic_group(2), b));

    CHECK_THROWS_AS(parse_cochain3("{}"), ParseError);
}
