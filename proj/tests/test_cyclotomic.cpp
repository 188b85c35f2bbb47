#include <complex>
#include <random>

#include "doctest.h"
#include "dw/cyclotomic.hpp"
#include "dw/errors.hpp"

using namespace dw;

namespace {

Cyclotomic random_element(int modulus, std::mt19937_64& rng) {
    Cyclotomic z(modulus);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 5);
    Cyclotomic acc(modulus);
    for (int i = 0; i < z.degree(); ++i) {
        const Rational c(num(rng), den(rng));
        acc = acc + Cyclotomic::root_of_unity(modulus, i).scaled(c);
    }
    return acc;
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<BigInt>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<BigInt>{1, 0, 1});
    CHECK(cyclotomic_polynomial(5) == std::vector<BigInt>{1, 1, 1, 1, 1});
    CHECK(cyclotomic_polynomial(9) == std::vector<BigInt>{1, 0, 0, 1, 0, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<BigInt>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(25) == std::vector<BigInt>{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
    CHECK(euler_phi(144) == 48);
}

TEST_CASE("sum of all N-th roots vanishes") {
    for (int n : {2, 3, 5, 12, 25}) {
        Cyclotomic sum(n);
        for (int k = 0; k < n; ++k) sum = sum + Cyclotomic::root_of_unity(n, k);
        CHECK(sum.is_zero());
    }
}

TEST_CASE("golden ratio combination in Q(zeta_5)") {
    const Cyclotomic z = Cyclotomic::root_of_unity(5, 1) + Cyclotomic::root_of_unity(5, 4);
    // zeta + zeta^4 = -1 - zeta^2 - zeta^3 in the power basis.
    const std::vector<Rational> expect{-1, 0, -1, -1};
    CHECK(z.coefficients() == expect);
    CHECK(z.to_complex().real() == doctest::Approx(0.6180339887).epsilon(1e-9));
    CHECK(std::abs(z.to_complex().imag()) < 1e-12);
}

TEST_CASE("conjugation gives the squared modulus") {
    const Cyclotomic z = Cyclotomic::integer(1) + Cyclotomic::root_of_unity(5, 1);
    const Cyclotomic zz = z.conjugate() * z;
    // |1+zeta_5|^2 = 2 + 2cos(2pi/5), a real number.
    CHECK(zz == zz.conjugate());
    const std::vector<Rational> expect{1, 0, -1, -1};
    CHECK(zz.coefficients() == expect);
    CHECK(zz.to_complex().real() == doctest::Approx(2 + 2 * std::cos(2 * 3.14159265358979323846 / 5)).epsilon(1e-9));
}

TEST_CASE("ring axioms on random elements") {
    for (int modulus : {4, 9, 25, 144}) {
        std::mt19937_64 rng(0xC0FFEEu + static_cast<unsigned>(modulus));
        for (int trial = 0; trial < 8; ++trial) {
            const Cyclotomic a = random_element(modulus, rng);
            const Cyclotomic b = random_element(modulus, rng);
            const Cyclotomic c = random_element(modulus, rng);
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == Cyclotomic(modulus));
            CHECK(a * Cyclotomic::integer(1) == a);

            // conjugate is an involutive ring automorphism
            CHECK(a.conjugate().conjugate() == a);
            CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
            CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());

            // float rendering is consistent with exact addition
            const auto za = a.to_complex(), zb = b.to_complex(), zab = (a + b).to_complex();
            CHECK(std::abs(za + zb - zab) < 1e-10);
        }
    }
}

TEST_CASE("mixed moduli lift to the least common field") {
    const Cyclotomic a = Cyclotomic::root_of_unity(4, 1);   // i
    const Cyclotomic b = Cyclotomic::root_of_unity(3, 1);
    const Cyclotomic p = a * b;
    CHECK(p.modulus() == 12);
    CHECK(p == Cyclotomic::root_of_unity(12, 7));  // i * zeta_3 = zeta_12^(3+4)
    CHECK_THROWS_AS(Cyclotomic(5).lifted(7), ModulusMismatchError);
}

TEST_CASE("serialization round trip") {
    std::mt19937_64 rng(7);
    const Cyclotomic a = random_element(12, rng);
    const Cyclotomic back = Cyclotomic::from_json(a.to_json());
    CHECK(back == a);
    CHECK(back.modulus() == a.modulus());
}

TEST_CASE("rational embedding and scaling") {
    const Cyclotomic half = Cyclotomic::rational(Rational(1, 2));
    CHECK(half + half == Cyclotomic::integer(1));
    const Cyclotomic z = Cyclotomic::root_of_unity(8, 1).scaled(Rational(3, 4));
    CHECK(z.to_complex().real() == doctest::Approx(0.75 * std::sqrt(0.5)).epsilon(1e-12));
}
