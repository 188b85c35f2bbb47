#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dw {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact element of Q(zeta_N), stored as a rational coefficient vector
/// over the power basis {zeta_N^i : 0 <= i < phi(N)} reduced modulo the
/// N-th cyclotomic polynomial. Equal canonical vectors in a common
/// modulus are equal complex numbers, which is what makes bit-exact
/// invariant comparisons across triangulations possible.
class Cyclotomic {
  public:
    /// Zero in Q(zeta_N).
    explicit Cyclotomic(int modulus = 1);

    static Cyclotomic rational(const Rational& r);
    static Cyclotomic integer(long long v);
    /// zeta_N^k, k reduced mod N.
    static Cyclotomic root_of_unity(int modulus, long long k);

    int modulus() const { return n_; }
    int degree() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic scaled(const Rational& r) const;
    Cyclotomic conjugate() const;

    /// Re-express in Q(zeta_M); M must be a multiple of N.
    Cyclotomic lifted(int bigger_modulus) const;

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    std::complex<double> to_complex() const;

    /// Canonical vector plus a 10-significant-digit float rendering.
    std::string to_string() const;
    /// Just the "a+bi" float rendering.
    std::string approx_string() const;

    std::string to_json() const;
    static Cyclotomic from_json(const std::string& text);

  private:
    int n_;
    std::vector<Rational> coeffs_;
};

/// Integer coefficients of the N-th cyclotomic polynomial, constant term
/// first, including the leading 1. Exposed for tests.
std::vector<BigInt> cyclotomic_polynomial(int n);

/// Euler phi, the degree of Q(zeta_N).
int euler_phi(int n);

} // namespace dw
