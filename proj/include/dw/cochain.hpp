#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dw/group.hpp"

namespace dw {

/// 3-cochain on G valued in N-th roots of unity, stored as the exponent
/// table e : G^3 -> Z_N of alpha(g,h,k) = zeta_N^e(g,h,k).
class Cochain3 {
  public:
    Cochain3(int group_order, int modulus);

    int modulus() const { return modulus_; }
    int group_order() const { return n_; }

    int exponent(int g, int h, int k) const { return table_[index(g, h, k)]; }
    void set_exponent(int g, int h, int k, int value);

    bool is_normalized(const FiniteGroup& g) const;

    const std::vector<std::int32_t>& raw() const { return table_; }

  private:
    std::size_t index(int g, int h, int k) const {
        return (static_cast<std::size_t>(g) * n_ + static_cast<std::size_t>(h)) * n_ + static_cast<std::size_t>(k);
    }
    int n_;
    int modulus_;
    std::vector<std::int32_t> table_;
};

/// 2-cochain exponent table b : G^2 -> Z_N.
class Cochain2 {
  public:
    Cochain2(int group_order, int modulus);

    int modulus() const { return modulus_; }
    int group_order() const { return n_; }
    int exponent(int g, int h) const { return table_[static_cast<std::size_t>(g) * n_ + static_cast<std::size_t>(h)]; }
    void set_exponent(int g, int h, int value);

    bool is_normalized(const FiniteGroup& g) const;

  private:
    int n_;
    int modulus_;
    std::vector<std::int32_t> table_;
};

/// The standard generator of H^3(Z_m, U(1)) at power p:
/// exponent p * r(g1) * (r(g2) + r(g3) - r(g2+g3)) in Z_{m^2},
/// with r the representative in {0..m-1}.
Cochain3 cyclic_generator_cocycle(int m, long long p);

/// Full cocycle-condition check over G^4 (serial reference).
bool is_cocycle(const FiniteGroup& g, const Cochain3& a);

/// OpenMP variant of the same check; identical verdicts.
bool is_cocycle_parallel(const FiniteGroup& g, const Cochain3& a);

/// Coboundary of a normalized 2-cochain:
/// e(g,h,k) = b(h,k) - b(gh,k) + b(g,hk) - b(g,h) mod N.
Cochain3 coboundary2(const FiniteGroup& g, const Cochain2& b);

/// Pointwise product. Lifts both factors to lcm of the moduli when
/// allow_lift is set, otherwise mismatching moduli are an error.
Cochain3 cochain_product(const Cochain3& a, const Cochain3& b, bool allow_lift = true);

Cochain3 cochain_inverse(const Cochain3& a);

/// Seeded random normalized 2-cochain, for cohomology-invariance tests.
Cochain2 random_normalized_cochain2(const FiniteGroup& g, int modulus, std::uint64_t seed);

/// Parse {"m": int, "p": int} or {"N": int, "exponents": [[[...]]]}.
Cochain3 parse_cochain3(const std::string& text);

} // namespace dw
