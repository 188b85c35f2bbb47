#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dw {

/// Finite group as an explicit multiplication table over element ids
/// 0..n-1. Nothing here assumes commutativity.
class FiniteGroup {
  public:
    explicit FiniteGroup(std::vector<std::vector<int>> table);

    int order() const { return n_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }

    /// a^k for any integer k (negative powers via the inverse).
    int pow(int a, long long k) const;

  private:
    int n_;
    int identity_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
};

/// Additive cyclic group Z_m with element ids 0..m-1.
FiniteGroup cyclic_group(int m);

/// Parse {"order": n, "table": [[...], ...]}.
FiniteGroup parse_group(const std::string& text);

} // namespace dw
