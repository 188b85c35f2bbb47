#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace dw {

/// Permutation of the four vertex labels {0,1,2,3} of a tetrahedron.
class Perm4 {
  public:
    constexpr Perm4() : img_{0, 1, 2, 3} {}
    constexpr Perm4(int a, int b, int c, int d) : img_{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)} {}
    explicit constexpr Perm4(const std::array<std::uint8_t, 4>& img) : img_(img) {}

    constexpr int operator[](int i) const { return img_[static_cast<std::size_t>(i)]; }

    constexpr bool is_valid() const {
        int seen = 0;
        for (int i = 0; i < 4; ++i) {
            if (img_[i] > 3) return false;
            seen |= 1 << img_[i];
        }
        return seen == 0xF;
    }

    constexpr Perm4 inverse() const {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
        return r;
    }

    /// Composition: (*this after other)(i) = this[other[i]].
    constexpr Perm4 after(const Perm4& other) const {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img_[i] = img_[other.img_[i]];
        return r;
    }

    /// +1 for even permutations, -1 for odd.
    constexpr int sign() const {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (img_[i] > img_[j]) ++inversions;
        return (inversions % 2 == 0) ? +1 : -1;
    }

    /// Index in the lexicographic enumeration of all 24 permutations.
    constexpr int lex_index() const {
        int idx = 0;
        for (int i = 0; i < 4; ++i) {
            int smaller = 0;
            for (int j = i + 1; j < 4; ++j)
                if (img_[j] < img_[i]) ++smaller;
            int fact = 1;
            for (int k = 2; k <= 3 - i; ++k) fact *= k;
            idx += smaller * fact;
        }
        return idx;
    }

    static Perm4 from_lex_index(int idx);

    /// Transposition swapping labels a and b.
    static constexpr Perm4 transposition(int a, int b) {
        Perm4 r;
        r.img_[a] = static_cast<std::uint8_t>(b);
        r.img_[b] = static_cast<std::uint8_t>(a);
        return r;
    }

    constexpr bool operator==(const Perm4& o) const { return img_ == o.img_; }
    constexpr bool operator!=(const Perm4& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string s(4, '0');
        for (int i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + img_[i]);
        return s;
    }

  private:
    std::array<std::uint8_t, 4> img_;
};

inline Perm4 Perm4::from_lex_index(int idx) {
    std::array<std::uint8_t, 4> pool{0, 1, 2, 3};
    std::array<std::uint8_t, 4> img{};
    int fact[4] = {6, 2, 1, 1};
    int remaining = 4;
    for (int i = 0; i < 4; ++i) {
        int f = (i < 3) ? fact[i] : 1;
        int pick = idx / f;
        idx %= f;
        img[i] = pool[pick];
        for (int j = pick; j + 1 < remaining; ++j) pool[j] = pool[j + 1];
        --remaining;
    }
    return Perm4(img);
}

} // namespace dw
