#include "dw/cochain.hpp"

#include <numeric>
#include <random>

#include <nlohmann/json.hpp>

#include "dw/errors.hpp"

namespace dw {

namespace {

int mod_reduce(long long v, int n) {
    long long r = v % n;
    if (r < 0) r += n;
    return static_cast<int>(r);
}

} // namespace

Cochain3::Cochain3(int group_order, int modulus) : n_(group_order), modulus_(modulus) {
    if (group_order < 1 || modulus < 1) throw Error("cochain needs positive group order and modulus");
    table_.assign(static_cast<std::size_t>(n_) * n_ * n_, 0);
}

void Cochain3::set_exponent(int g, int h, int k, int value) {
    table_[index(g, h, k)] = mod_reduce(value, modulus_);
}

bool Cochain3::is_normalized(const FiniteGroup& g) const {
    const int e = g.identity();
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            if (exponent(e, x, y) != 0 || exponent(x, e, y) != 0 || exponent(x, y, e) != 0) return false;
    return true;
}

Cochain2::Cochain2(int group_order, int modulus) : n_(group_order), modulus_(modulus) {
    if (group_order < 1 || modulus < 1) throw Error("cochain needs positive group order and modulus");
    table_.assign(static_cast<std::size_t>(n_) * n_, 0);
}

void Cochain2::set_exponent(int g, int h, int value) {
    table_[static_cast<std::size_t>(g) * n_ + static_cast<std::size_t>(h)] = mod_reduce(value, modulus_);
}

bool Cochain2::is_normalized(const FiniteGroup& g) const {
    const int e = g.identity();
    for (int x = 0; x < n_; ++x)
        if (exponent(e, x) != 0 || exponent(x, e) != 0) return false;
    return true;
}

Cochain3 cyclic_generator_cocycle(int m, long long p) {
    if (m < 1) throw Error("cyclic group order must be positive");
    const long long pp = ((p % m) + m) % m;
    Cochain3 a(m, m * m);
    for (int g1 = 0; g1 < m; ++g1)
        for (int g2 = 0; g2 < m; ++g2)
            for (int g3 = 0; g3 < m; ++g3) {
                const long long carry = g2 + g3 - (g2 + g3) % m;  // 0 or m
                a.set_exponent(g1, g2, g3, static_cast<int>((pp * g1 % (m * m)) * carry % (m * m)));
            }
    return a;
}

bool is_cocycle(const FiniteGroup& grp, const Cochain3& a) {
    const int n = grp.order();
    if (a.group_order() != n) throw Error("cochain and group sizes differ");
    const int N = a.modulus();
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const long long lhs = a.exponent(h, k, l) + a.exponent(g, grp.mul(h, k), l) + a.exponent(g, h, k);
                    const long long rhs = a.exponent(grp.mul(g, h), k, l) + a.exponent(g, h, grp.mul(k, l));
                    if ((lhs - rhs) % N != 0) return false;
                }
    return true;
}

bool is_cocycle_parallel(const FiniteGroup& grp, const Cochain3& a) {
    const int n = grp.order();
    if (a.group_order() != n) throw Error("cochain and group sizes differ");
    const int N = a.modulus();
    bool ok = true;
#pragma omp parallel for collapse(2) reduction(&& : ok) schedule(static)
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            bool local = true;
            for (int k = 0; k < n && local; ++k)
                for (int l = 0; l < n && local; ++l) {
                    const long long lhs = a.exponent(h, k, l) + a.exponent(g, grp.mul(h, k), l) + a.exponent(g, h, k);
                    const long long rhs = a.exponent(grp.mul(g, h), k, l) + a.exponent(g, h, grp.mul(k, l));
                    if ((lhs - rhs) % N != 0) local = false;
                }
            ok = ok && local;
        }
    return ok;
}

Cochain3 coboundary2(const FiniteGroup& grp, const Cochain2& b) {
    const int n = grp.order();
    if (b.group_order() != n) throw Error("cochain and group sizes differ");
    if (!b.is_normalized(grp)) throw Error("coboundary2 expects a normalized 2-cochain");
    Cochain3 out(n, b.modulus());
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                const int v = b.exponent(h, k) - b.exponent(grp.mul(g, h), k) + b.exponent(g, grp.mul(h, k)) - b.exponent(g, h);
                out.set_exponent(g, h, k, v);
            }
    return out;
}

Cochain3 cochain_product(const Cochain3& a, const Cochain3& b, bool allow_lift) {
    if (a.group_order() != b.group_order()) throw Error("cochain product needs a common group");
    int N = a.modulus();
    if (a.modulus() != b.modulus()) {
        if (!allow_lift) throw ModulusMismatchError("cochain moduli differ and lifting is disabled");
        N = std::lcm(a.modulus(), b.modulus());
    }
    const int n = a.group_order();
    const int sa = N / a.modulus();
    const int sb = N / b.modulus();
    Cochain3 out(n, N);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) out.set_exponent(g, h, k, sa * a.exponent(g, h, k) + sb * b.exponent(g, h, k));
    return out;
}

Cochain3 cochain_inverse(const Cochain3& a) {
    const int n = a.group_order();
    Cochain3 out(n, a.modulus());
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) out.set_exponent(g, h, k, -a.exponent(g, h, k));
    return out;
}

Cochain2 random_normalized_cochain2(const FiniteGroup& g, int modulus, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, modulus - 1);
    Cochain2 b(g.order(), modulus);
    const int e = g.identity();
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y) {
            if (x == e || y == e) continue;
            b.set_exponent(x, y, pick(rng));
        }
    return b;
}

Cochain3 parse_cochain3(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("cocycle document: ") + e.what());
    }
    if (doc.is_object() && doc.contains("m")) {
        const int m = doc["m"].get<int>();
        const long long p = doc.value("p", 1LL);
        return cyclic_generator_cocycle(m, p);
    }
    if (doc.is_object() && doc.contains("N") && doc.contains("exponents")) {
        const int N = doc["N"].get<int>();
        const auto& ex = doc["exponents"];
        if (!ex.is_array() || ex.empty()) throw ParseError("exponents must be a nonempty nested array");
        const int n = static_cast<int>(ex.size());
        Cochain3 a(n, N);
        for (int g = 0; g < n; ++g) {
            const auto& plane = ex[static_cast<std::size_t>(g)];
            if (!plane.is_array() || static_cast<int>(plane.size()) != n) throw ParseError("exponents must be n x n x n");
            for (int h = 0; h < n; ++h) {
                const auto& row = plane[static_cast<std::size_t>(h)];
                if (!row.is_array() || static_cast<int>(row.size()) != n) throw ParseError("exponents must be n x n x n");
                for (int k = 0; k < n; ++k) a.set_exponent(g, h, k, row[static_cast<std::size_t>(k)].get<int>());
            }
        }
        return a;
    }
    throw ParseError("cocycle document needs either {m,p} or {N,exponents}");
}

} // namespace dw
