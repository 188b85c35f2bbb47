#include "dw/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dw/errors.hpp"

namespace dw {

namespace {

// Exact division of integer polynomials, remainder must vanish.
std::vector<BigInt> poly_divide(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(den.size()) - 1;
    std::vector<BigInt> quot(static_cast<std::size_t>(dn - dd + 1), 0);
    for (int k = dn - dd; k >= 0; --k) {
        BigInt c = num[static_cast<std::size_t>(k + dd)] / den.back();
        quot[static_cast<std::size_t>(k)] = c;
        for (int j = 0; j <= dd; ++j) num[static_cast<std::size_t>(k + j)] -= c * den[static_cast<std::size_t>(j)];
    }
    for (const auto& c : num)
        if (c != 0) throw Error("cyclotomic polynomial division left a remainder");
    return quot;
}

std::map<int, std::vector<BigInt>>& phi_cache() {
    static std::map<int, std::vector<BigInt>> cache;
    return cache;
}

const std::vector<BigInt>& cyclotomic_poly_cached(int n) {
    auto& cache = phi_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<BigInt> result;
    if (n == 1) {
        result = {-1, 1};  // x - 1
    } else {
        // (x^n - 1) / prod of lower-order cyclotomics over proper divisors.
        std::vector<BigInt> num(static_cast<std::size_t>(n) + 1, 0);
        num[0] = -1;
        num[static_cast<std::size_t>(n)] = 1;
        std::vector<BigInt> den = {1};
        for (int d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            const auto& phi_d = cyclotomic_poly_cached(d);
            std::vector<BigInt> prod(den.size() + phi_d.size() - 1, 0);
            for (std::size_t i = 0; i < den.size(); ++i)
                for (std::size_t j = 0; j < phi_d.size(); ++j) prod[i + j] += den[i] * phi_d[j];
            den = std::move(prod);
        }
        result = poly_divide(std::move(num), den);
    }
    return cache.emplace(n, std::move(result)).first->second;
}

// Per-modulus basis data: reductions of zeta^k for 0 <= k < max(N, 2*phi-1).
struct Field {
    int n = 1;
    int phi = 1;
    std::vector<std::vector<BigInt>> power;  // power[k] = x^k mod Phi_N

    explicit Field(int modulus) : n(modulus) {
        const auto& poly = cyclotomic_poly_cached(modulus);
        phi = static_cast<int>(poly.size()) - 1;
        const int rows = std::max(n, 2 * phi - 1);
        power.assign(static_cast<std::size_t>(std::max(rows, 1)), std::vector<BigInt>(static_cast<std::size_t>(phi), 0));
        power[0][0] = 1;
        for (int k = 1; k < rows; ++k) {
            // power[k] = x * power[k-1] mod Phi_N (Phi_N is monic).
            const auto& prev = power[static_cast<std::size_t>(k - 1)];
            auto& cur = power[static_cast<std::size_t>(k)];
            BigInt lead = prev[static_cast<std::size_t>(phi - 1)];
            for (int i = phi - 1; i >= 1; --i) cur[static_cast<std::size_t>(i)] = prev[static_cast<std::size_t>(i - 1)];
            cur[0] = 0;
            if (lead != 0)
                for (int i = 0; i < phi; ++i) cur[static_cast<std::size_t>(i)] -= lead * poly[static_cast<std::size_t>(i)];
        }
    }
};

std::mutex& cache_mutex() {
    static std::mutex mu;
    return mu;
}

const Field& field(int n) {
    static std::map<int, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::make_unique<Field>(n)).first;
    return *it->second;
}

} // namespace

std::vector<BigInt> cyclotomic_polynomial(int n) {
    if (n < 1) throw Error("cyclotomic polynomial index must be positive");
    std::lock_guard<std::mutex> lock(cache_mutex());
    return cyclotomic_poly_cached(n);
}

int euler_phi(int n) {
    return static_cast<int>(cyclotomic_polynomial(n).size()) - 1;
}

Cyclotomic::Cyclotomic(int modulus) : n_(modulus) {
    if (modulus < 1) throw Error("cyclotomic modulus must be positive");
    coeffs_.assign(static_cast<std::size_t>(field(modulus).phi), Rational(0));
}

Cyclotomic Cyclotomic::rational(const Rational& r) {
    Cyclotomic c(1);
    c.coeffs_[0] = r;
    return c;
}

Cyclotomic Cyclotomic::integer(long long v) {
    return rational(Rational(v));
}

Cyclotomic Cyclotomic::root_of_unity(int modulus, long long k) {
    const Field& f = field(modulus);
    long long kk = k % modulus;
    if (kk < 0) kk += modulus;
    Cyclotomic c(modulus);
    const auto& row = f.power[static_cast<std::size_t>(kk)];
    for (int i = 0; i < f.phi; ++i) c.coeffs_[static_cast<std::size_t>(i)] = Rational(row[static_cast<std::size_t>(i)]);
    return c;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Cyclotomic Cyclotomic::lifted(int bigger_modulus) const {
    if (bigger_modulus == n_) return *this;
    if (bigger_modulus % n_ != 0) throw ModulusMismatchError("lift target modulus must be a multiple");
    const Field& f = field(bigger_modulus);
    const long long step = bigger_modulus / n_;
    Cyclotomic out(bigger_modulus);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const auto& row = f.power[static_cast<std::size_t>(step * static_cast<long long>(i))];
        for (int j = 0; j < f.phi; ++j) out.coeffs_[static_cast<std::size_t>(j)] += coeffs_[i] * Rational(row[static_cast<std::size_t>(j)]);
    }
    return out;
}

namespace {

int common_modulus(int a, int b) {
    return std::lcm(a, b);
}

} // namespace

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    const int m = common_modulus(n_, o.n_);
    Cyclotomic a = lifted(m);
    Cyclotomic b = o.lifted(m);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    return *this + (-o);
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c *= r;
    return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    const int m = common_modulus(n_, o.n_);
    const Cyclotomic a = lifted(m);
    const Cyclotomic b = o.lifted(m);
    const Field& f = field(m);
    const int phi = f.phi;

    std::vector<Rational> conv(static_cast<std::size_t>(2 * phi - 1), Rational(0));
    for (int i = 0; i < phi; ++i) {
        if (a.coeffs_[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < phi; ++j) {
            if (b.coeffs_[static_cast<std::size_t>(j)] == 0) continue;
            conv[static_cast<std::size_t>(i + j)] += a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    Cyclotomic out(m);
    for (int k = 0; k < 2 * phi - 1; ++k) {
        if (conv[static_cast<std::size_t>(k)] == 0) continue;
        if (k < phi) {
            out.coeffs_[static_cast<std::size_t>(k)] += conv[static_cast<std::size_t>(k)];
        } else {
            const auto& row = f.power[static_cast<std::size_t>(k)];
            for (int i = 0; i < phi; ++i) out.coeffs_[static_cast<std::size_t>(i)] += conv[static_cast<std::size_t>(k)] * Rational(row[static_cast<std::size_t>(i)]);
        }
    }
    return out;
}

Cyclotomic Cyclotomic::conjugate() const {
    const Field& f = field(n_);
    Cyclotomic out(n_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const long long k = (n_ - static_cast<long long>(i)) % n_;
        const auto& row = f.power[static_cast<std::size_t>(k)];
        for (int j = 0; j < f.phi; ++j) out.coeffs_[static_cast<std::size_t>(j)] += coeffs_[i] * Rational(row[static_cast<std::size_t>(j)]);
    }
    return out;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (n_ == o.n_) return coeffs_ == o.coeffs_;
    const int m = common_modulus(n_, o.n_);
    return lifted(m).coeffs_ == o.lifted(m).coeffs_;
}

std::complex<double> Cyclotomic::to_complex() const {
    const long double two_pi = 6.283185307179586476925286766559L;
    long double re = 0, im = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const long double c = coeffs_[i].convert_to<long double>();
        const long double ang = two_pi * static_cast<long double>(i) / static_cast<long double>(n_);
        re += c * std::cos(ang);
        im += c * std::sin(ang);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

namespace {

std::string format_significant(double v, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << v;
    return os.str();
}

} // namespace

std::string Cyclotomic::approx_string() const {
    const auto z = to_complex();
    std::string s = format_significant(z.real(), 10);
    if (z.imag() >= 0)
        s += "+" + format_significant(z.imag(), 10) + "i";
    else
        s += "-" + format_significant(-z.imag(), 10) + "i";
    return s;
}

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    os << "Q(zeta_" << n_ << ") [";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ", ";
        os << coeffs_[i];
    }
    os << "] ~ " << approx_string();
    return os.str();
}

std::string Cyclotomic::to_json() const {
    nlohmann::json doc;
    doc["N"] = n_;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : coeffs_) {
        const BigInt num = boost::multiprecision::numerator(c);
        const BigInt den = boost::multiprecision::denominator(c);
        arr.push_back({num.convert_to<long long>(), den.convert_to<long long>()});
    }
    doc["coeffs"] = std::move(arr);
    return doc.dump();
}

Cyclotomic Cyclotomic::from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("cyclotomic document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("N") || !doc.contains("coeffs")) throw ParseError("cyclotomic document needs \"N\" and \"coeffs\"");
    Cyclotomic out(doc["N"].get<int>());
    const auto& arr = doc["coeffs"];
    if (!arr.is_array() || static_cast<int>(arr.size()) != out.degree()) throw ParseError("coefficient vector has the wrong length");
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto& pair = arr[i];
        if (!pair.is_array() || pair.size() != 2) throw ParseError("coefficients must be [num, den] pairs");
        const long long num = pair[0].get<long long>();
        const long long den = pair[1].get<long long>();
        if (den == 0) throw ParseError("coefficient denominator is zero");
        out.coeffs_[i] = Rational(num, den);
    }
    return out;
}

} // namespace dw
