#include "dw/group.hpp"

#include <random>

#include <nlohmann/json.hpp>

#include "dw/errors.hpp"

namespace dw {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table) : n_(static_cast<int>(table.size())), identity_(-1), table_(std::move(table)) {
    if (n_ < 1) throw Error("group must be nonempty");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n_) throw Error("multiplication table must be square");
        for (int v : row)
            if (v < 0 || v >= n_) throw Error("multiplication table entry out of range");
    }
    for (int e = 0; e < n_; ++e) {
        bool ok = true;
        for (int x = 0; x < n_ && ok; ++x) ok = (mul(e, x) == x && mul(x, e) == x);
        if (ok) {
            identity_ = e;
            break;
        }
    }
    if (identity_ == -1) throw Error("multiplication table has no identity");
    inverse_.assign(static_cast<std::size_t>(n_), -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            if (mul(a, b) == identity_ && mul(b, a) == identity_) {
                inverse_[static_cast<std::size_t>(a)] = b;
                break;
            }
        }
        if (inverse_[static_cast<std::size_t>(a)] == -1) throw Error("element without inverse");
    }
    // Associativity: exhaustive for small groups, seeded sample beyond.
    if (n_ <= 24) {
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw Error("multiplication table is not associative");
    } else {
        std::mt19937 rng(0x5eedu);
        std::uniform_int_distribution<int> pick(0, n_ - 1);
        for (int i = 0; i < 20000; ++i) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw Error("multiplication table is not associative");
        }
    }
}

int FiniteGroup::pow(int a, long long k) const {
    int base = a;
    if (k < 0) {
        base = inv(a);
        k = -k;
    }
    int acc = identity_;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

FiniteGroup cyclic_group(int m) {
    if (m < 1) throw Error("cyclic group order must be positive");
    std::vector<std::vector<int>> table(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % m;
    return FiniteGroup(std::move(table));
}

FiniteGroup parse_group(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("group document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("table")) throw ParseError("group document needs \"table\"");
    const auto& tj = doc["table"];
    if (!tj.is_array()) throw ParseError("table must be an array of rows");
    std::vector<std::vector<int>> table;
    for (const auto& row : tj) {
        if (!row.is_array()) throw ParseError("table row must be an array");
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw ParseError("table entries must be integers");
            r.push_back(v.get<int>());
        }
        table.push_back(std::move(r));
    }
    if (doc.contains("order") && doc["order"].get<int>() != static_cast<int>(table.size()))
        throw ParseError("declared order does not match table size");
    try {
        return FiniteGroup(std::move(table));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

} // namespace dw
