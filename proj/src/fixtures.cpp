#include "dw/fixtures.hpp"

#include <map>

#include "dw/errors.hpp"

namespace dw {

namespace {

// Gluing tables. The census tables were located by exhaustive search
// over small gluing tables (tools/census_scan) and identified through
// their coloring counts and state sums; orientation is fixed so that
// the bundled reduced formulas reproduce the state sum for every
// generator power. s3_double is the double of a tetrahedron.
const std::map<std::string, std::string>& triangulation_table() {
    static const std::map<std::string, std::string> table = {
        {"s3_double", R"json({
  "tets": 2,
  "gluings": [
    [ {"tet": 1, "perm": [0,1,2,3]}, {"tet": 1, "perm": [0,1,2,3]},
      {"tet": 1, "perm": [0,1,2,3]}, {"tet": 1, "perm": [0,1,2,3]} ],
    [ {"tet": 0, "perm": [0,1,2,3]}, {"tet": 0, "perm": [0,1,2,3]},
      {"tet": 0, "perm": [0,1,2,3]}, {"tet": 0, "perm": [0,1,2,3]} ]
  ]
})json"},
    };
    return table;
}

const std::map<std::string, std::string>& formula_table() {
    static const std::map<std::string, std::string> table = {
        {"m003", R"json({
  "vars": ["b"],
  "constraints": ["b^5"],
  "factors": [
    {"sign": -1, "args": ["b","b","b"]},
    {"sign":  1, "args": ["b^2","b","b"]},
    {"sign":  1, "args": ["b^3","b^3","b^3"]},
    {"sign":  1, "args": ["b","b","b^3"]},
    {"sign":  1, "args": ["b","b^2","b^2"]},
    {"sign":  1, "args": ["b^2","b^3","b^2"]}
  ]
})json"},
        {"m004", R"json({
  "vars": [],
  "constraints": [],
  "factors": []
})json"},
        {"m006", R"json({
  "vars": ["a"],
  "constraints": ["a^5"],
  "factors": [
    {"sign": 1, "args": ["a","a","a"]},
    {"sign": 1, "args": ["a","a","a"]},
    {"sign": 1, "args": ["a","a","a"]},
    {"sign": 1, "args": ["a","a^2","a"]},
    {"sign": 1, "args": ["a^3","a^3","a^3"]}
  ]
})json"},
        {"m007", R"json({
  "vars": ["a"],
  "constraints": ["a^3"],
  "factors": [
    {"sign": 1, "args": ["a","a","a"]},
    {"sign": 1, "args": ["a^-1","a^-1","a^-1"]}
  ]
})json"},
        {"m009", R"json({
  "vars": ["a"],
  "constraints": ["a^2"],
  "factors": [
    {"sign": 1, "args": ["a","a","a"]}
  ]
})json"},
        {"m010", R"json({
  "vars": ["b","c"],
  "constraints": ["b^3", "c^2", "bcb^-1c^-1"],
  "factors": [
    {"sign": -1, "args": ["b","b","b"]},
    {"sign":  1, "args": ["b","b^-1","b"]},
    {"sign":  1, "args": ["b","c","c"]},
    {"sign": -1, "args": ["cb","c","c"]}
  ]
})json"},
        {"s778", R"json({
  "vars": ["d"],
  "constraints": ["d^12"],
  "factors": [
    {"sign": 1, "args": ["d","d","d^2"]},
    {"sign": 1, "args": ["d^2","d","d"]},
    {"sign": 1, "args": ["d^2","d","d^2"]},
    {"sign": 1, "args": ["d^3","d^2","d^3"]},
    {"sign": 1, "args": ["d^3","d^10","d^3"]},
    {"sign": 1, "args": ["d^5","d^5","d^10"]},
    {"sign": 1, "args": ["d^10","d^5","d^5"]},
    {"sign": 1, "args": ["d^10","d^5","d^10"]}
  ]
})json"},
        {"s788", R"json({
  "vars": ["a"],
  "constraints": ["a^12"],
  "factors": [
    {"sign":  1, "args": ["a^5","a","a^2"]},
    {"sign":  1, "args": ["a^6","a^2","a^3"]},
    {"sign":  1, "args": ["a^8","a","a^2"]},
    {"sign": -1, "args": ["a^8","a","a^8"]},
    {"sign": -1, "args": ["a^8","a^5","a^8"]},
    {"sign": -1, "args": ["a^8","a^9","a^8"]},
    {"sign": -1, "args": ["a^9","a^5","a^3"]},
    {"sign": -1, "args": ["a^9","a^8","a"]},
    {"sign":  1, "args": ["a^9","a^9","a^5"]}
  ]
})json"},
    };
    return table;
}

} // namespace

std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    for (const auto& [name, doc] : triangulation_table()) names.push_back(name);
    return names;
}

const std::string& fixture_document(const std::string& name) {
    const auto& table = triangulation_table();
    auto it = table.find(name);
    if (it == table.end()) throw Error("unknown fixture: " + name);
    return it->second;
}

Triangulation fixture_triangulation(const std::string& name) {
    return parse_triangulation(fixture_document(name));
}

std::vector<std::string> formula_names() {
    std::vector<std::string> names;
    for (const auto& [name, doc] : formula_table()) names.push_back(name);
    return names;
}

const std::string& formula_document(const std::string& name) {
    const auto& table = formula_table();
    auto it = table.find(name);
    if (it == table.end()) throw Error("unknown formula: " + name);
    return it->second;
}

ReducedFormula fixture_formula(const std::string& name) {
    return parse_reduced_formula(formula_document(name));
}

} // namespace dw
