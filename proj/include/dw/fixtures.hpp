#pragma once

#include <string>
#include <vector>

#include "dw/statesum.hpp"
#include "dw/triangulation.hpp"

namespace dw {

/// Names of the bundled census gluing tables.
std::vector<std::string> fixture_names();

/// Raw JSON document of a bundled gluing table.
const std::string& fixture_document(const std::string& name);

Triangulation fixture_triangulation(const std::string& name);

/// Names of the bundled reduced-sum formulas (census manifolds only).
std::vector<std::string> formula_names();

const std::string& formula_document(const std::string& name);

ReducedFormula fixture_formula(const std::string& name);

} // namespace dw
