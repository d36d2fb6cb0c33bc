#pragma once

#include <string>
#include <vector>

#include "emk/core.hpp"
#include "emk/exactsolve.hpp"

namespace emk {

/// Partition of all q-subsets of [qt] into C(qt-1, q-1) perfect matchings.
struct Decomposition {
    int q = 0;
    int t = 0;
    std::vector<Matching> matchings;
};

/// Constructs a decomposition by the vertex-by-vertex induction with an
/// exact integral-flow split at each step.  Requires qt <= 16.
Decomposition decompose(int q, int t);

struct DecompositionCheck {
    bool ok = true;
    std::string diagnostic;  // names the first violated invariant
};

DecompositionCheck verify_decomposition(const Decomposition& d);

/// JSON round trip: {"q":..,"t":..,"matchings":[["<hex>",...],...]}.
std::string decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const std::string& text);

}  // namespace emk
