#pragma once

#include <optional>
#include <string>
#include <vector>

#include "emk/bigint.hpp"
#include "emk/core.hpp"
#include "emk/exactsolve.hpp"

namespace emk {

struct SearchResult {
    int n = 0;
    int s = 0;
    Count value;
    std::vector<SetFamily> witnesses;  // canonical representatives
    long long nodes = 0;
    double seconds = 0.0;
};

/// Exact e(n,s) by exhaustive search over up-closed families, with one
/// canonical witness.  n <= 6 guaranteed, n = 7 best effort, n >= 8 refused.
SearchResult e_exact(int n, int s);

/// All maximum families up to permutations of [n], canonicalized and sorted.
std::vector<SetFamily> enumerate_extremal(int n, int s);

enum class Verdict {
    Infeasible,       // nu(F) >= s
    Optimal,          // |F| = e(n,s)
    Suboptimal,       // |F| < e(n,s)
    MeetsLowerBound,  // e(n,s) not computable; |F| >= construction bound
    BelowLowerBound,
};

struct ExtremalVerdict {
    Verdict verdict;
    int nu = 0;
    Count size;
    std::optional<Count> optimum;  // present when e(n,s) was computable
    Count lower_bound;             // best construction lower bound
};

ExtremalVerdict verify_extremal(const SetFamily& f, int n, int s);

/// Best construction lower bound: max of p_size / pprime_size over all
/// parameterizations compatible with (n, s).
Count construction_lower_bound(int n, int s);

/// Lexicographically least relabeling of the family under S_n.
SetFamily canonical_form(const SetFamily& f);

/// {"n":..,"s":..,"value":"..","witness_files":[..],"nodes":..,"seconds":..}
std::string search_result_to_json(const SearchResult& r,
                                  const std::vector<std::string>& witness_files);

}  // namespace emk
