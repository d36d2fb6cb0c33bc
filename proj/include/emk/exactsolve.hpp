#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "emk/bigint.hpp"
#include "emk/core.hpp"

namespace emk {

/// A collection of pairwise disjoint, distinct sets.
struct Matching {
    std::vector<Mask> members;
    int size() const { return static_cast<int>(members.size()); }
};

struct MatchingResult {
    int nu = 0;
    Matching witness;
};

struct CoverResult {
    int tau = 0;
    Mask cover = 0;
};

struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact matching number with one maximum matching as witness.
/// The empty set counts as a matching member.
MatchingResult matching_number(const SetFamily& f);

/// A witness s-matching iff nu(F) >= s; early-exits on the first witness.
std::optional<Matching> has_s_matching(const SetFamily& f, int s);

/// Exact minimum vertex cover with witness; tau(empty family) = 0.
/// Throws if the family contains the empty set (it cannot be covered).
CoverResult cover_number(const SetFamily& g);

/// Witness of p pairwise disjoint members, or nullopt if nu(G) < p.
std::optional<Matching> find_disjoint(const SetFamily& g, int p);

/// q-uniform blocker instance on qt+d vertices.
struct BlockerInstance {
    int q;
    int t;
    int d;

    BlockerInstance(int q_, int t_, int d_) : q(q_), t(t_), d(d_) {
        if (q < 1 || t < 1 || d < 0)
            throw std::domain_error("blocker instance requires q,t >= 1, d >= 0");
    }
};

/// Exact minimum |Z| over all G in ([qt+d] choose q) with nu(G) < t,
/// computed as C(qt+d,q) minus the exact maximum size of a q-uniform
/// family with matching number below t.
Count min_blocker(const BlockerInstance& inst);

/// Exact maximum size of G in ([N] choose q) with nu(G) < t.
long max_family_nu_below(int N, int q, int t);

/// Generic branch-and-bound route (any q; feasible for small C(N,q)).
long max_family_nu_below_bb(int N, int q, int t);

/// Graph (q=2) route via matching-theoretic structure enumeration.
long max_graph_nu_below(int N, int t);

/// True iff `sets` contains `target` pairwise disjoint members.
bool exists_matching(const std::vector<Mask>& sets, int target);

}  // namespace emk
