#pragma once

#include <vector>

#include "emk/bigint.hpp"
#include "emk/core.hpp"
#include "emk/exactsolve.hpp"

namespace emk {

enum class Case { I, II, III };

struct CaseTag {
    Case tag;
    int nu;
    int tau;
    int a;
};

/// Bad/good split of one low layer against the missing m-sets.
struct LayerSplit {
    int j = 0;
    std::vector<Mask> b_j;   // all j-sets meeting the B_j threshold
    std::vector<Mask> bad;   // F_j intersect B_j
    std::vector<Mask> good;  // F_j minus B_j
};

struct BadGoodReport {
    std::vector<Mask> missing;  // M = ([n] choose m) \ F_m
    std::vector<LayerSplit> layers;
};

struct CountingReport {
    Count lhs;        // sum_j |B_j(M)|
    SignedCount rhs;  // sum_j Lambda_j(a,r) + |M| - C(r,m)
    bool holds = false;
    bool equality = false;
    bool rigidity_ok = false;  // meaningful only when equality holds
};

struct DeficitCompletionReport {
    int q = 0;     // |Q|
    long delta = 0;  // total deficit of Q
    int t = 0;     // s - q
    int d = 0;     // delta - l
    Mask w = 0;    // vertices untouched by Q
    int nu_outer = 0;
    bool outer_ok = false;  // nu(F) < s
    int nu_inner = 0;
    bool inner_ok = false;  // nu(F_{m+1}[W]) < t
    Count bound;            // blocker_bound(m+1, t, d)
};

struct LowLayerReport {
    Count low_size;   // |F_{<= m}|
    Count hyp_rhs;    // Lambda + |Y_{>= m+1}|
    bool hypothesis = false;
    Count f_size;
    Count target;  // |P(m,s,l)|
    bool conclusion = false;

    bool holds() const { return !hypothesis || conclusion; }
};

/// Exact B_j(M) for 0 <= j <= m-1 and the bad/good split of each F_j,
/// relative to the cover candidate A (|A| = a = l-1).
BadGoodReport classify_bad_good(const SetFamily& f, Mask a_set,
                                const Params& params);

/// Checks sum |B_j| <= sum Lambda_j + |M| - C(r,m); on equality also the
/// rigidity conclusions M = (R choose m) and canonical B_j.
CountingReport verify_counting_claim(Mask a_set, const SetFamily& f,
                                     const Params& params);

/// Inclusion-minimal sublist of Q with total deficit >= l.  Removal order:
/// decreasing deficit, ties by increasing mask.
std::vector<Mask> minimal_deficit_subfamily(const std::vector<Mask>& q,
                                            int ell, int m);

/// Computes W, t = s-q, d = Delta-l; verifies nu(F_{m+1}[W]) < t and
/// returns blocker_bound(m+1,t,d) as the implied missing-set bound.
DeficitCompletionReport deficit_completion_check(const SetFamily& f,
                                                 const Matching& q,
                                                 const Params& params);

/// Exact trichotomy tag from nu(F_m) and tau(F_m).
CaseTag case_partition(const SetFamily& f, const Params& params);

/// Exact size accounting for the low-layer comparison lemma.
LowLayerReport verify_low_layer_comparison(const SetFamily& f,
                                           const Params& params);

/// Number of non-canonical low sets with shortage at most h.  For m = 3
/// this follows the sharpened class ordering (pairs meeting A, pairs in R,
/// singletons in A, singletons in R) and matches n_h_closed; for other m
/// it is the plain shortage count.
Count n_h_exact(Mask a_set, const Params& params, int h);

}  // namespace emk
