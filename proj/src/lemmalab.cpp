#include "emk/lemmalab.hpp"

#include <algorithm>
#include <stdexcept>

#include "emk/formulas.hpp"

namespace emk {

namespace {

void check_instance(const SetFamily& f, Mask a_set, const Params& params) {
    if (f.n != params.n())
        throw std::domain_error("family ground set does not match parameters");
    if (popcount(a_set) != params.a())
        throw std::domain_error("cover candidate must have a = l-1 elements");
    if (a_set & ~full_mask(f.n))
        throw std::domain_error("cover candidate outside ground set");
    if (f.n > 30) throw CapacityError("instance too large to enumerate");
}

}  // namespace

BadGoodReport classify_bad_good(const SetFamily& f, Mask a_set,
                                const Params& params) {
    check_instance(f, a_set, params);
    const int m = params.m;
    const long r = params.r();

    BadGoodReport rep;
    const SetFamily fm = layer(f, m);
    for (Mask e : all_k_subsets(f.n, m))
        if (!fm.contains(e)) rep.missing.push_back(e);

    for (int j = 0; j < m; ++j) {
        LayerSplit split;
        split.j = j;
        const Count threshold = binom(r + m + 1 - 2 * j, m);
        for (Mask e : all_k_subsets(f.n, j)) {
            long disjoint = 0;
            for (Mask q : rep.missing)
                if ((q & e) == 0) ++disjoint;
            if (Count(disjoint) >= threshold) split.b_j.push_back(e);
        }
        for (Mask e : layer(f, j).members) {
            if (std::binary_search(split.b_j.begin(), split.b_j.end(), e))
                split.bad.push_back(e);
            else
                split.good.push_back(e);
        }
        rep.layers.push_back(std::move(split));
    }
    return rep;
}

CountingReport verify_counting_claim(Mask a_set, const SetFamily& f,
                                     const Params& params) {
    const BadGoodReport rep = classify_bad_good(f, a_set, params);
    const int m = params.m;

    CountingReport out;
    out.lhs = 0;
    for (const LayerSplit& split : rep.layers)
        out.lhs += Count(static_cast<long>(split.b_j.size()));
    out.rhs = 0;
    for (int j = 0; j < m; ++j) out.rhs += lambda_layer(params, j);
    out.rhs += SignedCount(static_cast<long>(rep.missing.size())) -
               binom(params.r(), m);
    out.holds = out.lhs <= out.rhs;
    out.equality = out.lhs == out.rhs;

    if (out.equality) {
        // Rigidity: M must be exactly (R choose m) and every B_j the
        // canonical layer {E : |E cap A| >= m+1-j}.
        const Mask rest = full_mask(f.n) & ~a_set;
        bool ok = rep.missing == k_subsets_of(rest, m);
        for (const LayerSplit& split : rep.layers) {
            std::vector<Mask> canonical;
            for (Mask e : all_k_subsets(f.n, split.j))
                if (popcount(e & a_set) >= m + 1 - split.j)
                    canonical.push_back(e);
            if (split.b_j != canonical) ok = false;
        }
        out.rigidity_ok = ok;
    }
    return out;
}

std::vector<Mask> minimal_deficit_subfamily(const std::vector<Mask>& q,
                                            int ell, int m) {
    if (ell < 1 || m < 1) throw std::domain_error("need l >= 1 and m >= 1");
    Mask used = 0;
    long total = 0;
    for (Mask e : q) {
        if (popcount(e) > m)
            throw std::domain_error("members must have size at most m");
        if (e & used) throw std::domain_error("members must be disjoint");
        used |= e;
        total += deficit(e, m);
    }
    if (total < ell)
        throw std::runtime_error("infeasible: total deficit below l");

    std::vector<Mask> order(q);
    std::sort(order.begin(), order.end(), [m](Mask x, Mask y) {
        const int dx = deficit(x, m), dy = deficit(y, m);
        return dx != dy ? dx > dy : x < y;
    });
    std::vector<Mask> kept(q);
    for (Mask e : order) {
        const int d = deficit(e, m);
        if (total - d >= ell) {
            total -= d;
            kept.erase(std::find(kept.begin(), kept.end(), e));
        }
    }
    return kept;
}

DeficitCompletionReport deficit_completion_check(const SetFamily& f,
                                                 const Matching& q,
                                                 const Params& params) {
    if (f.n != params.n())
        throw std::domain_error("family ground set does not match parameters");
    const int m = params.m;
    Mask used = 0;
    long delta = 0;
    for (Mask e : q.members) {
        if (popcount(e) > m)
            throw std::domain_error("Q must lie in the layers of size <= m");
        if (!f.contains(e)) throw std::domain_error("Q must be a subfamily of F");
        if (e & used) throw std::domain_error("Q must be a matching");
        used |= e;
        delta += deficit(e, m);
    }
    if (delta < params.ell)
        throw std::domain_error("Q must have total deficit at least l");
    if (q.size() >= params.s)
        throw std::domain_error("Q is itself an s-matching");

    DeficitCompletionReport rep;
    rep.q = q.size();
    rep.delta = delta;
    rep.t = params.s - rep.q;
    rep.d = static_cast<int>(delta) - params.ell;
    rep.w = full_mask(f.n) & ~used;
    // |W| = (m+1)(s-q) + d by the deficit accounting.
    if (popcount(rep.w) != (m + 1) * rep.t + rep.d)
        throw std::logic_error("deficit accounting violated");

    rep.nu_outer = matching_number(f).nu;
    rep.outer_ok = rep.nu_outer < params.s;

    SetFamily inner{f.n, {}};
    for (Mask e : layer(f, m + 1).members)
        if ((e & ~rep.w) == 0) inner.members.push_back(e);
    rep.nu_inner = matching_number(inner).nu;
    rep.inner_ok = rep.nu_inner < rep.t;

    rep.bound = blocker_bound(m + 1, rep.t, rep.d);
    return rep;
}

CaseTag case_partition(const SetFamily& f, const Params& params) {
    if (f.n != params.n())
        throw std::domain_error("family ground set does not match parameters");
    const SetFamily fm = layer(f, params.m);
    const int nu = matching_number(fm).nu;
    const int tau = cover_number(fm).tau;
    const int a = params.a();
    CaseTag tag{Case::I, nu, tau, a};
    if (nu >= a + 1)
        tag.tag = Case::III;
    else if (tau > a)
        tag.tag = Case::II;
    return tag;
}

LowLayerReport verify_low_layer_comparison(const SetFamily& f,
                                           const Params& params) {
    if (f.n != params.n())
        throw std::domain_error("family ground set does not match parameters");
    if (f.n > 20) throw CapacityError("low-layer comparison needs n <= 20");
    const int m = params.m;

    LowLayerReport rep;
    rep.low_size = 0;
    Count high(0);
    for (Mask e : f.members)
        (popcount(e) <= m ? rep.low_size : high) += 1;
    rep.hyp_rhs = lambda_total(params) + binom_tail(f.n, m + 1) - high;
    rep.hypothesis = rep.low_size <= rep.hyp_rhs;
    rep.f_size = Count(static_cast<long>(f.size()));
    rep.target = p_size(params);
    rep.conclusion = rep.f_size <= rep.target;
    return rep;
}

Count n_h_exact(Mask a_set, const Params& params, int h) {
    const int m = params.m;
    if (h < 1 || h > m + 1)
        throw std::domain_error("n_h_exact: need 1 <= h <= m+1");
    if (popcount(a_set) != params.a())
        throw std::domain_error("n_h_exact: |A| must equal l-1");
    const long a = params.a();
    const long r = params.r();
    if (m == 3) {
        // Sharpened class ordering for the terminal-core claim: pairs
        // meeting A, pairs inside R, singletons in A, singletons in R.
        return n_h_closed(a, r, h);
    }
    Count acc(0);
    for (int j = 0; j < m; ++j)
        for (int u = std::max(m + 1 - j - h, 0); u <= m - j; ++u)
            acc += binom(a, u) * binom(r, j - u);
    return acc;
}

}  // namespace emk
