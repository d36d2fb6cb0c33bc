#include "emk/search.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

#include "emk/formulas.hpp"

namespace emk {

namespace {

Mask apply_perm(Mask m, const std::vector<int>& perm) {
    Mask out = 0;
    for (int i = 0; i < static_cast<int>(perm.size()); ++i)
        if (m >> i & 1) out |= Mask(1) << perm[i];
    return out;
}

// Exhaustive DFS over up-closed families.  Masks are processed in
// decreasing-cardinality order, so a set may be included only when all of
// its immediate supersets already are; this walks exactly the up-sets.
// nu < s is maintained incrementally: an s-matching is detected the moment
// its last member (in processing order) is added.
struct UpSetSearch {
    int n, s;
    bool collect_all;
    std::vector<Mask> order;
    std::vector<char> included;
    std::vector<Mask> chosen;
    long best = -1;
    std::vector<std::vector<Mask>> solutions;
    long long nodes = 0;

    UpSetSearch(int n_, int s_, bool collect) : n(n_), s(s_), collect_all(collect) {
        const std::size_t total = std::size_t(1) << n;
        order.reserve(total);
        for (Mask m = 0; m < total; ++m) order.push_back(m);
        std::sort(order.begin(), order.end(), [](Mask a, Mask b) {
            int pa = popcount(a), pb = popcount(b);
            return pa != pb ? pa > pb : a < b;
        });
        included.assign(total, 0);
    }

    bool creates_s_matching(Mask e) const {
        std::vector<Mask> disjoint;
        for (Mask u : chosen)
            if ((u & e) == 0) disjoint.push_back(u);
        return exists_matching(disjoint, s - 1);
    }

    void record() {
        const long cur = static_cast<long>(chosen.size());
        if (cur > best) {
            best = cur;
            solutions.clear();
        }
        if (cur == best && (collect_all || solutions.empty()))
            solutions.push_back(chosen);
    }

    void run(std::size_t idx) {
        ++nodes;
        const long cur = static_cast<long>(chosen.size());
        const long rem = static_cast<long>(order.size() - idx);
        if (collect_all ? cur + rem < best : cur + rem <= best) return;
        if (idx == order.size()) {
            record();
            return;
        }
        const Mask e = order[idx];
        bool can_include = true;
        for (int b = 0; b < n && can_include; ++b)
            if (!(e >> b & 1) && !included[e | (Mask(1) << b)]) can_include = false;
        if (can_include && !creates_s_matching(e)) {
            included[e] = 1;
            chosen.push_back(e);
            run(idx + 1);
            chosen.pop_back();
            included[e] = 0;
        }
        run(idx + 1);
    }
};

}  // namespace

SetFamily canonical_form(const SetFamily& f) {
    if (f.n > 8) throw CapacityError("canonical_form: n must be <= 8");
    std::vector<int> perm(f.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Mask> best;
    bool have = false;
    do {
        std::vector<Mask> img;
        img.reserve(f.members.size());
        for (Mask m : f.members) img.push_back(apply_perm(m, perm));
        std::sort(img.begin(), img.end());
        if (!have || img < best) {
            best = std::move(img);
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return SetFamily{f.n, best};
}

SearchResult e_exact(int n, int s) {
    if (n < 1 || s < 1) throw std::domain_error("e_exact: need n >= 1, s >= 1");
    if (n > 7) throw CapacityError("e_exact: n must be <= 7");
    const auto start = std::chrono::steady_clock::now();
    UpSetSearch engine(n, s, false);
    engine.run(0);
    SearchResult out;
    out.n = n;
    out.s = s;
    out.value = engine.best;
    for (const auto& sol : engine.solutions) {
        SetFamily fam{n, sol};
        fam.normalize();
        out.witnesses.push_back(canonical_form(fam));
    }
    out.nodes = engine.nodes;
    out.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return out;
}

std::vector<SetFamily> enumerate_extremal(int n, int s) {
    if (n < 1 || s < 1)
        throw std::domain_error("enumerate_extremal: need n >= 1, s >= 1");
    if (n > 7) throw CapacityError("enumerate_extremal: n must be <= 7");
    UpSetSearch engine(n, s, true);
    engine.run(0);
    std::vector<SetFamily> out;
    for (const auto& sol : engine.solutions) {
        SetFamily fam{n, sol};
        fam.normalize();
        out.push_back(canonical_form(fam));
    }
    std::sort(out.begin(), out.end(), [](const SetFamily& a, const SetFamily& b) {
        return a.members < b.members;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Count construction_lower_bound(int n, int s) {
    Count best(0);
    for (int ell = 1; ell <= s; ++ell) {
        if ((n + ell) % s == 0) {
            const int m = (n + ell) / s - 1;
            if (m >= 1) best = std::max(best, p_size(Params(m, s, ell)));
        }
        if (n == 4 * s - ell) best = std::max(best, pprime_size(s, ell));
    }
    return best;
}

ExtremalVerdict verify_extremal(const SetFamily& f, int n, int s) {
    if (f.n != n) throw std::domain_error("verify_extremal: ground size mismatch");
    ExtremalVerdict v;
    v.nu = matching_number(f).nu;
    v.size = Count(static_cast<long>(f.size()));
    v.lower_bound = construction_lower_bound(n, s);
    if (v.nu >= s) {
        v.verdict = Verdict::Infeasible;
        return v;
    }
    if (n <= 6) {
        v.optimum = e_exact(n, s).value;
        v.verdict = v.size == *v.optimum ? Verdict::Optimal : Verdict::Suboptimal;
    } else {
        v.verdict = v.size >= v.lower_bound ? Verdict::MeetsLowerBound
                                            : Verdict::BelowLowerBound;
    }
    return v;
}

std::string search_result_to_json(const SearchResult& r,
                                  const std::vector<std::string>& witness_files) {
    nlohmann::json j;
    j["n"] = r.n;
    j["s"] = r.s;
    j["value"] = to_decimal(r.value);
    j["witness_files"] = witness_files;
    j["nodes"] = r.nodes;
    j["seconds"] = r.seconds;
    return j.dump();
}

}  // namespace emk
