#include "emk/exactsolve.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace emk {

namespace {

// Sorts by (cardinality, mask value); the branch order everywhere below.
std::vector<Mask> sorted_by_size(const std::vector<Mask>& in) {
    std::vector<Mask> out = in;
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
        int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return out;
}

}  // namespace

bool exists_matching(const std::vector<Mask>& sets, int target) {
    if (target <= 0) return true;
    if (static_cast<int>(sets.size()) < target) return false;
    const int n = static_cast<int>(sets.size());
    std::function<bool(int, Mask, int)> go = [&](int idx, Mask used, int cur) {
        if (cur == target) return true;
        if (cur + (n - idx) < target) return false;
        for (int i = idx; i < n; ++i)
            if ((sets[i] & used) == 0 && go(i + 1, used | sets[i], cur + 1))
                return true;
        return false;
    };
    return go(0, 0, 0);
}

MatchingResult matching_number(const SetFamily& f) {
    MatchingResult res;
    std::vector<Mask> sets = sorted_by_size(f.members);
    const int n = static_cast<int>(sets.size());
    int best = -1;
    std::vector<Mask> cur, bestw;

    std::function<void(int, Mask)> go = [&](int idx, Mask used) {
        // optimistic bound: matched so far + remaining usable sets, capped
        // by the vertex budget (the empty set needs no vertices, hence +1)
        int usable = 0, minsz = std::numeric_limits<int>::max();
        bool empty_left = false;
        for (int i = idx; i < n; ++i)
            if ((sets[i] & used) == 0) {
                ++usable;
                int sz = popcount(sets[i]);
                if (sz == 0)
                    empty_left = true;
                else
                    minsz = std::min(minsz, sz);
            }
        int bound = static_cast<int>(cur.size());
        if (usable > 0) {
            int free = f.n - popcount(used);
            int volcap = (minsz == std::numeric_limits<int>::max())
                             ? 0
                             : free / minsz;
            bound += std::min(usable, volcap + (empty_left ? 1 : 0));
        }
        if (bound <= best) return;
        if (idx == n) {
            best = static_cast<int>(cur.size());
            bestw = cur;
            return;
        }
        if ((sets[idx] & used) == 0) {
            cur.push_back(sets[idx]);
            go(idx + 1, used | sets[idx]);
            cur.pop_back();
        }
        go(idx + 1, used);
    };
    go(0, 0);
    res.nu = std::max(best, 0);
    std::sort(bestw.begin(), bestw.end());
    res.witness.members = bestw;
    return res;
}

std::optional<Matching> has_s_matching(const SetFamily& f, int s) {
    if (s <= 0) return Matching{};
    std::vector<Mask> sets = sorted_by_size(f.members);
    const int n = static_cast<int>(sets.size());
    std::vector<Mask> cur;
    std::function<bool(int, Mask)> go = [&](int idx, Mask used) {
        if (static_cast<int>(cur.size()) == s) return true;
        if (static_cast<int>(cur.size()) + (n - idx) < s) return false;
        for (int i = idx; i < n; ++i)
            if ((sets[i] & used) == 0) {
                cur.push_back(sets[i]);
                if (go(i + 1, used | sets[i])) return true;
                cur.pop_back();
            }
        return false;
    };
    if (!go(0, 0)) return std::nullopt;
    std::sort(cur.begin(), cur.end());
    return Matching{cur};
}

std::optional<Matching> find_disjoint(const SetFamily& g, int p) {
    return has_s_matching(g, p);
}

CoverResult cover_number(const SetFamily& g) {
    if (g.members.empty()) return {0, 0};
    for (Mask m : g.members)
        if (m == 0) throw std::domain_error("cover_number: empty set is uncoverable");

    std::vector<Mask> sets = sorted_by_size(g.members);

    // greedy initial cover: first vertex of each uncovered member
    Mask greedy = 0;
    for (Mask m : sets)
        if ((m & greedy) == 0) greedy |= m & (~m + 1);
    int best = popcount(greedy);
    Mask bestCover = greedy;

    std::function<void(const std::vector<Mask>&, Mask, int)> go =
        [&](const std::vector<Mask>& uncovered, Mask cover, int cnt) {
            if (uncovered.empty()) {
                if (cnt < best) {
                    best = cnt;
                    bestCover = cover;
                }
                return;
            }
            // lower bound: greedy disjoint packing needs one vertex each
            Mask usedv = 0;
            int lb = 0;
            for (Mask m : uncovered)
                if ((m & usedv) == 0) {
                    usedv |= m;
                    ++lb;
                }
            if (cnt + lb >= best) return;
            Mask pick = uncovered.front();
            for (int v = 0; v < kMaxGround; ++v) {
                if (!(pick >> v & 1)) continue;
                Mask vb = Mask(1) << v;
                std::vector<Mask> rest;
                rest.reserve(uncovered.size());
                for (Mask m : uncovered)
                    if (!(m & vb)) rest.push_back(m);
                go(rest, cover | vb, cnt + 1);
            }
        };
    go(sets, 0, 0);
    return {best, bestCover};
}

long max_graph_nu_below(int N, int t) {
    // Enumerates the extremal shape K_sigma joined to disjoint odd cliques;
    // every graph with nu <= t-1 embeds in one of these with at least as
    // many edges (complete within the Berge-Tutte witness structure).
    const long k = t - 1;
    auto c2 = [](long x) { return x < 2 ? 0L : x * (x - 1) / 2; };
    if (N <= 2 * k + 1) return c2(N);  // complete graph already has nu <= k
    long best = 0;
    for (long sigma = 0; sigma <= k; ++sigma) {
        long rest = N - sigma;
        long cmin = sigma + N - 2 * k;
        if (cmin < 1) cmin = 1;
        if ((cmin & 1) != (rest & 1)) ++cmin;  // odd parts: sum parity = count parity
        if (cmin > rest) continue;
        long big = rest - (cmin - 1);
        long edges = c2(sigma) + sigma * rest + c2(big);
        best = std::max(best, edges);
    }
    return best;
}

long max_family_nu_below_bb(int N, int q, int t) {
    if (N > kMaxGround) throw CapacityError("ground set exceeds 64");
    if (t == 1) return 0;
    std::vector<Mask> all = all_k_subsets(N, q);
    const int M = static_cast<int>(all.size());
    if (N / q < t) return static_cast<long>(M);  // no room for t disjoint sets

    // Compression reduction: the (i,j)-shift preserves the family size and
    // never increases the matching number, so some maximum family is fully
    // shifted, i.e. down-closed under the coordinatewise dominance order on
    // sorted q-sets.  The search walks exactly those down-sets.  Numeric
    // mask order is colex order, a linear extension of dominance, so every
    // immediate predecessor is decided before its successors and a freshly
    // completed t-matching is caught when its colex-last member is added.
    std::vector<std::vector<int>> preds(M);
    {
        std::vector<int> index(std::size_t(1) << N, -1);
        for (int i = 0; i < M; ++i) index[all[i]] = i;
        for (int i = 0; i < M; ++i)
            for (int b = 1; b < N; ++b)
                if ((all[i] >> b & 1) && !(all[i] >> (b - 1) & 1)) {
                    Mask down = (all[i] & ~(Mask(1) << b)) | (Mask(1) << (b - 1));
                    preds[i].push_back(index[down]);
                }
    }

    // feasible seeds (both shifted): all q-sets meeting [t-1]; all q-sets
    // inside [qt-1]
    const Mask core = full_mask(t - 1);
    const Mask body = full_mask(q * t - 1);
    long star = 0, clique = 0;
    for (Mask v : all) {
        if (v & core) ++star;
        if ((v & ~body) == 0) ++clique;
    }
    long best = std::max(star, clique);

    std::vector<char> state(M, 0);  // 0 undecided, 1 included, 2 excluded
    std::vector<Mask> chosen;
    std::vector<Mask> tmp;
    auto creates_t_matching = [&](Mask v) {
        tmp.clear();
        for (Mask u : chosen)
            if ((u & v) == 0) tmp.push_back(u);
        return exists_matching(tmp, t - 1);
    };

    std::function<void(int)> go = [&](int idx) {
        // optimistic bound: sets whose whole predecessor chain can still be
        // included; an excluded set bars its entire dominance filter
        long bound = static_cast<long>(chosen.size());
        for (int i = idx; i < M; ++i) {
            bool open = true;
            for (int p : preds[i])
                if (state[p] == 2) {
                    open = false;
                    break;
                }
            if (open) ++bound;
        }
        if (bound <= best) return;
        if (idx == M) {
            best = static_cast<long>(chosen.size());
            return;
        }
        bool can = true;
        for (int p : preds[idx])
            if (state[p] != 1) {
                can = false;
                break;
            }
        if (can && !creates_t_matching(all[idx])) {
            state[idx] = 1;
            chosen.push_back(all[idx]);
            go(idx + 1);
            chosen.pop_back();
        }
        state[idx] = 2;
        go(idx + 1);
        state[idx] = 0;
    };
    go(0);
    return best;
}

long max_family_nu_below(int N, int q, int t) {
    if (q == 1) return std::min<long>(N, t - 1);
    if (q == 2) return max_graph_nu_below(N, t);
    return max_family_nu_below_bb(N, q, t);
}

Count min_blocker(const BlockerInstance& inst) {
    const long N = static_cast<long>(inst.q) * inst.t + inst.d;
    const Count total = binom(N, inst.q);
    if (inst.q == 1) return Count(inst.d + 1);
    if (inst.t == 1) return total;
    if (total > 10000) throw CapacityError("min_blocker: C(qt+d,q) too large");
    if (inst.q >= 3 && total > 220)
        throw CapacityError("min_blocker: exact search infeasible for this instance");
    return total - max_family_nu_below(static_cast<int>(N), inst.q, inst.t);
}

}  // namespace emk
