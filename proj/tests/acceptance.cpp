// Acceptance suite: one criterion per section, one PASS/FAIL line each.
// argv[1] must point at the CLI binary (used by the determinism check).

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "emk/baranyai.hpp"
#include "emk/constructions.hpp"
#include "emk/core.hpp"
#include "emk/exactsolve.hpp"
#include "emk/formulas.hpp"
#include "emk/lemmalab.hpp"
#include "emk/search.hpp"

using namespace emk;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok,
            const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << idx << ": " << name;
    if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

bool criterion1() {
    for (int m = 1; m <= 6; ++m)
        for (long a = 0; a <= 30; ++a)
            for (long r = m; r <= 60; ++r)
                if (lambda_layer(m, a, r, m) != binom(a + r, m) - binom(r, m))
                    return false;
    for (int m = 1; m <= 13; ++m)
        for (int s = 1; s <= 14; ++s)
            for (int ell = 1; ell <= s; ++ell) {
                const int n = (m + 1) * s - ell;
                if (n < 1 || n > 14) continue;
                Params p(m, s, ell);
                const Mask a_set = full_mask(p.a());
                for (int j = 0; j <= m; ++j) {
                    long direct = 0;
                    for (Mask e : all_k_subsets(n, j))
                        if (popcount(e & a_set) >= m + 1 - j) ++direct;
                    if (lambda_layer(p, j) != direct) return false;
                }
            }
    return true;
}

bool nu_below(const SetFamily& fam, int s) {
    SetFamily gens{fam.n, minimal_members(fam)};
    return !has_s_matching(gens, s).has_value();
}

bool criterion2() {
    for (int m = 1; m <= 15; ++m)
        for (int s = 1; s <= 16; ++s)
            for (int ell = 1; ell <= s; ++ell) {
                const int n = (m + 1) * s - ell;
                if (n < 1 || n > 16) continue;
                Params p(m, s, ell);
                auto spec = p_spec(p);
                long count = 0;
                SetFamily fam{n, {}};
                const Mask total = full_mask(n);
                for (Mask a = 0;; ++a) {
                    if (p_member(spec, a)) {
                        ++count;
                        fam.members.push_back(a);
                    }
                    if (a == total) break;
                }
                if (Count(count) != p_size(p)) return false;
                if (!nu_below(fam, s)) return false;
                if (m == 3) {
                    auto pp = pprime_spec(s, ell);
                    long ppcount = 0;
                    SetFamily ppf{n, {}};
                    for (Mask a = 0;; ++a) {
                        if (pprime_member(pp, a)) {
                            ++ppcount;
                            ppf.members.push_back(a);
                        }
                        if (a == total) break;
                    }
                    if (Count(ppcount) != pprime_size(s, ell)) return false;
                    if (!nu_below(ppf, s)) return false;
                }
            }
    return true;
}

bool criterion3() {
    if (lambda_minus_a3(100, 2) != 78596) return false;
    for (int s = 1; s <= 500; ++s) {
        for (int ell = 1; ell <= s; ++ell) {
            Params p(3, s, ell);
            if (lambda_minus_a3(s, ell) !=
                SignedCount(lambda_total(p)) - a3_size(s, ell))
                return false;
        }
        if (lambda_minus_a3(s, 1) != 0) return false;
        if (s < 2) continue;
        QuadraticSurd t = t_threshold(s);
        for (int ell = 2; ell <= s; ++ell) {
            const SignedCount v = lambda_minus_a3(s, ell);
            const int cmp = t.compare(SignedCount(ell));
            if (cmp > 0 && !(v > 0)) return false;
            if (cmp == 0 && v != 0) return false;
            if (cmp < 0 && !(v < 0)) return false;
        }
    }
    return true;
}

bool criterion4() {
    auto spot = appendix_identity(AppendixIdentity::GoodEmc, 10, 4);
    if (spot.lhs != 1141 || spot.rhs != 1141) return false;
    for (long s = 10; s <= 200; ++s)
        for (long p = 2; p <= s; ++p)
            if (!appendix_identity(AppendixIdentity::GoodEmc, s, p).holds())
                return false;

    auto gap = appendix_identity(AppendixIdentity::H3Gap, 10, 6);
    if (gap.lhs != 2 * 64) return false;
    for (long s = 10; s <= 200; ++s)
        for (long ell = 1; ell <= s; ++ell) {
            if (!appendix_identity(AppendixIdentity::H3Gap, s, ell).holds())
                return false;
            // quadratic part factors as (s-l)(9s-5l)
            SignedCount quad =
                9 * SignedCount(s) * s - 14 * ell * s + 5 * ell * ell;
            if (quad != SignedCount(s - ell) * (9 * s - 5 * ell)) return false;
        }

    for (long s = 10; s <= 40; ++s)
        for (long ell = 4; ell <= s; ++ell)
            for (auto which :
                 {AppendixIdentity::Case2H3_1, AppendixIdentity::Case2H3_2,
                  AppendixIdentity::Case2Clique1, AppendixIdentity::Case2Clique2})
                if (!appendix_identity(which, s, ell).holds()) return false;
    return true;
}

bool criterion5() {
    for (long a = 1; a <= 50; ++a) {
        const long r = 2 * a + 7;
        if (SignedCount(d_h(r, 3, 1)) - n_h_closed(a, r, 1) != 4 * a + 15)
            return false;
        if (SignedCount(d_h(r, 3, 2)) - n_h_closed(a, r, 2) != 4) return false;
        if (SignedCount(d_h(r, 3, 3)) - n_h_closed(a, r, 3) != 7 * a + 28)
            return false;
        if (SignedCount(d_h(r, 3, 4)) - n_h_closed(a, r, 4) !=
            2 * a * a + 16 * a + 36)
            return false;
    }
    for (long r = 4; r <= 500; ++r)
        for (int h = 1; h < 4; ++h)
            if (!(d_h(r, 3, h) < d_h(r, 3, h + 1))) return false;
    return true;
}

bool criterion6() {
    std::vector<std::pair<int, int>> grid;
    for (int q = 1; q <= 3; ++q)
        for (int t = 1; q * t <= 12; ++t) grid.emplace_back(q, t);
    grid.emplace_back(4, 2);
    for (auto [q, t] : grid) {
        Decomposition d = decompose(q, t);
        if (!verify_decomposition(d).ok) return false;
        if (Count(static_cast<long>(d.matchings.size())) !=
            binom(q * t - 1, q - 1))
            return false;
    }
    return true;
}

bool criterion7() {
    for (int q = 1; q <= 8; ++q)
        for (int t = 1; t <= 200; ++t) {
            if (binom(q * t, q) > 200) break;
            for (int d = 0;; ++d) {
                if (binom(q * t + d, q) > 200) break;
                Count exact = min_blocker(BlockerInstance(q, t, d));
                if (exact < blocker_bound(q, t, d)) return false;
            }
        }
    return min_blocker(BlockerInstance(2, 2, 0)) == 3 &&
           blocker_bound(2, 2, 0) == 3;
}

bool criterion8() {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 10000; ++trial) {
        const int m = 1 + rng() % 5;
        std::vector<Mask> q;
        Mask used = 0;
        int bit = 0;
        long total = 0;
        const int count = 1 + rng() % 7;
        for (int i = 0; i < count && bit + m <= 60; ++i) {
            const int size = rng() % (m + 1);
            if (size == 0 && std::find(q.begin(), q.end(), Mask(0)) != q.end())
                continue;
            Mask e = 0;
            for (int b = 0; b < size; ++b) e |= Mask(1) << bit++;
            used |= e;
            q.push_back(e);
            total += m + 1 - size;
        }
        if (total < 1) continue;
        const int ell = 1 + static_cast<int>(rng() % total);
        auto kept = minimal_deficit_subfamily(q, ell, m);
        long delta = 0;
        for (Mask e : kept) delta += deficit(e, m);
        if (static_cast<int>(kept.size()) > ell) return false;
        if (delta < ell || delta > ell + m) return false;
    }

    // constructed completion instances: a singleton plus all (m+1)-sets
    // through the first two vertices; nu(F) = 2 < s
    for (int m = 1; m <= 4; ++m)
        for (int s = 3; s <= 8; ++s)
            for (int ell = 1; ell <= std::min(m, s); ++ell) {
                const int n = (m + 1) * s - ell;
                if (n > 16) continue;
                Params p(m, s, ell);
                SetFamily f{n, {Mask(1)}};
                for (Mask e : all_k_subsets(n, m + 1))
                    if (e & Mask(0b11)) f.members.push_back(e);
                f.normalize();
                if (matching_number(f).nu >= s) continue;
                DeficitCompletionReport rep =
                    deficit_completion_check(f, Matching{{Mask(1)}}, p);
                if (!rep.outer_ok || !rep.inner_ok) return false;
                if (rep.bound != blocker_bound(m + 1, s - 1, m - ell))
                    return false;
            }
    return true;
}

bool criterion9() {
    if (!(Count(8) > Count(3))) return false;  // m = 3 reduced comparison
    for (int m = 3; m <= 64; ++m)
        if (!coefficient_gap(m)) return false;
    for (int m : {3, 4, 5, 6}) {
        Rational top = Rational(m + 1) / (2 * m + 1) - Rational(1, 100);
        for (int i = 0; i <= 100; ++i) {
            Rational alpha = top * i / 100;
            alpha.canonicalize();
            if (!(phi(m, alpha) > 0)) return false;
        }
    }
    return true;
}

bool criterion10() {
    const std::array<std::array<int, 3>, 3> known = {
        {{3, 2, 4}, {4, 2, 8}, {5, 2, 16}}};
    for (const auto& row : known) {
        SearchResult res = e_exact(row[0], row[1]);
        if (res.value != row[2]) return false;
        if (res.witnesses.empty()) return false;
        for (const SetFamily& w : res.witnesses) {
            if (Count(static_cast<long>(w.size())) != res.value) return false;
            if (matching_number(w).nu >= row[1]) return false;
        }
    }
    for (int n = 1; n <= 6; ++n)
        if (e_exact(n, 1).value != 0) return false;
    for (int n = 2; n <= 5; ++n)
        for (int s = 1; s <= n; ++s)
            if (e_exact(n, s).value < construction_lower_bound(n, s))
                return false;
    return true;
}

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int code = pclose(pipe);
    return {code, out};
}

bool criterion11(const std::string& cli) {
    const std::string scratch = "acceptance_scratch.json";
    run("EMK_THREADS=1 " + cli + " baranyai --q 2 --t 2 --file " + scratch +
        " >/dev/null 2>&1");
    const std::string fam = "acceptance_scratch.fam";
    {
        std::ofstream os(fam);
        os << "n=6\n7\n";  // a single triple, liftable
    }
    const std::vector<std::string> commands = {
        "formulas --m 3 --s 100 --l 2 --out json",
        "construct p --m 2 --s 2 --l 2",
        "construct pprime --s 2 --l 2",
        "construct lift --m 3 --file " + fam,
        "verify blocker --q 2 --t 2 --d 0",
        "verify counting --m 3 --s 4 --l 3",
        "verify deficit --m 3 --s 3 --l 2",
        "verify lowlayer --m 2 --s 3 --l 2",
        "verify coeff --m 5",
        "verify appendix --name good-emc --s 10 --second 4",
        "verify decomposition --file " + scratch,
        "baranyai --q 3 --t 2",
        "search --n 4 --s 2",
        "table --kind thresholds --s 20",
        "table --kind lambda-vs-a3 --s 30",
        "table --kind dh-nh --n 10",
        "table --kind appendix --s 12 --out json",
    };
    for (const std::string& args : commands) {
        RunResult first = run("EMK_THREADS=1 " + cli + " " + args + " 2>/dev/null");
        for (const char* env : {"EMK_THREADS=1", "EMK_THREADS=8"}) {
            RunResult again =
                run(std::string(env) + " " + cli + " " + args + " 2>/dev/null");
            if (again.code != first.code || again.out != first.out) {
                std::cerr << "divergent: " << args << "\n";
                return false;
            }
        }
        if (first.code != 0 || first.out.empty()) {
            std::cerr << "command failed: " << args << "\n";
            return false;
        }
    }
    std::remove(scratch.c_str());
    std::remove(fam.c_str());
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    report(1, "layer-formula identity", criterion1());
    report(2, "construction sizes and feasibility", criterion2());
    report(3, "endpoint cubic, dual evaluation and sign", criterion3());
    report(4, "appendix identities", criterion4());
    report(5, "terminal-core endpoint table", criterion5());
    report(6, "baranyai decompositions", criterion6());
    report(7, "blocker lemma exact vs bound", criterion7());
    report(8, "deficit machinery", criterion8());
    report(9, "coefficient comparison and phi positivity", criterion9());
    report(10, "exact search values", criterion10());
    if (argc > 1)
        report(11, "cli determinism", criterion11(argv[1]));
    else
        report(11, "cli determinism", false, "cli path not supplied");
    return failures == 0 ? 0 : 1;
}
