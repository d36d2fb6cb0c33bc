#include "emk/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace emk {

CanonicalFamilySpec p_spec(const Params& params, Mask kernel) {
    if (params.n() > kMaxGround)
        throw std::domain_error("p_spec: n exceeds 64");
    if (popcount(kernel) != params.a())
        throw std::domain_error("p_spec: kernel must have l-1 elements");
    if (kernel & ~full_mask(params.n()))
        throw std::domain_error("p_spec: kernel outside ground set");
    return {params, kernel};
}

CanonicalFamilySpec p_spec(const Params& params) {
    return p_spec(params, full_mask(params.a()));
}

CanonicalFamilySpec pprime_spec(int s, int ell, Mask kernel) {
    Params params(3, s, ell);
    if (params.n() > kMaxGround)
        throw std::domain_error("pprime_spec: n exceeds 64");
    if (popcount(kernel) != 3 * ell - 1)
        throw std::domain_error("pprime_spec: kernel must have 3l-1 elements");
    if (kernel & ~full_mask(params.n()))
        throw std::domain_error("pprime_spec: kernel outside ground set");
    return {params, kernel};
}

CanonicalFamilySpec pprime_spec(int s, int ell) {
    Params params(3, s, ell);
    if (3 * ell - 1 > params.n())
        throw std::domain_error("pprime_spec: kernel larger than ground set");
    return pprime_spec(s, ell, full_mask(3 * ell - 1));
}

bool p_member(const CanonicalFamilySpec& spec, Mask a) {
    return popcount(a) + popcount(a & spec.kernel) >= spec.params.m + 1;
}

SetFamily p_build(const CanonicalFamilySpec& spec) {
    const int n = spec.params.n();
    if (n > 24) throw std::domain_error("p_build: n must be <= 24");
    SetFamily out{n, {}};
    const Mask total = full_mask(n);
    for (Mask a = 0;; ++a) {
        if (p_member(spec, a)) out.members.push_back(a);
        if (a == total) break;
    }
    return out;
}

bool pprime_member(const CanonicalFamilySpec& spec, Mask a) {
    const int k = popcount(a);
    if (k >= 4) return true;
    return k == 3 && (a & ~spec.kernel) == 0;
}

SetFamily pprime_build(const CanonicalFamilySpec& spec) {
    const int n = spec.params.n();
    if (n > 24) throw std::domain_error("pprime_build: n must be <= 24");
    SetFamily out{n, {}};
    const Mask total = full_mask(n);
    for (Mask a = 0;; ++a) {
        if (pprime_member(spec, a)) out.members.push_back(a);
        if (a == total) break;
    }
    return out;
}

SetFamily lift(const SetFamily& g, int m, int n) {
    if (g.n != n) throw std::domain_error("lift: ground size mismatch");
    if (n > 24) throw std::domain_error("lift: n must be <= 24");
    for (Mask e : g.members)
        if (popcount(e) != m)
            throw std::domain_error("lift: family must be m-uniform");
    SetFamily out{n, {}};
    const Mask total = full_mask(n);
    for (Mask a = 0;; ++a) {
        if (popcount(a) >= m + 1 || g.contains(a)) out.members.push_back(a);
        if (a == total) break;
    }
    return out;
}

SetFamily replace_empty(const SetFamily& f) {
    if (f.members.empty() || f.members.front() != 0) return f;
    for (int x = 0; x < f.n; ++x) {
        const Mask single = Mask(1) << x;
        if (!f.contains(single)) {
            SetFamily out = f;
            out.members.erase(out.members.begin());
            out.members.insert(
                std::lower_bound(out.members.begin(), out.members.end(), single),
                single);
            return out;
        }
    }
    throw std::domain_error(
        "replace_empty: all singletons present, family has an s-matching");
}

}  // namespace emk
