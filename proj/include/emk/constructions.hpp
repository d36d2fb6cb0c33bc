#pragma once

#include "emk/core.hpp"

namespace emk {

/// Parameter bundle plus kernel set for the candidate extremal families.
struct CanonicalFamilySpec {
    Params params;
    Mask kernel;
};

/// Spec for P(m,s,l;L) with the default kernel L = {1..l-1}.
CanonicalFamilySpec p_spec(const Params& params);
CanonicalFamilySpec p_spec(const Params& params, Mask kernel);

/// Spec for P'(s,l;L') with the default kernel L' = {1..3l-1} (m = 3).
CanonicalFamilySpec pprime_spec(int s, int ell);
CanonicalFamilySpec pprime_spec(int s, int ell, Mask kernel);

/// Membership test |A| + |A cap L| >= m+1 (any n <= 64).
bool p_member(const CanonicalFamilySpec& spec, Mask a);

/// Full enumeration; requires n <= 24.
SetFamily p_build(const CanonicalFamilySpec& spec);

/// Membership in (L' choose 3) union ([n] choose >= 4).
bool pprime_member(const CanonicalFamilySpec& spec, Mask a);

SetFamily pprime_build(const CanonicalFamilySpec& spec);

/// G union all sets of size >= m+1; G must be m-uniform on [n], n <= 24.
SetFamily lift(const SetFamily& g, int m, int n);

/// Replace the empty set by the least missing singleton; identity when
/// the empty set is absent.  Throws when every singleton is present.
SetFamily replace_empty(const SetFamily& f);

}  // namespace emk
