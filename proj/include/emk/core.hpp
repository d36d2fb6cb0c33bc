#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace emk {

/// A subset of the ground set [n] (n <= 64) as a machine-word bitmask.
/// Bit i set means element i+1 is in the set.
using Mask = std::uint64_t;

constexpr int kMaxGround = 64;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) {
    return n >= 64 ? ~Mask(0) : ((Mask(1) << n) - 1);
}

/// Ground size plus a sorted, duplicate-free collection of subset masks.
/// May be non-uniform and may contain the empty set.
struct SetFamily {
    int n = 0;
    std::vector<Mask> members;  // strictly increasing by mask value

    std::size_t size() const { return members.size(); }
    bool contains(Mask m) const;

    /// Sorts, deduplicates and validates members against the ground size.
    void normalize();
};

bool operator==(const SetFamily& a, const SetFamily& b);

/// The parameter bundle (m, s, l) with derived n, a, r.
struct Params {
    int m;
    int s;
    int ell;

    Params(int m_, int s_, int ell_);

    int n() const { return (m + 1) * s - ell; }
    int a() const { return ell - 1; }
    int r() const { return n() - a(); }
};

/// Members of F with cardinality exactly i.
SetFamily layer(const SetFamily& f, int i);

/// 2^[n] minus F.
SetFamily complement_family(const SetFamily& f);

/// Deficit m+1-|E| of a set of size at most m.
int deficit(Mask e, int m);

/// Sum of deficits over all members of size <= m.
long family_deficit(const SetFamily& f, int m);

/// Members of F disjoint from E.
SetFamily restrict_disjoint(const SetFamily& f, Mask e);

/// The full power set 2^[n].
SetFamily power_set(int n);

/// Members with no immediate subset in the family.  For an up-closed
/// family this is the generating antichain, and matchings among minimal
/// members determine nu.
std::vector<Mask> minimal_members(const SetFamily& f);

/// All k-subsets of [n] in increasing mask order.
std::vector<Mask> all_k_subsets(int n, int k);

/// Iterates k-subsets of the bits of `universe` in increasing mask order.
std::vector<Mask> k_subsets_of(Mask universe, int k);

// Family file format: line 1 "n=<int>"; then one lowercase hex mask per
// line, sorted ascending. Readers reject duplicates and out-of-range bits.
void write_family(std::ostream& os, const SetFamily& f);
SetFamily read_family(std::istream& is);
void save_family(const std::string& path, const SetFamily& f);
SetFamily load_family(const std::string& path);

std::string mask_to_hex(Mask m);
Mask hex_to_mask(const std::string& s);

/// Human-readable "{1,2,5}" rendering, for diagnostics.
std::string mask_to_string(Mask m);

}  // namespace emk
