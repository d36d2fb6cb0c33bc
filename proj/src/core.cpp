#include "emk/core.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace emk {

bool SetFamily::contains(Mask m) const {
    return std::binary_search(members.begin(), members.end(), m);
}

void SetFamily::normalize() {
    if (n < 1 || n > kMaxGround)
        throw std::domain_error("ground size must be in 1..64");
    const Mask full = full_mask(n);
    for (Mask m : members)
        if (m & ~full) throw std::domain_error("member has bits outside [n]");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.n == b.n && a.members == b.members;
}

Params::Params(int m_, int s_, int ell_) : m(m_), s(s_), ell(ell_) {
    if (m < 1) throw std::domain_error("m must be positive");
    if (s < 1) throw std::domain_error("s must be positive");
    if (ell < 1 || ell > s) throw std::domain_error("l must satisfy 1 <= l <= s");
}

SetFamily layer(const SetFamily& f, int i) {
    if (i < 0 || i > f.n) throw std::domain_error("layer index out of range");
    SetFamily out{f.n, {}};
    for (Mask m : f.members)
        if (popcount(m) == i) out.members.push_back(m);
    return out;
}

SetFamily complement_family(const SetFamily& f) {
    SetFamily out{f.n, {}};
    const Mask total = full_mask(f.n);
    std::size_t idx = 0;
    for (Mask m = 0;; ++m) {
        if (idx < f.members.size() && f.members[idx] == m)
            ++idx;
        else
            out.members.push_back(m);
        if (m == total) break;
    }
    return out;
}

int deficit(Mask e, int m) {
    const int k = popcount(e);
    if (k > m) throw std::domain_error("deficit requires |E| <= m");
    return m + 1 - k;
}

long family_deficit(const SetFamily& f, int m) {
    long total = 0;
    for (Mask e : f.members)
        if (popcount(e) <= m) total += deficit(e, m);
    return total;
}

SetFamily restrict_disjoint(const SetFamily& f, Mask e) {
    SetFamily out{f.n, {}};
    for (Mask m : f.members)
        if ((m & e) == 0) out.members.push_back(m);
    return out;
}

SetFamily power_set(int n) {
    if (n < 1 || n > 24) throw std::domain_error("power_set limited to n <= 24");
    SetFamily out{n, {}};
    const Mask total = full_mask(n);
    out.members.reserve(std::size_t(1) << n);
    for (Mask m = 0;; ++m) {
        out.members.push_back(m);
        if (m == total) break;
    }
    return out;
}

std::vector<Mask> minimal_members(const SetFamily& f) {
    std::vector<Mask> out;
    for (Mask m : f.members) {
        bool minimal = true;
        for (int b = 0; b < f.n && minimal; ++b)
            if ((m >> b & 1) && f.contains(m & ~(Mask(1) << b))) minimal = false;
        if (minimal) out.push_back(m);
    }
    return out;
}

std::vector<Mask> all_k_subsets(int n, int k) {
    return k_subsets_of(full_mask(n), k);
}

std::vector<Mask> k_subsets_of(Mask universe, int k) {
    std::vector<int> bits;
    for (int i = 0; i < kMaxGround; ++i)
        if (universe >> i & 1) bits.push_back(i);
    const int nb = static_cast<int>(bits.size());
    std::vector<Mask> out;
    if (k < 0 || k > nb) return out;
    if (k == 0) return {Mask(0)};
    // Gosper-style walk over index combinations; masks come out sorted
    // because bit positions are increasing.
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Mask m = 0;
        for (int i : idx) m |= Mask(1) << bits[i];
        out.push_back(m);
        int j = k - 1;
        while (j >= 0 && idx[j] == nb - k + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (int i = j + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string mask_to_hex(Mask m) {
    std::ostringstream os;
    os << std::hex << m;
    return os.str();
}

Mask hex_to_mask(const std::string& s) {
    if (s.empty()) throw std::domain_error("empty mask token");
    Mask m = 0;
    for (char c : s) {
        int d;
        if (c >= '0' && c <= '9')
            d = c - '0';
        else if (c >= 'a' && c <= 'f')
            d = c - 'a' + 10;
        else
            throw std::domain_error("invalid hex mask: " + s);
        if (m >> 60) throw std::domain_error("mask overflows 64 bits: " + s);
        m = (m << 4) | Mask(d);
    }
    return m;
}

std::string mask_to_string(Mask m) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < kMaxGround; ++i)
        if (m >> i & 1) {
            if (!first) out += ",";
            out += std::to_string(i + 1);
            first = false;
        }
    out += "}";
    return out;
}

void write_family(std::ostream& os, const SetFamily& f) {
    os << "n=" << f.n << "\n";
    for (Mask m : f.members) os << mask_to_hex(m) << "\n";
}

SetFamily read_family(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("n=", 0) != 0)
        throw std::domain_error("family file must start with n=<int>");
    SetFamily f;
    f.n = std::stoi(line.substr(2));
    if (f.n < 1 || f.n > kMaxGround)
        throw std::domain_error("ground size must be in 1..64");
    const Mask full = full_mask(f.n);
    Mask prev = 0;
    bool have_prev = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        Mask m = hex_to_mask(line);
        if (m & ~full) throw std::domain_error("mask has out-of-range bits");
        if (have_prev && m <= prev)
            throw std::domain_error("masks must be strictly ascending");
        f.members.push_back(m);
        prev = m;
        have_prev = true;
    }
    return f;
}

void save_family(const std::string& path, const SetFamily& f) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    write_family(os, f);
}

SetFamily load_family(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return read_family(is);
}

}  // namespace emk
