#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qfusion {

// Integer polynomial in q. Coefficients here are dimension counts and
// signed convolution intermediates; they stay far below 2^63 at the sizes
// the contracts allow.
struct QPoly {
    std::map<long long, long long> c;  // exponent -> coefficient, zeros dropped

    static QPoly one();
    void add(long long exp, long long coeff);
    long long coeff(long long exp) const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    bool operator==(const QPoly& o) const = default;
};

// prod_{i=1}^{k} (1 - q^i)
QPoly qfactorial(int k);

// Gaussian binomial via the q-Pascal recurrence
// [m,k] = q^k [m-1,k] + [m-1,k-1]; zero outside 0 <= k <= m.
QPoly qbinomial(int m, int k);

// Bigraded character: (z-degree k, q-degree s) -> dimension.
struct CharTable {
    std::map<std::pair<long long, long long>, long long> e;

    void add(long long k, long long s, long long v);
    long long at(long long k, long long s) const;
    long long total() const;
    long long max_z() const;  // -1 when empty
    long long max_q() const;
    CharTable window(long long zmax, long long smax) const;
    bool operator==(const CharTable& o) const = default;

    // Header "k\ts\tdim", rows lexicographic in (k,s).
    std::string to_tsv() const;
};

// b[i] = multiplicity of value i+1 in A; |b| = max(A). Requires a_j >= 1.
std::vector<long long> profile(const std::vector<int>& A);

// Memoized two-term recurrence: ch(A) = ch(A') + z q^{n-1} ch(A'') where A
// is sorted ascending, A' drops the last (largest) entry and A'' decrements
// it. Empty A gives {(0,0):1}; any zero entry gives the zero table.
CharTable char_recurrence(std::vector<int> A);

// Nested Gaussian-binomial sum over the profile; the series natively carries
// the z -> zq normalization, so entries are shifted (k,s) -> (k, s-k) to the
// plain (q,z) table used everywhere else.
CharTable char_closed_form(const std::vector<long long>& b);

// Truncated level-k limit character, same normalization shift. Entries are
// complete for zdeg <= zmax and qdeg <= smax. Both quadratic forms for the
// exponent are evaluated and must agree.
CharTable gordon_truncated(int k, long long zmax, long long smax);

}  // namespace qfusion
