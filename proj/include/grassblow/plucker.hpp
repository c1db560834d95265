#pragma once

#include <vector>

#include "grassblow/params.hpp"

namespace grassblow {

// Column order used when a minor is evaluated from an index tuple.
// ListedOrder takes column i_1 first; Ascending sorts columns increasingly.
enum class SignConvention { ListedOrder, Ascending };

// A strictly decreasing p-tuple of column indices (i_1 > i_2 > ... > i_p),
// stored with i_1 first.
struct IndexTuple {
    std::vector<int> entries;

    IndexTuple() = default;
    explicit IndexTuple(std::vector<int> e);  // validates strict decrease, entries >= 1

    int size() const { return static_cast<int>(entries.size()); }
    bool operator==(const IndexTuple&) const = default;
    bool operator<(const IndexTuple& other) const { return entries < other.entries; }
};

std::string to_string(const IndexTuple& index);

// All C(n,p) strictly decreasing p-tuples in 1..n, sorted lexicographically
// by their (descending) entry lists.
std::vector<IndexTuple> enumerate_plucker_indices(int p, int n);

// Number of entries strictly greater than s; the block k with I in I^k_{s,p,n}.
int block_of_index(const IndexTuple& index, int s);

// |I^k_{s,p,n}| = C(s, p-k) * C(n-s, k).
long long block_size(const Parameters& params, int k);

long long binomial(int n, int k);

enum class SpecialKind { Plain, Star, SwapLow, SwapHigh };

// The special indices used by the chart-recovery formulas:
//   Plain:    I_k   = (s+k, s+k-1, ..., s-p+k+1)
//   Star:     I*_k  = I_k with the top raised by one and the bottom lowered by one
//   SwapLow:  I_k with mu (s-p+k+1 <= mu <= s) removed and nu (1 <= nu <= s-p+k)
//             inserted, re-sorted decreasing
//   SwapHigh: I_k with mu (s+1 <= mu <= s+k) removed and nu (s+k+1 <= nu <= n)
//             inserted, re-sorted decreasing
// mu and nu are ignored for Plain and Star.
IndexTuple special_index(SpecialKind kind, const Parameters& params, int k, int mu = 0,
                         int nu = 0);

}  // namespace grassblow
