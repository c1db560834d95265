#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grassblow/params.hpp"
#include "grassblow/rational.hpp"

namespace grassblow {

enum class Side { Minus, Plus };

inline Side opposite(Side side) { return side == Side::Minus ? Side::Plus : Side::Minus; }
inline std::string side_name(Side side) { return side == Side::Minus ? "minus" : "plus"; }

// Divisor class on the blow-up over the spanning set (H, D-_1..r, D+_1..r).
struct AmbientClass {
    Parameters params;            // normalized
    Rat h;                        // coefficient of the pulled-back hyperplane class
    std::vector<Rat> d_minus;     // coefficient of D-_i at [i-1]
    std::vector<Rat> d_plus;      // coefficient of D+_i at [i-1]

    AmbientClass() = default;
    explicit AmbientClass(const Parameters& params);

    Rat& d(Side side, int i);
    const Rat& d(Side side, int i) const;

    bool is_zero() const;
    bool operator==(const AmbientClass&) const = default;
};

AmbientClass operator+(const AmbientClass& a, const AmbientClass& b);
AmbientClass operator-(const AmbientClass& a, const AmbientClass& b);
AmbientClass operator*(const Rat& c, const AmbientClass& a);

AmbientClass hyperplane_class(const Parameters& params);
AmbientClass boundary_symbol(const Parameters& params, Side side, int i);

// True iff the boundary divisor D(side)_i coincides with a B_j
// (p = n-s: D-_r = B_r; p = s: D+_r = B_0).
bool coincides_with_b(const Parameters& params, Side side, int i);

struct BClass {
    AmbientClass cls;
    bool coincides_with_boundary = false;
    Side boundary_side = Side::Minus;  // valid when coincides_with_boundary
};

// B_j = H - sum_{i=1}^{r-j} (r-j+1-i) D+_i - sum_{i=1}^{j} (j+1-i) D-_i,
// with the edge modification when it coincides with a boundary divisor.
// Requires normalized parameters; throws ParameterError on j out of range.
BClass class_of_b(const Parameters& params, int j);

// The class of the boundary divisor D(side)_i; the B-class expansion when
// it coincides with one (its own symbol slot is then unused).
AmbientClass class_of_boundary_divisor(const Parameters& params, Side side, int i);

// The canonical class K, assembled from the regime's B/D decomposition and
// expanded into the (H, D) spanning set; -K has H-coefficient n.
AmbientClass canonical_class(const Parameters& params);
AmbientClass anticanonical_class(const Parameters& params);

using OrbitPair = std::pair<std::vector<int>, std::vector<int>>;

// All (I-, I+) with min(I-) + min(I+) >= r + 2, min(empty) = +infinity,
// in bitmask-counter order (I- outer, I+ inner; element i <-> bit i-1).
std::vector<OrbitPair> enumerate_orbit_pairs(int r);

}  // namespace grassblow
