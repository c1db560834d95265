#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grassblow/divisor.hpp"

namespace grassblow {

// Divisor class on the boundary component D(side)_j, over the free symbol
// module (H|, D^{side j}_{side 1..r}, D^{side j}_{opp i} for i >= r+2-j).
// The self-symbol i = j is the normal class and is kept as a basis symbol.
struct RestrictedClass {
    Parameters params;
    Side side = Side::Minus;
    int j = 1;
    Rat h;
    std::vector<Rat> d_same;  // [i-1] for i = 1..r
    std::vector<Rat> d_opp;   // [i-1] for i = 1..r; zero for i <= r+1-j

    RestrictedClass() = default;
    RestrictedClass(const Parameters& params, Side side, int j);

    bool is_zero() const;
    bool compatible(const RestrictedClass& other) const;
    bool operator==(const RestrictedClass&) const = default;
};

RestrictedClass operator+(const RestrictedClass& a, const RestrictedClass& b);
RestrictedClass operator-(const RestrictedClass& a, const RestrictedClass& b);
RestrictedClass operator*(const Rat& c, const RestrictedClass& a);

std::string describe(const RestrictedClass& v);

// Symbol-wise restriction of an ambient class to D(side)_j: H -> H|,
// same-sign D_i -> d_same[i], opposite-sign D_i -> d_opp[i] if i >= r+2-j,
// dropped otherwise.
RestrictedClass restrict_class(const AmbientClass& cls, Side side, int j);

// Restriction of the boundary divisor D(symbol_side)_i to D(side)_j.
// A coinciding divisor restricts through its B-class expansion (the
// line-bundle reading); a genuine opposite-sign symbol with empty
// intersection restricts to zero.
RestrictedClass restricted_boundary_divisor(const Parameters& params, Side side, int j,
                                            Side symbol_side, int i);

// restrict(class_of_b(m)): reproduces the displayed B-restriction formulas.
RestrictedClass check_b(const Parameters& params, Side side, int j, int m);

struct RestrictedAnticanonical {
    RestrictedClass direct;      // restrict(-K) by linearity
    RestrictedClass lemma_form;  // the regime- and j-specific stated right-hand side
};

// Throws UnsupportedCaseError when the (regime, side, j) combination is not
// covered by a stated case.
RestrictedAnticanonical restricted_anticanonical(const Parameters& params, Side side, int j);

enum class IdentityStatus { Holds, Discrepancy, NotStated };

struct IdentityRecord {
    std::string id;  // "anticanonical" | "sum_lower" | "step" | "telescope"
    Side side = Side::Minus;
    int j = 1;
    IdentityStatus status = IdentityStatus::NotStated;
    RestrictedClass residual;  // LHS - RHS under the stated reading
    std::optional<RestrictedClass> corrected_residual;  // alternate documented reading
    std::string note;
};

// Evaluates every identity stated for this (regime, side, j); residuals are
// reported as data, never presumed. Unstated combinations yield NotStated.
std::vector<IdentityRecord> identity_suite(const Parameters& params, Side side, int j);

// Divisors blown down to a point, where the restricted hyperplane class is
// geometrically trivial: (p = n-s = s, j = 1, both sides) and
// (p = n-s < s, plus side, j = 1).
bool hyperplane_collapses(const Parameters& params, Side side, int j);

}  // namespace grassblow
