#pragma once

#include <string>
#include <vector>

#include "grassblow/matrix.hpp"
#include "grassblow/params.hpp"
#include "grassblow/rng.hpp"

namespace grassblow {

// One chart of the blow-up atlas: paired pivot rows/columns, one slot per
// cascade step. The slot count and index ranges depend on which chart
// family applies (p <= n-s or n-s < p).
struct ChartIndex {
    int level = 0;          // l
    std::vector<int> rows;  // i_k, 1-based matrix rows
    std::vector<int> cols;  // j_k, 1-based matrix columns

    int slots() const { return static_cast<int>(rows.size()); }
    bool operator==(const ChartIndex&) const = default;
};

std::string to_string(const ChartIndex& tau);

bool uses_tall_family(const Parameters& params);  // n-s < p

// All valid charts at the given level, deterministic order.
// Requires normalized-for-atlas parameters (n <= 2s, 2p <= n) and
// 0 <= l <= min(n-s, p).
std::vector<ChartIndex> enumerate_charts(const Parameters& params, int l);

// Closed-form chart count (product of factorials and falling factorials).
long long chart_count(const Parameters& params, int l);

// Shapes of the cascade coordinate vectors for one chart.
struct SlotLayout {
    int pivot_row = 0;
    int pivot_col = 0;
    std::vector<int> row_entry_cols;  // xi^{(k)}_{i_k, t}: column indices t
    std::vector<int> col_entry_rows;  // xi^{(k)}_{t, j_k}: row indices t
    bool first_half = true;           // cascade feeding the high block
};

std::vector<SlotLayout> chart_layout(const Parameters& params, const ChartIndex& tau);

// Coordinates of one point in one chart.
struct ChartPoint {
    ExactMatrix x_tilde;  // l x (n-s-l), entry (i, t-s-l): rows 1..l, cols s+l+1..n
    ExactMatrix y_tilde;  // (p-l) x (s-p+l), entry (i-l, t): rows l+1..p, cols 1..s-p+l
    std::vector<Rat> pivots;                 // one per slot
    std::vector<std::vector<Rat>> row_xi;    // per slot, aligned with row_entry_cols
    std::vector<std::vector<Rat>> col_xi;    // per slot, aligned with col_entry_rows
};

ChartPoint zero_chart_point(const Parameters& params, const ChartIndex& tau);
int coordinate_count(const Parameters& params, const ChartIndex& tau);

// Seeded random chart point; pivots drawn from nonzero rationals.
ChartPoint random_chart_point(const Parameters& params, const ChartIndex& tau, Rng& rng);

// The chart's holomorphic frame map into p x n matrices: identity blocks in
// the frame positions, X~ and Y~ verbatim, and the cascade sums
// sum_k (prod_t pivot_t) Xi_k^T Omega_k in the two corner blocks.
ExactMatrix gamma_eval(const Parameters& params, const ChartIndex& tau, const ChartPoint& pt);

// The canonical target chart at level l = j-1 (consecutive pivot runs),
// the one whose coordinates are recoverable by Plucker ratios.
// Short-family charts only (p <= n-s).
ChartIndex tau0_chart(const Parameters& params, int j);

// Recovers every tau0-coordinate of the point represented by the matrix from
// Plucker-minor ratios: pivots from consecutive P_{I_m} telescopes, grid
// entries from swap-index minors, signs fixed by exact calibration under the
// active convention. Throws IndeterminacyError naming the vanishing minor.
ChartPoint ratio_coordinates(const Parameters& params, int j, const ExactMatrix& image,
                             SignConvention convention = SignConvention::ListedOrder);

struct TransitionReport {
    bool consistent = false;
    std::string witness;  // first failing comparison, when inconsistent
};

// Evaluates gamma at pt in tau_src, recovers tau_dst coordinates through the
// ratio formulas, re-evaluates, and compares full Plucker vectors
// projectively. tau_dst must be tau0 of the matching level (or equal
// tau_src, the identity transition).
TransitionReport transition_check(const Parameters& params, const ChartIndex& tau_src,
                                  const ChartIndex& tau_dst, const ChartPoint& pt,
                                  SignConvention convention = SignConvention::ListedOrder);

// The chart defining function of the m-th B-restriction:
// rho_m = P_{I_m}(gamma(pt)) / (frame sign * pivot monomial); identically 1
// for m = j-1. Throws EvaluationDomainError on a zero pivot monomial.
Rat rho_eval(const Parameters& params, int j, const ChartIndex& tau, int m,
             const ChartPoint& pt, SignConvention convention = SignConvention::ListedOrder);

}  // namespace grassblow
