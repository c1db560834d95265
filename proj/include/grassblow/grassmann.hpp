#pragma once

#include <vector>

#include "grassblow/matrix.hpp"
#include "grassblow/params.hpp"

namespace grassblow {

enum class FactorStatus { Regular, TrivialFactor, Undefined };

// One factor of the multi-projective image: the full Plucker vector
// (block = -1) or its restriction to one block's index set.
struct MultiProjectiveFactor {
    int block = -1;
    FactorStatus status = FactorStatus::Regular;
    std::vector<Rat> coords;  // unnormalized projective coordinates
};

struct MultiProjectivePoint {
    std::vector<MultiProjectiveFactor> factors;  // full, then blocks 0..p
};

// Image of a rank-p matrix under the canonical multi-projective map:
// the full Plucker vector followed by its restriction to each block.
// A block factor is TrivialFactor when its target space is a point or empty,
// Undefined when all of its coordinates vanish. Throws RankError.
MultiProjectivePoint canonical_map_image(const ExactMatrix& m, int s,
                                         SignConvention convention = SignConvention::ListedOrder);

// Dimensions of the row-space intersections with C^s + 0 and 0 + C^{n-s},
// plus stratum membership flags derived from them.
struct StratumInfo {
    int dim_low = 0;        // dim(rowspace ^ (C^s + 0))
    int dim_high = 0;       // dim(rowspace ^ (0 + C^{n-s}))
    int v_minus_level = 0;  // l with dim_low = p - l
    int v_plus_level = 0;   // l with dim_high = l
    bool in_closed_stratum = false;  // dim_low + dim_high = p
    bool open_stratum = false;       // matches no proper stratum pattern
};

StratumInfo stratum_classify(const ExactMatrix& m, int s);

// The explicit full-flag witness matrix whose special minors P_{I_j} are all
// nonzero, 0 <= j <= r. Requires normalized parameters.
ExactMatrix generic_point(const Parameters& params);

// Columns s+1..n scaled by lambda; P_I scales by lambda^block(I).
ExactMatrix torus_scale(const ExactMatrix& m, int s, const Rat& lambda);

}  // namespace grassblow
