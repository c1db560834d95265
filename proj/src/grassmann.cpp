#include "grassblow/grassmann.hpp"

#include <algorithm>

#include "grassblow/error.hpp"

namespace grassblow {

MultiProjectivePoint canonical_map_image(const ExactMatrix& m, int s, SignConvention convention) {
    const int p = m.rows();
    const int n = m.cols();
    if (s < 1 || s >= n) throw ParameterError("canonical_map_image: require 0 < s < n");
    if (rank(m) != p) throw RankError("canonical_map_image: matrix is not of full rank p");

    const auto indices = enumerate_plucker_indices(p, n);
    std::vector<Rat> full;
    full.reserve(indices.size());
    for (const auto& index : indices) full.push_back(plucker_minor(m, index, convention));

    MultiProjectivePoint out;
    out.factors.push_back({-1, FactorStatus::Regular, full});
    for (int k = 0; k <= p; ++k) {
        MultiProjectiveFactor f;
        f.block = k;
        bool all_zero = true;
        for (std::size_t i = 0; i < indices.size(); ++i) {
            if (block_of_index(indices[i], s) != k) continue;
            f.coords.push_back(full[i]);
            if (full[i] != 0) all_zero = false;
        }
        if (f.coords.size() <= 1) {
            f.status = FactorStatus::TrivialFactor;
        } else if (all_zero) {
            f.status = FactorStatus::Undefined;
        }
        out.factors.push_back(std::move(f));
    }
    return out;
}

StratumInfo stratum_classify(const ExactMatrix& m, int s) {
    const int p = m.rows();
    const int n = m.cols();
    if (s < 1 || s >= n) throw ParameterError("stratum_classify: require 0 < s < n");
    if (rank(m) != p) throw RankError("stratum_classify: matrix is not of full rank p");

    ExactMatrix high(p, n - s);
    for (int i = 0; i < p; ++i)
        for (int j = s; j < n; ++j) high.at(i, j - s) = m.at(i, j);
    ExactMatrix low(p, s);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < s; ++j) low.at(i, j) = m.at(i, j);

    StratumInfo info;
    info.dim_low = p - rank(high);   // row combos vanishing on the last n-s columns
    info.dim_high = p - rank(low);   // row combos vanishing on the first s columns
    info.v_minus_level = p - info.dim_low;
    info.v_plus_level = info.dim_high;
    info.in_closed_stratum = (info.dim_low + info.dim_high == p);
    const int generic_low = std::max(0, p - (n - s));
    const int generic_high = std::max(0, p - s);
    info.open_stratum = (info.dim_low == generic_low && info.dim_high == generic_high);
    return info;
}

ExactMatrix generic_point(const Parameters& params) {
    if (!is_normalized(params)) {
        throw NormalizationRequiredError("generic_point: requires 2p <= n <= 2s");
    }
    const int s = params.s, p = params.p, n = params.n;
    const int r = level(params);
    ExactMatrix m(p, n);
    if (r == p) {
        // ( 0_{p x (s-p)} | I_p | I_p | 0 )
        for (int i = 0; i < p; ++i) {
            m.at(i, s - p + i) = 1;
            m.at(i, s + i) = 1;
        }
    } else {
        // r = n-s < p: top r rows carry I_r twice, bottom p-r rows carry I_{p-r}.
        for (int i = 0; i < r; ++i) {
            m.at(i, s - p + i) = 1;
            m.at(i, s + i) = 1;
        }
        for (int i = 0; i < p - r; ++i) {
            m.at(r + i, s - p + r + i) = 1;
        }
    }
    return m;
}

ExactMatrix torus_scale(const ExactMatrix& m, int s, const Rat& lambda) {
    if (lambda == 0) throw ParameterError("torus_scale: lambda must be nonzero");
    if (s < 1 || s >= m.cols()) throw ParameterError("torus_scale: require 0 < s < n");
    ExactMatrix out = m;
    for (int i = 0; i < out.rows(); ++i)
        for (int j = s; j < out.cols(); ++j) out.at(i, j) *= lambda;
    return out;
}

}  // namespace grassblow
