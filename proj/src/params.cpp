#include "grassblow/params.hpp"

#include <algorithm>

#include "grassblow/error.hpp"

namespace grassblow {

void validate(const Parameters& params) {
    if (!(0 < params.p && params.p < params.n && 0 < params.s && params.s < params.n)) {
        throw ParameterError("parameters out of range: require 0 < p < n and 0 < s < n, got s=" +
                             std::to_string(params.s) + " p=" + std::to_string(params.p) +
                             " n=" + std::to_string(params.n));
    }
}

int level(const Parameters& params) {
    validate(params);
    return std::min({params.s, params.n - params.s, params.p, params.n - params.p});
}

bool is_normalized(const Parameters& params) {
    validate(params);
    return 2 * params.p <= params.n && params.n <= 2 * params.s;
}

std::string regime_name(Regime regime) {
    switch (regime) {
        case Regime::R1: return "R1";
        case Regime::R2: return "R2";
        case Regime::R3: return "R3";
        case Regime::R4: return "R4";
    }
    return "?";
}

Regime regime_of(const Parameters& params) {
    if (!is_normalized(params)) {
        throw NormalizationRequiredError("regime is defined for normalized parameters only");
    }
    const int ns = params.n - params.s;
    if (params.p < ns) return Regime::R1;
    if (params.p == ns) return ns < params.s ? Regime::R2 : Regime::R4;
    return Regime::R3;
}

NormalizationResult normalize_parameters(const Parameters& params) {
    validate(params);
    NormalizationResult result{params, {}};
    if (2 * result.params.p > result.params.n) {
        result.params.p = result.params.n - result.params.p;
        result.transform_log.emplace_back("DUAL");
    }
    if (result.params.n > 2 * result.params.s) {
        result.params.s = result.params.n - result.params.s;
        result.transform_log.emplace_back("USD");
    }
    return result;
}

}  // namespace grassblow
