#pragma once

#include <string>
#include <vector>

namespace grassblow {

// The triple (s, p, n): splitting parameter, plane dimension, ambient dimension.
struct Parameters {
    int s = 0;
    int p = 0;
    int n = 0;

    bool operator==(const Parameters&) const = default;
};

// Throws ParameterError unless 0 < p < n and 0 < s < n.
void validate(const Parameters& params);

// r = min{s, n-s, p, n-p}; recomputed on demand, never stored.
int level(const Parameters& params);

// Normalized parameters satisfy 2p <= n <= 2s.
bool is_normalized(const Parameters& params);

// The four-way case split by the order relations among p, n-s, s,
// defined for normalized parameters only.
enum class Regime { R1, R2, R3, R4 };

std::string regime_name(Regime regime);

// Throws NormalizationRequiredError on non-normalized input.
Regime regime_of(const Parameters& params);

struct NormalizationResult {
    Parameters params;
    std::vector<std::string> transform_log;  // "DUAL" and/or "USD"
};

// Applies DUAL (p -> n-p) and/or USD (s -> n-s) until 2p <= n <= 2s.
// Idempotent on normalized input; n is preserved.
NormalizationResult normalize_parameters(const Parameters& params);

}  // namespace grassblow
