#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grassblow/restriction.hpp"

namespace grassblow {

// Ordered effective-cone generator list on D(side)_j per the regime:
// same-sign divisor restrictions (i != j), in-range opposite restrictions,
// and the B-restrictions with regime-trimmed index range.
struct GeneratorSet {
    Parameters params;
    Side side = Side::Minus;
    int j = 1;
    std::vector<std::pair<std::string, RestrictedClass>> generators;
};

// Requires normalized parameters with r >= 3; throws UnsupportedCaseError.
GeneratorSet generator_set(const Parameters& params, Side side, int j);

enum class CertificateStatus { Interior, Boundary, Infeasible };

std::string status_name(CertificateStatus status);

struct InteriorCertificate {
    CertificateStatus status = CertificateStatus::Infeasible;
    std::vector<Rat> coefficients;  // one per generator, in GeneratorSet order
    Rat slack;                      // maximized minimum coefficient
    bool modulo_hyperplane = false; // LP solved modulo H| (collapsed divisor)
    int generator_rank = 0;         // rank of the generator matrix
};

// Exact rational LP: maximize t subject to sum lambda_g * g = target,
// lambda_g >= t (Bland's rule simplex; no tolerances anywhere).
// On collapsed divisors the equality is taken modulo the hyperplane symbol.
InteriorCertificate certify_interior(const RestrictedClass& target, const GeneratorSet& gens);

// Re-substitution check: sum coefficients * generators == target exactly
// (modulo H| when the certificate says so) and slack == min coefficient.
bool verify_certificate(const InteriorCertificate& cert, const RestrictedClass& target,
                        const GeneratorSet& gens);

struct DeltaCertificate {
    InteriorCertificate certificate;
    Rat delta1;
    Rat delta2;
    RestrictedClass target;  // the lemma-form vector the coefficients reproduce
};

// The explicit construction: the lemma form of the restricted anticanonical
// class plus delta-multiples of the rearranged zero identities, with
// delta_1, delta_2 scanned over 1/2, 1/4, ... until every generator
// coefficient is strictly positive. Regimes R1 and R3 only.
// Throws ConstructionFailureError after 20 halvings.
DeltaCertificate delta_certificate(const Parameters& params, Side side, int j);

}  // namespace grassblow
