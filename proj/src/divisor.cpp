#include "grassblow/divisor.hpp"

#include "grassblow/error.hpp"

namespace grassblow {

AmbientClass::AmbientClass(const Parameters& p) : params(p) {
    const int r = level(p);
    d_minus.assign(r, Rat(0));
    d_plus.assign(r, Rat(0));
}

Rat& AmbientClass::d(Side side, int i) {
    auto& v = (side == Side::Minus) ? d_minus : d_plus;
    if (i < 1 || i > static_cast<int>(v.size())) throw ParameterError("ambient D index out of range");
    return v[i - 1];
}

const Rat& AmbientClass::d(Side side, int i) const {
    const auto& v = (side == Side::Minus) ? d_minus : d_plus;
    if (i < 1 || i > static_cast<int>(v.size())) throw ParameterError("ambient D index out of range");
    return v[i - 1];
}

bool AmbientClass::is_zero() const {
    if (h != 0) return false;
    for (const auto& c : d_minus)
        if (c != 0) return false;
    for (const auto& c : d_plus)
        if (c != 0) return false;
    return true;
}

namespace {
void require_same(const AmbientClass& a, const AmbientClass& b) {
    if (!(a.params == b.params)) throw ParameterError("ambient classes over different parameters");
}
}  // namespace

AmbientClass operator+(const AmbientClass& a, const AmbientClass& b) {
    require_same(a, b);
    AmbientClass out = a;
    out.h += b.h;
    for (std::size_t i = 0; i < out.d_minus.size(); ++i) out.d_minus[i] += b.d_minus[i];
    for (std::size_t i = 0; i < out.d_plus.size(); ++i) out.d_plus[i] += b.d_plus[i];
    return out;
}

AmbientClass operator-(const AmbientClass& a, const AmbientClass& b) {
    require_same(a, b);
    AmbientClass out = a;
    out.h -= b.h;
    for (std::size_t i = 0; i < out.d_minus.size(); ++i) out.d_minus[i] -= b.d_minus[i];
    for (std::size_t i = 0; i < out.d_plus.size(); ++i) out.d_plus[i] -= b.d_plus[i];
    return out;
}

AmbientClass operator*(const Rat& c, const AmbientClass& a) {
    AmbientClass out = a;
    out.h *= c;
    for (auto& v : out.d_minus) v *= c;
    for (auto& v : out.d_plus) v *= c;
    return out;
}

AmbientClass hyperplane_class(const Parameters& params) {
    AmbientClass out(params);
    out.h = 1;
    return out;
}

AmbientClass boundary_symbol(const Parameters& params, Side side, int i) {
    AmbientClass out(params);
    out.d(side, i) = 1;
    return out;
}

bool coincides_with_b(const Parameters& params, Side side, int i) {
    const int r = level(params);
    if (i != r) return false;
    if (side == Side::Minus) return params.p == params.n - params.s;
    return params.p == params.s;
}

BClass class_of_b(const Parameters& params, int j) {
    if (!is_normalized(params)) {
        throw NormalizationRequiredError("class_of_b: requires normalized parameters");
    }
    const int r = level(params);
    if (j < 0 || j > r) throw ParameterError("class_of_b: require 0 <= j <= r");

    BClass out;
    if (params.p == params.s && j == 0) {
        // B_0 coincides with D+_r; the top coefficient is dropped.
        AmbientClass cls = hyperplane_class(params);
        for (int i = 1; i <= r - 1; ++i) cls.d(Side::Plus, i) -= r + 1 - i;
        out.cls = cls;
        out.coincides_with_boundary = true;
        out.boundary_side = Side::Plus;
        return out;
    }
    if (params.p == params.n - params.s && j == r) {
        // B_r coincides with D-_r.
        AmbientClass cls = hyperplane_class(params);
        for (int i = 1; i <= r - 1; ++i) cls.d(Side::Minus, i) -= r + 1 - i;
        out.cls = cls;
        out.coincides_with_boundary = true;
        out.boundary_side = Side::Minus;
        return out;
    }
    AmbientClass cls = hyperplane_class(params);
    for (int i = 1; i <= r - j; ++i) cls.d(Side::Plus, i) -= r - j + 1 - i;
    for (int i = 1; i <= j; ++i) cls.d(Side::Minus, i) -= j + 1 - i;
    out.cls = cls;
    return out;
}

AmbientClass class_of_boundary_divisor(const Parameters& params, Side side, int i) {
    const int r = level(params);
    if (i < 1 || i > r) throw ParameterError("class_of_boundary_divisor: index out of range");
    if (coincides_with_b(params, side, i)) {
        return class_of_b(params, side == Side::Minus ? r : 0).cls;
    }
    return boundary_symbol(params, side, i);
}

AmbientClass canonical_class(const Parameters& params) {
    if (!is_normalized(params)) {
        throw NormalizationRequiredError("canonical_class: requires normalized parameters");
    }
    const Regime reg = regime_of(params);
    const int r = level(params);
    const int s = params.s, p = params.p, n = params.n;
    auto B = [&](int j) { return class_of_b(params, j).cls; };

    AmbientClass minus_k(params);
    switch (reg) {
        case Regime::R1:
            minus_k = Rat(s - p + 1) * B(0);
            for (int j = 1; j <= p - 1; ++j) minus_k = minus_k + Rat(2) * B(j);
            minus_k = minus_k + Rat(n - s - p + 1) * B(p);
            break;
        case Regime::R2:
            minus_k = Rat(s - p + 1) * B(0);
            for (int j = 1; j <= p - 1; ++j) minus_k = minus_k + Rat(2) * B(j);
            break;
        case Regime::R3:
            minus_k = Rat(s - p + 1) * B(0);
            for (int j = 1; j <= r - 1; ++j) minus_k = minus_k + Rat(2) * B(j);
            minus_k = minus_k + Rat(p - r + 1) * B(r);
            break;
        case Regime::R4:
            minus_k = AmbientClass(params);
            for (int j = 1; j <= p - 1; ++j) minus_k = minus_k + Rat(2) * B(j);
            break;
    }
    for (int i = 1; i <= r; ++i) {
        minus_k = minus_k + class_of_boundary_divisor(params, Side::Minus, i) +
                  class_of_boundary_divisor(params, Side::Plus, i);
    }
    return Rat(-1) * minus_k;
}

AmbientClass anticanonical_class(const Parameters& params) {
    return Rat(-1) * canonical_class(params);
}

std::vector<OrbitPair> enumerate_orbit_pairs(int r) {
    if (r < 1) throw ParameterError("enumerate_orbit_pairs: require r >= 1");
    std::vector<OrbitPair> out;
    const unsigned limit = 1u << r;
    auto min_of = [&](unsigned mask) {
        for (int i = 0; i < r; ++i)
            if (mask >> i & 1) return i + 1;
        return r + 2;  // stands in for +infinity; r+2 always satisfies the rule
    };
    auto to_set = [&](unsigned mask) {
        std::vector<int> v;
        for (int i = 0; i < r; ++i)
            if (mask >> i & 1) v.push_back(i + 1);
        return v;
    };
    for (unsigned lo = 0; lo < limit; ++lo) {
        for (unsigned hi = 0; hi < limit; ++hi) {
            if (min_of(lo) + min_of(hi) >= r + 2) out.emplace_back(to_set(lo), to_set(hi));
        }
    }
    return out;
}

}  // namespace grassblow
