#include "grassblow/restriction.hpp"

#include <algorithm>

#include "grassblow/error.hpp"

namespace grassblow {

RestrictedClass::RestrictedClass(const Parameters& p, Side sd, int jj) : params(p), side(sd), j(jj) {
    const int r = level(p);
    if (jj < 1 || jj > r) throw ParameterError("restricted class: require 1 <= j <= r");
    h = 0;
    d_same.assign(r, Rat(0));
    d_opp.assign(r, Rat(0));
}

bool RestrictedClass::is_zero() const {
    if (h != 0) return false;
    for (const auto& c : d_same)
        if (c != 0) return false;
    for (const auto& c : d_opp)
        if (c != 0) return false;
    return true;
}

bool RestrictedClass::compatible(const RestrictedClass& other) const {
    return params == other.params && side == other.side && j == other.j;
}

RestrictedClass operator+(const RestrictedClass& a, const RestrictedClass& b) {
    if (!a.compatible(b)) throw ParameterError("restricted classes over different components");
    RestrictedClass out = a;
    out.h += b.h;
    for (std::size_t i = 0; i < out.d_same.size(); ++i) out.d_same[i] += b.d_same[i];
    for (std::size_t i = 0; i < out.d_opp.size(); ++i) out.d_opp[i] += b.d_opp[i];
    return out;
}

RestrictedClass operator-(const RestrictedClass& a, const RestrictedClass& b) {
    return a + Rat(-1) * b;
}

RestrictedClass operator*(const Rat& c, const RestrictedClass& a) {
    RestrictedClass out = a;
    out.h *= c;
    for (auto& v : out.d_same) v *= c;
    for (auto& v : out.d_opp) v *= c;
    return out;
}

std::string describe(const RestrictedClass& v) {
    const std::string self = (v.side == Side::Minus) ? "-" : "+";
    const std::string opp = (v.side == Side::Minus) ? "+" : "-";
    std::string out;
    auto term = [&](const Rat& c, const std::string& sym) {
        if (c == 0) return;
        if (!out.empty()) out += " ";
        out += (c > 0 ? "+" : "") + rat_str(c) + "*" + sym;
    };
    term(v.h, "H|");
    for (std::size_t i = 0; i < v.d_same.size(); ++i)
        term(v.d_same[i], "D[" + self + std::to_string(i + 1) + "]");
    for (std::size_t i = 0; i < v.d_opp.size(); ++i)
        term(v.d_opp[i], "D[" + opp + std::to_string(i + 1) + "]");
    return out.empty() ? "0" : out;
}

RestrictedClass restrict_class(const AmbientClass& cls, Side side, int j) {
    const int r = level(cls.params);
    RestrictedClass out(cls.params, side, j);
    out.h = cls.h;
    for (int i = 1; i <= r; ++i) {
        out.d_same[i - 1] = cls.d(side, i);
        if (i >= r + 2 - j) out.d_opp[i - 1] = cls.d(opposite(side), i);
    }
    return out;
}

RestrictedClass restricted_boundary_divisor(const Parameters& params, Side side, int j,
                                            Side symbol_side, int i) {
    const int r = level(params);
    if (i < 1 || i > r) throw ParameterError("restricted_boundary_divisor: index out of range");
    if (coincides_with_b(params, symbol_side, i)) {
        return restrict_class(class_of_boundary_divisor(params, symbol_side, i), side, j);
    }
    RestrictedClass out(params, side, j);
    if (symbol_side == side) {
        out.d_same[i - 1] = 1;
    } else if (i >= r + 2 - j) {
        out.d_opp[i - 1] = 1;
    }
    return out;
}

RestrictedClass check_b(const Parameters& params, Side side, int j, int m) {
    return restrict_class(class_of_b(params, m).cls, side, j);
}

bool hyperplane_collapses(const Parameters& params, Side side, int j) {
    if (j != 1) return false;
    const int ns = params.n - params.s;
    if (params.p == ns && ns == params.s) return true;
    if (params.p == ns && side == Side::Plus) return true;
    return false;
}

namespace {

struct Ctx {
    Parameters params;
    Side side;
    int j;
    int r;
    Regime reg;

    RestrictedClass zero() const { return RestrictedClass(params, side, j); }
    RestrictedClass B(int m) const { return check_b(params, side, j, m); }
    RestrictedClass DS(int i) const {
        return restricted_boundary_divisor(params, side, j, side, i);
    }
    RestrictedClass DO(int i) const {
        return restricted_boundary_divisor(params, side, j, opposite(side), i);
    }
    RestrictedClass sum_ds(int lo, int hi) const {
        RestrictedClass acc = zero();
        for (int i = lo; i <= hi; ++i) acc = acc + DS(i);
        return acc;
    }
    RestrictedClass sum_do(int lo, int hi) const {
        RestrictedClass acc = zero();
        for (int i = lo; i <= hi; ++i) acc = acc + DO(i);
        return acc;
    }
    // Pattern extension of the out-of-range symbols "B^{-r}_{r+1}", "B^{+r}_{-1}":
    // H| - sum_i (r+2-i) d_same[i]. Stated as trivial; kept for corrected readings.
    RestrictedClass extension() const {
        RestrictedClass v = zero();
        v.h = 1;
        for (int i = 1; i <= r; ++i) v.d_same[i - 1] = -(r + 2 - i);
        return v;
    }
};

RestrictedClass lemma_form_of(const Ctx& c) {
    const auto [params, side, j, r, reg] = c;
    const int s = params.s, p = params.p, n = params.n;
    RestrictedClass tail = c.sum_ds(j + 2, r) + c.sum_do(r + 2 - j, r);
    RestrictedClass two = c.zero();
    for (int m = 1; m <= r - 1; ++m) two = two + Rat(2) * c.B(m);

    if (reg == Regime::R1 || reg == Regime::R3) {
        const Rat cr = (reg == Regime::R1) ? Rat(n - s - p + 1) : Rat(p - r + 1);
        RestrictedClass main = Rat(s - p + 1) * c.B(0) + two + cr * c.B(r);
        if (side == Side::Minus) {
            RestrictedClass adj = c.B(j) - (j <= r - 1 ? c.B(j + 1) : c.zero());
            return main + adj + tail;
        }
        RestrictedClass adj = c.B(r - j) - (j <= r - 1 ? c.B(r - j - 1) : c.zero());
        return main + adj + tail;
    }
    if (reg == Regime::R2) {
        RestrictedClass main = Rat(s - p + 1) * c.B(0) + two;
        RestrictedClass adj = c.zero();
        if (side == Side::Minus) {
            adj = (j <= r - 2) ? c.B(j) - c.B(j + 1) : c.B(r - 1);
        } else {
            adj = (j <= r - 1) ? c.B(r - j) - c.B(r - 1 - j) : c.B(1) - c.B(0);
        }
        return main + adj + tail;
    }
    // R4
    RestrictedClass adj = c.zero();
    if (side == Side::Minus) {
        adj = (j <= r - 2) ? c.B(j) - c.B(j + 1) : c.B(r - 1);
    } else {
        adj = (j <= r - 2) ? c.B(r - j) - c.B(r - j - 1) : c.B(1);
    }
    return two + adj + tail;
}

}  // namespace

RestrictedAnticanonical restricted_anticanonical(const Parameters& params, Side side, int j) {
    if (!is_normalized(params)) {
        throw NormalizationRequiredError("restricted_anticanonical: requires normalized parameters");
    }
    const int r = level(params);
    if (j < 1 || j > r) {
        throw UnsupportedCaseError("restricted_anticanonical: stated cases have 1 <= j <= r; j=" +
                                   std::to_string(j) + " is outside them (nearest: j=" +
                                   std::to_string(std::clamp(j, 1, r)) + ")");
    }
    Ctx c{params, side, j, r, regime_of(params)};
    RestrictedAnticanonical out{restrict_class(anticanonical_class(params), side, j),
                                lemma_form_of(c)};
    return out;
}

std::vector<IdentityRecord> identity_suite(const Parameters& params, Side side, int j) {
    if (!is_normalized(params)) {
        throw NormalizationRequiredError("identity_suite: requires normalized parameters");
    }
    const int r = level(params);
    if (j < 1 || j > r) throw ParameterError("identity_suite: require 1 <= j <= r");
    const Regime reg = regime_of(params);
    Ctx c{params, side, j, r, reg};
    std::vector<IdentityRecord> out;

    auto push = [&](const std::string& id, const RestrictedClass& residual,
                    std::optional<RestrictedClass> corrected = std::nullopt,
                    const std::string& note = "") {
        IdentityRecord rec;
        rec.id = id;
        rec.side = side;
        rec.j = j;
        rec.residual = residual;
        rec.corrected_residual = std::move(corrected);
        rec.note = note;
        rec.status = residual.is_zero() ? IdentityStatus::Holds : IdentityStatus::Discrepancy;
        out.push_back(std::move(rec));
    };
    auto push_unstated = [&](const std::string& id, const std::string& note) {
        IdentityRecord rec;
        rec.id = id;
        rec.side = side;
        rec.j = j;
        rec.status = IdentityStatus::NotStated;
        rec.residual = c.zero();
        rec.note = note;
        out.push_back(std::move(rec));
    };

    // --- restricted anticanonical ---
    {
        const auto rk = restricted_anticanonical(params, side, j);
        RestrictedClass residual = rk.direct - rk.lemma_form;
        std::optional<RestrictedClass> corrected;
        std::string note;
        if ((reg == Regime::R1 || reg == Regime::R3) && j == r) {
            corrected = rk.direct - (rk.lemma_form - c.extension());
            note = "reading the out-of-range B-symbol as its pattern extension instead of zero";
        } else if (hyperplane_collapses(params, side, j)) {
            corrected = rk.direct - (rk.lemma_form + c.DO(r));
            note = "component blows down to a point; adding the omitted coinciding-divisor term";
        }
        push("anticanonical", residual, corrected, note);
    }

    // --- sum of the lower same-sign restrictions, stated for j >= 2 ---
    if (j >= 2) {
        RestrictedClass lhs = c.sum_ds(1, j - 1);
        if (side == Side::Minus) {
            RestrictedClass rhs = (reg == Regime::R4 && j == 2)
                                      ? Rat(-1) * c.B(j - 1) + c.DO(r + 2 - j)
                                      : c.B(j - 2) - c.B(j - 1) + c.DO(r + 2 - j);
            push("sum_lower", lhs - rhs);
        } else if (reg == Regime::R1 || reg == Regime::R3 || j >= 3) {
            RestrictedClass rhs = c.B(r + 2 - j) - c.B(r + 1 - j) + c.DO(r + 2 - j);
            push("sum_lower", lhs - rhs);
        } else if (reg == Regime::R2) {  // plus side, j == 2
            RestrictedClass rhs = Rat(-1) * c.B(r - 1) + c.DO(r);
            push("sum_lower", lhs - rhs);
        } else {  // R4 plus side, j == 2: printed line carries a wrong-side symbol
            RestrictedClass as_printed = Rat(-1) * c.B(r - 1) + c.DS(r);
            RestrictedClass corrected = Rat(-1) * c.B(r - 1) + c.DO(r);
            push("sum_lower", lhs - as_printed, lhs - corrected,
                 "printed subscript-sign reading vs opposite-sign pattern reading");
        }
    } else {
        push_unstated("sum_lower", "stated for 2 <= j <= r");
    }

    // --- the single-step identity ---
    {
        bool stated = true;
        RestrictedClass lhs = c.zero(), rhs = c.zero();
        if (reg == Regime::R1 || reg == Regime::R3) {
            if (j <= r - 1) {
                lhs = c.DS(j + 1);
                rhs = (side == Side::Minus)
                          ? Rat(-1) * c.B(j - 1) + Rat(2) * c.B(j) - c.B(j + 1)
                          : Rat(-1) * c.B(r + 1 - j) + Rat(2) * c.B(r - j) - c.B(r - 1 - j);
            } else {
                stated = false;
            }
        } else if (side == Side::Minus) {  // R2/R4 minus
            if (reg == Regime::R4 && j == 1) {
                lhs = c.DS(2);
                rhs = Rat(-1) * c.DO(r) + Rat(2) * c.B(1) - c.B(2);
            } else if (j <= r - 2) {
                lhs = c.DS(j + 1);
                rhs = Rat(-1) * c.B(j - 1) + Rat(2) * c.B(j) - c.B(j + 1);
            } else if (j == r - 1) {
                lhs = c.DS(r);
                rhs = Rat(-1) * c.B(j - 1) + Rat(2) * c.B(j);
            } else {
                stated = false;
            }
        } else {  // R2/R4 plus
            if (j == 1) {
                lhs = c.DS(2);
                rhs = (reg == Regime::R2)
                          ? Rat(-1) * c.DO(r) + Rat(2) * c.B(r - 1) - c.B(r - 2)
                          : Rat(-1) * c.B(r - 2) + Rat(2) * c.B(r - 1) - c.DO(r);
            } else if (reg == Regime::R2 && j <= r - 1) {
                lhs = c.DS(j + 1);
                rhs = Rat(-1) * c.B(r + 1 - j) + Rat(2) * c.B(r - j) - c.B(r - 1 - j);
            } else if (reg == Regime::R4 && j <= r - 2) {
                lhs = c.DS(j + 1);
                rhs = Rat(-1) * c.B(r - j - 1) + Rat(2) * c.B(r - j) - c.B(r - j + 1);
            } else if (reg == Regime::R4 && j == r - 1) {
                lhs = c.DS(r);
                rhs = Rat(2) * c.B(1) - c.B(2);
            } else {
                stated = false;
            }
        }
        if (stated) {
            push("step", lhs - rhs);
        } else {
            push_unstated("step", "stated for 1 <= j <= r-1");
        }
    }

    // --- the telescoping elimination identity ---
    {
        RestrictedClass lhs = c.sum_ds(1, std::min(j + 1, r));
        RestrictedClass rhs = c.zero();
        std::optional<RestrictedClass> corrected;
        std::string note;
        if (reg == Regime::R1 || reg == Regime::R3) {
            if (side == Side::Minus) {
                rhs = c.B(j) - (j <= r - 1 ? c.B(j + 1) : c.zero());
            } else {
                rhs = c.B(r - j) - (j <= r - 1 ? c.B(r - 1 - j) : c.zero());
            }
            if (j == r) {
                corrected = lhs - (((side == Side::Minus) ? c.B(r) : c.B(0)) - c.extension());
                note = "reading the out-of-range B-symbol as its pattern extension instead of zero";
            }
        } else if (side == Side::Minus) {
            rhs = (j <= r - 2) ? c.B(j) - c.B(j + 1) : c.B(r - 1);
        } else {
            rhs = (reg == Regime::R2)
                      ? ((j <= r - 1) ? c.B(r - j) - c.B(r - 1 - j) : c.B(1) - c.B(0))
                      : ((j <= r - 2) ? c.B(r - j) - c.B(r - 1 - j) : c.B(1));
        }
        push("telescope", lhs - rhs, corrected, note);
    }

    return out;
}

}  // namespace grassblow
