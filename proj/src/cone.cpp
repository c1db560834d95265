#include "grassblow/cone.hpp"

#include <algorithm>

#include "grassblow/error.hpp"

namespace grassblow {

std::string status_name(CertificateStatus status) {
    switch (status) {
        case CertificateStatus::Interior: return "Interior";
        case CertificateStatus::Boundary: return "Boundary";
        case CertificateStatus::Infeasible: return "Infeasible";
    }
    return "?";
}

GeneratorSet generator_set(const Parameters& params, Side side, int j) {
    if (!is_normalized(params)) {
        throw NormalizationRequiredError("generator_set: requires normalized parameters");
    }
    const int r = level(params);
    if (r < 3) {
        throw UnsupportedCaseError("generator_set: the standing assumption is r >= 3, got r=" +
                                   std::to_string(r));
    }
    if (j < 1 || j > r) throw ParameterError("generator_set: require 1 <= j <= r");
    const Regime reg = regime_of(params);

    GeneratorSet out{params, side, j, {}};
    const std::string self = (side == Side::Minus) ? "-" : "+";
    const std::string opp = (side == Side::Minus) ? "+" : "-";
    for (int i = 1; i <= r; ++i) {
        if (i == j) continue;  // the self symbol is the normal class, not a generator
        out.generators.emplace_back("D[" + self + std::to_string(i) + "]",
                                    restricted_boundary_divisor(params, side, j, side, i));
    }
    for (int i = r + 2 - j; i <= r; ++i) {
        out.generators.emplace_back("D[" + opp + std::to_string(i) + "]",
                                    restricted_boundary_divisor(params, side, j, opposite(side), i));
    }
    int m_lo = 0, m_hi = r;
    if (reg == Regime::R2) m_hi = r - 1;
    if (reg == Regime::R4) { m_lo = 1; m_hi = r - 1; }
    for (int m = m_lo; m <= m_hi; ++m) {
        out.generators.emplace_back("B[" + std::to_string(m) + "]", check_b(params, side, j, m));
    }
    return out;
}

namespace {

// Flattens a restricted class to the coordinate list used by the LP
// (optionally without the hyperplane row).
std::vector<Rat> flatten(const RestrictedClass& v, bool drop_h) {
    std::vector<Rat> out;
    if (!drop_h) out.push_back(v.h);
    out.insert(out.end(), v.d_same.begin(), v.d_same.end());
    out.insert(out.end(), v.d_opp.begin(), v.d_opp.end());
    return out;
}

int matrix_rank(std::vector<std::vector<Rat>> a) {
    if (a.empty()) return 0;
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    int rk = 0;
    for (int c = 0; c < cols && rk < rows; ++c) {
        int piv = -1;
        for (int r = rk; r < rows; ++r)
            if (a[r][c] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[rk], a[piv]);
        const Rat inv = Rat(1) / a[rk][c];
        for (int r = rk + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            const Rat f = a[r][c] * inv;
            for (int k = c; k < cols; ++k) a[r][k] -= f * a[rk][k];
        }
        ++rk;
    }
    return rk;
}

// Dense two-phase simplex with Bland's rule over exact rationals.
// Maximizes c.x subject to A x = b, x >= 0. Returns false if infeasible.
struct Simplex {
    std::vector<std::vector<Rat>> tab;  // m rows x (n + 1) columns, last = rhs
    std::vector<int> basis;
    int nvars = 0;

    bool solve(std::vector<std::vector<Rat>> a, std::vector<Rat> b, const std::vector<Rat>& cost,
               Rat& objective, std::vector<Rat>& solution) {
        const int m = static_cast<int>(a.size());
        nvars = m ? static_cast<int>(a[0].size()) : 0;
        for (int i = 0; i < m; ++i) {
            if (b[i] < 0) {
                for (auto& v : a[i]) v = -v;
                b[i] = -b[i];
            }
        }
        tab.assign(m, {});
        basis.resize(m);
        for (int i = 0; i < m; ++i) {
            tab[i] = a[i];
            for (int k = 0; k < m; ++k) tab[i].push_back(i == k ? Rat(1) : Rat(0));
            tab[i].push_back(b[i]);
            basis[i] = nvars + i;
        }
        std::vector<Rat> phase1(nvars + m, Rat(0));
        for (int k = nvars; k < nvars + m; ++k) phase1[k] = Rat(-1);
        run(phase1);
        for (int i = 0; i < m; ++i) {
            if (basis[i] >= nvars && tab[i].back() != 0) return false;
        }
        // Drive zero-level artificials out of the basis where possible.
        for (int i = 0; i < m; ++i) {
            if (basis[i] < nvars) continue;
            int col = -1;
            for (int k = 0; k < nvars; ++k)
                if (tab[i][k] != 0) { col = k; break; }
            if (col >= 0) pivot(i, col);
        }
        // Rebuild without artificial columns (rows still holding one are redundant).
        std::vector<std::vector<Rat>> keep;
        std::vector<int> kb;
        for (int i = 0; i < m; ++i) {
            if (basis[i] >= nvars) continue;
            std::vector<Rat> row(tab[i].begin(), tab[i].begin() + nvars);
            row.push_back(tab[i].back());
            keep.push_back(std::move(row));
            kb.push_back(basis[i]);
        }
        tab = std::move(keep);
        basis = std::move(kb);
        std::vector<Rat> phase2(cost);
        phase2.resize(nvars, Rat(0));
        run(phase2);
        solution.assign(nvars, Rat(0));
        objective = 0;
        for (std::size_t i = 0; i < basis.size(); ++i) solution[basis[i]] = tab[i].back();
        for (int k = 0; k < nvars; ++k) objective += phase2[k] * solution[k];
        return true;
    }

  private:
    void pivot(int row, int col) {
        const Rat inv = Rat(1) / tab[row][col];
        for (auto& v : tab[row]) v *= inv;
        for (std::size_t i = 0; i < tab.size(); ++i) {
            if (static_cast<int>(i) == row || tab[i][col] == 0) continue;
            const Rat f = tab[i][col];
            for (std::size_t k = 0; k < tab[i].size(); ++k) tab[i][k] -= f * tab[row][k];
        }
        basis[row] = col;
    }

    void run(const std::vector<Rat>& cost) {
        const int width = tab.empty() ? 0 : static_cast<int>(tab[0].size()) - 1;
        while (true) {
            int enter = -1;
            for (int k = 0; k < width; ++k) {  // Bland: first improving column
                Rat red = (k < static_cast<int>(cost.size())) ? cost[k] : Rat(0);
                for (std::size_t i = 0; i < tab.size(); ++i) {
                    const int bi = basis[i];
                    const Rat cb = (bi < static_cast<int>(cost.size())) ? cost[bi] : Rat(0);
                    if (cb != 0) red -= cb * tab[i][k];
                }
                if (red > 0) { enter = k; break; }
            }
            if (enter < 0) return;
            int leave = -1;
            Rat best;
            for (std::size_t i = 0; i < tab.size(); ++i) {
                if (tab[i][enter] <= 0) continue;
                const Rat ratio = tab[i].back() / tab[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {  // Bland tie-break
                    leave = static_cast<int>(i);
                    best = ratio;
                }
            }
            if (leave < 0) return;  // unbounded; the caller caps the objective
            pivot(leave, enter);
        }
    }
};

constexpr long kSlackCap = 1000000;

}  // namespace

InteriorCertificate certify_interior(const RestrictedClass& target, const GeneratorSet& gens) {
    for (const auto& [label, g] : gens.generators) {
        if (!g.compatible(target)) {
            throw ParameterError("certify_interior: generator " + label +
                                 " and target live over different symbol bases");
        }
    }
    const bool drop_h = hyperplane_collapses(gens.params, gens.side, gens.j);
    const int g_count = static_cast<int>(gens.generators.size());

    std::vector<std::vector<Rat>> cols;
    cols.reserve(g_count);
    for (const auto& [label, g] : gens.generators) cols.push_back(flatten(g, drop_h));
    const std::vector<Rat> tgt = flatten(target, drop_h);
    const int dim = static_cast<int>(tgt.size());

    InteriorCertificate cert;
    cert.modulo_hyperplane = drop_h;
    cert.generator_rank = matrix_rank(cols);

    // Variables: mu_g >= 0 (lambda_g = mu_g + t), t = tp - tm, cap slack.
    // Rows: sum_g mu_g g + (tp - tm) sum_g g = target ; tp - tm + cap_slack = cap.
    std::vector<Rat> gsum(dim, Rat(0));
    for (const auto& col : cols)
        for (int i = 0; i < dim; ++i) gsum[i] += col[i];
    const int nvars = g_count + 3;
    std::vector<std::vector<Rat>> a(dim + 1, std::vector<Rat>(nvars, Rat(0)));
    std::vector<Rat> b(dim + 1, Rat(0));
    for (int i = 0; i < dim; ++i) {
        for (int g = 0; g < g_count; ++g) a[i][g] = cols[g][i];
        a[i][g_count] = gsum[i];
        a[i][g_count + 1] = -gsum[i];
        b[i] = tgt[i];
    }
    a[dim][g_count] = 1;
    a[dim][g_count + 1] = -1;
    a[dim][g_count + 2] = 1;
    b[dim] = kSlackCap;

    std::vector<Rat> cost(nvars, Rat(0));
    cost[g_count] = 1;
    cost[g_count + 1] = -1;

    Simplex lp;
    Rat t;
    std::vector<Rat> x;
    if (!lp.solve(std::move(a), std::move(b), cost, t, x)) {
        cert.status = CertificateStatus::Infeasible;
        cert.slack = 0;
        return cert;
    }
    cert.coefficients.resize(g_count);
    for (int g = 0; g < g_count; ++g) cert.coefficients[g] = x[g] + t;
    cert.slack = t;
    cert.status = (t > 0)   ? CertificateStatus::Interior
                  : (t == 0) ? CertificateStatus::Boundary
                             : CertificateStatus::Infeasible;
    return cert;
}

bool verify_certificate(const InteriorCertificate& cert, const RestrictedClass& target,
                        const GeneratorSet& gens) {
    if (cert.status == CertificateStatus::Infeasible) return false;
    if (cert.coefficients.size() != gens.generators.size()) return false;
    RestrictedClass total(target.params, target.side, target.j);
    Rat min_coeff;
    bool first = true;
    for (std::size_t g = 0; g < gens.generators.size(); ++g) {
        total = total + cert.coefficients[g] * gens.generators[g].second;
        if (first || cert.coefficients[g] < min_coeff) min_coeff = cert.coefficients[g];
        first = false;
    }
    RestrictedClass diff = total - target;
    if (cert.modulo_hyperplane) diff.h = 0;
    if (!diff.is_zero()) return false;
    if (cert.slack != min_coeff) return false;
    if (cert.status == CertificateStatus::Interior && !(cert.slack > 0)) return false;
    if (cert.status == CertificateStatus::Boundary && cert.slack != 0) return false;
    return true;
}

DeltaCertificate delta_certificate(const Parameters& params, Side side, int j) {
    const Regime reg = regime_of(params);
    if (reg != Regime::R1 && reg != Regime::R3) {
        throw UnsupportedCaseError(
            "delta_certificate: the explicit construction is displayed for the regimes with "
            "p < n-s or n-s < p < s only (" + regime_name(reg) + " given)");
    }
    const int r = level(params);
    const GeneratorSet gens = generator_set(params, side, j);
    const int g_count = static_cast<int>(gens.generators.size());
    auto gidx = [&](const std::string& label) {
        for (int g = 0; g < g_count; ++g)
            if (gens.generators[g].first == label) return g;
        throw ParameterError("delta_certificate: missing generator " + label);
    };
    const std::string self = (side == Side::Minus) ? "-" : "+";
    const std::string opp = (side == Side::Minus) ? "+" : "-";
    auto ds = [&](int i) { return gidx("D[" + self + std::to_string(i) + "]"); };
    auto dop = [&](int i) { return gidx("D[" + opp + std::to_string(i) + "]"); };
    auto bb = [&](int m) { return gidx("B[" + std::to_string(m) + "]"); };

    // Base coefficients: the lemma form as a formal generator combination.
    std::vector<Rat> base(g_count, Rat(0));
    base[bb(0)] += params.s - params.p + 1;
    for (int m = 1; m <= r - 1; ++m) base[bb(m)] += 2;
    base[bb(r)] += (reg == Regime::R1) ? (params.n - params.s - params.p + 1)
                                       : (params.p - r + 1);
    if (side == Side::Minus) {
        base[bb(j)] += 1;
        if (j <= r - 1) base[bb(j + 1)] -= 1;
    } else {
        base[bb(r - j)] += 1;
        if (j <= r - 1) base[bb(r - j - 1)] -= 1;
    }
    for (int i = j + 2; i <= r; ++i) base[ds(i)] += 1;
    for (int i = r + 2 - j; i <= r; ++i) base[dop(i)] += 1;

    // Rearranged zero identities, as generator-coefficient increments.
    std::vector<Rat> move1(g_count, Rat(0)), move2(g_count, Rat(0));
    const bool has1 = (j >= 2), has2 = (j <= r - 1);
    if (has1) {
        for (int i = 1; i <= j - 1; ++i) move1[ds(i)] += 1;
        if (side == Side::Minus) {
            move1[bb(j - 2)] -= 1;
            move1[bb(j - 1)] += 1;
        } else {
            move1[bb(r + 2 - j)] -= 1;
            move1[bb(r + 1 - j)] += 1;
        }
        move1[dop(r + 2 - j)] -= 1;
    }
    if (has2) {
        move2[ds(j + 1)] += 1;
        if (side == Side::Minus) {
            move2[bb(j - 1)] += 1;
            move2[bb(j)] -= 2;
            move2[bb(j + 1)] += 1;
        } else {
            move2[bb(r + 1 - j)] += 1;
            move2[bb(r - j)] -= 2;
            move2[bb(r - 1 - j)] += 1;
        }
    }

    DeltaCertificate out;
    out.target = restricted_anticanonical(params, side, j).lemma_form;
    Rat delta(1, 2);
    for (int depth = 0; depth < 20; ++depth) {
        std::vector<Rat> coeff = base;
        const Rat d1 = has1 ? delta : Rat(0);
        const Rat d2 = has2 ? delta : Rat(0);
        for (int g = 0; g < g_count; ++g) coeff[g] += d1 * move1[g] + d2 * move2[g];
        Rat slack = coeff[0];
        for (const auto& cval : coeff) slack = std::min(slack, cval);
        if (slack > 0) {
            out.certificate.status = CertificateStatus::Interior;
            out.certificate.coefficients = std::move(coeff);
            out.certificate.slack = slack;
            out.certificate.modulo_hyperplane = false;
            std::vector<std::vector<Rat>> cols;
            for (const auto& [label, g] : gens.generators) cols.push_back(flatten(g, false));
            out.certificate.generator_rank = matrix_rank(cols);
            out.delta1 = d1;
            out.delta2 = d2;
            return out;
        }
        delta /= 2;
    }
    throw ConstructionFailureError("delta_certificate: scan exhausted at depth 20 for " +
                                   side_name(side) + " j=" + std::to_string(j));
}

}  // namespace grassblow
