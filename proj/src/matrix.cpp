#include "grassblow/matrix.hpp"

#include <algorithm>

#include "grassblow/error.hpp"

namespace grassblow {

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return {};
    ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols()) {
            throw ParameterError("from_rows: ragged row lengths");
        }
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

ExactMatrix ExactMatrix::from_ints(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rat>> conv(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        conv[i].assign(rows[i].begin(), rows[i].end());
    }
    return from_rows(conv);
}

Rat determinant(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw ParameterError("determinant: matrix not square");
    const int n = m.rows();
    ExactMatrix a = m;
    Rat det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r) {
            if (a.at(r, c) != 0) { piv = r; break; }
        }
        if (piv < 0) return Rat(0);
        if (piv != c) {
            for (int k = c; k < n; ++k) std::swap(a.at(c, k), a.at(piv, k));
            det = -det;
        }
        det *= a.at(c, c);
        const Rat inv = Rat(1) / a.at(c, c);
        for (int r = c + 1; r < n; ++r) {
            if (a.at(r, c) == 0) continue;
            const Rat f = a.at(r, c) * inv;
            for (int k = c; k < n; ++k) a.at(r, k) -= f * a.at(c, k);
        }
    }
    return det;
}

int rank(const ExactMatrix& m) {
    ExactMatrix a = m;
    const int rows = a.rows(), cols = a.cols();
    int rk = 0;
    for (int c = 0; c < cols && rk < rows; ++c) {
        int piv = -1;
        for (int r = rk; r < rows; ++r) {
            if (a.at(r, c) != 0) { piv = r; break; }
        }
        if (piv < 0) continue;
        if (piv != rk) {
            for (int k = c; k < cols; ++k) std::swap(a.at(rk, k), a.at(piv, k));
        }
        const Rat inv = Rat(1) / a.at(rk, c);
        for (int r = rk + 1; r < rows; ++r) {
            if (a.at(r, c) == 0) continue;
            const Rat f = a.at(r, c) * inv;
            for (int k = c; k < cols; ++k) a.at(r, k) -= f * a.at(rk, k);
        }
        ++rk;
    }
    return rk;
}

ExactMatrix column_submatrix(const ExactMatrix& m, const IndexTuple& index) {
    ExactMatrix out(m.rows(), index.size());
    for (int j = 0; j < index.size(); ++j) {
        const int col = index.entries[j];
        if (col < 1 || col > m.cols()) throw ParameterError("column index out of range");
        for (int i = 0; i < m.rows(); ++i) out.at(i, j) = m.at(i, col - 1);
    }
    return out;
}

Rat plucker_minor(const ExactMatrix& m, const IndexTuple& index, SignConvention convention) {
    if (index.size() != m.rows()) {
        throw ParameterError("plucker_minor: index length must equal the row count");
    }
    IndexTuple cols = index;
    if (convention == SignConvention::Ascending) {
        std::reverse(cols.entries.begin(), cols.entries.end());
    }
    return determinant(column_submatrix(m, cols));
}

std::vector<Rat> plucker_vector(const ExactMatrix& m, SignConvention convention) {
    std::vector<Rat> out;
    for (const auto& index : enumerate_plucker_indices(m.rows(), m.cols())) {
        out.push_back(plucker_minor(m, index, convention));
    }
    return out;
}

bool projectively_equal(const std::vector<Rat>& u, const std::vector<Rat>& v) {
    if (u.size() != v.size()) return false;
    std::size_t k = u.size();
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] != 0 || v[i] != 0) { k = i; break; }
    }
    if (k == u.size()) return true;  // both zero vectors
    if (u[k] == 0 || v[k] == 0) return false;
    for (std::size_t i = k + 1; i < u.size(); ++i) {
        if (u[i] * v[k] != v[i] * u[k]) return false;
    }
    return true;
}

}  // namespace grassblow
