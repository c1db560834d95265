#pragma once

#include <vector>

#include "grassblow/plucker.hpp"
#include "grassblow/rational.hpp"

namespace grassblow {

// Dense matrix of exact rationals.
class ExactMatrix {
  public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static ExactMatrix from_rows(const std::vector<std::vector<Rat>>& rows);
    static ExactMatrix from_ints(const std::vector<std::vector<long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return data_[i * cols_ + j]; }
    const Rat& at(int i, int j) const { return data_[i * cols_ + j]; }

    bool operator==(const ExactMatrix&) const = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> data_;
};

Rat determinant(const ExactMatrix& m);
int rank(const ExactMatrix& m);

// Columns of m restricted to the 1-based column set of the given tuple,
// taken in listed order.
ExactMatrix column_submatrix(const ExactMatrix& m, const IndexTuple& index);

// Determinant of the p x p submatrix on the columns of the index tuple,
// in the order prescribed by the sign convention.
Rat plucker_minor(const ExactMatrix& m, const IndexTuple& index,
                  SignConvention convention = SignConvention::ListedOrder);

// All Plucker coordinates in enumerate_plucker_indices order.
std::vector<Rat> plucker_vector(const ExactMatrix& m,
                                SignConvention convention = SignConvention::ListedOrder);

// Cross-ratio projective equality: u ~ v iff u_i v_k = v_i u_k against the
// first nonzero pivot; no coordinate normalization, no divisions.
bool projectively_equal(const std::vector<Rat>& u, const std::vector<Rat>& v);

}  // namespace grassblow
