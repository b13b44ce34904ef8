#ifndef ALGCOH_MATRIX_HPP
#define ALGCOH_MATRIX_HPP

#include <optional>
#include <vector>

#include "algcoh/field.hpp"

namespace algcoh {

/// Dense exact matrix over a FieldSpec, row-major. Dimensions may be zero.
class MatrixExact {
public:
    MatrixExact(FieldSpec field, int rows, int cols)
        : field_(field), rows_(rows), cols_(cols),
          data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Scalar(0)) {}

    static MatrixExact identity(const FieldSpec& field, int n);
    static MatrixExact from_rows(const FieldSpec& field, const std::vector<Vec>& rows);

    const FieldSpec& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Scalar& at(int r, int c) const { return data_[idx(r, c)]; }
    void set(int r, int c, const Scalar& v) { data_[idx(r, c)] = field_.canon(v); }

    Vec row(int r) const;
    Vec col(int c) const;

    /// y = this * x (column vector of length cols()).
    Vec apply(const Vec& x) const;

    MatrixExact transpose() const;
    MatrixExact multiply(const MatrixExact& other) const;
    MatrixExact add(const MatrixExact& other) const;
    MatrixExact sub(const MatrixExact& other) const;
    MatrixExact scale(const Scalar& c) const;

    /// Rows of this stacked over rows of other (same column count).
    MatrixExact vstack(const MatrixExact& other) const;

    bool is_zero() const;
    bool operator==(const MatrixExact& other) const;

private:
    size_t idx(int r, int c) const {
        return static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c);
    }

    FieldSpec field_;
    int rows_, cols_;
    std::vector<Scalar> data_;
};

struct RrefResult {
    MatrixExact matrix;
    std::vector<int> pivot_columns;
    int rank;
};

/// Reduced row echelon form. Deterministic: first nonzero entry in column
/// order is the pivot; no pivoting heuristics are needed in exact arithmetic.
RrefResult rref(const MatrixExact& m);

/// Some x with m*x = rhs, or nullopt if the system is inconsistent.
/// Free variables are set to zero, so the result is deterministic.
/// Throws Error(invalid_argument) when rhs length != rows.
std::optional<Vec> solve(const MatrixExact& m, const Vec& rhs);

} // namespace algcoh

#endif
