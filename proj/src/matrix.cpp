#include "algcoh/matrix.hpp"

namespace algcoh {

MatrixExact MatrixExact::identity(const FieldSpec& field, int n) {
    MatrixExact m(field, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Scalar(1));
    return m;
}

MatrixExact MatrixExact::from_rows(const FieldSpec& field, const std::vector<Vec>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    MatrixExact m(field, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            fail(Error::Kind::invalid_argument, "ragged rows");
        for (int j = 0; j < c; ++j)
            m.set(i, j, rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
    return m;
}

Vec MatrixExact::row(int r) const {
    Vec v(static_cast<size_t>(cols_));
    for (int c = 0; c < cols_; ++c) v[static_cast<size_t>(c)] = at(r, c);
    return v;
}

Vec MatrixExact::col(int c) const {
    Vec v(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r) v[static_cast<size_t>(r)] = at(r, c);
    return v;
}

Vec MatrixExact::apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != cols_)
        fail(Error::Kind::invalid_argument, "matrix-vector dimension mismatch");
    Vec y = vec_zero(rows_);
    for (int r = 0; r < rows_; ++r) {
        Scalar acc(0);
        for (int c = 0; c < cols_; ++c)
            if (sgn(at(r, c)) != 0 && sgn(x[static_cast<size_t>(c)]) != 0)
                acc += at(r, c) * x[static_cast<size_t>(c)];
        y[static_cast<size_t>(r)] = field_.canon(acc);
    }
    return y;
}

MatrixExact MatrixExact::transpose() const {
    MatrixExact t(field_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

MatrixExact MatrixExact::multiply(const MatrixExact& other) const {
    if (cols_ != other.rows_)
        fail(Error::Kind::invalid_argument, "matrix product dimension mismatch");
    MatrixExact out(field_, rows_, other.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            if (sgn(at(r, k)) == 0) continue;
            for (int c = 0; c < other.cols_; ++c)
                if (sgn(other.at(k, c)) != 0)
                    out.set(r, c, out.at(r, c) + at(r, k) * other.at(k, c));
        }
    return out;
}

MatrixExact MatrixExact::add(const MatrixExact& other) const {
    MatrixExact out(field_, rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.set(r, c, at(r, c) + other.at(r, c));
    return out;
}

MatrixExact MatrixExact::sub(const MatrixExact& other) const {
    MatrixExact out(field_, rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.set(r, c, at(r, c) - other.at(r, c));
    return out;
}

MatrixExact MatrixExact::scale(const Scalar& s) const {
    MatrixExact out(field_, rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.set(r, c, s * at(r, c));
    return out;
}

MatrixExact MatrixExact::vstack(const MatrixExact& other) const {
    if (cols_ != other.cols_)
        fail(Error::Kind::invalid_argument, "vstack column mismatch");
    MatrixExact out(field_, rows_ + other.rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.set(r, c, at(r, c));
    for (int r = 0; r < other.rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.set(rows_ + r, c, other.at(r, c));
    return out;
}

bool MatrixExact::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

bool MatrixExact::operator==(const MatrixExact& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && field_ == other.field_ &&
           data_ == other.data_;
}

RrefResult rref(const MatrixExact& m) {
    const FieldSpec& F = m.field();
    int rows = m.rows(), cols = m.cols();
    std::vector<Vec> a;
    a.reserve(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r) a.push_back(m.row(r));

    std::vector<int> pivots;
    int lead = 0;
    for (int c = 0; c < cols && lead < rows; ++c) {
        int pr = -1;
        for (int r = lead; r < rows; ++r)
            if (!F.is_zero(a[static_cast<size_t>(r)][static_cast<size_t>(c)])) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(a[static_cast<size_t>(lead)], a[static_cast<size_t>(pr)]);
        Scalar piv_inv = F.inv(a[static_cast<size_t>(lead)][static_cast<size_t>(c)]);
        for (int j = c; j < cols; ++j) {
            auto& x = a[static_cast<size_t>(lead)][static_cast<size_t>(j)];
            x = F.mul(piv_inv, x);
        }
        for (int r = 0; r < rows; ++r) {
            if (r == lead) continue;
            Scalar f = a[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (F.is_zero(f)) continue;
            for (int j = c; j < cols; ++j) {
                auto& x = a[static_cast<size_t>(r)][static_cast<size_t>(j)];
                x = F.sub(x, F.mul(f, a[static_cast<size_t>(lead)][static_cast<size_t>(j)]));
            }
        }
        pivots.push_back(c);
        ++lead;
    }
    MatrixExact out(F, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            out.set(r, c, a[static_cast<size_t>(r)][static_cast<size_t>(c)]);
    return RrefResult{std::move(out), pivots, static_cast<int>(pivots.size())};
}

std::optional<Vec> solve(const MatrixExact& m, const Vec& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows())
        fail(Error::Kind::invalid_argument, "rhs length does not match row count");
    const FieldSpec& F = m.field();
    MatrixExact aug(F, m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) aug.set(r, c, m.at(r, c));
        aug.set(r, m.cols(), rhs[static_cast<size_t>(r)]);
    }
    RrefResult rr = rref(aug);
    // Inconsistent iff the last column is a pivot.
    for (int p : rr.pivot_columns)
        if (p == m.cols()) return std::nullopt;
    Vec x = vec_zero(m.cols());
    for (size_t i = 0; i < rr.pivot_columns.size(); ++i)
        x[static_cast<size_t>(rr.pivot_columns[i])] = rr.matrix.at(static_cast<int>(i), m.cols());
    return x;
}

} // namespace algcoh
