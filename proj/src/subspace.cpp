#include "algcoh/subspace.hpp"

namespace algcoh {

Subspace Subspace::zero(const FieldSpec& field, int ambient_dim) {
    return Subspace(ambient_dim, MatrixExact(field, 0, ambient_dim));
}

Subspace Subspace::full(const FieldSpec& field, int ambient_dim) {
    return Subspace(ambient_dim, MatrixExact::identity(field, ambient_dim));
}

Subspace Subspace::from_spanning(const FieldSpec& field, int ambient_dim,
                                 const std::vector<Vec>& vectors) {
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != ambient_dim)
            fail(Error::Kind::invalid_argument, "spanning vector has wrong length");
    if (vectors.empty()) return zero(field, ambient_dim);
    RrefResult rr = rref(MatrixExact::from_rows(field, vectors));
    MatrixExact basis(field, rr.rank, ambient_dim);
    for (int r = 0; r < rr.rank; ++r)
        for (int c = 0; c < ambient_dim; ++c) basis.set(r, c, rr.matrix.at(r, c));
    return Subspace(ambient_dim, std::move(basis));
}

Subspace Subspace::row_space_of(const MatrixExact& m) {
    std::vector<Vec> rows;
    for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return from_spanning(m.field(), m.cols(), rows);
}

Subspace Subspace::kernel_of(const MatrixExact& m) {
    const FieldSpec& F = m.field();
    int n = m.cols();
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int p : rr.pivot_columns) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<Vec> basis;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        Vec v = vec_zero(n);
        v[static_cast<size_t>(c)] = 1;
        for (size_t r = 0; r < rr.pivot_columns.size(); ++r)
            v[static_cast<size_t>(rr.pivot_columns[r])] =
                F.neg(rr.matrix.at(static_cast<int>(r), c));
        basis.push_back(std::move(v));
    }
    return from_spanning(F, n, basis);
}

bool Subspace::contains(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        fail(Error::Kind::invalid_argument, "membership test in wrong ambient space");
    const FieldSpec& F = field();
    Vec r = v;
    for (int i = 0; i < dim(); ++i) {
        // pivot column of row i = first nonzero entry
        int p = -1;
        for (int c = 0; c < ambient_; ++c)
            if (!F.is_zero(basis_.at(i, c))) { p = c; break; }
        if (p < 0) continue;
        Scalar coeff = r[static_cast<size_t>(p)];
        if (F.is_zero(coeff)) continue;
        for (int c = 0; c < ambient_; ++c)
            r[static_cast<size_t>(c)] = F.sub(r[static_cast<size_t>(c)],
                                              F.mul(coeff, basis_.at(i, c)));
    }
    return vec_is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

bool Subspace::operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
    if (u.ambient_ != w.ambient_)
        fail(Error::Kind::invalid_argument, "subspace sum: ambient dimension mismatch");
    std::vector<Vec> rows;
    for (int i = 0; i < u.dim(); ++i) rows.push_back(u.basis_vector(i));
    for (int i = 0; i < w.dim(); ++i) rows.push_back(w.basis_vector(i));
    return Subspace::from_spanning(u.field(), u.ambient_, rows);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& w) {
    if (u.ambient_ != w.ambient_)
        fail(Error::Kind::invalid_argument, "subspace intersection: ambient dimension mismatch");
    const FieldSpec& F = u.field();
    int n = u.ambient_;
    if (u.dim() == 0 || w.dim() == 0) return Subspace::zero(F, n);
    // Relation system: coefficients (a, b) with a*U - b*W = 0; the common
    // value a*U spans the intersection.
    int k = u.dim(), l = w.dim();
    MatrixExact rel(F, n, k + l);
    for (int c = 0; c < n; ++c) {
        for (int i = 0; i < k; ++i) rel.set(c, i, u.basis_.at(i, c));
        for (int j = 0; j < l; ++j) rel.set(c, k + j, F.neg(w.basis_.at(j, c)));
    }
    Subspace ker = Subspace::kernel_of(rel);
    std::vector<Vec> vecs;
    for (int b = 0; b < ker.dim(); ++b) {
        Vec coeffs = ker.basis_vector(b);
        Vec v = vec_zero(n);
        for (int i = 0; i < k; ++i)
            vec_axpy(F, v, coeffs[static_cast<size_t>(i)], u.basis_vector(i));
        vecs.push_back(std::move(v));
    }
    return Subspace::from_spanning(F, n, vecs);
}

std::vector<Vec> Subspace::complete_to(const Subspace& super) const {
    if (!super.contains(*this))
        fail(Error::Kind::invalid_argument, "complete_to: not a subspace of the given space");
    std::vector<Vec> reps;
    Subspace cur = *this;
    for (int i = 0; i < super.dim(); ++i) {
        Vec w = super.basis_vector(i);
        if (cur.contains(w)) continue;
        reps.push_back(w);
        cur = subspace_sum(cur, Subspace::from_spanning(field(), ambient_, {w}));
    }
    return reps;
}

int quotient_dim(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim())
        fail(Error::Kind::invalid_argument, "quotient_dim: ambient dimension mismatch");
    if (!w.contains(u))
        fail(Error::Kind::invalid_argument, "quotient_dim requires the first space inside the second");
    return w.dim() - u.dim();
}

} // namespace algcoh
