#include "algcoh/bimodule.hpp"

#include "algcoh/trivext.hpp"

namespace algcoh {

BimodulePresentation::BimodulePresentation(AlgebraPtr algebra, int dim, std::string name,
                                           std::vector<MatrixExact> left,
                                           std::vector<MatrixExact> right)
    : algebra_(std::move(algebra)), dim_(dim), name_(std::move(name)),
      left_(std::move(left)), right_(std::move(right)) {
    if (!algebra_)
        fail(Error::Kind::invalid_argument, "bimodule needs an algebra");
    if (dim_ < 0)
        fail(Error::Kind::invalid_argument, "negative module dimension");
    size_t n = static_cast<size_t>(algebra_->dim());
    if (left_.size() != n || right_.size() != n)
        fail(Error::Kind::invalid_argument,
             "need one left and one right action matrix per algebra basis element");
    for (const auto& m : left_)
        if (m.rows() != dim_ || m.cols() != dim_)
            fail(Error::Kind::invalid_argument, "left action matrix has wrong shape");
    for (const auto& m : right_)
        if (m.rows() != dim_ || m.cols() != dim_)
            fail(Error::Kind::invalid_argument, "right action matrix has wrong shape");
}

MatrixExact BimodulePresentation::left_operator(const Vec& a) const {
    if (static_cast<int>(a.size()) != algebra_->dim())
        fail(Error::Kind::invalid_argument, "element coordinates have wrong length");
    MatrixExact op(field(), dim_, dim_);
    for (int i = 0; i < algebra_->dim(); ++i) {
        const Scalar& ai = a[static_cast<size_t>(i)];
        if (field().is_zero(ai)) continue;
        op = op.add(left_[static_cast<size_t>(i)].scale(ai));
    }
    return op;
}

MatrixExact BimodulePresentation::right_operator(const Vec& a) const {
    if (static_cast<int>(a.size()) != algebra_->dim())
        fail(Error::Kind::invalid_argument, "element coordinates have wrong length");
    MatrixExact op(field(), dim_, dim_);
    for (int i = 0; i < algebra_->dim(); ++i) {
        const Scalar& ai = a[static_cast<size_t>(i)];
        if (field().is_zero(ai)) continue;
        op = op.add(right_[static_cast<size_t>(i)].scale(ai));
    }
    return op;
}

BimoduleValidation validate_bimodule(const BimodulePresentation& b) {
    BimoduleValidation report;
    const auto& A = *b.algebra();
    int n = A.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec prod = A.multiply(A.basis_element(i), A.basis_element(j));
            MatrixExact lhsL = b.left_operator(prod);
            MatrixExact rhsL = b.left_action(i).multiply(b.left_action(j));
            if (!(lhsL == rhsL)) {
                report.message = "left action is not multiplicative at basis pair (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")";
                report.witness = {i, j};
                return report;
            }
            MatrixExact lhsR = b.right_operator(prod);
            MatrixExact rhsR = b.right_action(j).multiply(b.right_action(i));
            if (!(lhsR == rhsR)) {
                report.message = "right action is not anti-multiplicative at basis pair (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")";
                report.witness = {i, j};
                return report;
            }
            MatrixExact c1 = b.left_action(i).multiply(b.right_action(j));
            MatrixExact c2 = b.right_action(j).multiply(b.left_action(i));
            if (!(c1 == c2)) {
                report.message = "(a m) b = a (m b) fails at basis pair (" + std::to_string(i) +
                                 "," + std::to_string(j) + ")";
                report.witness = {i, j};
                return report;
            }
        }
    MatrixExact id = MatrixExact::identity(b.field(), b.dim());
    if (!(b.left_operator(A.unit()) == id) || !(b.right_operator(A.unit()) == id)) {
        report.message = "unit does not act as the identity";
        return report;
    }
    report.ok = true;
    report.message = "ok";
    return report;
}

Annihilators annihilators(const BimodulePresentation& b) {
    const FieldSpec& F = b.field();
    int n = b.algebra()->dim(), m = b.dim();
    // a in l.Ann iff sum_i a_i * L_i[r][k] = 0 for all module basis k, coord r.
    MatrixExact sysL(F, m * m, n), sysR(F, m * m, n);
    for (int k = 0; k < m; ++k)
        for (int r = 0; r < m; ++r)
            for (int i = 0; i < n; ++i) {
                sysL.set(k * m + r, i, b.left_action(i).at(r, k));
                sysR.set(k * m + r, i, b.right_action(i).at(r, k));
            }
    Subspace l = Subspace::kernel_of(sysL);
    Subspace r = Subspace::kernel_of(sysR);
    Subspace inter = subspace_intersect(l, r);
    return Annihilators{std::move(l), std::move(r), std::move(inter)};
}

bool symmetric_center_action(const BimodulePresentation& b) {
    Subspace z = center(*b.algebra());
    for (int i = 0; i < z.dim(); ++i) {
        Vec zv = z.basis_vector(i);
        if (!(b.left_operator(zv) == b.right_operator(zv))) return false;
    }
    return true;
}

BimodulePresentation regular_bimodule(const AlgebraPtr& a) {
    int n = a->dim();
    std::vector<MatrixExact> left, right;
    left.reserve(static_cast<size_t>(n));
    right.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        left.push_back(a->left_mult_operator(a->basis_element(i)));
        right.push_back(a->right_mult_operator(a->basis_element(i)));
    }
    return BimodulePresentation(a, n, a->name() + "_reg", std::move(left), std::move(right));
}

BimodulePresentation dual_bimodule(const AlgebraPtr& a) {
    int n = a->dim();
    std::vector<MatrixExact> left, right;
    left.reserve(static_cast<size_t>(n));
    right.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        // (a.f)(x) = f(x a) and (f.b)(x) = f(b x): transposed multiplications.
        left.push_back(a->right_mult_operator(a->basis_element(i)).transpose());
        right.push_back(a->left_mult_operator(a->basis_element(i)).transpose());
    }
    return BimodulePresentation(a, n, "D" + a->name(), std::move(left), std::move(right));
}

BimodulePresentation zero_bimodule(const AlgebraPtr& a) {
    int n = a->dim();
    std::vector<MatrixExact> left(static_cast<size_t>(n), MatrixExact(a->field(), 0, 0));
    std::vector<MatrixExact> right(static_cast<size_t>(n), MatrixExact(a->field(), 0, 0));
    return BimodulePresentation(a, 0, "0", std::move(left), std::move(right));
}

BimodulePresentation lift_to_trivext(const BimodulePresentation& n, const TrivialExtension& e) {
    if (n.algebra().get() != e.base().get())
        fail(Error::Kind::invalid_argument,
             "lift_to_trivext: bimodule is not over the extension's base algebra");
    int dimA = e.base()->dim(), dimM = e.module()->dim();
    std::vector<MatrixExact> left, right;
    for (int i = 0; i < dimA; ++i) {
        left.push_back(n.left_action(i));
        right.push_back(n.right_action(i));
    }
    for (int k = 0; k < dimM; ++k) {
        (void)k;
        left.push_back(MatrixExact(n.field(), n.dim(), n.dim()));
        right.push_back(MatrixExact(n.field(), n.dim(), n.dim()));
    }
    return BimodulePresentation(e.total(), n.dim(), n.name() + "_lift", std::move(left),
                                std::move(right));
}

} // namespace algcoh
