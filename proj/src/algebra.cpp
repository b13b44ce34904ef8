#include "algcoh/algebra.hpp"

#include "algcoh/bimodule.hpp"

namespace algcoh {

AlgebraPresentation::AlgebraPresentation(FieldSpec field, int dim, std::string name,
                                         std::vector<Scalar> structure_constants, Vec unit)
    : field_(field), dim_(dim), name_(std::move(name)),
      mul_(std::move(structure_constants)), unit_(std::move(unit)) {
    if (dim_ < 0)
        fail(Error::Kind::invalid_argument, "negative dimension");
    size_t want = d() * d() * d();
    if (mul_.size() != want)
        fail(Error::Kind::invalid_argument,
             "structure constant tensor has " + std::to_string(mul_.size()) +
                 " entries, expected " + std::to_string(want));
    if (unit_.size() != d())
        fail(Error::Kind::invalid_argument, "unit vector has wrong length");
    for (auto& x : mul_) x = field_.canon(x);
    for (auto& x : unit_) x = field_.canon(x);
}

Vec AlgebraPresentation::multiply(const Vec& a, const Vec& b) const {
    if (a.size() != d() || b.size() != d())
        fail(Error::Kind::invalid_argument, "element coordinates have wrong length");
    Vec out = vec_zero(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (field_.is_zero(a[static_cast<size_t>(i)])) continue;
        for (int j = 0; j < dim_; ++j) {
            if (field_.is_zero(b[static_cast<size_t>(j)])) continue;
            Scalar coef = a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
            for (int k = 0; k < dim_; ++k) {
                const Scalar& cijk = c(i, j, k);
                if (sgn(cijk) != 0)
                    out[static_cast<size_t>(k)] += coef * cijk;
            }
        }
    }
    for (auto& x : out) x = field_.canon(x);
    return out;
}

MatrixExact AlgebraPresentation::left_mult_operator(const Vec& a) const {
    MatrixExact op(field_, dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        Vec col = multiply(a, basis_element(j));
        for (int k = 0; k < dim_; ++k) op.set(k, j, col[static_cast<size_t>(k)]);
    }
    return op;
}

MatrixExact AlgebraPresentation::right_mult_operator(const Vec& a) const {
    MatrixExact op(field_, dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        Vec col = multiply(basis_element(j), a);
        for (int k = 0; k < dim_; ++k) op.set(k, j, col[static_cast<size_t>(k)]);
    }
    return op;
}

bool AlgebraPresentation::is_idempotent(const Vec& x) const {
    Vec sq = multiply(x, x);
    for (int k = 0; k < dim_; ++k)
        if (field_.canon(sq[static_cast<size_t>(k)]) != field_.canon(x[static_cast<size_t>(k)]))
            return false;
    return true;
}

bool AlgebraPresentation::is_trivial_idempotent(const Vec& x) const {
    if (vec_is_zero(x)) return true;
    Vec diff = vec_sub(field_, x, unit_);
    return vec_is_zero(diff);
}

AlgebraValidation validate(const AlgebraPresentation& a) {
    AlgebraValidation report;
    int n = a.dim();
    for (int i = 0; i < n; ++i) {
        Vec li = a.multiply(a.unit(), a.basis_element(i));
        Vec ri = a.multiply(a.basis_element(i), a.unit());
        if (li != a.basis_element(i) || ri != a.basis_element(i)) {
            report.ok = false;
            report.unit_witness = i;
            report.message = "unit axiom fails at basis index " + std::to_string(i);
            return report;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec lhs = a.multiply(a.multiply(a.basis_element(i), a.basis_element(j)),
                                     a.basis_element(k));
                Vec rhs = a.multiply(a.basis_element(i),
                                     a.multiply(a.basis_element(j), a.basis_element(k)));
                if (lhs != rhs) {
                    report.ok = false;
                    report.associativity_witness = std::array<int, 3>{i, j, k};
                    report.message = "associativity fails at basis triple (" +
                                     std::to_string(i) + "," + std::to_string(j) + "," +
                                     std::to_string(k) + ")";
                    return report;
                }
            }
    report.ok = true;
    report.message = "ok";
    return report;
}

Subspace center(const AlgebraPresentation& a) {
    const FieldSpec& F = a.field();
    int n = a.dim();
    // Constraint rows for x: for every j, k: sum_i x_i (c[i][j][k] - c[j][i][k]) = 0
    MatrixExact sys(F, n * n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                sys.set(j * n + k, i, a.c(i, j, k) - a.c(j, i, k));
    return Subspace::kernel_of(sys);
}

std::vector<Vec> enumerate_idempotents(const AlgebraPresentation& a, long cap) {
    const FieldSpec& F = a.field();
    if (!F.is_prime_field())
        fail(Error::Kind::unsupported,
             "exhaustive idempotent search needs a prime field; supply candidates over Q");
    long p = F.characteristic();
    if (cap < 1) cap = 1;
    long total = 1;
    for (int i = 0; i < a.dim(); ++i) {
        if (total > cap / p) { total = cap + 1; break; } // total*p would pass the cap
        total *= p;
    }
    if (total > cap)
        fail(Error::Kind::enumeration_limit,
             "idempotent enumeration needs p^dim = " + std::to_string(p) + "^" +
                 std::to_string(a.dim()) + " > cap " + std::to_string(cap) +
                 "; raise the cap or supply candidates");
    std::vector<Vec> found;
    std::vector<long> odo(static_cast<size_t>(a.dim()), 0);
    while (true) {
        Vec x(static_cast<size_t>(a.dim()));
        for (int i = 0; i < a.dim(); ++i) x[static_cast<size_t>(i)] = Scalar(odo[static_cast<size_t>(i)]);
        if (a.is_idempotent(x)) found.push_back(x);
        // lexicographic order over coordinate tuples: last coordinate fastest
        int pos = a.dim() - 1;
        while (pos >= 0) {
            if (++odo[static_cast<size_t>(pos)] < p) break;
            odo[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return found;
}

std::vector<Vec> filter_idempotents(const AlgebraPresentation& a,
                                    const std::vector<Vec>& candidates) {
    std::vector<Vec> found;
    for (const auto& x : candidates) {
        if (static_cast<int>(x.size()) != a.dim())
            fail(Error::Kind::invalid_argument, "candidate has wrong length");
        if (a.is_idempotent(x)) found.push_back(x);
    }
    return found;
}

AlgebraPresentation matrix_algebra(const FieldSpec& field, int n) {
    if (n <= 0)
        fail(Error::Kind::invalid_argument, "matrix algebra size must be positive");
    int d = n * n;
    std::vector<Scalar> mul(static_cast<size_t>(d) * d * d, Scalar(0));
    auto idx = [d](int i, int j, int k) {
        return (static_cast<size_t>(i) * d + static_cast<size_t>(j)) * d + static_cast<size_t>(k);
    };
    // E_ij E_kl = delta_jk E_il ; basis index of E_ij is i*n + j
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l)
                mul[idx(i * n + j, j * n + l, i * n + l)] = 1;
    Vec unit = vec_zero(d);
    for (int i = 0; i < n; ++i) unit[static_cast<size_t>(i * n + i)] = 1;
    return AlgebraPresentation(field, d, "M" + std::to_string(n), std::move(mul), std::move(unit));
}

AlgebraPresentation dual_numbers(const FieldSpec& field) {
    // basis {1, x}, x^2 = 0
    std::vector<Scalar> mul(8, Scalar(0));
    auto idx = [](int i, int j, int k) { return (static_cast<size_t>(i) * 2 + static_cast<size_t>(j)) * 2 + static_cast<size_t>(k); };
    mul[idx(0, 0, 0)] = 1;
    mul[idx(0, 1, 1)] = 1;
    mul[idx(1, 0, 1)] = 1;
    return AlgebraPresentation(field, 2, "dual_numbers", std::move(mul), Vec{Scalar(1), Scalar(0)});
}

AlgebraPresentation direct_product(const AlgebraPresentation& a, const AlgebraPresentation& b) {
    if (a.field() != b.field())
        fail(Error::Kind::invalid_argument, "direct product over different fields");
    int n = a.dim() + b.dim();
    std::vector<Scalar> mul(static_cast<size_t>(n) * n * n, Scalar(0));
    auto idx = [n](int i, int j, int k) {
        return (static_cast<size_t>(i) * n + static_cast<size_t>(j)) * n + static_cast<size_t>(k);
    };
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            for (int k = 0; k < a.dim(); ++k) mul[idx(i, j, k)] = a.c(i, j, k);
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j)
            for (int k = 0; k < b.dim(); ++k)
                mul[idx(a.dim() + i, a.dim() + j, a.dim() + k)] = b.c(i, j, k);
    Vec unit = a.unit();
    unit.insert(unit.end(), b.unit().begin(), b.unit().end());
    return AlgebraPresentation(a.field(), n, a.name() + "x" + b.name(), std::move(mul),
                               std::move(unit));
}

AlgebraPresentation triangular(const AlgebraPresentation& a, const AlgebraPresentation& b,
                               const BimodulePresentation& m, const std::string& name) {
    if (a.field() != b.field() || a.field() != m.algebra()->field())
        fail(Error::Kind::invalid_argument, "triangular builder: field mismatch");
    if (m.algebra()->dim() != a.dim() + b.dim())
        fail(Error::Kind::invalid_argument,
             "triangular builder: corner bimodule must act over the product algebra");
    auto mv = validate_bimodule(m);
    if (!mv.ok)
        fail(Error::Kind::invalid_argument, "triangular builder: invalid bimodule: " + mv.message);
    // The corner must be killed by (0,B) on the left and (A,0) on the right,
    // i.e. the product acts through (a,b)m = am, m(a,b) = mb.
    for (int j = 0; j < b.dim(); ++j)
        if (!m.left_action(a.dim() + j).is_zero())
            fail(Error::Kind::invalid_argument,
                 "triangular builder: left action must factor through the first component");
    for (int i = 0; i < a.dim(); ++i)
        if (!m.right_action(i).is_zero())
            fail(Error::Kind::invalid_argument,
                 "triangular builder: right action must factor through the second component");

    int na = a.dim(), nm = m.dim(), nb = b.dim();
    int n = na + nm + nb;
    std::vector<Scalar> mul(static_cast<size_t>(n) * n * n, Scalar(0));
    auto idx = [n](int i, int j, int k) {
        return (static_cast<size_t>(i) * n + static_cast<size_t>(j)) * n + static_cast<size_t>(k);
    };
    // Basis order (A-part, M-part, B-part).
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            for (int k = 0; k < na; ++k) mul[idx(i, j, k)] = a.c(i, j, k);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j)
            for (int k = 0; k < nb; ++k)
                mul[idx(na + nm + i, na + nm + j, na + nm + k)] = b.c(i, j, k);
    for (int i = 0; i < na; ++i) {
        const MatrixExact& L = m.left_action(i);
        for (int k = 0; k < nm; ++k)
            for (int r = 0; r < nm; ++r) mul[idx(i, na + k, na + r)] = L.at(r, k);
    }
    for (int j = 0; j < nb; ++j) {
        const MatrixExact& R = m.right_action(na + j);
        for (int k = 0; k < nm; ++k)
            for (int r = 0; r < nm; ++r) mul[idx(na + k, na + nm + j, na + r)] = R.at(r, k);
    }
    Vec unit = a.unit();
    unit.insert(unit.end(), static_cast<size_t>(nm), Scalar(0));
    unit.insert(unit.end(), b.unit().begin(), b.unit().end());
    std::string label = name.empty() ? "tri(" + a.name() + ";" + m.name() + ";" + b.name() + ")" : name;
    return AlgebraPresentation(a.field(), n, label, std::move(mul), std::move(unit));
}

} // namespace algcoh
