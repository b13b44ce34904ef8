#include "algcoh/trivext.hpp"

namespace algcoh {

TrivialExtension TrivialExtension::make(AlgebraPtr base, BimodulePtr module) {
    if (!base || !module)
        fail(Error::Kind::invalid_argument, "trivial extension needs an algebra and a bimodule");
    if (module->algebra().get() != base.get())
        fail(Error::Kind::invalid_argument,
             "trivial extension: bimodule is presented over a different algebra");
    const FieldSpec& F = base->field();
    int n = base->dim(), m = module->dim();
    int N = n + m;
    std::vector<Scalar> mul(static_cast<size_t>(N) * N * N, Scalar(0));
    auto idx = [N](int i, int j, int k) {
        return (static_cast<size_t>(i) * N + static_cast<size_t>(j)) * N + static_cast<size_t>(k);
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) mul[idx(i, j, k)] = base->c(i, j, k);
    for (int i = 0; i < n; ++i) {
        const MatrixExact& L = module->left_action(i);
        const MatrixExact& R = module->right_action(i);
        for (int k = 0; k < m; ++k)
            for (int r = 0; r < m; ++r) {
                mul[idx(i, n + k, n + r)] = L.at(r, k); // (e_i,0)(0,mu_k) = (0, e_i.mu_k)
                mul[idx(n + k, i, n + r)] = R.at(r, k); // (0,mu_k)(e_j,0) = (0, mu_k.e_j)
            }
    }
    // (0, m)(0, n) = 0: entries already zero.
    Vec unit = base->unit();
    unit.insert(unit.end(), static_cast<size_t>(m), Scalar(0));
    auto total = std::make_shared<const AlgebraPresentation>(
        F, N, base->name() + "|x" + module->name(), std::move(mul), std::move(unit));
    auto v = validate(*total);
    if (!v.ok)
        fail(Error::Kind::internal, "trivial extension failed validation: " + v.message);
    return TrivialExtension(std::move(base), std::move(module), std::move(total));
}

Vec TrivialExtension::embed(const Vec& a, const Vec& m) const {
    if (static_cast<int>(a.size()) != dim_base() || static_cast<int>(m.size()) != dim_module())
        fail(Error::Kind::invalid_argument, "embed: wrong coordinate lengths");
    Vec v = a;
    v.insert(v.end(), m.begin(), m.end());
    return v;
}

Vec TrivialExtension::project_base(const Vec& t) const {
    return Vec(t.begin(), t.begin() + dim_base());
}

Vec TrivialExtension::project_module(const Vec& t) const {
    return Vec(t.begin() + dim_base(), t.end());
}

CenterComparison center_trivext(const TrivialExtension& t) {
    const FieldSpec& F = t.base()->field();
    const auto& A = *t.base();
    const auto& M = *t.module();
    int n = A.dim(), m = M.dim();

    Subspace direct = center(*t.total());

    // Formula: (a, m) with a in Z(A); [b, m] = 0 for all b in A (as module
    // element); [a, y] = 0 for all y in M (a acts the same on both sides).
    std::vector<Vec> rows;
    auto new_row = [&]() -> Vec& {
        rows.emplace_back(vec_zero(n + m));
        return rows.back();
    };
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            Vec& row = new_row();
            for (int i = 0; i < n; ++i)
                row[static_cast<size_t>(i)] = F.sub(A.c(i, j, k), A.c(j, i, k));
        }
    for (int i = 0; i < n; ++i) {
        const MatrixExact& L = M.left_action(i);
        const MatrixExact& R = M.right_action(i);
        for (int r = 0; r < m; ++r) {
            Vec& row = new_row();
            for (int c = 0; c < m; ++c)
                row[static_cast<size_t>(n + c)] = F.sub(L.at(r, c), R.at(r, c));
        }
    }
    for (int k = 0; k < m; ++k)
        for (int r = 0; r < m; ++r) {
            Vec& row = new_row();
            for (int i = 0; i < n; ++i)
                row[static_cast<size_t>(i)] =
                    F.sub(M.left_action(i).at(r, k), M.right_action(i).at(r, k));
        }
    Subspace formula = Subspace::kernel_of(MatrixExact::from_rows(F, rows));

    std::vector<Vec> pa, pm;
    for (int i = 0; i < direct.dim(); ++i) {
        Vec z = direct.basis_vector(i);
        pa.push_back(t.project_base(z));
        pm.push_back(t.project_module(z));
    }
    Subspace pa_space = Subspace::from_spanning(F, n, pa);
    Subspace pm_space = Subspace::from_spanning(F, m, pm);

    CenterComparison out{std::move(direct), std::move(formula), false, pa_space.dim(),
                         pm_space.dim(), false};
    out.equal = (out.direct == out.formula);
    out.product_decomposition = (out.direct.dim() == out.dim_pi_base + out.dim_pi_module);
    return out;
}

namespace {

// dim of span{ P x Q : x over the total basis } for multiplication operators.
int sandwich_dim(const AlgebraPresentation& total, const Vec& left, const Vec& right) {
    std::vector<Vec> imgs;
    for (int i = 0; i < total.dim(); ++i)
        imgs.push_back(total.multiply(left, total.multiply(total.basis_element(i), right)));
    return Subspace::from_spanning(total.field(), total.dim(), imgs).dim();
}

bool sandwich_zero(const AlgebraPresentation& a, const Vec& left, const Vec& right) {
    for (int i = 0; i < a.dim(); ++i)
        if (!vec_is_zero(a.multiply(left, a.multiply(a.basis_element(i), right)))) return false;
    return true;
}

bool module_sandwich_zero(const BimodulePresentation& m, const Vec& left, const Vec& right) {
    for (int k = 0; k < m.dim(); ++k)
        if (!vec_is_zero(m.act_left(left, m.act_right(m.module_basis(k), right)))) return false;
    return true;
}

} // namespace

TriangularSearch find_triangular_representation(const TrivialExtension& t, long cap,
                                                const std::vector<Vec>* candidates) {
    const auto& A = *t.base();
    const FieldSpec& F = A.field();
    std::vector<Vec> idems;
    if (candidates) {
        idems = filter_idempotents(A, *candidates);
    } else {
        try {
            idems = enumerate_idempotents(A, cap);
        } catch (const Error& e) {
            if (e.kind() == Error::Kind::enumeration_limit ||
                e.kind() == Error::Kind::unsupported)
                return TriangularSearch{TriangularSearch::Outcome::undecided,
                                        std::string("undecided: ") + e.what(), {}, 0, 0, 0};
            throw;
        }
    }
    for (const Vec& e : idems) {
        if (A.is_trivial_idempotent(e)) continue;
        Vec f = vec_sub(F, A.unit(), e);
        if (!sandwich_zero(A, f, e)) continue;
        if (!module_sandwich_zero(*t.module(), f, e)) continue;
        // Block dimensions of the induced decomposition at E = (e, 0).
        Vec E = t.embed(e, vec_zero(t.dim_module()));
        Vec Fc = vec_sub(F, t.total()->unit(), E);
        TriangularSearch out{TriangularSearch::Outcome::found, "", e, 0, 0, 0};
        out.block_left = sandwich_dim(*t.total(), E, E);
        out.block_corner = sandwich_dim(*t.total(), E, Fc);
        out.block_right = sandwich_dim(*t.total(), Fc, Fc);
        return out;
    }
    return TriangularSearch{TriangularSearch::Outcome::none, "", {}, 0, 0, 0};
}

TypeStarReport is_type_star(const TrivialExtension& t, const Vec& e) {
    const auto& A = *t.base();
    const auto& M = *t.module();
    const FieldSpec& F = A.field();
    if (!A.is_idempotent(e))
        fail(Error::Kind::invalid_argument, "is_type_star: element is not idempotent");
    Vec f = vec_sub(F, A.unit(), e);

    TypeStarReport r{};
    r.e_nontrivial_idempotent = !A.is_trivial_idempotent(e);
    r.eAf_zero = sandwich_zero(A, e, f);

    r.cond_emf = true;
    for (int k = 0; k < M.dim(); ++k) {
        Vec emf = M.act_left(e, M.act_right(M.module_basis(k), f));
        if (emf != M.module_basis(k)) { r.cond_emf = false; break; }
    }
    r.cond_kill = true;
    for (int k = 0; k < M.dim(); ++k) {
        if (!vec_is_zero(M.act_left(f, M.module_basis(k))) ||
            !vec_is_zero(M.act_right(M.module_basis(k), e))) {
            r.cond_kill = false;
            break;
        }
    }
    r.cond_identity = true;
    for (int k = 0; k < M.dim(); ++k) {
        if (M.act_left(e, M.module_basis(k)) != M.module_basis(k) ||
            M.act_right(M.module_basis(k), f) != M.module_basis(k)) {
            r.cond_identity = false;
            break;
        }
    }
    r.cond_squeeze = true;
    for (int i = 0; i < A.dim() && r.cond_squeeze; ++i) {
        Vec a = A.basis_element(i);
        Vec eae = A.multiply(e, A.multiply(a, e));
        Vec faf = A.multiply(f, A.multiply(a, f));
        for (int k = 0; k < M.dim(); ++k) {
            Vec mu = M.module_basis(k);
            if (M.act_left(a, mu) != M.act_left(eae, mu) ||
                M.act_right(mu, a) != M.act_right(mu, faf)) {
                r.cond_squeeze = false;
                break;
            }
        }
    }
    r.conditions_agree = (r.cond_emf == r.cond_kill) && (r.cond_kill == r.cond_identity) &&
                         (r.cond_identity == r.cond_squeeze);
    r.is_type_star = r.e_nontrivial_idempotent && r.eAf_zero && r.cond_emf;
    return r;
}

} // namespace algcoh
