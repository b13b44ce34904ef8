#ifndef ALGCOH_BIMODULE_HPP
#define ALGCOH_BIMODULE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "algcoh/algebra.hpp"

namespace algcoh {

/// Unital bimodule over an algebra A, given by one left-action matrix and one
/// right-action matrix per algebra basis element. Operators act on column
/// vectors: left_action(i)*m = e_i . m and right_action(i)*m = m . e_i.
class BimodulePresentation {
public:
    BimodulePresentation(AlgebraPtr algebra, int dim, std::string name,
                         std::vector<MatrixExact> left, std::vector<MatrixExact> right);

    const AlgebraPtr& algebra() const { return algebra_; }
    const FieldSpec& field() const { return algebra_->field(); }
    int dim() const { return dim_; }
    const std::string& name() const { return name_; }

    const MatrixExact& left_action(int i) const { return left_[static_cast<size_t>(i)]; }
    const MatrixExact& right_action(int i) const { return right_[static_cast<size_t>(i)]; }

    /// m |-> a.m for an arbitrary algebra element a.
    MatrixExact left_operator(const Vec& a) const;
    MatrixExact right_operator(const Vec& a) const;

    Vec act_left(const Vec& a, const Vec& m) const { return left_operator(a).apply(m); }
    Vec act_right(const Vec& m, const Vec& a) const { return right_operator(a).apply(m); }

    Vec module_basis(int k) const { return vec_unit(dim_, k); }

private:
    AlgebraPtr algebra_;
    int dim_;
    std::string name_;
    std::vector<MatrixExact> left_, right_;
};

struct BimoduleValidation {
    bool ok = false;
    std::string message;
    // witness indices (i, j) of the violated axiom, when any
    std::optional<std::pair<int, int>> witness;
};

/// Checks: left action is multiplicative, right action is anti-multiplicative,
/// the unit acts as identity on both sides, and the two actions commute.
BimoduleValidation validate_bimodule(const BimodulePresentation& b);

struct Annihilators {
    Subspace left;         // l.Ann(M) = {a : a.M = 0}
    Subspace right;        // r.Ann(M)
    Subspace intersection; // the paper-critical hypothesis space
};

Annihilators annihilators(const BimodulePresentation& b);

/// True iff z.m = m.z for every center basis element z and module basis m.
bool symmetric_center_action(const BimodulePresentation& b);

/// M = A with both actions given by multiplication.
BimodulePresentation regular_bimodule(const AlgebraPtr& a);

/// The dual bimodule DA: functionals on A with (a.f.b)(x) = f(b x a);
/// realized by transposed multiplication operators.
BimodulePresentation dual_bimodule(const AlgebraPtr& a);

/// The zero bimodule (dim 0); the degenerate case that turns extension-level
/// checks into checks about A alone.
BimodulePresentation zero_bimodule(const AlgebraPtr& a);

class TrivialExtension; // trivext.hpp

/// View an A-bimodule N as a bimodule over A x| M via (a,m).n = a.n, n.(a,m) = n.a.
BimodulePresentation lift_to_trivext(const BimodulePresentation& n, const TrivialExtension& e);

} // namespace algcoh

#endif
