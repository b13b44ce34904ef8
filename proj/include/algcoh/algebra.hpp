#ifndef ALGCOH_ALGEBRA_HPP
#define ALGCOH_ALGEBRA_HPP

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "algcoh/subspace.hpp"

namespace algcoh {

/// Finite-dimensional unital associative algebra given by structure
/// constants: e_i * e_j = sum_k c[i][j][k] e_k, plus the coordinates of 1.
///
/// Presentations are plain data; validate() checks the axioms and everything
/// downstream assumes a validated presentation. Objects are immutable after
/// construction and safe for concurrent reads.
class AlgebraPresentation {
public:
    AlgebraPresentation(FieldSpec field, int dim, std::string name,
                        std::vector<Scalar> structure_constants, Vec unit);

    const FieldSpec& field() const { return field_; }
    int dim() const { return dim_; }
    const std::string& name() const { return name_; }
    const Vec& unit() const { return unit_; }

    /// c[i][j][k]
    const Scalar& c(int i, int j, int k) const {
        return mul_[(static_cast<size_t>(i) * d() + static_cast<size_t>(j)) * d() +
                    static_cast<size_t>(k)];
    }

    Vec basis_element(int i) const { return vec_unit(dim_, i); }
    Vec multiply(const Vec& a, const Vec& b) const;
    /// [a,b] = ab - ba
    Vec commutator(const Vec& a, const Vec& b) const {
        return vec_sub(field_, multiply(a, b), multiply(b, a));
    }

    /// x |-> a*x as a dim x dim matrix.
    MatrixExact left_mult_operator(const Vec& a) const;
    /// x |-> x*a.
    MatrixExact right_mult_operator(const Vec& a) const;

    bool is_idempotent(const Vec& x) const;
    /// 0 or 1.
    bool is_trivial_idempotent(const Vec& x) const;

private:
    size_t d() const { return static_cast<size_t>(dim_); }

    FieldSpec field_;
    int dim_;
    std::string name_;
    std::vector<Scalar> mul_; // dim^3, canonical scalars
    Vec unit_;
};

struct AlgebraValidation {
    bool ok = false;
    std::string message;             // "ok" or the failure description
    std::optional<std::array<int, 3>> associativity_witness;
    std::optional<int> unit_witness; // basis index where 1*e_i or e_i*1 fails
};

AlgebraValidation validate(const AlgebraPresentation& a);

/// Z(A) as the kernel of the stacked commutator maps x |-> [x, e_i].
Subspace center(const AlgebraPresentation& a);

/// All x with x*x = x, in lexicographic coordinate order (last coordinate
/// fastest). Only for prime fields with p^dim <= cap; throws
/// Error(enumeration_limit) past the cap and Error(unsupported) over Q.
std::vector<Vec> enumerate_idempotents(const AlgebraPresentation& a, long cap);

/// The subset of `candidates` that are idempotent (the supported route over Q).
std::vector<Vec> filter_idempotents(const AlgebraPresentation& a, const std::vector<Vec>& candidates);

class BimodulePresentation; // bimodule.hpp

// Standard constructions. Basis orders are part of the contract:
// matrix_algebra uses E_ij in lexicographic (i,j) order; direct_product
// concatenates the two bases; triangular orders the basis (A-part, M-part,
// B-part). Every builder output passes validate().

AlgebraPresentation matrix_algebra(const FieldSpec& field, int n);
AlgebraPresentation dual_numbers(const FieldSpec& field);
AlgebraPresentation direct_product(const AlgebraPresentation& a, const AlgebraPresentation& b);
/// Upper triangular 2x2 arrays with diagonal (A, B) and corner from M, where
/// M is an (A,B)-bimodule presented over direct_product(A, B) with the
/// convention (a,b)m = am, m(a,b) = mb.
AlgebraPresentation triangular(const AlgebraPresentation& a, const AlgebraPresentation& b,
                               const BimodulePresentation& m_over_product,
                               const std::string& name = "");

using AlgebraPtr = std::shared_ptr<const AlgebraPresentation>;

} // namespace algcoh

#endif
