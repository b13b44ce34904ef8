#ifndef ALGCOH_TRIVEXT_HPP
#define ALGCOH_TRIVEXT_HPP

#include <optional>

#include "algcoh/bimodule.hpp"

namespace algcoh {

using BimodulePtr = std::shared_ptr<const BimodulePresentation>;

/// The trivial extension A x| M: product (a,m)(b,n) = (ab, a.n + m.b), with
/// the total algebra's basis ordered A-part then M-part and unit (1_A, 0).
/// 0 x| M is a square-zero ideal by construction.
class TrivialExtension {
public:
    static TrivialExtension make(AlgebraPtr base, BimodulePtr module);

    const AlgebraPtr& base() const { return base_; }
    const BimodulePtr& module() const { return module_; }
    const AlgebraPtr& total() const { return total_; }

    int dim_base() const { return base_->dim(); }
    int dim_module() const { return module_->dim(); }
    int dim_total() const { return total_->dim(); }

    Vec embed(const Vec& a, const Vec& m) const;
    Vec project_base(const Vec& total_coords) const;
    Vec project_module(const Vec& total_coords) const;

private:
    TrivialExtension(AlgebraPtr base, BimodulePtr module, AlgebraPtr total)
        : base_(std::move(base)), module_(std::move(module)), total_(std::move(total)) {}

    AlgebraPtr base_;
    BimodulePtr module_;
    AlgebraPtr total_;
};

struct CenterComparison {
    Subspace direct;   // commutator-kernel center of the total algebra
    Subspace formula;  // {(a,m) : a central, m commutes with A, a acts symmetrically on M}
    bool equal;
    int dim_pi_base;   // dim of the A-projection of the center
    int dim_pi_module; // dim of the M-projection
    bool product_decomposition; // dim Z = dim pi_A(Z) + dim pi_M(Z)
};

CenterComparison center_trivext(const TrivialExtension& t);

struct TriangularSearch {
    enum class Outcome { found, none, undecided };
    Outcome outcome;
    std::string message;          // for undecided: why enumeration stopped
    Vec idempotent;               // e in A, when found
    int block_left = 0;           // dim E T E for E = (e, 0)
    int block_corner = 0;         // dim E T F, F = 1 - E
    int block_right = 0;          // dim F T F
};

/// First nontrivial idempotent e of A (deterministic enumeration order) with
/// (1-e)Ae = 0 and (1-e)Me = 0, plus the block dimensions of the induced
/// decomposition of the total algebra at (e, 0). `candidates` replaces the
/// exhaustive search when supplied (the only route over Q).
TriangularSearch find_triangular_representation(const TrivialExtension& t, long cap,
                                                const std::vector<Vec>* candidates = nullptr);

struct TypeStarReport {
    bool e_nontrivial_idempotent;
    bool eAf_zero;       // e A f = 0, f = 1 - e
    bool cond_emf;       // (1) e m f = m for all m
    bool cond_kill;      // (2) f m = 0 = m e
    bool cond_identity;  // (3) e m = m = m f
    bool cond_squeeze;   // (4) a m = (eae) m and m a = m (faf)
    bool conditions_agree;
    bool is_type_star;   // eAf_zero && cond_emf
};

/// Decide the type-(*) property at a given idempotent of A, reporting the
/// defining pair of identities and the four equivalent idempotent conditions.
/// Throws Error(invalid_argument) if e is not idempotent.
TypeStarReport is_type_star(const TrivialExtension& t, const Vec& e);

} // namespace algcoh

#endif
