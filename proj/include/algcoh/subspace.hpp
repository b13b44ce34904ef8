#ifndef ALGCOH_SUBSPACE_HPP
#define ALGCOH_SUBSPACE_HPP

#include <vector>

#include "algcoh/matrix.hpp"

namespace algcoh {

/// Subspace of a coordinate space, stored as a basis in reduced row echelon
/// form (one basis vector per row, distinct pivot columns). The RREF basis is
/// canonical, so equal subspaces compare equal.
class Subspace {
public:
    static Subspace zero(const FieldSpec& field, int ambient_dim);
    static Subspace full(const FieldSpec& field, int ambient_dim);
    static Subspace from_spanning(const FieldSpec& field, int ambient_dim,
                                  const std::vector<Vec>& vectors);
    /// Kernel of m, inside the coordinate space of its columns.
    static Subspace kernel_of(const MatrixExact& m);
    /// Row space of m.
    static Subspace row_space_of(const MatrixExact& m);

    const FieldSpec& field() const { return basis_.field(); }
    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const MatrixExact& basis() const { return basis_; }
    Vec basis_vector(int i) const { return basis_.row(i); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& other) const;

    friend Subspace subspace_sum(const Subspace& u, const Subspace& w);
    friend Subspace subspace_intersect(const Subspace& u, const Subspace& w);

    /// Basis vectors of `super` (taken in RREF order) that extend this
    /// subspace's basis to a basis of `super`; the canonical coset
    /// representatives for super/this. Throws unless this <= super.
    std::vector<Vec> complete_to(const Subspace& super) const;

private:
    Subspace(int ambient, MatrixExact basis) : ambient_(ambient), basis_(std::move(basis)) {}

    int ambient_;
    MatrixExact basis_; // RREF, dim() rows
};

/// dim(w) - dim(u); requires u <= w (input error otherwise).
int quotient_dim(const Subspace& u, const Subspace& w);

} // namespace algcoh

#endif
