#ifndef ALGCOH_LINMAP_HPP
#define ALGCOH_LINMAP_HPP

#include <string>

#include "algcoh/subspace.hpp"

namespace algcoh {

// A linear map from an s-dimensional space to a t-dimensional space is a
// t x s matrix; maps are flattened column-major, i.e. the images of the
// source basis vectors concatenated. This convention is fixed and used by
// the space export format.

Vec flatten_map(const MatrixExact& map);
MatrixExact unflatten_map(const FieldSpec& field, const Vec& flat, int target_dim, int source_dim);

/// A subspace of the space of linear maps between two coordinate spaces,
/// tagged with the object it represents (Der, Innder, E, End, ...).
struct LinearMapSpace {
    std::string tag;
    int source_dim = 0;
    int target_dim = 0;
    Subspace space; // ambient dim = source_dim * target_dim

    int dim() const { return space.dim(); }
    MatrixExact basis_map(int i) const {
        return unflatten_map(space.field(), space.basis_vector(i), target_dim, source_dim);
    }
    bool contains(const MatrixExact& map) const { return space.contains(flatten_map(map)); }
};

} // namespace algcoh

#endif
