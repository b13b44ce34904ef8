#ifndef ALGCOH_FIXTURES_HPP
#define ALGCOH_FIXTURES_HPP

#include <string>
#include <vector>

#include "algcoh/trivext.hpp"

namespace algcoh {

// Built-in extensions, generated programmatically and parameterized over the
// field. Registry:
//   dual_numbers       F x| F (regular)            ~ F[x]/(x^2)
//   prod_ff_self       (F x F) x| (F x F) regular
//   tri_fff            (F x F) x| F with (a,b)m = am, m(a,b) = mb   ~ Tri(F,F,F)
//   tri_self           Tri(F,F,F) x| itself (regular)
//   example_SN         S x| N, S = Tri(F,F,F), N the corner with the two
//                      actions swapped across the diagonal
//   dual_bimodule_tri  Tri(F,F,F) x| its dual bimodule
//   m2_self            M_2(F) x| M_2(F) regular
//   m2_dual            M_2(F) x| dual bimodule

std::vector<std::string> fixture_names();

bool is_fixture_name(const std::string& name);

/// Builds a registered fixture over the given field. Throws
/// Error(invalid_argument) for unknown names.
TrivialExtension build_fixture(const std::string& name, const FieldSpec& field);

/// The triangular matrix algebra Tri(F; F; F) over the base field, basis
/// ordered (diagonal A, corner, diagonal B).
AlgebraPtr tri_fff_algebra(const FieldSpec& field);

/// The corner bimodule N over Tri(F;F;F) acted on through the opposite
/// diagonal components: x.n uses the B-component, n.x the A-component.
BimodulePtr example_sn_module(const AlgebraPtr& s);

} // namespace algcoh

#endif
