#pragma once

#include <utility>

#include "dehnkit/matrix.hpp"
#include "dehnkit/presentation.hpp"

namespace dehnkit {

using JacobianMatrix = Matrix<GroupRingElement>;

/// Entry (i, j) = d r_i / d x_j, as spelled.
JacobianMatrix jacobian(const Presentation& p);

/// Images of the generators of a region-based presentation (Dehn or main).
Specialization region_alpha(const Presentation& p, const Shading& s);
/// Images of Wirtinger arc generators: arc of component j -> t_j.
Specialization wirtinger_alpha(const Presentation& p, const LinkDiagram& d);

LaurentMatrix specialize_jacobian(const JacobianMatrix& j, const Specialization& m);
/// Fox derivatives specialized directly, without group ring intermediates.
LaurentMatrix jacobian_alpha(const Presentation& p, const Specialization& alpha);
LaurentMatrix jacobian_tau(const Presentation& p, const Specialization& alpha);
IntMatrix jacobian_nu(const Presentation& p, const Specialization& alpha);
IntMatrix evaluate_at_minus_one(const LaurentMatrix& m);

/// Reduced Goeritz matrix from crossing data.
IntMatrix goeritz_direct(const LinkDiagram& d, const Shading& s);
/// Leading n x n block of J^nu of the main presentation; throws if the S columns are not zero.
IntMatrix goeritz_via_jacobian(const LinkDiagram& d, const Shading& s, const CheckerboardGraph& g);

/// Thrown for Seifert requests on non-special or split diagrams.
class NotSpecialError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// H+ from dots placed left of each under-strand.
IntMatrix seifert_plus_dots(const LinkDiagram& d, const Shading& s);
/// H- = transpose of H+.
IntMatrix seifert_minus(const LinkDiagram& d, const Shading& s);
/// (A, B) read from return values W_i = A_i S0 B_i^-1.
std::pair<IntMatrix, IntMatrix> seifert_from_words(const LinkDiagram& d, const Shading& s, const CheckerboardGraph& g);

/// J^tau of the main presentation of a special non-split diagram; checks that
/// the last column vanishes and the leading block is H- - t H+.
LaurentMatrix alexander_matrix_special(const LinkDiagram& d, const Shading& s, const CheckerboardGraph& g);

/// gcd of the maximal minors of a tau-specialized Jacobian after deleting one
/// column (0 when there are fewer than cols - 1 rows), normalized.
LaurentPoly alexander_polynomial(const LaurentMatrix& jtau);
LaurentPoly normalize_alexander(const LaurentPoly& q);

/// Wirtinger route: one relator per piece with crossings is dropped first.
LaurentPoly wirtinger_alexander(const LinkDiagram& d);
/// Main presentation route.
LaurentPoly main_alexander(const LinkDiagram& d, const Shading& s, const CheckerboardGraph& g);

bool hnn_sufficient(const IntMatrix& a, const IntMatrix& b);

bool all_eta_equal(const LinkDiagram& d, const Shading& s);
/// Over and under passages alternate along every component.
bool is_alternating(const LinkDiagram& d);

}  // namespace dehnkit
