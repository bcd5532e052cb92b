#pragma once

#include "apnext/field.hpp"
#include "apnext/vecfun.hpp"

namespace apnext {

/// Ortho-derivative of a quadratic APN function: the unique pi with
/// pi(0) = 0, pi(alpha) != 0 and tr(pi(alpha) * B_alpha(x)) = 0 for all x,
/// where B_alpha(x) = F(x) + F(x+alpha) + F(alpha) + F(0).
struct OrthoDerivative {
    VectorialFunction pi;
};

/// Truth table of B_alpha; GF(2)-linear whenever F is quadratic.
VectorialFunction b_alpha(const VectorialFunction& f, Elem alpha);

/// Computes pi by solving, per alpha, the trace-orthogonality system on the
/// (n-1)-dimensional image of B_alpha. Throws std::invalid_argument when F
/// is not quadratic and std::domain_error when some image has rank != n-1
/// (i.e. F is not APN).
OrthoDerivative ortho_derivative(const FieldCtx& ctx, const VectorialFunction& f);

}  // namespace apnext
