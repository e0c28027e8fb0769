#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "lieslice/rational.hpp"

namespace lieslice {

using ZVec = std::vector<mpz_class>;
using ZMat = std::vector<ZVec>;  // rectangular, row major

/// u * a * v = d with u, v unimodular and d diagonal with the usual
/// divisibility chain. Drives saturated-kernel and torus-solve routines.
struct Smith {
    ZMat u, d, v;
};

Smith smith_normal_form(const ZMat& a);

/// Rows span {x : a x = 0} as a saturated lattice (every integer point of
/// the rational kernel is an integer combination of the rows).
ZMat integer_kernel(const ZMat& a);

/// X with w X = I over the integers, when it exists (requires the row
/// lattice of w to be saturated of full row rank).
std::optional<ZMat> integer_right_inverse(const ZMat& w);

/// Clears denominators and divides by the content; first nonzero entry is
/// made positive. Throws InputError on the zero vector.
ZVec primitive_integer_vector(const QVec& v);

QVec to_qvec(const ZVec& v);
ZMat zmat_from_rows(const std::vector<ZVec>& rows);

}  // namespace lieslice
