#pragma once

#include <cstddef>
#include <vector>

#include "evreg/mpoly.hpp"
#include "evreg/numfield.hpp"

namespace evreg {

using IntegerMatrix = std::vector<std::vector<Integer>>;

// Rank of an integer matrix by fraction-free (Bareiss) elimination. A
// full-rank answer modulo a large prime is accepted as a certificate first,
// since reduction mod p can only lower the rank.
std::size_t integer_rank(IntegerMatrix rows);

// Rank over the rows' field. Over Q the rows are scaled to integers and handed
// to integer_rank; over an extension plain Gaussian elimination is used.
std::size_t exact_rank(std::vector<std::vector<FieldElement>> rows);

// Determinant of a square matrix of polynomials (Bareiss; every division is
// exact). The empty matrix has determinant 1.
MPoly determinant(std::vector<std::vector<MPoly>> m, const FieldPtr& field, int nvars);

// Basis of the integer left kernel {v : v * rows = 0}, computed with
// unimodular row operations (Hermite-style elimination).
IntegerMatrix integer_left_kernel(const IntegerMatrix& rows);

}  // namespace evreg
