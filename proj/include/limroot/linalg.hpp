#pragma once

#include <limroot/rational.hpp>

#include <vector>

namespace limroot {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row-major

Rat dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& c, const Vec& v);
Vec neg(const Vec& v);
bool is_zero(const Vec& v);

Mat transpose(const Mat& m);
Vec mat_vec(const Mat& m, const Vec& v);
Mat mat_mul(const Mat& a, const Mat& b);
Mat identity(std::size_t n);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<std::size_t> rref(Mat& m);
std::size_t rank(Mat m);

// Basis of {x : m x = 0}.
std::vector<Vec> nullspace(const Mat& m);

// Solve m x = b; throws InvariantViolation if inconsistent or underdetermined
// columns are involved (expects full column rank).
Vec solve(const Mat& m, const Vec& b);

// Basis of {x in span(space) : <x, v> = 0 for all v in constraints}.
std::vector<Vec> orthogonal_complement(const std::vector<Vec>& space,
                                       const std::vector<Vec>& constraints);

}  // namespace limroot
