#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace cluscat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline void require(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
}

inline int sgn(const Int& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
inline int sgn(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline Int gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) { Int t = a % b; a = b; b = t; }
    return a;
}

IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_neg(const IntVec& a);
IntVec vec_scale(const Int& c, const IntVec& a);
bool vec_is_zero(const IntVec& a);
Int vec_content(const IntVec& a);
// divide out the content; zero vector stays zero
IntVec primitive(const IntVec& a);
// +1 if entrywise >=0 and nonzero, -1 if entrywise <=0 and nonzero, 0 otherwise
int vec_sign(const IntVec& a);

IntMat identity_matrix(std::size_t n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_col(const IntMat& m, std::size_t j);
IntMat mat_transpose(const IntMat& m);
// exact inverse; requires det = +-1 (unimodular); throws otherwise
IntMat mat_inverse_unimodular(const IntMat& m);
RatMat mat_inverse_rational(const RatMat& m);
Int mat_det(const IntMat& m);

// solve m * x = rhs exactly; empty result if singular
bool solve_linear(const RatMat& m, const RatVec& rhs, RatVec& out);

// rank of a rational matrix (Gaussian elimination)
std::size_t mat_rank(RatMat m);

// integer kernel basis of a 1 x n "row" given by an integer vector:
// returns n-1 (or n, if the row is zero) integer vectors spanning row^perp.
std::vector<IntVec> integer_kernel_of_row(const IntVec& row);

// generalized binomial coefficient C(e, j) for integer e (possibly negative), j >= 0
Int binomial(const Int& e, std::size_t j);

std::string to_string(const IntVec& v);

}  // namespace cluscat
