#pragma once

#include "cluscat/numeric.hpp"

#include <map>
#include <optional>

namespace cluscat {

// Graded-lexicographic order on exponent vectors: by total entry sum, then lex.
// Gives a deterministic canonical term order for serialization.
struct GradedLexLess {
    bool operator()(const IntVec& a, const IntVec& b) const;
};

// Exact multivariate Laurent polynomial: exponent vector -> big-integer coefficient.
// Exponents may be negative. No zero coefficients are stored.
class LaurentExpr {
public:
    using TermMap = std::map<IntVec, Int, GradedLexLess>;

    LaurentExpr() : rank_(0) {}
    explicit LaurentExpr(std::size_t rank) : rank_(rank) {}

    static LaurentExpr monomial(const IntVec& exp, Int coeff = 1);
    static LaurentExpr one(std::size_t rank);
    static LaurentExpr zero(std::size_t rank) { return LaurentExpr(rank); }

    std::size_t rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Int coeff(const IntVec& exp) const;
    void add_term(const IntVec& exp, const Int& c);

    LaurentExpr& operator+=(const LaurentExpr& o);
    LaurentExpr& operator-=(const LaurentExpr& o);
    friend LaurentExpr operator+(LaurentExpr a, const LaurentExpr& b) { return a += b; }
    friend LaurentExpr operator-(LaurentExpr a, const LaurentExpr& b) { return a -= b; }
    friend LaurentExpr operator*(const LaurentExpr& a, const LaurentExpr& b);
    bool operator==(const LaurentExpr& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }
    bool operator!=(const LaurentExpr& o) const { return !(*this == o); }

    LaurentExpr negated() const;

    // True if the expression is a single term.
    bool is_monomial() const { return terms_.size() == 1; }
    // The unique term of a monomial.
    std::pair<IntVec, Int> monomial_term() const;

    // Multiply by a single monomial.
    LaurentExpr shifted(const IntVec& exp, const Int& c = 1) const;

    std::string str() const;

private:
    std::size_t rank_;
    TermMap terms_;
};

// Degree functional d: sum of exponent entries starting at `offset`
// (offset 0 for N-lattice exponents, offset r for (m|n) exponents of M°⊕N).
Int exp_degree(const IntVec& exp, std::size_t offset);

// Drop terms whose degree relative to `base_deg` exceeds `order`.
LaurentExpr truncate_relative(const LaurentExpr& f, std::size_t offset, const Int& base_deg,
                              int order);

// Product with relative-degree truncation.
LaurentExpr mul_truncated(const LaurentExpr& a, const LaurentExpr& b, std::size_t offset,
                          const Int& base_deg, int order);

// f^e for a truncated series f with constant term 1; e may be negative.
// Truncation: keep terms of degree (at `offset`) <= order.
LaurentExpr pow_int(const LaurentExpr& f, const Int& e, std::size_t offset, int order);

// A linear map on exponent lattices applied to every exponent of a LaurentExpr.
// matrix is (target rank) x (source rank); coefficients of colliding images merge.
class MonomialMap {
public:
    MonomialMap() = default;
    explicit MonomialMap(IntMat matrix) : m_(std::move(matrix)) {}

    static MonomialMap identity(std::size_t rank) { return MonomialMap(identity_matrix(rank)); }
    // z^(m,n) -> z^(-m,-n)
    static MonomialMap inversion(std::size_t rank);

    std::size_t source_rank() const { return m_.empty() ? 0 : m_[0].size(); }
    std::size_t target_rank() const { return m_.size(); }
    const IntMat& matrix() const { return m_; }

    IntVec apply(const IntVec& exp) const;
    LaurentExpr apply(const LaurentExpr& f) const;

private:
    IntMat m_;
};

// Univariate series with integer coefficients: sum coeffs[j] * t^j, coeffs[0] = 1 expected
// for wall functions. Dense, truncated at a caller-chosen cap.
class WallSeries {
public:
    WallSeries() : c_{Int(1)} {}
    explicit WallSeries(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    // (1 + t)^w expanded to t^cap
    static WallSeries binomial_power(const Int& w, std::size_t cap);
    static WallSeries one() { return WallSeries(); }

    const std::vector<Int>& coeffs() const { return c_; }
    std::size_t top() const { return c_.size() - 1; }
    Int coeff(std::size_t j) const { return j < c_.size() ? c_[j] : Int(0); }
    bool is_one() const;
    bool trivial_up_to(std::size_t cap) const;

    WallSeries truncated(std::size_t cap) const;
    WallSeries times(const WallSeries& o, std::size_t cap) const;
    // integer power (negative allowed; constant term must be 1)
    WallSeries pow(const Int& e, std::size_t cap) const;
    // exact w-th root with constant term 1; throws if not an exact root
    WallSeries root(std::size_t w, std::size_t cap) const;
    // rational power num/den via root-then-power; exact or throws
    WallSeries pow(const Rat& e, std::size_t cap) const;

    bool operator==(const WallSeries& o) const { return c_ == o.c_; }

    std::string str() const;

private:
    void trim();
    std::vector<Int> c_;
};

}  // namespace cluscat
