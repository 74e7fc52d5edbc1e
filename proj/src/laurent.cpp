#include "cluscat/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace cluscat {

bool GradedLexLess::operator()(const IntVec& a, const IntVec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    Int da = 0, db = 0;
    for (const Int& x : a) da += x;
    for (const Int& x : b) db += x;
    if (da != db) return da < db;
    return a < b;
}

LaurentExpr LaurentExpr::monomial(const IntVec& exp, Int coeff) {
    LaurentExpr f(exp.size());
    if (coeff != 0) f.terms_[exp] = std::move(coeff);
    return f;
}

LaurentExpr LaurentExpr::one(std::size_t rank) {
    return monomial(IntVec(rank, 0), 1);
}

Int LaurentExpr::coeff(const IntVec& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentExpr::add_term(const IntVec& exp, const Int& c) {
    require(exp.size() == rank_, "LaurentExpr: exponent rank mismatch");
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentExpr& LaurentExpr::operator+=(const LaurentExpr& o) {
    require(rank_ == o.rank_ || terms_.empty() || o.terms_.empty(),
            "LaurentExpr: rank mismatch in +");
    if (terms_.empty()) rank_ = o.rank_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentExpr& LaurentExpr::operator-=(const LaurentExpr& o) {
    require(rank_ == o.rank_ || terms_.empty() || o.terms_.empty(),
            "LaurentExpr: rank mismatch in -");
    if (terms_.empty()) rank_ = o.rank_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentExpr operator*(const LaurentExpr& a, const LaurentExpr& b) {
    require(a.rank() == b.rank(), "LaurentExpr: rank mismatch in *");
    LaurentExpr r(a.rank());
    for (const auto& [e1, c1] : a.terms())
        for (const auto& [e2, c2] : b.terms()) r.add_term(vec_add(e1, e2), c1 * c2);
    return r;
}

LaurentExpr LaurentExpr::negated() const {
    LaurentExpr r(rank_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

std::pair<IntVec, Int> LaurentExpr::monomial_term() const {
    require(terms_.size() == 1, "LaurentExpr: not a monomial");
    return *terms_.begin();
}

LaurentExpr LaurentExpr::shifted(const IntVec& exp, const Int& c) const {
    LaurentExpr r(rank_);
    for (const auto& [e, v] : terms_) r.terms_[vec_add(e, exp)] = v * c;
    return r;
}

std::string LaurentExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c << "*z^" << to_string(e);
    }
    return os.str();
}

Int exp_degree(const IntVec& exp, std::size_t offset) {
    Int d = 0;
    for (std::size_t i = offset; i < exp.size(); ++i) d += exp[i];
    return d;
}

LaurentExpr truncate_relative(const LaurentExpr& f, std::size_t offset, const Int& base_deg,
                              int order) {
    LaurentExpr r(f.rank());
    for (const auto& [e, c] : f.terms())
        if (exp_degree(e, offset) - base_deg <= order) r.add_term(e, c);
    return r;
}

LaurentExpr mul_truncated(const LaurentExpr& a, const LaurentExpr& b, std::size_t offset,
                          const Int& base_deg, int order) {
    require(a.rank() == b.rank(), "mul_truncated: rank mismatch");
    LaurentExpr r(a.rank());
    for (const auto& [e1, c1] : a.terms())
        for (const auto& [e2, c2] : b.terms()) {
            IntVec e = vec_add(e1, e2);
            if (exp_degree(e, offset) - base_deg <= order) r.add_term(e, c1 * c2);
        }
    return r;
}

LaurentExpr pow_int(const LaurentExpr& f, const Int& e, std::size_t offset, int order) {
    IntVec zero(f.rank(), 0);
    require(f.coeff(zero) == 1, "pow_int: constant term must be 1");
    LaurentExpr unit = LaurentExpr::one(f.rank());
    if (e == 0) return unit;
    LaurentExpr base = truncate_relative(f, offset, 0, order);
    if (e < 0) {
        // geometric inversion of 1 + g
        LaurentExpr g = base - unit;
        LaurentExpr inv = unit, term = unit;
        int sign = 1;
        while (true) {
            term = mul_truncated(term, g, offset, 0, order);
            if (term.is_zero()) break;
            sign = -sign;
            inv += (sign > 0 ? term : term.negated());
        }
        base = inv;
    }
    Int n = e < 0 ? -e : e;
    LaurentExpr res = unit;
    while (n > 0) {
        if ((n & 1) != 0) res = mul_truncated(res, base, offset, 0, order);
        base = mul_truncated(base, base, offset, 0, order);
        n >>= 1;
    }
    return res;
}

MonomialMap MonomialMap::inversion(std::size_t rank) {
    IntMat m = identity_matrix(rank);
    for (std::size_t i = 0; i < rank; ++i) m[i][i] = -1;
    return MonomialMap(m);
}

IntVec MonomialMap::apply(const IntVec& exp) const {
    require(exp.size() == source_rank(), "MonomialMap: rank mismatch");
    IntVec out(target_rank(), 0);
    for (std::size_t i = 0; i < target_rank(); ++i)
        for (std::size_t j = 0; j < exp.size(); ++j) out[i] += m_[i][j] * exp[j];
    return out;
}

LaurentExpr MonomialMap::apply(const LaurentExpr& f) const {
    LaurentExpr r(target_rank());
    for (const auto& [e, c] : f.terms()) r.add_term(apply(e), c);
    return r;
}

// ---------------------------------------------------------------- WallSeries

void WallSeries::trim() {
    while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
    if (c_.empty()) c_.push_back(Int(1));
}

WallSeries WallSeries::binomial_power(const Int& w, std::size_t cap) {
    std::vector<Int> c;
    c.reserve(cap + 1);
    for (std::size_t j = 0; j <= cap; ++j) {
        if (w >= 0 && Int(j) > w) break;
        c.push_back(binomial(w, j));
    }
    return WallSeries(std::move(c));
}

bool WallSeries::is_one() const {
    return c_.size() == 1 && c_[0] == 1;
}

bool WallSeries::trivial_up_to(std::size_t cap) const {
    if (c_[0] != 1) return false;
    for (std::size_t j = 1; j <= cap && j < c_.size(); ++j)
        if (c_[j] != 0) return false;
    return true;
}

WallSeries WallSeries::truncated(std::size_t cap) const {
    std::vector<Int> c(c_.begin(), c_.begin() + std::min(c_.size(), cap + 1));
    return WallSeries(std::move(c));
}

WallSeries WallSeries::times(const WallSeries& o, std::size_t cap) const {
    std::vector<Int> r(cap + 1, Int(0));
    for (std::size_t i = 0; i < c_.size() && i <= cap; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size() && i + j <= cap; ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return WallSeries(std::move(r));
}

WallSeries WallSeries::pow(const Int& e, std::size_t cap) const {
    require(c_[0] == 1, "WallSeries::pow: constant term must be 1");
    WallSeries unit;
    if (e == 0) return unit;
    WallSeries base = truncated(cap);
    if (e < 0) {
        std::vector<Int> inv(cap + 1, Int(0));
        inv[0] = 1;
        for (std::size_t j = 1; j <= cap; ++j) {
            Int s = 0;
            for (std::size_t i = 1; i <= j && i < base.c_.size(); ++i) s += base.c_[i] * inv[j - i];
            inv[j] = -s;
        }
        base = WallSeries(std::move(inv));
    }
    Int n = e < 0 ? -e : e;
    WallSeries res = unit;
    while (n > 0) {
        if ((n & 1) != 0) res = res.times(base, cap);
        base = base.times(base, cap);
        n >>= 1;
    }
    return res;
}

WallSeries WallSeries::root(std::size_t w, std::size_t cap) const {
    require(c_[0] == 1, "WallSeries::root: constant term must be 1");
    if (w == 1) return truncated(cap);
    // coefficients of g with g^w = this, solved degree by degree over Q;
    // the result must be integral (wall functions in scope are exact powers)
    std::vector<Rat> g(cap + 1, Rat(0));
    g[0] = 1;
    for (std::size_t j = 1; j <= cap; ++j) {
        // compute (current g)^w coefficient at j with g[j] still 0
        std::vector<Rat> cur(cap + 1, Rat(0));
        cur[0] = 1;
        for (std::size_t rep = 0; rep < w; ++rep) {
            std::vector<Rat> nxt(cap + 1, Rat(0));
            for (std::size_t a = 0; a <= cap; ++a) {
                if (cur[a] == 0) continue;
                for (std::size_t b = 0; a + b <= cap; ++b) {
                    if (g[b] == 0) continue;
                    nxt[a + b] += cur[a] * g[b];
                }
            }
            cur = std::move(nxt);
        }
        Rat need = Rat(coeff(j)) - cur[j];
        g[j] = need / Rat(Int(w));
    }
    std::vector<Int> out(cap + 1);
    for (std::size_t j = 0; j <= cap; ++j) {
        require(boost::multiprecision::denominator(g[j]) == 1,
                "WallSeries::root: function is not an exact " + std::to_string(w) + "-th power");
        out[j] = boost::multiprecision::numerator(g[j]);
    }
    return WallSeries(std::move(out));
}

WallSeries WallSeries::pow(const Rat& e, std::size_t cap) const {
    Int num = boost::multiprecision::numerator(e);
    Int den = boost::multiprecision::denominator(e);
    if (den == 1) return pow(num, cap);
    std::size_t w = den.convert_to<std::size_t>();
    return root(w, cap).pow(num, cap);
}

std::string WallSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (j == 0) os << c_[j];
        else os << c_[j] << "*t^" << j;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace cluscat
