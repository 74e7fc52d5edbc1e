#include "cluscat/numeric.hpp"

#include <algorithm>
#include <sstream>

namespace cluscat {

IntVec vec_add(const IntVec& a, const IntVec& b) {
    require(a.size() == b.size(), "vec_add: dimension mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
    require(a.size() == b.size(), "vec_sub: dimension mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVec vec_neg(const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

IntVec vec_scale(const Int& c, const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

bool vec_is_zero(const IntVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

Int vec_content(const IntVec& a) {
    Int g = 0;
    for (const Int& x : a) g = gcd(g, x);
    return g;
}

IntVec primitive(const IntVec& a) {
    Int g = vec_content(a);
    if (g == 0) return a;
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
    return r;
}

int vec_sign(const IntVec& a) {
    bool has_pos = false, has_neg = false;
    for (const Int& x : a) {
        if (x > 0) has_pos = true;
        if (x < 0) has_neg = true;
    }
    if (has_pos && !has_neg) return 1;
    if (has_neg && !has_pos) return -1;
    return 0;
}

IntMat identity_matrix(std::size_t n) {
    IntMat m(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    require(!a.empty() && a[0].size() == k, "mat_mul: shape mismatch");
    IntMat r(n, IntVec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

IntVec mat_col(const IntMat& m, std::size_t j) {
    IntVec c(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) c[i] = m[i][j];
    return c;
}

IntMat mat_transpose(const IntMat& m) {
    if (m.empty()) return {};
    IntMat r(m[0].size(), IntVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[0].size(); ++j) r[j][i] = m[i][j];
    return r;
}

RatMat mat_inverse_rational(const RatMat& m) {
    std::size_t n = m.size();
    RatMat a(n, RatVec(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        require(p < n, "mat_inverse: singular matrix");
        std::swap(a[c], a[p]);
        Rat pv = a[c][c];
        for (auto& x : a[c]) x /= pv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rat f = a[r][c];
            for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    RatMat inv(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

IntMat mat_inverse_unimodular(const IntMat& m) {
    std::size_t n = m.size();
    RatMat rm(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rm[i][j] = Rat(m[i][j]);
    RatMat inv = mat_inverse_rational(rm);
    IntMat out(n, IntVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            require(boost::multiprecision::denominator(inv[i][j]) == 1,
                    "mat_inverse_unimodular: matrix is not unimodular");
            out[i][j] = boost::multiprecision::numerator(inv[i][j]);
        }
    return out;
}

Int mat_det(const IntMat& m) {
    // fraction-free Bareiss
    std::size_t n = m.size();
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return n == 0 ? Int(1) : Int(sign) * a[n - 1][n - 1];
}

bool solve_linear(const RatMat& m, const RatVec& rhs, RatVec& out) {
    std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    RatMat a(rows, RatVec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];
        a[i][cols] = rhs[i];
    }
    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        Rat pv = a[r][c];
        for (auto& x : a[r]) x /= pv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (std::size_t j = 0; j <= cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (a[i][cols] != 0) return false;
    out.assign(cols, Rat(0));
    for (std::size_t i = 0; i < r; ++i) out[pivot_col[i]] = a[i][cols];
    return true;
}

std::size_t mat_rank(RatMat m) {
    std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

std::vector<IntVec> integer_kernel_of_row(const IntVec& row) {
    std::size_t n = row.size();
    std::vector<IntVec> basis;
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
        if (row[i] != 0) { piv = i; break; }
    if (piv == n) {
        for (std::size_t i = 0; i < n; ++i) {
            IntVec e(n, 0);
            e[i] = 1;
            basis.push_back(e);
        }
        return basis;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (i == piv) continue;
        IntVec v(n, 0);
        // row[piv]*x_piv + row[i]*x_i = 0
        Int g = gcd(row[piv], row[i]);
        if (g == 0) g = 1;
        v[i] = row[piv] / g;
        v[piv] = -row[i] / g;
        basis.push_back(primitive(v));
    }
    return basis;
}

Int binomial(const Int& e, std::size_t j) {
    Int num = 1, den = 1;
    for (std::size_t i = 0; i < j; ++i) {
        num *= (e - Int(i));
        den *= Int(i + 1);
    }
    require(num % den == 0, "binomial: non-integral result");
    return num / den;
}

std::string to_string(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

}  // namespace cluscat
