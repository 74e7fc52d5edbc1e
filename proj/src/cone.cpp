#include "cluscat/cone.hpp"

#include <algorithm>
#include <set>

namespace cluscat {

namespace {

RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

Rat dot(const IntVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

Int dot_int(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// one integer vector spanning the kernel of the given rows, if the kernel is 1-dim
bool kernel_line(const std::vector<IntVec>& rows, std::size_t dim, IntVec& out) {
    RatMat m;
    for (const auto& r : rows) m.push_back(to_rat(r));
    // find kernel via RREF
    std::size_t nrows = m.size();
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < dim && rank < nrows; ++c) {
        std::size_t p = rank;
        while (p < nrows && m[p][c] == 0) ++p;
        if (p == nrows) continue;
        std::swap(m[rank], m[p]);
        Rat pv = m[rank][c];
        for (auto& x : m[rank]) x /= pv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == rank || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = 0; j < dim; ++j) m[i][j] -= f * m[rank][j];
        }
        pivots.push_back(c);
        ++rank;
    }
    if (rank + 1 != dim) return false;
    // the single free column
    std::vector<bool> is_pivot(dim, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::size_t free_col = dim;
    for (std::size_t c = 0; c < dim; ++c)
        if (!is_pivot[c]) { free_col = c; break; }
    RatVec v(dim, Rat(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < rank; ++i) v[pivots[i]] = -m[i][free_col];
    // clear denominators
    Int lcm = 1;
    for (const auto& x : v) {
        Int den = boost::multiprecision::denominator(x);
        lcm = lcm / gcd(lcm, den) * den;
    }
    out.assign(dim, 0);
    for (std::size_t i = 0; i < dim; ++i)
        out[i] = boost::multiprecision::numerator(v[i]) * (lcm / boost::multiprecision::denominator(v[i]));
    out = primitive(out);
    return true;
}

std::vector<IntVec> rational_kernel(const std::vector<IntVec>& rows, std::size_t dim) {
    RatMat m;
    for (const auto& r : rows) m.push_back(to_rat(r));
    std::size_t nrows = m.size();
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < dim && rank < nrows; ++c) {
        std::size_t p = rank;
        while (p < nrows && m[p][c] == 0) ++p;
        if (p == nrows) continue;
        std::swap(m[rank], m[p]);
        Rat pv = m[rank][c];
        for (auto& x : m[rank]) x /= pv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == rank || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = 0; j < dim; ++j) m[i][j] -= f * m[rank][j];
        }
        pivots.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(dim, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<IntVec> basis;
    for (std::size_t fc = 0; fc < dim; ++fc) {
        if (is_pivot[fc]) continue;
        RatVec v(dim, Rat(0));
        v[fc] = 1;
        for (std::size_t i = 0; i < rank; ++i) v[pivots[i]] = -m[i][fc];
        Int lcm = 1;
        for (const auto& x : v) {
            Int den = boost::multiprecision::denominator(x);
            lcm = lcm / gcd(lcm, den) * den;
        }
        IntVec iv(dim);
        for (std::size_t i = 0; i < dim; ++i)
            iv[i] = boost::multiprecision::numerator(v[i]) *
                    (lcm / boost::multiprecision::denominator(v[i]));
        basis.push_back(primitive(iv));
    }
    return basis;
}

}  // namespace

Cone::Cone(std::size_t ambient_dim, std::vector<IntVec> ray_gens, std::vector<IntVec> lin_gens)
    : ambient(ambient_dim), rays(std::move(ray_gens)), lineality(std::move(lin_gens)) {
    for (auto& r : rays) r = primitive(r);
    for (const auto& r : rays) require(r.size() == ambient, "Cone: ray dimension mismatch");
    for (const auto& l : lineality) require(l.size() == ambient, "Cone: lineality dim mismatch");
}

Cone Cone::full_hyperplane(const IntVec& normal) {
    return Cone(normal.size(), {}, integer_kernel_of_row(normal));
}

Cone Cone::simplicial(const std::vector<IntVec>& ray_gens) {
    require(!ray_gens.empty(), "Cone::simplicial: no generators");
    return Cone(ray_gens[0].size(), ray_gens, {});
}

std::size_t Cone::dim() const {
    RatMat m;
    for (const auto& r : rays) m.push_back(to_rat(r));
    for (const auto& l : lineality) m.push_back(to_rat(l));
    if (m.empty()) return 0;
    return mat_rank(m);
}

bool Cone::contains(const RatVec& x) const {
    require(x.size() == ambient, "Cone::contains: dimension mismatch");
    bool zero = std::all_of(x.begin(), x.end(), [](const Rat& v) { return v == 0; });
    if (zero) return true;
    // generators: rays (lambda >= 0) and lineality (free) -> treat lineality as +-pairs
    std::vector<IntVec> gens = rays;
    for (const auto& l : lineality) {
        gens.push_back(l);
        gens.push_back(vec_neg(l));
    }
    std::size_t n = gens.size();
    if (n == 0) return false;
    // Caratheodory: try subsets of size <= ambient
    std::size_t maxk = std::min(ambient, n);
    std::vector<std::size_t> idx;
    // iterative subset enumeration
    std::vector<std::size_t> stack;
    // simple recursive lambda
    std::function<bool(std::size_t, std::size_t)> try_subsets = [&](std::size_t start,
                                                                    std::size_t remaining) -> bool {
        if (!idx.empty()) {
            RatMat m(ambient, RatVec(idx.size()));
            for (std::size_t j = 0; j < idx.size(); ++j)
                for (std::size_t i = 0; i < ambient; ++i) m[i][j] = Rat(gens[idx[j]][i]);
            RatVec sol;
            if (solve_linear(m, x, sol)) {
                bool ok = std::all_of(sol.begin(), sol.end(), [](const Rat& v) { return v >= 0; });
                if (ok) return true;
            }
        }
        if (remaining == 0 || start >= n) return false;
        for (std::size_t i = start; i < n; ++i) {
            idx.push_back(i);
            if (try_subsets(i + 1, remaining - 1)) return true;
            idx.pop_back();
        }
        return false;
    };
    return try_subsets(0, maxk);
}

bool Cone::contains(const IntVec& x) const { return contains(to_rat(x)); }

IntVec Cone::relative_interior_point() const {
    IntVec p(ambient, 0);
    for (const auto& r : rays) p = vec_add(p, r);
    return p;
}

std::pair<std::vector<IntVec>, std::vector<IntVec>> Cone::canonical() const {
    // facets from generators, then extreme rays back via dual description
    // lineality: canonical RREF basis
    std::vector<IntVec> gen_rows = rays;
    std::vector<IntVec> lin_rows = lineality;
    // compute facet normals: vectors h with h.g >= 0 on all rays, h.l = 0 on lineality,
    // vanishing on a (dim-1)-subset; we reuse dual_description in the dual direction:
    // the dual cone of this cone is { h : h.r >= 0, h.l = 0 }.
    DualDescription dual = dual_description(rays, lineality, ambient);
    // now primal extreme rays = dual description of the dual cone's constraints
    std::vector<IntVec> ineqs = dual.rays;
    std::vector<IntVec> eqs;
    for (const auto& l : dual.lineality) eqs.push_back(l);
    DualDescription primal = dual_description(ineqs, eqs, ambient);
    std::vector<IntVec> r = primal.rays;
    std::sort(r.begin(), r.end());
    // canonical lineality basis: RREF with primitive rows
    std::vector<IntVec> lin;
    {
        RatMat m;
        for (const auto& l : primal.lineality) m.push_back(to_rat(l));
        std::size_t nrows = m.size(), rank = 0;
        for (std::size_t c = 0; c < ambient && rank < nrows; ++c) {
            std::size_t p = rank;
            while (p < nrows && m[p][c] == 0) ++p;
            if (p == nrows) continue;
            std::swap(m[rank], m[p]);
            Rat pv = m[rank][c];
            for (auto& x : m[rank]) x /= pv;
            for (std::size_t i = 0; i < nrows; ++i) {
                if (i == rank || m[i][c] == 0) continue;
                Rat f = m[i][c];
                for (std::size_t j = 0; j < ambient; ++j) m[i][j] -= f * m[rank][j];
            }
            ++rank;
        }
        for (std::size_t i = 0; i < rank; ++i) {
            Int lcm = 1;
            for (const auto& x : m[i]) {
                Int den = boost::multiprecision::denominator(x);
                lcm = lcm / gcd(lcm, den) * den;
            }
            IntVec iv(ambient);
            for (std::size_t j = 0; j < ambient; ++j)
                iv[j] = boost::multiprecision::numerator(m[i][j]) *
                        (lcm / boost::multiprecision::denominator(m[i][j]));
            lin.push_back(primitive(iv));
        }
        std::sort(lin.begin(), lin.end());
    }
    return {r, lin};
}

bool Cone::same_as(const Cone& o) const {
    if (ambient != o.ambient) return false;
    return canonical() == o.canonical();
}

DualDescription dual_description(const std::vector<IntVec>& ineqs, const std::vector<IntVec>& eqs,
                                 std::size_t dim) {
    DualDescription out;
    // lineality: kernel of all rows
    std::vector<IntVec> all_rows = ineqs;
    all_rows.insert(all_rows.end(), eqs.begin(), eqs.end());
    out.lineality = rational_kernel(all_rows, dim);
    std::size_t lin_dim = out.lineality.size();

    // candidate extreme rays: kernels of row subsets of corank 1
    std::set<IntVec> found;
    std::vector<IntVec> pool = ineqs;
    std::size_t need = dim >= lin_dim + 1 ? dim - lin_dim - 1 : 0;
    std::vector<std::size_t> idx;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t remaining) {
        if (remaining == 0) {
            std::vector<IntVec> rows = eqs;
            for (std::size_t i : idx) rows.push_back(pool[i]);
            // the kernel should be lin_dim + 1 dimensional: a line modulo lineality
            std::vector<IntVec> ker = rational_kernel(rows, dim);
            if (ker.size() != lin_dim + 1) return;
            // pick a kernel vector independent of the lineality: try each basis vector
            for (const auto& cand0 : ker) {
                for (int sign_pick = 0; sign_pick < 2; ++sign_pick) {
                    IntVec cand = sign_pick ? vec_neg(cand0) : cand0;
                    // must satisfy all inequalities
                    bool ok = true;
                    bool strict_somewhere = false;
                    for (const auto& row : ineqs) {
                        Int v = dot_int(row, cand);
                        if (v < 0) { ok = false; break; }
                        if (v > 0) strict_somewhere = true;
                    }
                    if (!ok || !strict_somewhere) continue;
                    // reduce modulo lineality? store primitive as is; dedup below
                    found.insert(primitive(cand));
                }
            }
            return;
        }
        for (std::size_t i = start; i + remaining <= pool.size() + 0 && i < pool.size(); ++i) {
            idx.push_back(i);
            rec(i + 1, remaining - 1);
            idx.pop_back();
        }
    };
    if (need == 0) {
        // every feasible direction is a ray candidate only if dim == lin_dim (+1)
        std::vector<IntVec> ker = rational_kernel(eqs, dim);
        for (const auto& cand0 : ker) {
            for (int sp = 0; sp < 2; ++sp) {
                IntVec cand = sp ? vec_neg(cand0) : cand0;
                bool ok = true, strict = false;
                for (const auto& row : ineqs) {
                    Int v = dot_int(row, cand);
                    if (v < 0) { ok = false; break; }
                    if (v > 0) strict = true;
                }
                if (ok && strict) found.insert(primitive(cand));
            }
        }
    } else {
        rec(0, need);
    }
    // filter non-extreme duplicates modulo lineality: keep all; extremality is
    // guaranteed by the corank-1 construction for pointed parts. Dedup modulo lineality:
    std::vector<IntVec> rays;
    for (const auto& r : found) {
        bool dup = false;
        for (const auto& q : rays) {
            // r ~ q if r - lambda q in lineality span for some lambda > 0
            std::vector<IntVec> rows;
            RatMat m(dim, RatVec(1 + out.lineality.size()));
            for (std::size_t i = 0; i < dim; ++i) {
                m[i][0] = Rat(q[i]);
                for (std::size_t j = 0; j < out.lineality.size(); ++j)
                    m[i][1 + j] = Rat(out.lineality[j][i]);
            }
            RatVec sol;
            if (solve_linear(m, to_rat(r), sol) && sol[0] > 0) { dup = true; break; }
        }
        if (!dup) rays.push_back(r);
    }
    out.rays = rays;
    std::sort(out.rays.begin(), out.rays.end());
    return out;
}

Cone intersect_chamber_cones(const IntMat& g1, const IntMat& g2, std::size_t m_dim) {
    // facet normals of cone(g) in the M-factor are rows of g^{-1} (up to scale)
    IntMat f1 = mat_inverse_unimodular(g1);
    IntMat f2 = mat_inverse_unimodular(g2);
    std::vector<IntVec> ineqs;
    for (std::size_t i = 0; i < m_dim; ++i) ineqs.push_back(primitive(f1[i]));
    for (std::size_t i = 0; i < m_dim; ++i) ineqs.push_back(primitive(f2[i]));
    DualDescription dd = dual_description(ineqs, {}, m_dim);
    // embed into M°⊕N: rays in the M factor, lineality includes the whole N factor
    std::vector<IntVec> rays, lin;
    for (const auto& r : dd.rays) {
        IntVec v(2 * m_dim, 0);
        for (std::size_t i = 0; i < m_dim; ++i) v[i] = r[i];
        rays.push_back(v);
    }
    for (const auto& l : dd.lineality) {
        IntVec v(2 * m_dim, 0);
        for (std::size_t i = 0; i < m_dim; ++i) v[i] = l[i];
        lin.push_back(v);
    }
    for (std::size_t i = 0; i < m_dim; ++i) {
        IntVec v(2 * m_dim, 0);
        v[m_dim + i] = 1;
        lin.push_back(v);
    }
    return Cone(2 * m_dim, rays, lin);
}

bool AngularLess2D::operator()(const IntVec& a, const IntVec& b) const {
    auto half = [](const IntVec& v) {
        // 0: positive x-axis; 1: upper half; 2: negative x-axis; 3: lower half
        if (v[1] == 0) return v[0] > 0 ? 0 : 2;
        return v[1] > 0 ? 1 : 3;
    };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    // same open half-plane: compare by cross product
    Int cross = a[0] * b[1] - a[1] * b[0];
    return cross > 0;
}

bool ray_hits_ray(const RatVec& x, const RatVec& dir, const IntVec& ray, Rat& t_out,
                  RatVec& point_out) {
    // x + t*dir = s*ray
    Rat a = dir[0], b = -Rat(ray[0]);
    Rat c = dir[1], d = -Rat(ray[1]);
    Rat det = a * d - b * c;
    if (det == 0) return false;
    Rat rx = -x[0], ry = -x[1];
    Rat t = (rx * d - b * ry) / det;
    Rat s = (a * ry - rx * c) / det;
    if (t <= 0 || s <= 0) return false;
    t_out = t;
    point_out = {x[0] + t * dir[0], x[1] + t * dir[1]};
    return true;
}

}  // namespace cluscat
