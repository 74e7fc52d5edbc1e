#include "cluscat/seed.hpp"

#include <algorithm>
#include <deque>

namespace cluscat {

Seed::Seed(IntMat skew_matrix, IntVec multipliers)
    : rank(skew_matrix.size()), skew(std::move(skew_matrix)), d(std::move(multipliers)) {
    labels.resize(rank);
    for (std::size_t i = 0; i < rank; ++i) labels[i] = std::to_string(i + 1);
    validate();
}

void Seed::validate() const {
    require(skew.size() == rank, "Seed: skew matrix size mismatch");
    for (const auto& row : skew) require(row.size() == rank, "Seed: skew matrix not square");
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j)
            require(skew[i][j] == -skew[j][i], "Seed: skew matrix not skew-symmetric");
    require(d.size() == rank, "Seed: multiplier count mismatch");
    for (const Int& x : d) require(x >= 1, "Seed: multipliers must be positive");
    for (std::size_t i : frozen) require(i < rank, "Seed: frozen index out of range");
}

IntMat Seed::exchange_matrix() const {
    IntMat eps(rank, IntVec(rank));
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) eps[i][j] = skew[i][j] * d[j];
    return eps;
}

Int Seed::skew_pair(const IntVec& a, const IntVec& b) const {
    require(a.size() == rank && b.size() == rank, "skew_pair: dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < rank; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < rank; ++j) s += a[i] * skew[i][j] * b[j];
    }
    return s;
}

Rat Seed::pairing(const IntVec& n, const IntVec& m_fcoords) const {
    Rat s = 0;
    for (std::size_t a = 0; a < rank; ++a) s += Rat(n[a] * m_fcoords[a], d[a]);
    return s;
}

Rat Seed::pairing(const IntVec& n, const RatVec& m_fcoords) const {
    Rat s = 0;
    for (std::size_t a = 0; a < rank; ++a) s += Rat(n[a]) * m_fcoords[a] / Rat(d[a]);
    return s;
}

IntVec Seed::skew_functional(const IntVec& n) const {
    IntVec w(rank, 0);
    for (std::size_t a = 0; a < rank; ++a) {
        Int s = 0;
        for (std::size_t j = 0; j < rank; ++j) s += n[j] * skew[j][a];
        w[a] = s * d[a];
    }
    return w;
}

IntVec Seed::x_vector(const IntVec& n) const {
    IntVec w = skew_functional(n);
    w.insert(w.end(), n.begin(), n.end());
    return w;
}

Int Seed::pairing_denominator(const IntVec& n0) const {
    Int w = 1;
    for (std::size_t a = 0; a < rank; ++a) {
        if (n0[a] == 0) continue;
        Int g = gcd(n0[a] * w, d[a]);
        w *= d[a] / g;
    }
    return w;
}

IntMat mutate_exchange_matrix(const IntMat& eps, std::size_t k) {
    std::size_t n = eps.size();
    IntMat out(n, IntVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == k || j == k) {
                out[i][j] = -eps[i][j];
            } else {
                Int prod = eps[i][k] * eps[k][j];
                out[i][j] = eps[i][j] + Int(sgn(eps[i][k])) * (prod > 0 ? prod : Int(0));
            }
        }
    return out;
}

PrincipalSeed::PrincipalSeed(Seed seed)
    : base_(std::move(seed)),
      eps_(base_.exchange_matrix()),
      c_plus_(identity_matrix(base_.rank)) {
    c_minus_ = c_plus_;
    for (auto& row : c_minus_)
        for (auto& x : row) x = -x;
}

int PrincipalSeed::tropical_sign(std::size_t k) const {
    int s = vec_sign(c_vector(k));
    require(s != 0, "c-vector is not sign-coherent at direction " + std::to_string(k));
    return s;
}

bool PrincipalSeed::all_red() const {
    for (std::size_t k = 0; k < base_.rank; ++k)
        if (vec_sign(c_vector(k)) != -1) return false;
    return true;
}

bool PrincipalSeed::c_matrix_is_negated_permutation() const {
    std::size_t n = base_.rank;
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t nonzero = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (c_plus_[i][j] == 0) continue;
            if (c_plus_[i][j] != -1) return false;
            ++nonzero;
        }
        if (nonzero != 1) return false;
    }
    return true;
}

IntMat PrincipalSeed::g_matrix() const {
    IntMat g = mat_transpose(mat_inverse_unimodular(c_plus_));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) g[i][j] *= base_.d[i];
    return g;
}

IntMat PrincipalSeed::g_matrix_minus() const {
    IntMat g = mat_transpose(mat_inverse_unimodular(c_minus_));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) g[i][j] *= base_.d[i];
    return g;
}

void PrincipalSeed::mutate_c(const IntMat& eps, IntMat& C, std::size_t k) {
    std::size_t n = eps.size();
    int eta = vec_sign(mat_col(C, k));
    require(eta != 0, "mutate: c-vector not sign-coherent");
    // c'_j = c_j + [-eta * eps_{kj}]_+ c_k  (j != k);  c'_k = -c_k
    for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        Int coef = -Int(eta) * eps[k][j];
        if (coef <= 0) continue;
        for (std::size_t i = 0; i < n; ++i) C[i][j] += coef * C[i][k];
    }
    for (std::size_t i = 0; i < n; ++i) C[i][k] = -C[i][k];
}

void PrincipalSeed::mutate(std::size_t k) {
    require(k < base_.rank, "mutate: direction out of range");
    require(!base_.frozen.count(k), "mutate: direction " + std::to_string(k) + " is frozen");
    mutate_c(eps_, c_plus_, k);
    mutate_c(eps_, c_minus_, k);
    eps_ = mutate_exchange_matrix(eps_, k);
    history_.push_back(k);
}

PrincipalSeed PrincipalSeed::mutated(std::size_t k) const {
    PrincipalSeed s = *this;
    s.mutate(k);
    return s;
}

bool is_maximal_green_sequence(const Seed& s, const std::vector<std::size_t>& seq) {
    for (std::size_t k : seq) require(k < s.rank, "green sequence index out of range");
    if (seq.empty()) return false;
    PrincipalSeed ps(s);
    for (std::size_t k : seq) {
        if (!ps.is_green(k)) return false;
        ps.mutate(k);
    }
    return ps.all_red();
}

MutationTree::MutationTree(const Seed& root, std::size_t max_depth, std::size_t max_vertices) {
    PrincipalSeed ps(root);
    verts_.push_back(Vertex{ps, 0, static_cast<std::size_t>(-1), static_cast<std::size_t>(-1)});
    index_[ps.key()] = 0;
    std::deque<std::size_t> queue{0};
    closed_ = true;
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        if (verts_[v].depth >= max_depth) {
            // unexpanded frontier: check whether everything it leads to is already known
            for (std::size_t k = 0; k < root.rank; ++k) {
                if (root.frozen.count(k)) continue;
                PrincipalSeed nb = verts_[v].seed.mutated(k);
                if (!index_.count(nb.key())) closed_ = false;
            }
            continue;
        }
        for (std::size_t k = 0; k < root.rank; ++k) {
            if (root.frozen.count(k)) continue;
            PrincipalSeed nb = verts_[v].seed.mutated(k);
            auto key = nb.key();
            auto it = index_.find(key);
            std::size_t w;
            if (it == index_.end()) {
                w = verts_.size();
                require(w < max_vertices, "MutationTree: vertex budget exceeded");
                verts_.push_back(Vertex{nb, verts_[v].depth + 1, v, k});
                index_[key] = w;
                queue.push_back(w);
            } else {
                w = it->second;
            }
            edges_[{v, k}] = w;
        }
    }
}

std::size_t MutationTree::neighbor(std::size_t v, std::size_t k) const {
    auto it = edges_.find({v, k});
    return it == edges_.end() ? static_cast<std::size_t>(-1) : it->second;
}

}  // namespace cluscat
