#pragma once

#include "cluscat/numeric.hpp"

#include <set>
#include <string>
#include <vector>

namespace cluscat {

// A seed: lattice basis with skew form {e_i, e_j}, per-index multipliers d_i,
// and an optional frozen subset. The exchange matrix is eps_ij = skew_ij * d_j.
struct Seed {
    std::size_t rank = 0;
    std::vector<std::string> labels;  // one per index; defaults "1".."r"
    IntMat skew;                      // skew_ij = {e_i, e_j}, skew-symmetric
    IntVec d;                         // positive multipliers
    std::set<std::size_t> frozen;     // 0-based indices

    Seed() = default;
    Seed(IntMat skew_matrix, IntVec multipliers);

    void validate() const;

    IntMat exchange_matrix() const;
    Int exchange(std::size_t i, std::size_t j) const { return skew[i][j] * d[j]; }

    // {a, b} for a, b in N coordinates
    Int skew_pair(const IntVec& a, const IntVec& b) const;

    // <n, m> for n in N coordinates and m in M°-coordinates (basis f_i = e_i*/d_i)
    Rat pairing(const IntVec& n, const IntVec& m_fcoords) const;
    Rat pairing(const IntVec& n, const RatVec& m_fcoords) const;

    // {n, .} as a vector in M°-f-coordinates: w_a = (sum_j n_j skew[j][a]) * d_a
    IntVec skew_functional(const IntVec& n) const;

    // ({n,.}, n) in M°⊕N coordinates (length 2*rank)
    IntVec x_vector(const IntVec& n) const;

    // smallest positive integer w with w * <n0, f_a> integral for all a
    Int pairing_denominator(const IntVec& n0) const;

    bool operator==(const Seed& o) const {
        return rank == o.rank && skew == o.skew && d == o.d && frozen == o.frozen;
    }
};

// Standard Fomin-Zelevinsky matrix mutation of the exchange matrix.
IntMat mutate_exchange_matrix(const IntMat& eps, std::size_t k);

// Seed with principal-coefficient tracking: the exchange matrix together with
// the c-vector basis (columns of c_plus) for the positive chambers and the
// mirrored tracking (c_minus, seeded at -identity) for the negative chambers.
class PrincipalSeed {
public:
    explicit PrincipalSeed(Seed seed);

    const Seed& base() const { return base_; }
    const IntMat& exchange() const { return eps_; }
    const IntMat& c_matrix() const { return c_plus_; }
    const IntMat& c_matrix_minus() const { return c_minus_; }
    const std::vector<std::size_t>& history() const { return history_; }

    IntVec c_vector(std::size_t k) const { return mat_col(c_plus_, k); }
    // tropical sign of the k-th c-vector; fails if not sign-coherent
    int tropical_sign(std::size_t k) const;
    bool is_green(std::size_t k) const { return vec_sign(c_vector(k)) == 1; }
    // all c-vector columns entrywise nonpositive
    bool all_red() const;
    // the final c-matrix is minus a permutation matrix
    bool c_matrix_is_negated_permutation() const;

    // g-vector matrix G = D * C^{-T}; columns span the chamber C_v^+
    IntMat g_matrix() const;
    // mirrored g-matrix for the negative chamber C_v^-
    IntMat g_matrix_minus() const;

    PrincipalSeed mutated(std::size_t k) const;
    void mutate(std::size_t k);

    // canonical identity of the vertex in the mutation tree
    std::pair<IntMat, IntMat> key() const { return {eps_, c_plus_}; }

private:
    static void mutate_c(const IntMat& eps, IntMat& C, std::size_t k);

    Seed base_;
    IntMat eps_;
    IntMat c_plus_;
    IntMat c_minus_;
    std::vector<std::size_t> history_;
};

// True iff every mutation occurs at a green vertex and the final c-matrix has
// all columns nonpositive. Indices are 0-based.
bool is_maximal_green_sequence(const Seed& s, const std::vector<std::size_t>& seq);

// Depth-bounded mutation tree, memoized by (exchange matrix, c-matrix).
class MutationTree {
public:
    struct Vertex {
        PrincipalSeed seed;
        std::size_t depth;
        // parent vertex and edge direction (root: npos)
        std::size_t parent;
        std::size_t edge_dir;
    };

    MutationTree(const Seed& root, std::size_t max_depth, std::size_t max_vertices = 100000);

    const std::vector<Vertex>& vertices() const { return verts_; }
    // true if the tree closed up within the depth bound (finite type)
    bool closed() const { return closed_; }
    std::size_t vertex_count() const { return verts_.size(); }

    // neighbor vertex index along direction k (npos if outside the explored set)
    std::size_t neighbor(std::size_t v, std::size_t k) const;

private:
    std::vector<Vertex> verts_;
    std::map<std::pair<IntMat, IntMat>, std::size_t> index_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edges_;
    bool closed_ = false;
};

}  // namespace cluscat
