#pragma once

#include "cluscat/numeric.hpp"

namespace cluscat {

// Convex rational polyhedral cone, given by ray generators plus lineality generators.
// All exact; no floating point.
struct Cone {
    std::size_t ambient = 0;
    std::vector<IntVec> rays;       // primitive generators
    std::vector<IntVec> lineality;  // basis of the lineality space

    Cone() = default;
    Cone(std::size_t ambient_dim, std::vector<IntVec> ray_gens, std::vector<IntVec> lin_gens = {});

    static Cone full_hyperplane(const IntVec& normal);
    static Cone simplicial(const std::vector<IntVec>& ray_gens);

    // dimension of the linear span
    std::size_t dim() const;
    // exact membership via Caratheodory subsets over the generators
    bool contains(const RatVec& x) const;
    bool contains(const IntVec& x) const;
    // a point in the relative interior (sum of rays plus nothing along lineality)
    IntVec relative_interior_point() const;

    // canonical form for equality comparison: sorted primitive extreme rays
    // plus a canonical lineality basis (reduced row echelon, primitive rows)
    std::pair<std::vector<IntVec>, std::vector<IntVec>> canonical() const;
    bool same_as(const Cone& o) const;
};

// Extreme rays and lineality of { x : row.x >= 0 for all ineqs, row.x = 0 for all eqs }.
// Naive dual description by subset enumeration; exact; intended for small dimensions.
struct DualDescription {
    std::vector<IntVec> rays;
    std::vector<IntVec> lineality;
};
DualDescription dual_description(const std::vector<IntVec>& ineqs, const std::vector<IntVec>& eqs,
                                 std::size_t dim);

// Intersection of two full-dimensional cones of the form (simplicial M-cone) x N_R,
// given by the M-parts as unimodular generator matrices (columns = generators).
// Returns the intersection as a Cone in M°⊕N coordinates (dim 2 * m_dim).
Cone intersect_chamber_cones(const IntMat& g1, const IntMat& g2, std::size_t m_dim);

// Exact angular sort key for 2D integer vectors, counterclockwise from (1,0).
// Usable with std::sort via the comparator below.
struct AngularLess2D {
    bool operator()(const IntVec& a, const IntVec& b) const;
};

// intersection point of the ray {x + t*dir : t > 0} with the open ray {s*ray : s > 0};
// none if parallel or on the wrong side
bool ray_hits_ray(const RatVec& x, const RatVec& dir, const IntVec& ray, Rat& t_out,
                  RatVec& point_out);

}  // namespace cluscat
