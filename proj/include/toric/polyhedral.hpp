/**
 * Rational polyhedral cones and complete fans.
 *
 * A Cone is stored in a canonical form: primitive extreme rays sorted
 * lexicographically, a Hermite-normal-form basis of the saturated lattice
 * spanned by the cone (which fixes its orientation), and primitive facet
 * normals cutting the cone out of its span. A Fan indexes all cones of all
 * its maximal cones' face lattices, sorted by (dimension, rays), so that
 * every derived object (chain complexes, spectral pages) is deterministic.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/exact_linalg.hpp"

namespace toric {

/// Canonical identity of a cone: its sorted primitive extreme rays.
using ConeKey = std::vector<std::vector<Integer>>;

class Cone {
public:
    /// Build a cone from generating lattice vectors (columns). Generators
    /// are normalized to primitive vectors, redundant ones are dropped, and
    /// the result is canonical. Throws NotStrictlyConvex if the generators
    /// span a line.
    static Cone from_rays(const IntMatrix& generators, Index ambient_rank);

    static Cone zero_cone(Index ambient_rank);

    Index ambient_rank() const { return ambient_rank_; }
    Index dim() const { return dim_; }
    bool is_zero() const { return dim_ == 0; }
    Index num_rays() const { return rays_.cols(); }

    /// Primitive extreme rays, lexicographically sorted columns.
    const IntMatrix& rays() const { return rays_; }

    /// HNF basis of (R-span of the cone) intersected with the lattice; its
    /// column order fixes the reference orientation of the cone.
    const IntMatrix& oriented_basis() const { return oriented_basis_; }

    /// Primitive functionals u with cone = span /\ {<u,.> >= 0 for all u};
    /// one per facet, deterministic order.
    const IntMatrix& facet_normals() const { return facet_normals_; }

    /// +1 or -1 relative to the reference basis orientation.
    int orientation() const { return orientation_; }

    Cone with_orientation(int sign) const;

    ConeKey key() const;

    /// All faces, including the zero cone and the cone itself, canonical and
    /// sorted by (dimension, rays).
    std::vector<Cone> faces() const;

    std::string to_string() const;

private:
    Index ambient_rank_ = 0;
    Index dim_ = 0;
    IntMatrix rays_;            // ambient_rank x num_rays
    IntMatrix oriented_basis_;  // ambient_rank x dim
    IntMatrix facet_normals_;   // ambient_rank x num_facets
    int orientation_ = 1;
};

/// Facet normals of the cone spanned by `generators`, as a free function
/// (the same data Cone::from_rays computes and stores).
IntMatrix dual_description(const IntMatrix& generators, Index ambient_rank);

/**
 * Incidence sign between a facet and a cone, comparing the orientation the
 * cone induces on the facet against the facet's own orientation. The cone
 * induces its orientation through any supporting functional u cutting out
 * the facet and any w in the cone with <u, w> > 0; the result does not
 * depend on those choices. Throws NotFacet when dim(facet) != dim(cone)-1
 * or the first argument is not a face.
 */
int incidence_sign(const Cone& facet, const Cone& cone);

/// incidence_sign with the supporting functional and the transverse vector
/// chosen by the caller; used by the well-definedness property tests.
int incidence_sign_with(const Cone& facet, const Cone& cone, const IntVector& u,
                        const IntVector& w);

/// Intersection of two strictly convex cones, by double description over
/// exact integers.
Cone cone_intersection(const Cone& a, const Cone& b);

class Fan;

struct FanValidation {
    std::vector<std::string> violations;
    bool complete = false;

    bool ok() const { return violations.empty(); }
};

class Fan {
public:
    /// Assemble a fan from its maximal cones; all faces are generated.
    static Fan from_maximal_cones(Index rank, const std::vector<IntMatrix>& max_cone_rays);

    /// Assemble from an explicit cone list without generating faces. Used to
    /// exercise the validator on broken inputs.
    static Fan from_cones(Index rank, std::vector<Cone> cones);

    Index rank() const { return rank_; }
    int num_cones() const { return static_cast<int>(cones_.size()); }
    const Cone& cone(int i) const { return cones_[static_cast<size_t>(i)]; }

    /// Indices of cones of the given codimension, in fan order.
    const std::vector<int>& cones_of_codim(int k) const;

    /// tau <= sigma in the face partial order (including equality).
    bool is_face(int tau, int sigma) const;

    /// Faces of a cone as fan indices (only those present in the fan).
    const std::vector<int>& faces_of(int sigma) const;

    std::vector<int> maximal_cone_indices() const;

    int index_of(const ConeKey& key) const;  // -1 when absent

    /// Z-basis of sigma-perp intersected with the dual lattice, HNF-canonical.
    const IntMatrix& orthogonal_basis(int sigma) const;

    /// Copy of the fan with the given per-cone orientation signs.
    Fan with_orientations(const std::vector<int>& signs) const;

    bool same_combinatorics(const Fan& other) const;

private:
    Index rank_ = 0;
    std::vector<Cone> cones_;                 // sorted by (dim, key)
    std::vector<std::vector<int>> codim_;     // codim k -> cone indices
    std::vector<std::vector<int>> faces_of_;  // per cone, sorted
    std::vector<IntMatrix> orth_;             // per cone
    std::vector<ConeKey> keys_;

    void index_cones();
};

/// Quotient fan together with the bijection onto the star of the quotiented
/// cone and the lattice projection used to build it.
struct QuotientFan {
    Fan fan;
    /// parent_cone[i] = index in the parent fan of the star cone mapping to
    /// quotient cone i.
    std::vector<int> parent_cone;
    /// quotient_index[j] = quotient cone index for parent cone j, or -1.
    std::vector<int> quotient_index;
    IntMatrix projection;  // (rank - dim sigma) x rank
};

/// Check face closure, pairwise intersections, primitivity and completeness.
/// An empty violation list means a valid complete fan.
FanValidation validate_fan(const Fan& fan);

/**
 * Star quotient: the fan in N / (span sigma /\ N) whose cones are the
 * projections of the cones containing sigma. Orientations are transported
 * so that the star subcomplex of the Cech complex coincides, entry for
 * entry, with the Cech complex of the quotient fan.
 */
QuotientFan quotient_fan(const Fan& fan, int sigma);

}  // namespace toric
