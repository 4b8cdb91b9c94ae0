/**
 * The chain complex of a complete fan, free on cones graded by codimension,
 * with incidence signs as differential entries. For complete fans the
 * augmented complex is a resolution of the coefficient ring: homology is Z
 * in degree zero and vanishes elsewhere.
 */

#pragma once

#include <vector>

#include "toric/polyhedral.hpp"

namespace toric {

struct ChainComplex {
    /// basis[k] = fan indices of the codimension-k cones labelling degree k.
    std::vector<std::vector<int>> basis;
    /// boundary[k] : degree k -> degree k-1; boundary[0] is the 0 x rank_0
    /// zero map.
    std::vector<IntMatrix> boundary;

    int top_degree() const { return static_cast<int>(basis.size()) - 1; }
    Index rank(int k) const { return static_cast<Index>(basis[static_cast<size_t>(k)].size()); }
};

/// Degree-k module free on the codimension-k cones; boundary entry at
/// (sigma, tau) is the incidence sign when tau is a facet of sigma. The
/// composite of consecutive boundaries is checked to vanish.
ChainComplex build_cech_complex(const Fan& fan);

/// Homology of the complex in every degree, no expectations attached.
std::vector<FgAbGroup> complex_homology(const ChainComplex& cpx);

/// True iff the all-ones augmentation composes to zero with the first
/// boundary and induces an isomorphism H_0 -> Z.
bool augmentation_check(const Fan& fan, const ChainComplex& cpx);

/// Homology of the fan's complex, checked to be (Z, 0, ..., 0); throws
/// ResolutionFailure otherwise.
std::vector<FgAbGroup> cech_homology(const Fan& fan);

/// Subcomplex spanned by the cones containing sigma, with the ambient
/// incidence signs. Canonically equal, entry for entry, to the complex of
/// quotient_fan(fan, sigma) under the star bijection.
ChainComplex fiber_complex(const Fan& fan, int sigma);

}  // namespace toric
