/**
 * Combinatorial oracle side of the construction: the flag complex of a fan
 * (simplices are chains of strictly included cones), its dual-cell
 * subcomplexes, and exact simplicial homology. These give an independent
 * route to the facts the chain complex of the fan is supposed to satisfy.
 */

#pragma once

#include <string>
#include <vector>

#include "toric/polyhedral.hpp"

namespace toric {

struct SimplicialComplex {
    int num_vertices = 0;
    /// simplices[k] = sorted vertex tuples of the k-simplices, lex order.
    /// simplices[0] lists the vertices themselves.
    std::vector<std::vector<std::vector<int>>> simplices;

    int dim() const { return static_cast<int>(simplices.size()) - 1; }
    long long simplex_count(int k) const
    {
        if (k < 0 || k > dim())
            return 0;
        return static_cast<long long>(simplices[static_cast<size_t>(k)].size());
    }
    /// Alternating sum of face counts.
    long long euler_characteristic() const;
};

/// Build a complex from a list of maximal simplices (test inputs and the
/// flag construction both funnel through this); closes downward.
SimplicialComplex complex_from_simplices(int num_vertices,
                                         const std::vector<std::vector<int>>& simplices);

/// Vertices are the cones of the fan (in fan order); k-simplices are flags
/// tau_0 < ... < tau_k of strictly included cones, the zero cone included.
SimplicialComplex flag_complex(const Fan& fan);

/// Full subcomplex of the flag complex on the cones containing sigma. When
/// vertex_to_cone is given, it receives the fan index of each vertex.
SimplicialComplex dual_cell_subcomplex(const Fan& fan, int sigma,
                                       std::vector<int>* vertex_to_cone = nullptr);

/// Reduced simplicial homology over Z in degrees 0..dim, via the standard
/// alternating-sum boundary in the fixed vertex order.
std::vector<FgAbGroup> reduced_homology(const SimplicialComplex& k);

/// Do the two complexes coincide under the given vertex bijection (a -> b)?
bool complexes_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b,
                          const std::vector<int>& vertex_map);

struct OracleCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct OracleReport {
    std::vector<OracleCheck> checks;
    bool all_pass = true;
};

/**
 * Cross-checks for a validated complete fan: contractibility of the flag
 * complex, the isomorphism of every dual-cell subcomplex with the flag
 * complex of the corresponding quotient fan, vanishing reduced homology of
 * the dual cells, rank agreement between the fan complex and the dual cell
 * counts, and point homology of the fan complex itself.
 */
OracleReport oracle_report(const Fan& fan);

}  // namespace toric
