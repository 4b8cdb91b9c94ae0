/**
 * First and second pages of the fan spectral sequence.
 *
 * The block at (r, s) of the first page is the direct sum, over the
 * codimension-s cones, of the r-th exterior powers of the orthogonal
 * lattices sigma-perp /\ M; the differential towards (r, s+1) is the signed
 * exterior power of the inclusion sigma-perp into tau-perp for each facet
 * pair tau <= sigma. The second page is its integral homology, row by row.
 * Rationally the sequence degenerates there, which is what the morphic and
 * Betti tables read off; integrally only the page itself is reported.
 */

#pragma once

#include <vector>

#include "toric/polyhedral.hpp"

namespace toric {

enum class Mode { morphic, singular };

struct E1Page {
    Mode mode = Mode::morphic;
    Index rank = 0;                       // fan rank n
    std::vector<std::vector<int>> cones;  // [s] = fan indices of codim-s cones

    /// rank of the block at (r, s): |cones[s]| * C(s, r).
    Index block_rank(int r, int s) const;
};

/// Differentials d1[r][s] : block (r, s) -> block (r, s+1) for 0 <= s < n.
struct D1 {
    std::vector<std::vector<IntMatrix>> d;

    const IntMatrix& at(int r, int s) const
    {
        return d[static_cast<size_t>(r)][static_cast<size_t>(s)];
    }
};

struct E2Page {
    Mode mode = Mode::morphic;
    Index rank = 0;
    std::vector<std::vector<FgAbGroup>> groups;  // [r][s]

    const FgAbGroup& at(int r, int s) const
    {
        return groups[static_cast<size_t>(r)][static_cast<size_t>(s)];
    }
};

/// The two modes carry identical groups (torus cohomology is the same
/// exterior algebra in both theories); they differ only in how tables are
/// assembled downstream.
E1Page build_e1(const Fan& fan, Mode mode);

/// Blocks of signed exterior-power inclusion matrices; the composite of
/// consecutive differentials is checked to vanish for every r.
D1 build_d1(const Fan& fan, const E1Page& page);

/// Row-wise homology of (E1, d1), with integral torsion kept.
E2Page compute_e2(const E1Page& page, const D1& d1);

/**
 * Ranks of the weight-q rational groups for 0 <= q <= qmax: the (q, n)
 * entry is the sum of rank E2^{r,s} over r + s = n with r <= q. Discarding
 * the rows above weight q is exact because the differential preserves r.
 */
std::vector<std::vector<long long>> morphic_table(const E2Page& e2, int qmax);

/// Rational Betti numbers b_0 .. b_{2n}: no weight truncation.
std::vector<long long> betti_numbers(const E2Page& e2);

long long euler_characteristic(const std::vector<long long>& betti);

/**
 * Regression check of the degeneration mechanism: scaling the weight-r row
 * by m^r commutes with d1 (the differential preserves r), and the exterior
 * power of m * identity is m^r * identity.
 */
bool weight_action_check(const E1Page& page, const D1& d1, const Integer& m);

/// Independent counting oracle for complete *simplicial* fans:
/// b_{2k} = sum_{i >= k} (-1)^{i-k} C(i, k) f^(i) with f^(i) the number of
/// codimension-i cones, and all odd Betti numbers zero.
std::vector<long long> counting_betti(const Fan& fan);

}  // namespace toric
