/**
 * Exact linear algebra over the integers.
 *
 * Everything in this module works with arbitrary-precision integers carried
 * in dense Eigen matrices; there is no floating point anywhere. The two
 * workhorses are the Smith normal form (ranks, torsion, homology of free
 * complexes) and the column-style Hermite normal form (canonical lattice
 * bases, saturations, deterministic kernels).
 */

#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using IntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

// --- small helpers -------------------------------------------------------

/// Exact entrywise equality. Eigen's comparison expressions are avoided on
/// purpose: overload resolution against multiprecision scalars is fragile.
bool matrix_equal(const IntMatrix& a, const IntMatrix& b);

bool is_zero_matrix(const IntMatrix& a);

IntMatrix zero_matrix(Index rows, Index cols);

IntMatrix identity_matrix(Index n);

/// Horizontal concatenation; tolerates zero-width blocks.
IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);

/// gcd of all entries, nonnegative; 0 for the zero vector.
Integer vector_gcd(const IntVector& v);

/// v divided by the gcd of its entries. The zero vector stays zero.
IntVector primitive_vector(const IntVector& v);

/// Lexicographic comparison of equal-length integer vectors.
bool lex_less(const IntVector& a, const IntVector& b);

/// floor(a/b) for b > 0.
Integer floor_div(const Integer& a, const Integer& b);

long long binomial(int n, int r);

/// All strictly increasing r-tuples from {0,...,n-1} in lexicographic order.
/// r = 0 yields the single empty tuple.
std::vector<std::vector<int>> lex_combinations(int n, int r);

/// Exact determinant by fraction-free (Bareiss) elimination. det of the
/// empty matrix is 1.
Integer determinant(IntMatrix a);

// --- Smith normal form ---------------------------------------------------

/**
 * A = U * D * V with U, V unimodular and D diagonal, nonnegative, with
 * d_i | d_{i+1}. Inverses are tracked during the reduction so callers can
 * change coordinates without re-solving.
 */
struct SmithForm {
    IntMatrix U, D, V;
    IntMatrix U_inv, V_inv;
    Index rank = 0;  // number of nonzero diagonal entries
};

SmithForm smith_normal_form(const IntMatrix& a);

/// The nonzero diagonal of D, in divisibility order.
std::vector<Integer> invariant_factors(const IntMatrix& a);

Index rank_of(const IntMatrix& a);

/// |det| = 1?
bool is_unimodular(const IntMatrix& a);

// --- Hermite normal form and lattices ------------------------------------

/**
 * Column-style Hermite normal form of the lattice generated by the columns
 * of `generators`: returns an n x rank matrix H with pivot rows p_1 < ... <
 * p_r, H(p_i, i) > 0, zeros right of each pivot and entries left of it
 * reduced to [0, pivot). H is the canonical basis of the column lattice.
 */
IntMatrix hermite_normal_form(IntMatrix generators);

/// Canonical (HNF) basis of {x : a x = 0}. Kernels of integer matrices are
/// saturated, so the result is automatically a direct summand.
IntMatrix kernel_basis(const IntMatrix& a);

/// Canonical basis of the saturation (R-span intersected with Z^n) of the
/// column span of `vectors`.
IntMatrix saturation_basis(const IntMatrix& vectors);

/**
 * Solve a X = b over the integers; the columns of b must lie in the lattice
 * generated by the columns of a. Free coordinates are set to zero, so the
 * result is deterministic. Throws SolveError when no integral solution
 * exists.
 */
IntMatrix solve_integral(const IntMatrix& a, const IntMatrix& b);

// --- exterior powers ------------------------------------------------------

/**
 * Matrix of the induced map on r-th exterior powers: rows and columns are
 * indexed by strictly increasing r-tuples in lexicographic order, the entry
 * at (I, J) is the minor det a[I, J]. Functorial:
 * wedge_power_matrix(a * b, r) = wedge_power_matrix(a, r) * wedge_power_matrix(b, r).
 */
IntMatrix wedge_power_matrix(const IntMatrix& a, int r);

// --- finitely generated abelian groups ------------------------------------

/// Z^rank + sum of Z/d_i with 2 <= d_1 | d_2 | ...
struct FgAbGroup {
    long long rank = 0;
    std::vector<Integer> torsion;

    bool operator==(const FgAbGroup&) const = default;

    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    bool is_free_of_rank(long long r) const { return rank == r && torsion.empty(); }

    std::string to_string() const;
};

/**
 * Homology ker(d_out) / im(d_in) of a free complex at the middle module,
 * in canonical form. Requires d_out * d_in = 0 and throws
 * CompositionNotZero otherwise -- the usual symptom of a sign error
 * upstream.
 */
FgAbGroup homology_at(const IntMatrix& d_in, const IntMatrix& d_out);

}  // namespace toric
