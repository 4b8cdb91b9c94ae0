#include "toric/exact_linalg.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

namespace mp = boost::multiprecision;

bool matrix_equal(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j))
                return false;
    return true;
}

bool is_zero_matrix(const IntMatrix& a)
{
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0)
                return false;
    return true;
}

IntMatrix zero_matrix(Index rows, Index cols)
{
    IntMatrix m(rows, cols);
    m.setZero();
    return m;
}

IntMatrix identity_matrix(Index n)
{
    return IntMatrix::Identity(n, n);
}

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix m(a.rows(), a.cols() + b.cols());
    if (a.cols() > 0)
        m.leftCols(a.cols()) = a;
    if (b.cols() > 0)
        m.rightCols(b.cols()) = b;
    return m;
}

Integer vector_gcd(const IntVector& v)
{
    Integer g = 0;
    for (Index i = 0; i < v.size(); ++i)
        g = mp::gcd(g, v(i));
    return mp::abs(g);
}

IntVector primitive_vector(const IntVector& v)
{
    Integer g = vector_gcd(v);
    if (g == 0 || g == 1)
        return v;
    IntVector w(v.size());
    for (Index i = 0; i < v.size(); ++i)
        w(i) = v(i) / g;
    return w;
}

bool lex_less(const IntVector& a, const IntVector& b)
{
    for (Index i = 0; i < a.size() && i < b.size(); ++i) {
        if (a(i) != b(i))
            return a(i) < b(i);
    }
    return a.size() < b.size();
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0)))
        q -= 1;
    return q;
}

long long binomial(int n, int r)
{
    if (r < 0 || n < 0 || r > n)
        return 0;
    r = std::min(r, n - r);
    long long result = 1;
    for (int i = 1; i <= r; ++i) {
        result = result * (n - r + i) / i;
    }
    return result;
}

std::vector<std::vector<int>> lex_combinations(int n, int r)
{
    std::vector<std::vector<int>> out;
    if (r < 0 || r > n)
        return out;
    std::vector<int> tuple(r);
    for (int i = 0; i < r; ++i)
        tuple[i] = i;
    while (true) {
        out.push_back(tuple);
        int i = r - 1;
        while (i >= 0 && tuple[i] == n - r + i)
            --i;
        if (i < 0)
            break;
        ++tuple[i];
        for (int j = i + 1; j < r; ++j)
            tuple[j] = tuple[j - 1] + 1;
    }
    return out;
}

Integer determinant(IntMatrix a)
{
    if (a.rows() != a.cols())
        throw InvariantError("determinant: matrix is not square");
    const Index n = a.rows();
    if (n == 0)
        return 1;

    // Bareiss fraction-free elimination; all divisions are exact.
    Integer sign = 1;
    Integer prev = 1;
    for (Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            Index pivot = -1;
            for (Index i = k + 1; i < n; ++i) {
                if (a(i, k) != 0) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0)
                return 0;
            a.row(k).swap(a.row(pivot));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

// Elementary operations on the working matrix D of a Smith reduction, with
// bookkeeping so that U * D * V stays equal to the input at every step.
struct SmithWork {
    IntMatrix D, U, V, U_inv, V_inv;

    explicit SmithWork(const IntMatrix& a)
        : D(a),
          U(identity_matrix(a.rows())),
          V(identity_matrix(a.cols())),
          U_inv(identity_matrix(a.rows())),
          V_inv(identity_matrix(a.cols()))
    {
    }

    void row_swap(Index i, Index j)
    {
        if (i == j)
            return;
        D.row(i).swap(D.row(j));
        U.col(i).swap(U.col(j));
        U_inv.row(i).swap(U_inv.row(j));
    }

    void col_swap(Index i, Index j)
    {
        if (i == j)
            return;
        D.col(i).swap(D.col(j));
        V.row(i).swap(V.row(j));
        V_inv.col(i).swap(V_inv.col(j));
    }

    // row_i += q * row_t
    void row_addmul(Index i, Index t, const Integer& q)
    {
        if (q == 0)
            return;
        D.row(i) += q * D.row(t);
        U.col(t) -= q * U.col(i);
        U_inv.row(i) += q * U_inv.row(t);
    }

    // col_j += q * col_t
    void col_addmul(Index j, Index t, const Integer& q)
    {
        if (q == 0)
            return;
        D.col(j) += q * D.col(t);
        V.row(t) -= q * V.row(j);
        V_inv.col(j) += q * V_inv.col(t);
    }

    void row_negate(Index i)
    {
        D.row(i) = -D.row(i);
        U.col(i) = -U.col(i);
        U_inv.row(i) = -U_inv.row(i);
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a)
{
    SmithWork w(a);
    const Index m = a.rows(), n = a.cols();
    const Index steps = std::min(m, n);

    for (Index t = 0; t < steps; ++t) {
        for (;;) {
            // Smallest nonzero |entry| in the trailing block; row-major scan
            // keeps the choice deterministic.
            Index pi = -1, pj = -1;
            for (Index i = t; i < m; ++i) {
                for (Index j = t; j < n; ++j) {
                    if (w.D(i, j) == 0)
                        continue;
                    if (pi < 0 || mp::abs(w.D(i, j)) < mp::abs(w.D(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi < 0)
                goto finished;  // trailing block is zero

            w.row_swap(t, pi);
            w.col_swap(t, pj);
            if (w.D(t, t) < 0)
                w.row_negate(t);

            bool dirty = false;
            for (Index i = t + 1; i < m; ++i) {
                if (w.D(i, t) != 0) {
                    w.row_addmul(i, t, -(w.D(i, t) / w.D(t, t)));
                    if (w.D(i, t) != 0)
                        dirty = true;
                }
            }
            for (Index j = t + 1; j < n; ++j) {
                if (w.D(t, j) != 0) {
                    w.col_addmul(j, t, -(w.D(t, j) / w.D(t, t)));
                    if (w.D(t, j) != 0)
                        dirty = true;
                }
            }
            if (dirty)
                continue;  // leftover remainders give a smaller pivot

            // Pivot must divide the whole trailing block before moving on.
            bool fixed = false;
            for (Index i = t + 1; i < m && !fixed; ++i) {
                for (Index j = t + 1; j < n && !fixed; ++j) {
                    if (w.D(i, j) % w.D(t, t) != 0) {
                        w.row_addmul(t, i, 1);
                        fixed = true;
                    }
                }
            }
            if (!fixed)
                break;
        }
    }

finished:
    SmithForm out;
    out.U = std::move(w.U);
    out.D = std::move(w.D);
    out.V = std::move(w.V);
    out.U_inv = std::move(w.U_inv);
    out.V_inv = std::move(w.V_inv);
    out.rank = 0;
    for (Index t = 0; t < steps; ++t)
        if (out.D(t, t) != 0)
            ++out.rank;
    return out;
}

std::vector<Integer> invariant_factors(const IntMatrix& a)
{
    SmithForm s = smith_normal_form(a);
    std::vector<Integer> out;
    for (Index t = 0; t < s.rank; ++t)
        out.push_back(s.D(t, t));
    return out;
}

Index rank_of(const IntMatrix& a)
{
    return smith_normal_form(a).rank;
}

bool is_unimodular(const IntMatrix& a)
{
    if (a.rows() != a.cols())
        return false;
    Integer d = determinant(a);
    return d == 1 || d == -1;
}

IntMatrix hermite_normal_form(IntMatrix h)
{
    const Index n = h.rows();
    Index r = 0;  // next pivot column
    for (Index row = 0; row < n && r < h.cols(); ++row) {
        // Euclidean gcd sweep across columns r.. on this row.
        for (;;) {
            Index best = -1;
            for (Index j = r; j < h.cols(); ++j) {
                if (h(row, j) == 0)
                    continue;
                if (best < 0 || mp::abs(h(row, j)) < mp::abs(h(row, best)))
                    best = j;
            }
            if (best < 0)
                break;
            h.col(r).swap(h.col(best));
            bool clean = true;
            for (Index j = r + 1; j < h.cols(); ++j) {
                if (h(row, j) != 0) {
                    Integer q = h(row, j) / h(row, r);
                    h.col(j) -= q * h.col(r);
                    if (h(row, j) != 0)
                        clean = false;
                }
            }
            if (clean)
                break;
        }
        if (h(row, r) == 0)
            continue;  // no pivot in this row
        if (h(row, r) < 0)
            h.col(r) = -h.col(r);
        // Reduce the columns left of the pivot into [0, pivot).
        for (Index j = 0; j < r; ++j) {
            Integer q = floor_div(h(row, j), h(row, r));
            if (q != 0)
                h.col(j) -= q * h.col(r);
        }
        ++r;
    }
    IntMatrix out(n, r);
    if (r > 0)
        out = h.leftCols(r);
    return out;
}

IntMatrix kernel_basis(const IntMatrix& a)
{
    SmithForm s = smith_normal_form(a);
    const Index n = a.cols();
    std::vector<Index> free_cols;
    for (Index j = 0; j < n; ++j) {
        bool diag_nonzero = j < std::min(a.rows(), n) && s.D(j, j) != 0;
        if (!diag_nonzero)
            free_cols.push_back(j);
    }
    IntMatrix k(n, static_cast<Index>(free_cols.size()));
    for (Index c = 0; c < k.cols(); ++c)
        k.col(c) = s.V_inv.col(free_cols[static_cast<size_t>(c)]);
    return hermite_normal_form(std::move(k));
}

IntMatrix saturation_basis(const IntMatrix& vectors)
{
    IntMatrix orth = kernel_basis(vectors.transpose());
    return kernel_basis(orth.transpose());
}

IntMatrix solve_integral(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows())
        throw SolveError("solve_integral: row count mismatch");
    SmithForm s = smith_normal_form(a);
    IntMatrix c = s.U_inv * b;
    IntMatrix y = zero_matrix(a.cols(), b.cols());
    const Index diag = std::min(a.rows(), a.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        bool pivot = i < diag && s.D(i, i) != 0;
        for (Index j = 0; j < b.cols(); ++j) {
            if (pivot) {
                if (c(i, j) % s.D(i, i) != 0)
                    throw SolveError("solve_integral: no integral solution");
                y(i, j) = c(i, j) / s.D(i, i);
            } else if (c(i, j) != 0) {
                throw SolveError("solve_integral: right-hand side outside column span");
            }
        }
    }
    return s.V_inv * y;
}

IntMatrix wedge_power_matrix(const IntMatrix& a, int r)
{
    const auto row_tuples = lex_combinations(static_cast<int>(a.rows()), r);
    const auto col_tuples = lex_combinations(static_cast<int>(a.cols()), r);
    IntMatrix w(static_cast<Index>(row_tuples.size()), static_cast<Index>(col_tuples.size()));
    IntMatrix minor(r, r);
    for (size_t i = 0; i < row_tuples.size(); ++i) {
        for (size_t j = 0; j < col_tuples.size(); ++j) {
            for (int p = 0; p < r; ++p)
                for (int q = 0; q < r; ++q)
                    minor(p, q) = a(row_tuples[i][static_cast<size_t>(p)],
                                    col_tuples[j][static_cast<size_t>(q)]);
            w(static_cast<Index>(i), static_cast<Index>(j)) = determinant(minor);
        }
    }
    return w;
}

std::string FgAbGroup::to_string() const
{
    if (is_trivial())
        return "0";
    std::ostringstream os;
    bool first = true;
    if (rank == 1) {
        os << "Z";
        first = false;
    } else if (rank > 1) {
        os << "Z^" << rank;
        first = false;
    }
    for (const Integer& d : torsion) {
        if (!first)
            os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

FgAbGroup homology_at(const IntMatrix& d_in, const IntMatrix& d_out)
{
    if (d_out.cols() != d_in.rows())
        throw InvariantError("homology_at: middle module dimension mismatch");
    if (!is_zero_matrix(d_out * d_in))
        throw CompositionNotZero("homology_at: d_out * d_in != 0");

    IntMatrix kernel = kernel_basis(d_out);
    // Columns of d_in lie in the saturated kernel lattice, so expressing
    // them in the kernel basis is an exact integral solve.
    IntMatrix rel = solve_integral(kernel, d_in);
    SmithForm s = smith_normal_form(rel);

    FgAbGroup h;
    h.rank = static_cast<long long>(kernel.cols() - s.rank);
    for (Index t = 0; t < s.rank; ++t)
        if (s.D(t, t) >= 2)
            h.torsion.push_back(s.D(t, t));
    return h;
}

}  // namespace toric
