#include "toric/spectral.hpp"

#include <string>

namespace toric {

Index E1Page::block_rank(int r, int s) const
{
    if (s < 0 || s > static_cast<int>(rank))
        return 0;
    return static_cast<Index>(cones[static_cast<size_t>(s)].size()) * binomial(s, r);
}

E1Page build_e1(const Fan& fan, Mode mode)
{
    E1Page page;
    page.mode = mode;
    page.rank = fan.rank();
    page.cones.resize(static_cast<size_t>(fan.rank()) + 1);
    for (int s = 0; s <= static_cast<int>(fan.rank()); ++s)
        page.cones[static_cast<size_t>(s)] = fan.cones_of_codim(s);
    return page;
}

D1 build_d1(const Fan& fan, const E1Page& page)
{
    const int n = static_cast<int>(page.rank);
    D1 d1;
    d1.d.assign(static_cast<size_t>(n) + 1, {});
    for (int r = 0; r <= n; ++r)
        for (int s = 0; s < n; ++s)
            d1.d[static_cast<size_t>(r)].push_back(
                zero_matrix(page.block_rank(r, s + 1), page.block_rank(r, s)));

    for (int s = 0; s < n; ++s) {
        const auto& src = page.cones[static_cast<size_t>(s)];
        const auto& dst = page.cones[static_cast<size_t>(s + 1)];
        for (size_t ci = 0; ci < src.size(); ++ci) {
            for (size_t ri = 0; ri < dst.size(); ++ri) {
                int sigma = src[ci], tau = dst[ri];
                if (!fan.is_face(tau, sigma))
                    continue;
                int eps = incidence_sign(fan.cone(tau), fan.cone(sigma));
                // sigma-perp sits inside tau-perp; both bases are saturated,
                // so the coordinates are integral.
                IntMatrix incl =
                    solve_integral(fan.orthogonal_basis(tau), fan.orthogonal_basis(sigma));
                for (int r = 0; r <= s + 1; ++r) {
                    IntMatrix w = wedge_power_matrix(incl, r);
                    if (w.rows() == 0 || w.cols() == 0)
                        continue;
                    d1.d[static_cast<size_t>(r)][static_cast<size_t>(s)].block(
                        static_cast<Index>(ri) * w.rows(), static_cast<Index>(ci) * w.cols(),
                        w.rows(), w.cols()) = Integer(eps) * w;
                }
            }
        }
    }

    for (int r = 0; r <= n; ++r)
        for (int s = 0; s + 1 < n; ++s)
            if (!is_zero_matrix(d1.at(r, s + 1) * d1.at(r, s)))
                throw CompositionNotZero("d1 . d1 != 0 at r = " + std::to_string(r) +
                                         ", s = " + std::to_string(s));
    return d1;
}

E2Page compute_e2(const E1Page& page, const D1& d1)
{
    const int n = static_cast<int>(page.rank);
    E2Page e2;
    e2.mode = page.mode;
    e2.rank = page.rank;
    e2.groups.assign(static_cast<size_t>(n) + 1,
                     std::vector<FgAbGroup>(static_cast<size_t>(n) + 1));
    for (int r = 0; r <= n; ++r) {
        for (int s = 0; s <= n; ++s) {
            IntMatrix d_in = s > 0 ? d1.at(r, s - 1) : zero_matrix(page.block_rank(r, 0), 0);
            IntMatrix d_out = s < n ? d1.at(r, s) : zero_matrix(0, page.block_rank(r, n));
            e2.groups[static_cast<size_t>(r)][static_cast<size_t>(s)] = homology_at(d_in, d_out);
        }
    }
    return e2;
}

std::vector<std::vector<long long>> morphic_table(const E2Page& e2, int qmax)
{
    const int n = static_cast<int>(e2.rank);
    std::vector<std::vector<long long>> table;
    for (int q = 0; q <= qmax; ++q) {
        std::vector<long long> row(static_cast<size_t>(2 * n) + 1, 0);
        for (int r = 0; r <= std::min(q, n); ++r)
            for (int s = 0; s <= n; ++s)
                row[static_cast<size_t>(r + s)] += e2.at(r, s).rank;
        table.push_back(std::move(row));
    }
    return table;
}

std::vector<long long> betti_numbers(const E2Page& e2)
{
    const int n = static_cast<int>(e2.rank);
    std::vector<long long> betti(static_cast<size_t>(2 * n) + 1, 0);
    for (int r = 0; r <= n; ++r)
        for (int s = 0; s <= n; ++s)
            betti[static_cast<size_t>(r + s)] += e2.at(r, s).rank;
    return betti;
}

long long euler_characteristic(const std::vector<long long>& betti)
{
    long long chi = 0;
    for (size_t i = 0; i < betti.size(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * betti[i];
    return chi;
}

bool weight_action_check(const E1Page& page, const D1& d1, const Integer& m)
{
    const int n = static_cast<int>(page.rank);
    for (int r = 0; r <= n; ++r) {
        Integer mr = 1;
        for (int i = 0; i < r; ++i)
            mr *= m;
        for (int s = 0; s < n; ++s) {
            IntMatrix lhs = mr * d1.at(r, s);
            IntMatrix rhs = d1.at(r, s) * (mr * identity_matrix(d1.at(r, s).cols()));
            if (!matrix_equal(lhs, rhs))
                return false;
        }
        // The exterior power of scaling by m is scaling by m^r.
        for (int k = r; k <= n; ++k) {
            IntMatrix scaled = m * identity_matrix(k);
            if (!matrix_equal(wedge_power_matrix(scaled, r),
                              IntMatrix(mr * identity_matrix(binomial(k, r)))))
                return false;
        }
    }
    return true;
}

std::vector<long long> counting_betti(const Fan& fan)
{
    const int n = static_cast<int>(fan.rank());
    for (int i = 0; i < fan.num_cones(); ++i)
        if (fan.cone(i).num_rays() != fan.cone(i).dim())
            throw InputError("counting_betti: fan is not simplicial");

    std::vector<long long> betti(static_cast<size_t>(2 * n) + 1, 0);
    for (int k = 0; k <= n; ++k) {
        long long b = 0;
        for (int i = k; i <= n; ++i) {
            long long f = static_cast<long long>(fan.cones_of_codim(i).size());
            b += ((i - k) % 2 == 0 ? 1 : -1) * binomial(i, k) * f;
        }
        betti[static_cast<size_t>(2 * k)] = b;
    }
    return betti;
}

}  // namespace toric
