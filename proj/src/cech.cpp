#include "toric/cech.hpp"

#include <algorithm>

namespace toric {

ChainComplex build_cech_complex(const Fan& fan)
{
    const int n = static_cast<int>(fan.rank());
    ChainComplex cpx;
    cpx.basis.resize(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        cpx.basis[static_cast<size_t>(k)] = fan.cones_of_codim(k);

    cpx.boundary.resize(static_cast<size_t>(n) + 1);
    cpx.boundary[0] = zero_matrix(0, cpx.rank(0));
    for (int k = 1; k <= n; ++k) {
        const auto& rows = cpx.basis[static_cast<size_t>(k - 1)];
        const auto& cols = cpx.basis[static_cast<size_t>(k)];
        IntMatrix d = zero_matrix(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
        for (size_t c = 0; c < cols.size(); ++c) {
            for (size_t r = 0; r < rows.size(); ++r) {
                // tau (codim k) contributes to sigma (codim k-1) when it is a
                // facet of sigma.
                if (fan.is_face(cols[c], rows[r]))
                    d(static_cast<Index>(r), static_cast<Index>(c)) =
                        incidence_sign(fan.cone(cols[c]), fan.cone(rows[r]));
            }
        }
        cpx.boundary[static_cast<size_t>(k)] = std::move(d);
    }

    for (int k = 2; k <= n; ++k) {
        if (!is_zero_matrix(cpx.boundary[static_cast<size_t>(k - 1)] *
                            cpx.boundary[static_cast<size_t>(k)]))
            throw CompositionNotZero("cech complex: d_{k-1} d_k != 0 at k = " + std::to_string(k));
    }
    return cpx;
}

std::vector<FgAbGroup> complex_homology(const ChainComplex& cpx)
{
    const int top = cpx.top_degree();
    std::vector<FgAbGroup> h;
    for (int k = 0; k <= top; ++k) {
        const IntMatrix& d_out = cpx.boundary[static_cast<size_t>(k)];
        IntMatrix d_in = k < top ? cpx.boundary[static_cast<size_t>(k + 1)]
                                 : zero_matrix(cpx.rank(top), 0);
        h.push_back(homology_at(d_in, d_out));
    }
    return h;
}

bool augmentation_check(const Fan& fan, const ChainComplex& cpx)
{
    if (cpx.top_degree() != static_cast<int>(fan.rank()) ||
        cpx.rank(0) != static_cast<Index>(fan.cones_of_codim(0).size()))
        throw InvariantError("augmentation_check: complex does not match the fan");
    const Index f0 = cpx.rank(0);
    IntMatrix aug(1, f0);
    aug.setConstant(Integer(1));

    if (cpx.top_degree() >= 1) {
        if (!is_zero_matrix(aug * cpx.boundary[1]))
            return false;
    }
    IntMatrix d1 = cpx.top_degree() >= 1 ? cpx.boundary[1] : zero_matrix(f0, 0);
    FgAbGroup h0 = homology_at(d1, zero_matrix(0, f0));
    return h0.is_free_of_rank(1);
}

std::vector<FgAbGroup> cech_homology(const Fan& fan)
{
    ChainComplex cpx = build_cech_complex(fan);
    std::vector<FgAbGroup> h = complex_homology(cpx);
    for (size_t k = 0; k < h.size(); ++k) {
        bool expected = k == 0 ? h[k].is_free_of_rank(1) : h[k].is_trivial();
        if (!expected)
            throw ResolutionFailure("cech complex is not a resolution: H_" + std::to_string(k) +
                                    " = " + h[k].to_string());
    }
    return h;
}

ChainComplex fiber_complex(const Fan& fan, int sigma)
{
    if (sigma < 0 || sigma >= fan.num_cones())
        throw ConeNotInFan("fiber_complex: cone index out of range");
    const int c = static_cast<int>(fan.rank() - fan.cone(sigma).dim());

    ChainComplex full = build_cech_complex(fan);
    ChainComplex sub;
    sub.basis.resize(static_cast<size_t>(c) + 1);

    // Positions of the star cones inside each codimension block.
    std::vector<std::vector<Index>> positions(static_cast<size_t>(c) + 1);
    for (int k = 0; k <= c; ++k) {
        const auto& all = full.basis[static_cast<size_t>(k)];
        for (size_t p = 0; p < all.size(); ++p) {
            if (fan.is_face(sigma, all[p])) {
                sub.basis[static_cast<size_t>(k)].push_back(all[p]);
                positions[static_cast<size_t>(k)].push_back(static_cast<Index>(p));
            }
        }
    }

    sub.boundary.resize(static_cast<size_t>(c) + 1);
    sub.boundary[0] = zero_matrix(0, sub.rank(0));
    for (int k = 1; k <= c; ++k) {
        const auto& rp = positions[static_cast<size_t>(k - 1)];
        const auto& cp = positions[static_cast<size_t>(k)];
        IntMatrix d(static_cast<Index>(rp.size()), static_cast<Index>(cp.size()));
        for (size_t r = 0; r < rp.size(); ++r)
            for (size_t cc = 0; cc < cp.size(); ++cc)
                d(static_cast<Index>(r), static_cast<Index>(cc)) =
                    full.boundary[static_cast<size_t>(k)](rp[r], cp[cc]);
        sub.boundary[static_cast<size_t>(k)] = std::move(d);
    }
    return sub;
}

}  // namespace toric
