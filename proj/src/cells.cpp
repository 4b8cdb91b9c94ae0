#include "toric/cells.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "toric/cech.hpp"

namespace toric {

long long SimplicialComplex::euler_characteristic() const
{
    long long chi = 0;
    for (int k = 0; k <= dim(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * simplex_count(k);
    return chi;
}

SimplicialComplex complex_from_simplices(int num_vertices,
                                         const std::vector<std::vector<int>>& simplices)
{
    std::vector<std::set<std::vector<int>>> by_dim;
    auto insert = [&](std::vector<int> s) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty())
            return;
        size_t k = s.size() - 1;
        if (by_dim.size() <= k)
            by_dim.resize(k + 1);
        by_dim[k].insert(std::move(s));
    };

    for (const auto& s : simplices)
        insert(s);

    // Close downward.
    for (size_t k = by_dim.size(); k-- > 1;) {
        for (const auto& s : by_dim[k]) {
            for (size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<int> face;
                for (size_t i = 0; i < s.size(); ++i)
                    if (i != drop)
                        face.push_back(s[i]);
                by_dim[k - 1].insert(std::move(face));
            }
        }
    }

    SimplicialComplex out;
    out.num_vertices = num_vertices;
    out.simplices.resize(std::max<size_t>(by_dim.size(), 1));
    if (by_dim.empty())
        out.simplices[0] = {};
    for (size_t k = 0; k < by_dim.size(); ++k)
        out.simplices[k] = std::vector<std::vector<int>>(by_dim[k].begin(), by_dim[k].end());
    return out;
}

namespace {

// Chains in the strict face order, enumerated by increasing fan index; the
// fan order is dimension-major, so chain entries are automatically
// increasing.
void extend_chains(const Fan& fan, const std::vector<int>& vertices,
                   const std::vector<char>& in_play, std::vector<int>& chain,
                   std::vector<std::vector<int>>& out)
{
    out.push_back(chain);
    int last = chain.back();
    for (int next : vertices) {
        if (next <= last || !in_play[static_cast<size_t>(next)])
            continue;
        if (fan.is_face(last, next) && last != next) {
            chain.push_back(next);
            extend_chains(fan, vertices, in_play, chain, out);
            chain.pop_back();
        }
    }
}

SimplicialComplex flags_on(const Fan& fan, const std::vector<int>& vertices,
                           std::vector<int>* vertex_to_cone)
{
    std::vector<char> in_play(static_cast<size_t>(fan.num_cones()), 0);
    for (int v : vertices)
        in_play[static_cast<size_t>(v)] = 1;

    std::vector<std::vector<int>> chains;
    for (int v : vertices) {
        std::vector<int> chain{v};
        extend_chains(fan, vertices, in_play, chain, chains);
    }

    // Relabel fan indices by position among the chosen vertices.
    std::map<int, int> position;
    for (size_t i = 0; i < vertices.size(); ++i)
        position[vertices[i]] = static_cast<int>(i);
    for (auto& chain : chains)
        for (int& v : chain)
            v = position[v];

    if (vertex_to_cone)
        *vertex_to_cone = vertices;
    return complex_from_simplices(static_cast<int>(vertices.size()), chains);
}

}  // namespace

SimplicialComplex flag_complex(const Fan& fan)
{
    std::vector<int> all(static_cast<size_t>(fan.num_cones()));
    for (int i = 0; i < fan.num_cones(); ++i)
        all[static_cast<size_t>(i)] = i;
    return flags_on(fan, all, nullptr);
}

SimplicialComplex dual_cell_subcomplex(const Fan& fan, int sigma, std::vector<int>* vertex_to_cone)
{
    if (sigma < 0 || sigma >= fan.num_cones())
        throw ConeNotInFan("dual_cell_subcomplex: cone index out of range");
    std::vector<int> star;
    for (int t = 0; t < fan.num_cones(); ++t)
        if (fan.is_face(sigma, t))
            star.push_back(t);
    return flags_on(fan, star, vertex_to_cone);
}

std::vector<FgAbGroup> reduced_homology(const SimplicialComplex& k)
{
    const int top = k.dim();

    std::vector<std::map<std::vector<int>, Index>> index(static_cast<size_t>(top) + 1);
    for (int d = 0; d <= top; ++d)
        for (size_t i = 0; i < k.simplices[static_cast<size_t>(d)].size(); ++i)
            index[static_cast<size_t>(d)][k.simplices[static_cast<size_t>(d)][i]] =
                static_cast<Index>(i);

    // boundary[d] : C_d -> C_{d-1}, with C_{-1} = Z via the augmentation.
    std::vector<IntMatrix> boundary(static_cast<size_t>(top) + 1);
    boundary[0] = IntMatrix(1, static_cast<Index>(k.simplex_count(0)));
    boundary[0].setConstant(Integer(1));
    for (int d = 1; d <= top; ++d) {
        const auto& rows = k.simplices[static_cast<size_t>(d - 1)];
        const auto& cols = k.simplices[static_cast<size_t>(d)];
        IntMatrix b = zero_matrix(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
        for (size_t c = 0; c < cols.size(); ++c) {
            const auto& s = cols[c];
            for (size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<int> face;
                for (size_t i = 0; i < s.size(); ++i)
                    if (i != drop)
                        face.push_back(s[i]);
                Index r = index[static_cast<size_t>(d - 1)].at(face);
                b(r, static_cast<Index>(c)) = (drop % 2 == 0) ? 1 : -1;
            }
        }
        boundary[static_cast<size_t>(d)] = std::move(b);
    }

    std::vector<FgAbGroup> h;
    for (int d = 0; d <= top; ++d) {
        IntMatrix d_in = d < top
                             ? boundary[static_cast<size_t>(d + 1)]
                             : zero_matrix(static_cast<Index>(k.simplex_count(top)), 0);
        h.push_back(homology_at(d_in, boundary[static_cast<size_t>(d)]));
    }
    return h;
}

bool complexes_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b,
                          const std::vector<int>& vertex_map)
{
    if (a.num_vertices != b.num_vertices || a.dim() != b.dim())
        return false;
    for (int d = 0; d <= a.dim(); ++d) {
        if (a.simplex_count(d) != b.simplex_count(d))
            return false;
        std::set<std::vector<int>> mapped;
        for (const auto& s : a.simplices[static_cast<size_t>(d)]) {
            std::vector<int> t;
            for (int v : s)
                t.push_back(vertex_map[static_cast<size_t>(v)]);
            std::sort(t.begin(), t.end());
            mapped.insert(std::move(t));
        }
        for (const auto& s : b.simplices[static_cast<size_t>(d)])
            if (!mapped.count(s))
                return false;
    }
    return true;
}

OracleReport oracle_report(const Fan& fan)
{
    OracleReport report;
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        report.checks.push_back({name, pass, detail});
        report.all_pass = report.all_pass && pass;
    };

    SimplicialComplex flags = flag_complex(fan);

    {
        auto h = reduced_homology(flags);
        bool ok = true;
        for (const auto& g : h)
            ok = ok && g.is_trivial();
        add("flag-complex-contractible", ok, ok ? "" : "nonzero reduced homology");
    }

    {
        bool ok = flags.euler_characteristic() == 1;
        add("flag-complex-euler", ok,
            "chi = " + std::to_string(flags.euler_characteristic()));
    }

    {
        bool all_iso = true, all_balls = true;
        std::ostringstream bad_iso, bad_ball;
        for (int s = 0; s < fan.num_cones(); ++s) {
            std::vector<int> vertex_to_cone;
            SimplicialComplex dual = dual_cell_subcomplex(fan, s, &vertex_to_cone);
            QuotientFan q = quotient_fan(fan, s);
            SimplicialComplex qflags = flag_complex(q.fan);
            std::vector<int> vmap;
            for (int v : vertex_to_cone)
                vmap.push_back(q.quotient_index[static_cast<size_t>(v)]);
            if (!complexes_isomorphic(dual, qflags, vmap)) {
                all_iso = false;
                bad_iso << " " << fan.cone(s).to_string();
            }
            auto h = reduced_homology(dual);
            for (const auto& g : h)
                if (!g.is_trivial()) {
                    all_balls = false;
                    bad_ball << " " << fan.cone(s).to_string();
                    break;
                }
        }
        add("dual-cells-match-quotient-flags", all_iso,
            all_iso ? "" : "mismatch at" + bad_iso.str());
        add("dual-cells-contractible", all_balls, all_balls ? "" : "homology at" + bad_ball.str());
    }

    {
        ChainComplex cpx = build_cech_complex(fan);
        bool ok = true;
        std::ostringstream detail;
        for (int k = 0; k <= static_cast<int>(fan.rank()); ++k) {
            long long cells = static_cast<long long>(fan.cones_of_codim(k).size());
            detail << (k ? "," : "") << cells;
            ok = ok && cpx.rank(k) == static_cast<Index>(cells);
        }
        add("rank-agreement", ok, "cells by codim: " + detail.str());

        auto h = complex_homology(cpx);
        bool point = h[0].is_free_of_rank(1);
        for (size_t k = 1; k < h.size(); ++k)
            point = point && h[k].is_trivial();
        add("fan-complex-point-homology", point,
            point ? "" : "H_0 = " + h[0].to_string());
    }

    return report;
}

}  // namespace toric
