#include <doctest.h>

#include <random>

#include "toric/fan_io.hpp"
#include "toric/spectral.hpp"

using namespace toric;

namespace {

Fan builtin(const std::string& name)
{
    return build_fan(builtin_fan(name));
}

E2Page e2_of(const Fan& fan)
{
    E1Page page = build_e1(fan, Mode::morphic);
    D1 d1 = build_d1(fan, page);
    return compute_e2(page, d1);
}

// Convolution of Betti vectors; the product formula for rational cohomology.
std::vector<long long> kunneth(const std::vector<long long>& a, const std::vector<long long>& b)
{
    std::vector<long long> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

TEST_CASE("first page ranks for the projective line")
{
    Fan fan = builtin("p1");
    E1Page page = build_e1(fan, Mode::morphic);
    CHECK(page.block_rank(0, 0) == 2);
    CHECK(page.block_rank(0, 1) == 1);
    CHECK(page.block_rank(1, 1) == 1);
    CHECK(page.block_rank(1, 0) == 0);  // r > s vanishes
}

TEST_CASE("first page ranks for the projective plane")
{
    Fan fan = builtin("p2");
    E1Page page = build_e1(fan, Mode::morphic);
    CHECK(page.block_rank(0, 0) == 3);
    CHECK(page.block_rank(0, 1) == 3);
    CHECK(page.block_rank(1, 1) == 3);
    CHECK(page.block_rank(0, 2) == 1);
    CHECK(page.block_rank(1, 2) == 2);
    CHECK(page.block_rank(2, 2) == 1);
    CHECK(page.block_rank(2, 1) == 0);
}

TEST_CASE("first differential of the projective line in weight zero")
{
    Fan fan = builtin("p1");
    E1Page page = build_e1(fan, Mode::morphic);
    D1 d1 = build_d1(fan, page);

    const IntMatrix& d = d1.at(0, 0);
    REQUIRE(d.rows() == 1);
    REQUIRE(d.cols() == 2);
    // Fan order lists cone(-1) first; signs match the incidence signs.
    CHECK(d(0, 0) == -1);
    CHECK(d(0, 1) == 1);

    // No source for the top exterior row at s = 0.
    CHECK(d1.at(1, 0).cols() == 0);
    CHECK(d1.at(1, 0).rows() == 1);
}

TEST_CASE("weight-one differential of the projective plane assembles inclusions")
{
    Fan fan = builtin("p2");
    E1Page page = build_e1(fan, Mode::morphic);
    D1 d1 = build_d1(fan, page);

    // From the three ray blocks into the zero-cone block: each column is the
    // signed coordinate vector of the ray-orthogonal lattice inside M.
    const IntMatrix& d = d1.at(1, 1);
    REQUIRE(d.rows() == 2);
    REQUIRE(d.cols() == 3);
    const auto& rays = fan.cones_of_codim(1);
    int zero_idx = fan.cones_of_codim(2)[0];
    for (size_t c = 0; c < rays.size(); ++c) {
        Integer eps(incidence_sign(fan.cone(zero_idx), fan.cone(rays[c])));
        const IntMatrix& basis = fan.orthogonal_basis(rays[c]);
        for (Index i = 0; i < 2; ++i)
            CHECK(d(i, static_cast<Index>(c)) == eps * basis(i, 0));
    }
}

TEST_CASE("second page of the projective line")
{
    E2Page e2 = e2_of(builtin("p1"));
    CHECK(e2.at(0, 0).is_free_of_rank(1));
    CHECK(e2.at(0, 1).is_trivial());
    CHECK(e2.at(1, 1).is_free_of_rank(1));
}

TEST_CASE("second page of the projective plane is diagonal")
{
    E2Page e2 = e2_of(builtin("p2"));
    for (int s = 0; s <= 2; ++s)
        for (int r = 0; r <= s; ++r) {
            if (r == s)
                CHECK(e2.at(r, s).is_free_of_rank(1));
            else
                CHECK(e2.at(r, s).is_trivial());
        }
}

TEST_CASE("zero differential leaves the first page unchanged")
{
    Fan fan = builtin("p2");
    E1Page page = build_e1(fan, Mode::morphic);
    const int n = static_cast<int>(page.rank);
    D1 zero;
    zero.d.assign(static_cast<size_t>(n) + 1, {});
    for (int r = 0; r <= n; ++r)
        for (int s = 0; s < n; ++s)
            zero.d[static_cast<size_t>(r)].push_back(
                zero_matrix(page.block_rank(r, s + 1), page.block_rank(r, s)));
    E2Page e2 = compute_e2(page, zero);
    for (int s = 0; s <= n; ++s)
        for (int r = 0; r <= n; ++r) {
            CHECK(e2.at(r, s).rank == page.block_rank(r, s));
            CHECK(e2.at(r, s).torsion.empty());
        }
}

TEST_CASE("morphic tables of projective spaces")
{
    // LH of P^k is the truncated polynomial ring: rank one in each (q, 2j)
    // with j <= min(q, k).
    for (int k = 1; k <= 3; ++k) {
        Fan fan = builtin("p" + std::to_string(k));
        auto table = morphic_table(e2_of(fan), k);
        REQUIRE(table.size() == static_cast<size_t>(k) + 1);
        for (int q = 0; q <= k; ++q) {
            REQUIRE(table[static_cast<size_t>(q)].size() == static_cast<size_t>(2 * k) + 1);
            for (int nn = 0; nn <= 2 * k; ++nn) {
                long long expected =
                    (nn % 2 == 0 && nn / 2 <= std::min(q, k)) ? 1 : 0;
                CHECK(table[static_cast<size_t>(q)][static_cast<size_t>(nn)] == expected);
            }
        }
    }
}

TEST_CASE("weight zero row only sees the resolution")
{
    for (const auto& name : {"p2", "p1xp1", "wp112"}) {
        auto table = morphic_table(e2_of(builtin(name)), 0);
        REQUIRE(table.size() == 1);
        CHECK(table[0][0] == 1);
        for (size_t nn = 1; nn < table[0].size(); ++nn)
            CHECK(table[0][nn] == 0);
    }
}

TEST_CASE("betti numbers of the product of two projective lines")
{
    auto betti = betti_numbers(e2_of(builtin("p1xp1")));
    CHECK(betti == std::vector<long long>({1, 0, 2, 0, 1}));
    CHECK(betti == kunneth({1, 0, 1}, {1, 0, 1}));
    CHECK(euler_characteristic(betti) == 4);
}

TEST_CASE("betti numbers of hirzebruch surfaces")
{
    for (const auto& name : {"hirzebruch:0", "hirzebruch:1", "hirzebruch:2"}) {
        auto betti = betti_numbers(e2_of(builtin(name)));
        CHECK(betti == std::vector<long long>({1, 0, 2, 0, 1}));
    }
}

TEST_CASE("betti numbers of the singular weighted projective plane")
{
    Fan fan = builtin("wp112");
    auto betti = betti_numbers(e2_of(fan));
    CHECK(betti == std::vector<long long>({1, 0, 1, 0, 1}));
    CHECK(betti == counting_betti(fan));
}

TEST_CASE("counting oracle matches the page for smooth builtins")
{
    for (const auto& name : {"p1", "p2", "p3", "p1xp1", "hirzebruch:3"}) {
        Fan fan = builtin(name);
        CHECK(betti_numbers(e2_of(fan)) == counting_betti(fan));
    }
}

TEST_CASE("euler characteristic equals the number of maximal cones")
{
    for (const auto& name : {"p1", "p2", "p3", "p1xp1", "hirzebruch:2", "wp112"}) {
        Fan fan = builtin(name);
        auto betti = betti_numbers(e2_of(fan));
        CHECK(euler_characteristic(betti) ==
              static_cast<long long>(fan.cones_of_codim(0).size()));
    }
}

TEST_CASE("morphic table with large weight equals the betti table")
{
    for (const auto& name : {"p2", "p1xp1", "wp112"}) {
        Fan fan = builtin(name);
        E2Page e2 = e2_of(fan);
        auto table = morphic_table(e2, static_cast<int>(fan.rank()));
        auto betti = betti_numbers(e2);
        CHECK(table.back() == betti);
    }
}

TEST_CASE("column euler characteristics survive taking homology")
{
    for (const auto& name : {"p1", "p2", "p3", "p1xp1", "wp112"}) {
        Fan fan = builtin(name);
        E1Page page = build_e1(fan, Mode::morphic);
        D1 d1 = build_d1(fan, page);
        E2Page e2 = compute_e2(page, d1);
        const int n = static_cast<int>(fan.rank());
        for (int r = 0; r <= n; ++r) {
            long long chi1 = 0, chi2 = 0;
            for (int s = 0; s <= n; ++s) {
                long long sign = s % 2 == 0 ? 1 : -1;
                chi1 += sign * page.block_rank(r, s);
                chi2 += sign * e2.at(r, s).rank;
            }
            CHECK(chi1 == chi2);
        }
    }
}

TEST_CASE("d1 squares to zero under orientation scrambles")
{
    std::mt19937_64 rng(20240431);
    for (const auto& name : {"p2", "p3", "p1xp1", "wp112"}) {
        Fan fan = builtin(name);
        E2Page base = e2_of(fan);
        for (int trial = 0; trial < 3; ++trial) {
            Fan scrambled = fan.with_orientations(random_orientations(rng, fan));
            E2Page page = e2_of(scrambled);  // build_d1 checks the square
            const int n = static_cast<int>(fan.rank());
            for (int r = 0; r <= n; ++r)
                for (int s = 0; s <= n; ++s)
                    CHECK(base.at(r, s) == page.at(r, s));
        }
    }

    std::uniform_int_distribution<int> nrays(3, 9);
    for (int trial = 0; trial < 5; ++trial) {
        Fan fan = random_complete_fan_2d(rng, nrays(rng));
        Fan scrambled = fan.with_orientations(random_orientations(rng, fan));
        E2Page base = e2_of(fan);
        E2Page page = e2_of(scrambled);
        for (int r = 0; r <= 2; ++r)
            for (int s = 0; s <= 2; ++s)
                CHECK(base.at(r, s) == page.at(r, s));
    }
}

TEST_CASE("weight action commutes with the differential")
{
    for (const auto& name : {"p2", "wp112"}) {
        Fan fan = builtin(name);
        E1Page page = build_e1(fan, Mode::morphic);
        D1 d1 = build_d1(fan, page);
        CHECK(weight_action_check(page, d1, 1));
        CHECK(weight_action_check(page, d1, 2));
        CHECK(weight_action_check(page, d1, 3));
    }
    std::mt19937_64 rng(20240432);
    Fan fan = random_complete_fan_2d(rng, 6);
    E1Page page = build_e1(fan, Mode::morphic);
    D1 d1 = build_d1(fan, page);
    CHECK(weight_action_check(page, d1, 3));
}

TEST_CASE("counting oracle rejects non-simplicial fans")
{
    // The fan over the faces of a cube is complete but not simplicial.
    std::vector<std::vector<long long>> rays = {{1, 1, 1},  {1, 1, -1},  {1, -1, 1},  {1, -1, -1},
                                                {-1, 1, 1}, {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}};
    std::vector<std::vector<int>> cones = {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 4, 5},
                                           {2, 3, 6, 7}, {0, 2, 4, 6}, {1, 3, 5, 7}};
    FanDocument doc;
    doc.rank = 3;
    doc.rays = rays;
    doc.max_cones = cones;
    Fan fan = build_fan(doc);
    CHECK_THROWS_AS(counting_betti(fan), InputError);
}
