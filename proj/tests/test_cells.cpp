#include <doctest.h>

#include "toric/cells.hpp"
#include "toric/fan_io.hpp"

using namespace toric;

namespace {

Fan builtin(const std::string& name)
{
    return build_fan(builtin_fan(name));
}

bool all_trivial(const std::vector<FgAbGroup>& h)
{
    for (const auto& g : h)
        if (!g.is_trivial())
            return false;
    return true;
}

}  // namespace

TEST_CASE("flag complex of the projective line fan is an interval")
{
    Fan fan = builtin("p1");
    SimplicialComplex k = flag_complex(fan);
    CHECK(k.simplex_count(0) == 3);
    CHECK(k.simplex_count(1) == 2);
    CHECK(k.dim() == 1);
    CHECK(all_trivial(reduced_homology(k)));
}

TEST_CASE("flag complex of the projective plane fan")
{
    Fan fan = builtin("p2");
    SimplicialComplex k = flag_complex(fan);
    CHECK(k.simplex_count(0) == 7);
    CHECK(k.simplex_count(1) == 12);
    CHECK(k.simplex_count(2) == 6);
    CHECK(k.euler_characteristic() == 1);
    CHECK(all_trivial(reduced_homology(k)));
}

TEST_CASE("flag complex of the rank-zero fan is a point")
{
    Fan fan = builtin("p2");
    QuotientFan q = quotient_fan(fan, fan.cones_of_codim(0)[0]);
    SimplicialComplex k = flag_complex(q.fan);
    CHECK(k.simplex_count(0) == 1);
    CHECK(k.dim() == 0);
    CHECK(all_trivial(reduced_homology(k)));
}

TEST_CASE("synthetic circle has first homology Z")
{
    // Boundary of a triangle: three edges, no 2-simplex.
    SimplicialComplex k = complex_from_simplices(3, {{0, 1}, {0, 2}, {1, 2}});
    auto h = reduced_homology(k);
    REQUIRE(h.size() == 2);
    CHECK(h[0].is_trivial());
    CHECK(h[1].is_free_of_rank(1));
}

TEST_CASE("synthetic filled triangle is contractible")
{
    SimplicialComplex k = complex_from_simplices(3, {{0, 1, 2}});
    CHECK(k.simplex_count(0) == 3);
    CHECK(k.simplex_count(1) == 3);
    CHECK(k.simplex_count(2) == 1);
    CHECK(all_trivial(reduced_homology(k)));
}

TEST_CASE("flag complex simplex counts satisfy the ball Euler identity")
{
    for (const auto& name : {"p1", "p2", "p3", "p1xp1", "wp112"}) {
        Fan fan = builtin(name);
        CHECK(flag_complex(fan).euler_characteristic() == 1);
    }
}

TEST_CASE("dual cell subcomplex special cases")
{
    Fan fan = builtin("p2");

    int zero_idx = fan.cones_of_codim(2)[0];
    SimplicialComplex whole = dual_cell_subcomplex(fan, zero_idx);
    SimplicialComplex flags = flag_complex(fan);
    for (int d = 0; d <= flags.dim(); ++d)
        CHECK(whole.simplex_count(d) == flags.simplex_count(d));

    int ray = fan.cones_of_codim(1)[0];
    SimplicialComplex at_ray = dual_cell_subcomplex(fan, ray);
    CHECK(at_ray.simplex_count(0) == 3);
    CHECK(at_ray.simplex_count(1) == 2);

    int maximal = fan.cones_of_codim(0)[0];
    SimplicialComplex at_max = dual_cell_subcomplex(fan, maximal);
    CHECK(at_max.simplex_count(0) == 1);
    CHECK(at_max.dim() == 0);

    CHECK_THROWS_AS(dual_cell_subcomplex(fan, -1), ConeNotInFan);
}

TEST_CASE("dual cells are isomorphic to quotient flag complexes")
{
    for (const auto& name : {"p1", "p2", "p3", "p1xp1", "hirzebruch:2", "wp112"}) {
        Fan fan = builtin(name);
        for (int s = 0; s < fan.num_cones(); ++s) {
            std::vector<int> vertex_to_cone;
            SimplicialComplex dual = dual_cell_subcomplex(fan, s, &vertex_to_cone);
            QuotientFan q = quotient_fan(fan, s);
            SimplicialComplex qflags = flag_complex(q.fan);
            std::vector<int> vmap;
            for (int v : vertex_to_cone)
                vmap.push_back(q.quotient_index[static_cast<size_t>(v)]);
            CHECK(complexes_isomorphic(dual, qflags, vmap));
            CHECK(all_trivial(reduced_homology(dual)));
        }
    }
}

TEST_CASE("oracle report passes for the builtin fans")
{
    for (const auto& name : {"p2", "p1xp1", "wp112"}) {
        Fan fan = builtin(name);
        OracleReport report = oracle_report(fan);
        for (const auto& check : report.checks)
            INFO(check.name, ": ", check.detail);
        CHECK(report.all_pass);
    }
}

TEST_CASE("incomplete fans are rejected before the oracle runs")
{
    FanDocument doc;
    doc.rank = 2;
    doc.rays = {{1, 0}, {0, 1}};
    doc.max_cones = {{0, 1}};
    CHECK_THROWS_AS(build_fan(doc), ValidationError);
}
