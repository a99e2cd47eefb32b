#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oddspec/errors.hpp"
#include "oddspec/graph.hpp"
#include "oddspec/spectral.hpp"
#include "test_util.hpp"

using namespace oddspec;
using std::numbers::pi;

namespace {

void check_close(const std::vector<double>& got, const std::vector<double>& want, double tol) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i)
        CHECK(std::abs(got[i] - want[i]) <= tol);
}

std::vector<double> cycle_eigenvalues(int k) {
    std::vector<double> vals;
    for (int j = 0; j < k; ++j) vals.push_back(2.0 * std::cos(2.0 * pi * j / k));
    std::sort(vals.begin(), vals.end(), std::greater<>());
    return vals;
}

}  // namespace

TEST_CASE("Spectrum ordering and accessors") {
    const Spectrum s = Spectrum::from_unsorted({1.0, -3.0, 2.0});
    CHECK(s.lambda1() == 2.0);
    CHECK(s.lambda_min() == -3.0);
    CHECK(s[1] == 1.0);
    CHECK(s.size() == 3);
    CHECK_THROWS_AS(Spectrum().lambda1(), invalid_parameter);
    CHECK_THROWS_AS(Spectrum().lambda_min(), invalid_parameter);
}

TEST_CASE("adjacency spectra of canonical graphs") {
    check_close(adjacency_spectrum(generate_cycle(5)).values(), cycle_eigenvalues(5), 1e-10);
    check_close(adjacency_spectrum(generate_cycle(12)).values(), cycle_eigenvalues(12), 1e-10);

    const Spectrum k5 = adjacency_spectrum(generate_complete(5));
    check_close(k5.values(), {4, -1, -1, -1, -1}, 1e-10);

    const double r2 = std::sqrt(2.0);
    Graph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    check_close(adjacency_spectrum(p3).values(), {r2, 0.0, -r2}, 1e-12);

    CHECK(adjacency_spectrum(Graph(3)).lambda1() == doctest::Approx(0.0).scale(1));
    CHECK_THROWS_AS(adjacency_spectrum(Graph()), invalid_parameter);
    CHECK_THROWS_AS(signless_laplacian_spectrum(Graph()), invalid_parameter);
}

TEST_CASE("folded 7-cube spectrum spans 7 down to -5") {
    const Spectrum s = adjacency_spectrum(generate_folded_cube(7));
    CHECK(s.size() == 64);
    CHECK(s.lambda1() == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(s.lambda_min() == doctest::Approx(-5.0).epsilon(1e-12));
    // every eigenvalue is 7 - 2*popcount adjustments: an odd integer here
    for (double v : s.values()) CHECK(std::abs(v - std::round(v)) < 1e-9);
}

TEST_CASE("signless Laplacian detects bipartite components") {
    CHECK(signless_laplacian_spectrum(generate_cycle(6)).lambda_min() ==
          doctest::Approx(0.0).scale(1).epsilon(1e-10));
    CHECK(signless_laplacian_spectrum(generate_hypercube(3)).lambda_min() ==
          doctest::Approx(0.0).scale(1).epsilon(1e-10));
    // odd cycle: Q = A + 2I, so q_n = 2 - 2cos(pi/5) > 0
    CHECK(signless_laplacian_spectrum(generate_cycle(5)).lambda_min() ==
          doctest::Approx(2.0 - 2.0 * std::cos(pi / 5)).epsilon(1e-10));
    CHECK(signless_laplacian_spectrum(generate_complete(4)).lambda_min() ==
          doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("perron vector on regular and irregular graphs") {
    const PerronVector uniform = perron_vector(generate_cycle(7));
    CHECK(uniform.lambda1 == doctest::Approx(2.0).epsilon(1e-10));
    for (double e : uniform.entries) CHECK(e == doctest::Approx(1.0 / std::sqrt(7.0)).epsilon(1e-9));
    CHECK(uniform.norm() == doctest::Approx(1.0).epsilon(1e-12));

    // star with center 0: center weight 1/sqrt(2), each leaf 1/(2 sqrt(2))
    Graph star(5);
    for (int leaf = 1; leaf < 5; ++leaf) star.add_edge(0, leaf);
    const PerronVector p = perron_vector(star);
    CHECK(p.lambda1 == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(p.entries[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
    for (int leaf = 1; leaf < 5; ++leaf)
        CHECK(p.entries[leaf] == doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-9));

    // Rayleigh quotient of the returned vector equals the dense lambda1
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 14);
        const Graph g = testutil::random_connected_graph(rng, n, 0.3);
        const PerronVector pv = perron_vector(g);
        CHECK(pv.lambda1 == doctest::Approx(adjacency_spectrum(g).lambda1()).epsilon(1e-9));
        CHECK(pv.norm() == doctest::Approx(1.0).epsilon(1e-10));
        for (double e : pv.entries) CHECK(e > 0.0);
    }

    Graph two(2);  // disconnected: no positive eigenvector exists
    CHECK_THROWS_AS(perron_vector(two), invalid_parameter);
    CHECK_THROWS_AS(perron_vector(Graph()), invalid_parameter);
}

TEST_CASE("character sums reproduce dense Cayley spectra") {
    const std::vector<std::uint32_t> folded7 = {1, 2, 4, 8, 16, 32, 63};
    check_close(cayley_f2_spectrum(6, folded7).values(),
                adjacency_spectrum(generate_cayley_f2(6, folded7)).values(), 1e-9);

    const std::vector<std::uint32_t> q4 = {1, 2, 4, 8};
    check_close(cayley_f2_spectrum(4, q4).values(),
                adjacency_spectrum(generate_hypercube(4)).values(), 1e-9);

    std::mt19937 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::uint32_t> gens;
        for (std::uint32_t s = 1; s < 32; ++s)
            if (rng() % 3 == 0) gens.push_back(s);
        if (gens.empty()) gens.push_back(1 + rng() % 31);
        check_close(cayley_f2_spectrum(5, gens).values(),
                    adjacency_spectrum(generate_cayley_f2(5, gens)).values(), 1e-9);
    }

    CHECK_THROWS_AS(cayley_f2_spectrum(23, {1}), capacity_exceeded);
    CHECK_THROWS_AS(cayley_f2_spectrum(3, {}), invalid_parameter);
    CHECK_THROWS_AS(cayley_f2_spectrum(3, {9}), invalid_parameter);
}

TEST_CASE("strongly regular parameter spectra") {
    const SrgSpectrum hs = srg_spectrum({100, 22, 0, 6});
    CHECK(hs.lambda1 == doctest::Approx(22.0).epsilon(1e-12));
    CHECK(hs.theta == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(hs.tau == doctest::Approx(-8.0).epsilon(1e-12));
    CHECK(hs.mult_theta == 77);
    CHECK(hs.mult_tau == 22);
    CHECK(hs.ratio(100) == doctest::Approx(0.14).epsilon(1e-12));
    CHECK(hs.to_spectrum(100).size() == 100);

    // the 5-cycle is SRG(5,2,0,1) with irrational eigenvalues
    const SrgSpectrum pent = srg_spectrum({5, 2, 0, 1});
    CHECK(pent.theta == doctest::Approx((std::sqrt(5.0) - 1.0) / 2.0).epsilon(1e-12));
    CHECK(pent.tau == doctest::Approx(-(std::sqrt(5.0) + 1.0) / 2.0).epsilon(1e-12));
    CHECK(pent.mult_theta == 2);
    CHECK(pent.mult_tau == 2);
    check_close(pent.to_spectrum(5).values(), adjacency_spectrum(generate_cycle(5)).values(), 1e-9);

    // the folded 5-cube is SRG(16,5,0,2)
    const SrgSpectrum clebsch = srg_spectrum({16, 5, 0, 2});
    check_close(clebsch.to_spectrum(16).values(),
                adjacency_spectrum(generate_folded_cube(5)).values(), 1e-9);

    // complete graph: k = n-1 degenerates the second eigenvalue away
    const SrgSpectrum k4 = srg_spectrum({4, 3, 2, 0});
    CHECK(k4.mult_theta == 0);
    CHECK(k4.mult_tau == 3);

    CHECK_THROWS_AS(srg_spectrum({10, 3, 0, 2}), invalid_parameter);  // k(k-l-1) != (n-k-1)mu
    CHECK_THROWS_AS(srg_spectrum({13, 6, 3, 2}), invalid_parameter);  // multiplicity not integral
}
