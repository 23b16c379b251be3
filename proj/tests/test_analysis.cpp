#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "hebnet/certificate.hpp"
#include "hebnet/integrate.hpp"
#include "hebnet/lognorm.hpp"

using namespace hebnet;
using namespace hebnet::testing;

namespace {

// entries on a coarse dyadic grid so matrix sums are exact in double
Eigen::MatrixXd dyadic_matrix(std::mt19937_64& rng, int n, double scale = 2.0) {
    std::uniform_int_distribution<int> grid(-128, 128);
    Eigen::MatrixXd A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = scale * grid(rng) / 64.0;
    return A;
}

Eigen::MatrixXd random_metzler(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> off(0.0, 2.0);
    std::uniform_real_distribution<double> diag(-4.0, 1.0);
    Eigen::MatrixXd M(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M(i, j) = i == j ? diag(rng) : off(rng);
    return M;
}

MajorantParams fig1_params() {
    MajorantParams p;
    p.c_n = 3.6;
    p.c_s = 3.2;
    p.c_o = 0.0;
    p.phi_max = 1.0;
    p.h_max = 1.0;
    p.ubar_max = 1.5;
    p.d_max = 2;
    return p;
}

MajorantParams random_params(std::mt19937_64& rng, ModelKind kind) {
    std::uniform_real_distribution<double> decay(0.2, 5.0);
    std::uniform_real_distribution<double> phi(0.3, 1.0);
    std::uniform_real_distribution<double> coupling(0.05, 2.0);
    std::uniform_real_distribution<double> mag(0.0, 2.0);
    std::uniform_int_distribution<int> deg(1, 4);
    std::uniform_real_distribution<double> oja(0.0, 1.5);
    MajorantParams p;
    p.c_n = decay(rng);
    p.c_s = decay(rng);
    p.c_o = is_oja(kind) ? oja(rng) : 0.0;
    p.phi_max = phi(rng);
    p.h_max = coupling(rng);
    p.ubar_max = mag(rng);
    p.d_max = deg(rng);
    return p;
}

} // namespace

TEST_CASE("infinity log norm closed form") {
    CHECK(lognorm_inf(-3.2 * Eigen::MatrixXd::Identity(4, 4)) == -3.2);

    Eigen::MatrixXd A(2, 2);
    A << -2, 1, 0.5, -3;
    CHECK(lognorm_inf(A) == -1.0); // rows: -2+1 = -1, -3+0.5 = -2.5

    CHECK_THROWS_AS(lognorm_inf(Eigen::MatrixXd::Zero(2, 3)), NonSquare);

    SUBCASE("translation property is exact on a dyadic grid") {
        std::mt19937_64 rng(3001);
        for (int trial = 0; trial < 50; ++trial) {
            const Eigen::MatrixXd M = dyadic_matrix(rng, 2 + trial % 4);
            const double c = dyadic_matrix(rng, 1)(0, 0);
            const Eigen::MatrixXd shifted =
                M + c * Eigen::MatrixXd::Identity(M.rows(), M.cols());
            CHECK(lognorm_inf(shifted) == lognorm_inf(M) + c);
        }
    }
}

TEST_CASE("metzler majorant flips off-diagonal signs only") {
    Eigen::MatrixXd A(2, 2), expected(2, 2);
    A << -1, -2, 3, -4;
    expected << -1, 2, 3, -4;
    CHECK(bitwise_equal(metzler_majorant(A), expected));
}

TEST_CASE("aggregate Metzler majorant of the jacobian blocks") {
    SUBCASE("zero couplings leave the diagonal log norms") {
        JacobianBlocks blocks;
        blocks.nn = -2.0 * Eigen::MatrixXd::Identity(3, 3);
        blocks.ss = -5.0 * Eigen::MatrixXd::Identity(2, 2);
        blocks.ns = Eigen::MatrixXd::Zero(3, 2);
        blocks.sn = Eigen::MatrixXd::Zero(2, 3);
        const Eigen::Matrix2d M = aggregate_metzler_majorant(blocks);
        Eigen::Matrix2d expected;
        expected << -2, 0, 0, -5;
        CHECK(bitwise_equal(M, expected));
    }

    SUBCASE("empty diagonal block is rejected") {
        JacobianBlocks blocks;
        blocks.nn = -Eigen::MatrixXd::Identity(3, 3);
        CHECK_THROWS_AS(aggregate_metzler_majorant(blocks), NonSquareDiagonalBlock);
    }
}

TEST_CASE("pointwise domination by the constant majorant inside the box") {
    std::mt19937_64 rng(3002);
    const Topology topo = fig1_topology();
    for (ModelKind kind : kAllModels) {
        ModelSpec spec = fig1_spec(kind, is_oja(kind) ? 0.7 : 0.0);
        const Certificate cert = certify(topo, spec);
        for (int trial = 0; trial < 125; ++trial) {
            const SystemState s = random_state_in_box(rng, topo, spec);
            const Eigen::Matrix2d agg =
                aggregate_metzler_majorant(jacobian(topo, spec, s, 0.4 * trial));
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    CHECK(agg(i, j) <= cert.majorant(i, j) + 1e-12);
        }
    }
}

TEST_CASE("majorant bound closed forms") {
    SUBCASE("fig1 constants") {
        const Eigen::Matrix2d M =
            majorant_bound(ModelKind::HopfieldHebbian, fig1_params());
        // (1,1): 2*(1+1.5)/3.2 - 3.6 = -2.0375
        CHECK(M(0, 0) == doctest::Approx(-2.0375).epsilon(1e-12));
        CHECK(M(0, 1) == 2.0);
        CHECK(M(1, 0) == 2.0);
        CHECK(M(1, 1) == -3.2);
    }

    SUBCASE("decoupled limit is triangular") {
        MajorantParams p = fig1_params();
        p.h_max = 0.0;
        p.ubar_max = 0.0;
        const Eigen::Matrix2d M = majorant_bound(ModelKind::HopfieldHebbian, p);
        Eigen::Matrix2d expected;
        expected << -3.6, 2.0, 0.0, -3.2;
        CHECK(bitwise_equal(M, expected));
    }

    SUBCASE("firing-rate threshold coincides with Hopfield at c_n = 1") {
        MajorantParams p = fig1_params();
        p.c_n = 1.0;
        CHECK(condition_rhs(ModelKind::FiringRateHebbian, p) ==
              doctest::Approx(condition_rhs(ModelKind::HopfieldHebbian, p))
                  .epsilon(1e-14));
    }

    SUBCASE("invalid parameters are rejected") {
        MajorantParams p = fig1_params();
        p.c_s = 0.0;
        CHECK_THROWS_AS(majorant_bound(ModelKind::HopfieldHebbian, p), InvalidParams);
        p = fig1_params();
        p.c_o = 0.5; // not an Oja model
        CHECK_THROWS_AS(majorant_bound(ModelKind::HopfieldHebbian, p), InvalidParams);
        p = fig1_params();
        p.d_max = -1;
        CHECK_THROWS_AS(majorant_bound(ModelKind::HopfieldOja, p), InvalidParams);
    }
}

TEST_CASE("fig1 certificate reproduces the expected rate") {
    const Topology topo = fig1_topology();
    const ModelSpec spec = fig1_spec();
    const Certificate cert = certify(topo, spec);
    CHECK(cert.satisfied);
    CHECK(cert.condition_lhs == doctest::Approx(11.52));
    CHECK(cert.condition_rhs == doctest::Approx(9.0));
    CHECK(cert.rate == doctest::Approx(0.536).epsilon(0.01));
    // closed form against the generic eigensolver
    CHECK(std::abs(cert.rate + spectral_abscissa(cert.majorant)) < 1e-10);
    // the weighted log norm with the certificate eta meets the abscissa
    CHECK(weighted_lognorm(cert.majorant, cert.eta, kInf) ==
          doctest::Approx(-cert.rate).epsilon(1e-9));
}

TEST_CASE("decoupled certificate collapses to the slower decay rate") {
    std::mt19937_64 rng(3003);
    std::uniform_real_distribution<double> decay(0.1, 6.0);
    const Topology topo(3, {}, Eigen::VectorXd());
    for (int trial = 0; trial < 50; ++trial) {
        ModelSpec spec;
        spec.c_n = decay(rng);
        spec.c_s = decay(rng);
        spec.u = Stimulus::zero(3);
        spec.ubar = Stimulus::zero(0);
        const Certificate cert = certify(topo, spec);
        CHECK(cert.satisfied);
        CHECK(cert.rate ==
              doctest::Approx(std::min(spec.c_n, spec.c_s)).epsilon(1e-12));
    }
}

TEST_CASE("rate vanishes as the condition tightens") {
    MajorantParams p = fig1_params();
    const double rhs = condition_rhs(ModelKind::HopfieldHebbian, p);
    double prev = kInf;
    for (double eps : {1.0, 0.1, 0.01}) {
        p.c_n = (rhs + eps) / p.c_s;
        const Certificate cert = certify_params(ModelKind::HopfieldHebbian, p);
        CHECK(cert.satisfied);
        CHECK(cert.rate > 0.0);
        CHECK(cert.rate < prev);
        prev = cert.rate;
    }
    CHECK(prev < 0.003); // eps = 0.01 leaves only a sliver of margin
}

TEST_CASE("certificate flag agrees with the Hurwitz test on random grids") {
    std::mt19937_64 rng(3004);
    for (ModelKind kind : kAllModels) {
        int satisfied_count = 0;
        for (int trial = 0; trial < 250; ++trial) {
            const MajorantParams p = random_params(rng, kind);
            const Certificate cert = certify_params(kind, p);
            const double alpha = spectral_abscissa(cert.majorant);
            CHECK(cert.satisfied == (alpha < 0.0));
            const double det = cert.majorant.determinant();
            const double tr = cert.majorant.trace();
            CHECK(cert.satisfied == (det > 0.0 && tr < 0.0));
            if (cert.satisfied) {
                ++satisfied_count;
                CHECK(std::abs(cert.rate + alpha) < 1e-10);
            }
        }
        CHECK(satisfied_count > 10); // the draw covers both outcomes
    }
}

TEST_CASE("condition thresholds order as expected across models") {
    std::mt19937_64 rng(3005);
    for (int trial = 0; trial < 200; ++trial) {
        MajorantParams p = random_params(rng, ModelKind::HopfieldOja);
        if (p.c_o == 0.0) p.c_o = 0.3;
        const double rhs_ho = condition_rhs(ModelKind::HopfieldOja, p);
        const double rhs_fo = condition_rhs(ModelKind::FiringRateOja, p);
        MajorantParams ph = p;
        ph.c_o = 0.0;
        const double rhs_hh = condition_rhs(ModelKind::HopfieldHebbian, ph);
        const double rhs_fh = condition_rhs(ModelKind::FiringRateHebbian, ph);
        CHECK(rhs_ho >= rhs_hh);
        CHECK(rhs_fo >= rhs_fh);
        if (p.h_max > 0.0 && p.d_max > 0) {
            if (p.c_n > 1.0) CHECK(rhs_fh < rhs_hh);
            if (p.c_n < 1.0) CHECK(rhs_fh > rhs_hh);
        }
    }
}

TEST_CASE("forward-invariance bounds") {
    SUBCASE("fig1 values") {
        const Bounds b = compute_bounds(fig1_topology(), fig1_spec());
        CHECK(std::abs(b.w_max - 0.78125) <= 1e-12);
        CHECK(b.x_max == doctest::Approx(5.9895833333333).epsilon(1e-10));
        CHECK(b.nu_max == doctest::Approx(1.0 / 3.6).epsilon(1e-14));
        CHECK(b.h_max == 1.0);
        CHECK(b.b_max == 2.0);
        CHECK(b.d_max == 2);
        CHECK(b.u_max == 20.0);
        CHECK(b.neural_bound() == b.x_max);
    }

    SUBCASE("everything silent leaves only the firing-rate ceiling") {
        const Topology topo(2, {}, Eigen::VectorXd());
        ModelSpec spec;
        spec.c_n = 2.0;
        spec.c_s = 3.0;
        spec.u = Stimulus::zero(2);
        spec.ubar = Stimulus::zero(0);
        const Bounds b = compute_bounds(topo, spec);
        CHECK(b.w_max == 0.0);
        CHECK(b.x_max == 0.0);
        CHECK(b.nu_max == 0.5);
    }
}

TEST_CASE("bounds grow monotonically in the driving constants") {
    std::mt19937_64 rng(3010);
    std::uniform_real_distribution<double> bump(0.0, 1.0);
    const Topology topo = fig1_topology();
    for (int trial = 0; trial < 50; ++trial) {
        ModelSpec spec = fig1_spec();
        const Bounds base = compute_bounds(topo, spec);

        ModelSpec louder = spec;
        louder.u.set(0, Signal::sinusoid(20.0 + 5.0 * bump(rng), 8.0));
        louder.ubar.set(0, Signal::constant(1.5 + bump(rng)));
        const Bounds b = compute_bounds(topo, louder);
        CHECK(b.w_max >= base.w_max);
        CHECK(b.x_max >= base.x_max);
        CHECK(b.nu_max == base.nu_max);

        // scaling every coupling up never shrinks any bound
        const double s = 1.0 + bump(rng);
        const Topology scaled(topo.neuron_count(), topo.edges(),
                              (s * topo.coefficients()).eval());
        const Bounds c = compute_bounds(scaled, spec);
        CHECK(c.w_max >= base.w_max);
        CHECK(c.x_max >= base.x_max);
        CHECK(c.b_max >= base.b_max);
        CHECK(c.h_max == s * base.h_max);
    }
}

TEST_CASE("Perron norm weights") {
    SUBCASE("symmetric irreducible matrix keeps unit weights") {
        Eigen::MatrixXd M(2, 2);
        M << -2, 1, 1, -2;
        const Eigen::VectorXd eta = compute_eta(M, kInf, 0.0);
        CHECK(eta[0] == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(eta[1] == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(weighted_lognorm(M, eta, kInf) == doctest::Approx(-1.0).epsilon(1e-10));
    }

    SUBCASE("reducible matrix needs a positive delta") {
        const Eigen::MatrixXd M = Eigen::Vector2d(-1.0, -2.0).asDiagonal();
        CHECK_THROWS_AS(compute_eta(M, kInf, 0.0), ReducibleWithZeroDelta);
        const Eigen::VectorXd eta = compute_eta(M, kInf, 0.01);
        const double mu = weighted_lognorm(M, eta, kInf);
        CHECK(mu >= -1.0 - 1e-12);
        CHECK(mu <= -1.0 + 0.05);
    }

    SUBCASE("fig1 majorant weights recover the spectral abscissa") {
        const Eigen::Matrix2d M =
            majorant_bound(ModelKind::HopfieldHebbian, fig1_params());
        const Eigen::VectorXd eta = compute_eta(M, kInf, 0.0);
        CHECK(std::abs(weighted_lognorm(M, eta, kInf) - spectral_abscissa(M)) < 1e-9);
        // p = 1 weights work too
        const Eigen::VectorXd eta1 = compute_eta(M, 1.0, 0.0);
        CHECK(std::abs(weighted_lognorm(M, eta1, 1.0) - spectral_abscissa(M)) < 1e-9);
    }

    SUBCASE("non-Metzler input is rejected") {
        Eigen::MatrixXd M(2, 2);
        M << -1, -0.5, 1, -1;
        CHECK_THROWS_AS(compute_eta(M, kInf, 0.1), NotMetzler);
    }

    SUBCASE("sandwich tightens monotonically as delta shrinks") {
        const Eigen::Matrix2d M =
            majorant_bound(ModelKind::HopfieldHebbian, fig1_params());
        const double alpha = spectral_abscissa(M);
        double prev = kInf;
        for (double delta : {1e-1, 1e-2, 1e-3}) {
            const double mu = weighted_lognorm(M, compute_eta(M, kInf, delta), kInf);
            CHECK(mu >= alpha - 1e-12);
            CHECK(mu <= prev + 1e-12);
            prev = mu;
        }
        CHECK(prev - alpha < 1e-3);
    }
}

TEST_CASE("weighted log norm") {
    std::mt19937_64 rng(3006);

    SUBCASE("unit weights reproduce the plain infinity log norm") {
        for (int trial = 0; trial < 30; ++trial) {
            const Eigen::MatrixXd A = dyadic_matrix(rng, 3);
            CHECK(weighted_lognorm(A, Eigen::VectorXd::Ones(3), kInf) == lognorm_inf(A));
        }
    }

    SUBCASE("similarity transform preserves the spectrum") {
        std::uniform_real_distribution<double> wdist(0.2, 5.0);
        for (int trial = 0; trial < 30; ++trial) {
            const Eigen::MatrixXd A = dyadic_matrix(rng, 3);
            Eigen::VectorXd eta(3);
            for (int i = 0; i < 3; ++i) eta[i] = wdist(rng);
            const Eigen::MatrixXd D = eta.asDiagonal();
            const Eigen::MatrixXd similar = D * A * D.inverse();
            CHECK(spectral_abscissa(similar) ==
                  doctest::Approx(spectral_abscissa(A)).epsilon(1e-8));
        }
    }

    SUBCASE("weighted log norm dominates the abscissa for Metzler matrices") {
        for (int trial = 0; trial < 100; ++trial) {
            const Eigen::MatrixXd M = random_metzler(rng, 2 + trial % 4);
            const Eigen::VectorXd eta = compute_eta(M, kInf, 1e-3);
            CHECK(weighted_lognorm(M, eta, kInf) >= spectral_abscissa(M) - 1e-9);
        }
    }

    SUBCASE("bad weights and exponents are rejected") {
        const Eigen::MatrixXd A = Eigen::MatrixXd::Identity(2, 2);
        Eigen::VectorXd eta(2);
        eta << 1.0, 0.0;
        CHECK_THROWS_AS(weighted_lognorm(A, eta, kInf), NonPositiveWeight);
        eta << 1.0, 1.0;
        CHECK_THROWS_AS(weighted_lognorm(A, eta, 2.0), UnsupportedExponent);
    }
}

TEST_CASE("composite log norm bound along a fig1 trajectory") {
    const Topology topo = fig1_topology();
    const ModelSpec spec = fig1_spec();
    const Certificate cert = certify(topo, spec);

    std::mt19937_64 rng(3007);
    SystemState s0 = random_state_in_box(rng, topo, spec);
    const Trajectory traj = integrate(topo, spec, s0, 10.0, 1e-3);

    for (size_t k = 0; k < traj.states.size(); k += 100) {
        const JacobianBlocks J = jacobian(topo, spec, traj.states[k], traj.times[k]);
        const double bound = composite_lognorm_bound(J, cert.eta, kInf);
        CHECK(bound <= -cert.rate + 1e-9);
        // lower half of the sandwich: at least the slowest diagonal block
        CHECK(bound >= std::max(lognorm_inf(J.nn), lognorm_inf(J.ss)) - 1e-12);
    }

    SUBCASE("block-diagonal composite bound is the max of the diagonals") {
        JacobianBlocks blocks;
        blocks.nn = -2.0 * Eigen::MatrixXd::Identity(3, 3);
        blocks.ss = -5.0 * Eigen::MatrixXd::Identity(2, 2);
        blocks.ns = Eigen::MatrixXd::Zero(3, 2);
        blocks.sn = Eigen::MatrixXd::Zero(2, 3);
        CHECK(composite_lognorm_bound(blocks, Eigen::Vector2d::Ones(), kInf) == -2.0);
    }
}
