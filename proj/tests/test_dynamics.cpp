#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "hebnet/dynamics.hpp"

using namespace hebnet;
using namespace hebnet::testing;


TEST_CASE("sigmoid values and slopes") {
    const Activation act = Activation::sigmoid();
    CHECK(act.value(0.0) == 0.5);
    CHECK(act.max_value() == 1.0);
    CHECK(act.max_slope() == 0.25);
    CHECK(act.value(50.0) <= 1.0);
    CHECK(1.0 - act.value(50.0) < 1e-20);
    CHECK(std::isfinite(act.value(1e4)));
    CHECK(std::isfinite(act.value(-1e4)));
    CHECK(act.value(-1e4) >= 0.0);

    SUBCASE("slope matches central differences") {
        for (double s : {-3.0, 0.0, 2.0}) {
            const double h = 1e-6;
            const double fd = (act.value(s + h) - act.value(s - h)) / (2 * h);
            CHECK(std::abs(act.slope(s) - fd) < 1e-6 * std::max(1e-3, std::abs(fd)));
        }
    }

    SUBCASE("scaled family stays within its stated envelopes") {
        const Activation scaled = Activation::scaled_sigmoid(2.0, 2.0);
        for (double s = -50.0; s <= 50.0; s += 0.25) {
            CHECK(scaled.value(s) >= 0.0);
            CHECK(scaled.value(s) <= scaled.max_value());
            CHECK(scaled.slope(s) >= 0.0);
            CHECK(scaled.slope(s) <= 1.0);
            CHECK(act.value(s) <= 1.0);
            CHECK(act.slope(s) <= 1.0);
        }
    }

    SUBCASE("slope bound above 1 is rejected") {
        CHECK_THROWS_AS(Activation::scaled_sigmoid(5.0, 1.0), InvalidParams);
        CHECK_THROWS_AS(Activation::scaled_sigmoid(-1.0, 1.0), InvalidParams);
    }
}

TEST_CASE("stimulus signals and their exact sup-bounds") {
    Stimulus u(3);
    u.set(0, Signal::sinusoid(20.0, 8.0));
    u.set(1, Signal::constant(-4.0));
    u.set(2, Signal::tanh_ramp(7.0));
    CHECK(u.value(0, 0.0) == 0.0);
    CHECK(u.value(1, 3.0) == -4.0);
    CHECK(u.value(2, 1000.0) == doctest::Approx(7.0));
    CHECK(u.sup_abs() == 20.0);
    CHECK(!u.channel_is_zero(1));
    CHECK(Stimulus::zero(5).sup_abs() == 0.0);
    CHECK(Stimulus::zero(5).channel_is_zero(4));
}

TEST_CASE("decoupled neuron decays linearly") {
    const Topology topo(1, {}, Eigen::VectorXd());
    ModelSpec spec;
    spec.c_n = 1.0;
    spec.c_s = 1.0;
    spec.u = Stimulus::zero(1);
    spec.ubar = Stimulus::zero(0);
    SystemState s{Eigen::VectorXd::Constant(1, 2.0), Eigen::VectorXd()};
    const SystemState d = vector_field(topo, spec, s, 0.0);
    CHECK(d.y[0] == -2.0);
    CHECK(d.w.size() == 0);
}

TEST_CASE("Oja models with c_o = 0 reduce to the Hebbian ones bitwise") {
    std::mt19937_64 rng(2001);
    const Topology topo = fig1_topology();
    for (int trial = 0; trial < 100; ++trial) {
        const SystemState s = random_state(rng, topo, 2.0);
        const double t = trial * 0.37;

        ModelSpec hh = fig1_spec(ModelKind::HopfieldHebbian);
        ModelSpec ho = fig1_spec(ModelKind::HopfieldOja, 0.0);
        const SystemState d1 = vector_field(topo, hh, s, t);
        const SystemState d2 = vector_field(topo, ho, s, t);
        CHECK(bitwise_equal(d1.y, d2.y));
        CHECK(bitwise_equal(d1.w, d2.w));

        hh.model = ModelKind::FiringRateHebbian;
        ho.model = ModelKind::FiringRateOja;
        const SystemState d3 = vector_field(topo, hh, s, t);
        const SystemState d4 = vector_field(topo, ho, s, t);
        CHECK(bitwise_equal(d3.y, d4.y));
        CHECK(bitwise_equal(d3.w, d4.w));

        const Eigen::MatrixXd j1 = jacobian(topo, hh, s, t).full();
        const Eigen::MatrixXd j2 = jacobian(topo, ho, s, t).full();
        CHECK(bitwise_equal(j1, j2));
    }
}

TEST_CASE("sparse and dense formulations agree on active entries") {
    std::mt19937_64 rng(2002);
    for (ModelKind kind : kAllModels) {
        for (int trial = 0; trial < 50; ++trial) {
            const Topology topo = random_topology(rng, 6, 10);
            const ModelSpec spec = random_spec(rng, kind, topo);
            const SystemState s = random_state(rng, topo, 2.0);
            const double t = trial * 0.21;

            const SystemState sparse = vector_field(topo, spec, s, t);

            const DenseState ds{s.y, topo.reconstruct_adjacency(s.w)};
            const Eigen::MatrixXd H = topo.reconstruct_adjacency(topo.coefficients());
            const Eigen::MatrixXd Ubar = broadcast_edge_stimulus(topo, spec.ubar, t);
            const DenseState dd = dense_vector_field(spec, H, Ubar, ds, t);

            for (int i = 0; i < topo.neuron_count(); ++i)
                CHECK(std::abs(sparse.y[i] - dd.y[i]) <=
                      1e-12 * std::max(1.0, std::abs(dd.y[i])));
            for (int e = 0; e < topo.edge_count(); ++e) {
                const Edge& ed = topo.edges()[static_cast<size_t>(e)];
                const double dense_entry = dd.W(ed.post, ed.pre);
                CHECK(std::abs(sparse.w[e] - dense_entry) <=
                      1e-12 * std::max(1.0, std::abs(dense_entry)));
            }
        }
    }
}

TEST_CASE("dense synaptic decay and symmetry") {
    ModelSpec spec;
    spec.c_n = 1.0;
    spec.c_s = 2.5;
    spec.u = Stimulus::zero(3);
    spec.ubar = Stimulus::zero(0);
    const Eigen::MatrixXd zero3 = Eigen::MatrixXd::Zero(3, 3);

    SUBCASE("H = 0, Ubar = 0 leaves pure decay") {
        Eigen::MatrixXd W(3, 3);
        W << 1, 2, 3, 4, 5, 6, 7, 8, 9;
        const DenseState d =
            dense_vector_field(spec, zero3, zero3, {Eigen::VectorXd::Zero(3), W}, 0.0);
        CHECK(bitwise_equal(d.W, -2.5 * W));
    }

    SUBCASE("symmetric H and W give a symmetric derivative") {
        std::mt19937_64 rng(2003);
        Eigen::MatrixXd R(3, 3), S(3, 3);
        for (int i = 0; i < 9; ++i) {
            R(i / 3, i % 3) = random_vector(rng, 1, 1.0)[0];
            S(i / 3, i % 3) = random_vector(rng, 1, 1.0)[0];
        }
        const Eigen::MatrixXd H = R + R.transpose();
        const Eigen::MatrixXd W = S + S.transpose();
        const DenseState d =
            dense_vector_field(spec, H, zero3, {random_vector(rng, 3, 1.0), W}, 0.0);
        const Eigen::MatrixXd skew = 0.5 * (d.W - d.W.transpose());
        CHECK(skew.cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("jacobian blocks for trivial cases") {
    SUBCASE("no synapses: only the neural decay block") {
        const Topology topo(3, {}, Eigen::VectorXd());
        ModelSpec spec;
        spec.c_n = 2.0;
        spec.c_s = 1.0;
        spec.u = Stimulus::zero(3);
        spec.ubar = Stimulus::zero(0);
        const JacobianBlocks J =
            jacobian(topo, spec, {Eigen::VectorXd::Ones(3), Eigen::VectorXd()}, 0.0);
        CHECK(bitwise_equal(J.nn, -2.0 * Eigen::MatrixXd::Identity(3, 3)));
        CHECK(J.ns.size() == 0);
        CHECK(J.sn.size() == 0);
        CHECK(J.ss.size() == 0);
    }

    SUBCASE("Hebbian synaptic block is exactly -c_s I") {
        std::mt19937_64 rng(2004);
        const Topology topo = fig1_topology();
        const ModelSpec spec = fig1_spec();
        for (int trial = 0; trial < 10; ++trial) {
            const SystemState s = random_state(rng, topo, 3.0);
            const JacobianBlocks J = jacobian(topo, spec, s, 0.5);
            CHECK(bitwise_equal(J.ss, -3.2 * Eigen::MatrixXd::Identity(6, 6)));
        }
    }
}

TEST_CASE("analytic jacobian matches finite differences for all models") {
    std::mt19937_64 rng(2005);
    for (ModelKind kind : kAllModels) {
        for (int trial = 0; trial < 5; ++trial) {
            const Topology topo = random_topology_nm(rng, 4, 6);
            const ModelSpec spec = random_spec(rng, kind, topo);
            const SystemState s = random_state(rng, topo, 1.5);
            const double t = 0.3 + 0.11 * trial;

            const Eigen::MatrixXd analytic = jacobian(topo, spec, s, t).full();
            const Eigen::MatrixXd fd = fd_jacobian(topo, spec, s, t);
            for (int i = 0; i < analytic.rows(); ++i)
                for (int j = 0; j < analytic.cols(); ++j)
                    CHECK(std::abs(analytic(i, j) - fd(i, j)) <=
                          1e-5 * std::max(1.0, std::abs(analytic(i, j))));
        }
    }
}

TEST_CASE("dimension mismatches are rejected") {
    const Topology topo = fig1_topology();
    const ModelSpec spec = fig1_spec();
    SystemState bad{Eigen::VectorXd::Ones(5), Eigen::VectorXd::Ones(6)};
    CHECK_THROWS_AS(vector_field(topo, spec, bad, 0.0), DimensionMismatch);
    CHECK_THROWS_AS(jacobian(topo, spec, bad, 0.0), DimensionMismatch);

    ModelSpec bad_spec = spec;
    bad_spec.c_o = 0.5; // Oja coefficient on a Hebbian model
    SystemState ok{Eigen::VectorXd::Ones(6), Eigen::VectorXd::Ones(6)};
    CHECK_THROWS_AS(vector_field(topo, bad_spec, ok, 0.0), InvalidParams);
}
