#include "doctest.h"

#include <cmath>

#include "jc/ensemble.hpp"
#include "jc/errors.hpp"
#include "jc/modes.hpp"

using namespace jc;

namespace {

// Hand-built record: photocurrent i(t) = sin(t) on a uniform grid with
// cavity triggers at chosen times.
TrajectoryRecord fake_record(double t_max, double dt, const std::vector<double>& triggers) {
    TrajectoryRecord rec;
    const auto n = static_cast<Eigen::Index>(t_max / dt) + 1;
    rec.times = linspace(0.0, t_max, n);
    rec.photocurrent = rec.times.array().sin();
    rec.cond_photon_number = RVector::Zero(n);
    rec.cond_quadrature = RVector::Zero(n);
    rec.dt = dt;
    for (double t : triggers) rec.jumps.push_back({t, JumpChannel::cavity_APD});
    return rec;
}

}  // namespace

TEST_CASE("ensembles are reproducible and member streams differ") {
    const SystemParams p = SystemParams::from_ratios(30.0, 0.08, -0.7, 0.0, 6);
    EnsembleSpec spec;
    spec.n_traj = 4;
    spec.base_seed = 7;
    spec.cfg.t_max = 2.0;
    spec.cfg.initial_state.spec = "fock:3";   // several guaranteed emissions
    const auto a = run_ensemble(p, spec);
    const auto b = run_ensemble(p, spec);
    REQUIRE(a.size() == 4);
    for (int k = 0; k < 4; ++k)
        CHECK((a[k].cond_photon_number - b[k].cond_photon_number).cwiseAbs().maxCoeff() ==
              0.0);
    CHECK(a[0].seed != a[1].seed);
    CHECK((a[0].cond_photon_number - a[1].cond_photon_number).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("triggered average reads the photocurrent at the right delays") {
    const double dt = 1e-3;
    std::vector<TrajectoryRecord> recs{fake_record(20.0, dt, {10.0})};
    RVector tau(3);
    tau << -1.0, 0.0, 1.0;
    const TriggeredAverage ta = triggered_average(recs, tau, 0.0, 10.0, 0);
    REQUIRE(ta.n_triggers == 1);
    CHECK(ta.H_values(0) == doctest::Approx(std::sin(9.0)).epsilon(1e-6));
    CHECK(ta.H_values(1) == doctest::Approx(std::sin(10.0)).epsilon(1e-6));
    CHECK(ta.H_values(2) == doctest::Approx(std::sin(11.0)).epsilon(1e-6));
    CHECK(ta.shot_noise_floor == doctest::Approx(std::sqrt(10.0 / 2.0)).epsilon(1e-12));
}

TEST_CASE("edge and warmup triggers are excluded") {
    const double dt = 1e-3;
    // triggers at 0.5 (inside warmup), 19.9 (too close to the end), 10 (good)
    std::vector<TrajectoryRecord> recs{fake_record(20.0, dt, {0.5, 10.0, 19.9})};
    RVector tau(3);
    tau << -1.0, 0.0, 1.0;
    const TriggeredAverage ta = triggered_average(recs, tau, 2.0, 10.0, 0);
    CHECK(ta.n_triggers == 1);
}

TEST_CASE("no usable triggers raises") {
    std::vector<TrajectoryRecord> recs{fake_record(5.0, 1e-3, {})};
    RVector tau(1);
    tau << 0.0;
    CHECK_THROWS_AS(triggered_average(recs, tau, 0.0, 10.0), NoTriggers);
}

TEST_CASE("bootstrap errors shrink with trigger statistics") {
    const double dt = 1e-3;
    std::vector<TrajectoryRecord> few, many;
    for (int k = 0; k < 4; ++k)
        few.push_back(fake_record(30.0, dt, {8.0 + k}));
    for (int k = 0; k < 24; ++k)
        many.push_back(fake_record(30.0, dt, {5.0 + 0.8 * k}));
    RVector tau(1);
    tau << 0.5;
    const TriggeredAverage a = triggered_average(few, tau, 0.0, 10.0, 200);
    const TriggeredAverage b = triggered_average(many, tau, 0.0, 10.0, 200);
    CHECK(b.std_error(0) < a.std_error(0));
}

TEST_CASE("photon moments: exact mean and standard error") {
    TrajectoryRecord r1 = fake_record(1.0, 0.5, {});
    TrajectoryRecord r2 = fake_record(1.0, 0.5, {});
    r1.cond_photon_number << 1.0, 2.0, 3.0;
    r2.cond_photon_number << 3.0, 2.0, 5.0;
    const EnsembleMoments m = ensemble_photon_moments({r1, r2}, {0, 2});
    CHECK(m.mean(0) == doctest::Approx(2.0));
    CHECK(m.mean(1) == doctest::Approx(4.0));
    // sample std = sqrt(2), SE = 1 for the pair {1,3}; {3,5} likewise
    CHECK(m.std_error(0) == doctest::Approx(1.0));
    CHECK(m.std_error(1) == doctest::Approx(1.0));
}
