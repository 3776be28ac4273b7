#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "jcm/dynamics.hpp"
#include "jcm/error.hpp"
#include "oracles/dense_jcm.hpp"
#include "oracles/reference_values.hpp"
#include "oracles/series_oracles.hpp"

using namespace jcm;

namespace {

SystemConfig one_mode(FieldAmplitudes state, int k, double detuning = 0.0) {
  return SystemConfig{{ModeConfig{k, std::move(state), std::nullopt}}, detuning};
}

// Embeds the initial product state |+> (x) psi_j into the dense model.
Eigen::VectorXcd dense_initial(const SystemConfig& config, const oracle::DenseModel& model) {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(model.dim());
  config.grid().for_each([&](std::size_t, std::span<const int> n) {
    psi(model.index(0, std::vector<int>(n.begin(), n.end()))) = joint_weight(config.modes, n);
  });
  return psi;
}

Eigen::VectorXcd dense_from_evolved(const EvolvedState& state, const oracle::DenseModel& model) {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(model.dim());
  state.grid.for_each([&](std::size_t flat, std::span<const int> n) {
    std::vector<int> base(n.begin(), n.end());
    std::vector<int> up = base;
    for (std::size_t j = 0; j < up.size(); ++j) {
      up[j] += state.k[j];
    }
    psi(model.index(0, base)) += state.a_plus[flat];
    psi(model.index(1, up)) += state.a_minus[flat];
  });
  return psi;
}

oracle::DenseModel model_for(const SystemConfig& config) {
  std::vector<int> k;
  std::vector<int> dims;
  for (const ModeConfig& m : config.modes) {
    k.push_back(m.k);
    dims.push_back(m.state.n_max() + m.k + 1);
  }
  return oracle::DenseModel(k, dims);
}

double oracle_distance(const SystemConfig& config, double T) {
  const oracle::DenseModel model = model_for(config);
  const Eigen::VectorXcd want =
      oracle::expm_apply(model.c2(config.detuning_ratio), T, dense_initial(config, model));
  return (dense_from_evolved(evolve(config, T), model) - want).norm();
}

}  // namespace

TEST_CASE("rabi_sq") {
  const SystemConfig a = one_mode(number(0, 3), 1);
  const std::vector<int> n0{0};
  CHECK(rabi_sq(n0, a) == doctest::Approx(1.0));
  const SystemConfig b = one_mode(number(0, 3), 2);
  const std::vector<int> n1{1};
  CHECK(rabi_sq(n1, b) == doctest::Approx(6.0).epsilon(1e-14));
  SystemConfig two{{ModeConfig{1, number(0, 5), std::nullopt}, ModeConfig{2, number(0, 5), std::nullopt}}, 0.5};
  const std::vector<int> n23{2, 3};
  CHECK(rabi_sq(n23, two) == doctest::Approx(60.25).epsilon(1e-14));
}

TEST_CASE("rabi_sq overflow") {
  const SystemConfig big = one_mode(number(0, 200), 150);
  const std::vector<int> n{200};
  CHECK_THROWS_AS(rabi_sq(n, big), Overflow);
}

TEST_CASE("g1_g2 examples") {
  const SystemConfig vac = one_mode(number(0, 3), 1);
  const std::vector<int> n0{0};
  BranchFactors g = g1_g2(n0, 0.0, vac);
  CHECK(g.g1 == Complex{1.0, 0.0});
  CHECK(g.g2 == 0.0);
  g = g1_g2(n0, std::numbers::pi / 2, vac);
  CHECK(std::abs(g.g1) < 1e-15);
  CHECK(g.g2 == doctest::Approx(-1.0).epsilon(1e-15));

  const SystemConfig off = one_mode(number(0, 6), 2, 1.0);
  const std::vector<int> n3{3};
  g = g1_g2(n3, 0.7, off);
  CHECK(std::abs(g.g1 - oracle::ref::kG1) < 1e-12);
  CHECK(g.g2 == doctest::Approx(oracle::ref::kG2).epsilon(1e-12));
}

TEST_CASE("g1_g2 against the 2x2 subspace exponential") {
  // {|+,3>, |-,5>} block of C2/lambda with k = 2, Delta/lambda = 1.
  Eigen::MatrixXd block(2, 2);
  const double g = std::sqrt(20.0);
  block << 1.0, g, g, -1.0;
  Eigen::VectorXcd start(2);
  start << 1.0, 0.0;
  const Eigen::VectorXcd out = oracle::expm_apply(block, 0.7, start);
  const SystemConfig config = one_mode(number(0, 6), 2, 1.0);
  const std::vector<int> n3{3};
  const BranchFactors f = g1_g2(n3, 0.7, config);
  CHECK(std::abs(f.g1 - out(0)) < 1e-10);
  // The evolved |-> amplitude is i G2 with the G2 sign convention above.
  CHECK(std::abs(Complex{0.0, 1.0} * f.g2 - out(1)) < 1e-10);
}

TEST_CASE("|G1|^2 + |G2|^2 = 1") {
  for (const double detuning : {0.0, 0.3, 2.0}) {
    const SystemConfig config = one_mode(number(0, 30), 2, detuning);
    for (int n = 0; n <= 30; n += 3) {
      const std::vector<int> idx{n};
      for (double T = -5.0; T <= 40.0; T += 1.7) {
        const BranchFactors g = g1_g2(idx, T, config);
        CHECK(std::norm(g.g1) + g.g2 * g.g2 == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("evolve examples") {
  const SystemConfig config = one_mode(coherent(2.0, 40), 1);
  const EvolvedState s0 = evolve(config, 0.0);
  for (int n = 0; n <= 40; ++n) {
    CHECK(s0.a_plus[static_cast<std::size_t>(n)] == config.modes[0].state[n]);
    CHECK(s0.a_minus[static_cast<std::size_t>(n)] == Complex{0.0, 0.0});
  }
  const EvolvedState vac = evolve(one_mode(number(0, 2), 1), std::numbers::pi / 2);
  CHECK(std::abs(vac.a_plus[0]) < 1e-15);
  CHECK(std::abs(vac.a_minus[0]) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(oracle_distance(config, 1.3) < 1e-8);
}

TEST_CASE("evolve matches dense exponential, single mode") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> time(0.0, 30.0);
  std::normal_distribution<double> gauss;
  for (const int k : {1, 2, 3}) {
    for (const double detuning : {0.0, 1.0, -0.4}) {
      std::vector<Complex> c(13);
      double norm = 0.0;
      for (Complex& v : c) {
        v = {gauss(rng), gauss(rng)};
        norm += std::norm(v);
      }
      for (Complex& v : c) {
        v /= std::sqrt(norm);
      }
      const SystemConfig config = one_mode(FieldAmplitudes::from_coefficients(c), k, detuning);
      for (int i = 0; i < 5; ++i) {
        CHECK(oracle_distance(config, time(rng)) < 1e-8);
      }
    }
  }
}

TEST_CASE("evolve matches dense exponential, two modes") {
  SystemConfig config{{ModeConfig{1, coherent(0.6, 5, 1e-3), std::nullopt},
                       ModeConfig{2, cat(Complex{0.0, 0.7}, Parity::kEven, 6, 1e-3), std::nullopt}},
                      0.8};
  for (const double T : {0.3, 2.9, 11.0}) {
    CHECK(oracle_distance(config, T) < 1e-8);
  }
}

TEST_CASE("constants of motion commute on the truncated space") {
  for (const std::vector<int>& k : {std::vector<int>{1}, std::vector<int>{2}, std::vector<int>{1, 2},
                                    std::vector<int>{2, 2}}) {
    std::vector<int> dims(k.size(), 9);
    const oracle::DenseModel model(k, dims);
    std::vector<double> omega{1.3, 0.7};
    omega.resize(k.size());
    const Eigen::MatrixXd c1 = model.c1(omega);
    const Eigen::MatrixXd c2 = model.c2(0.37);
    CHECK((c1 * c2 - c2 * c1).norm() < 1e-12);
  }
}

TEST_CASE("unitarity and the two inversion paths") {
  SystemConfig config{{ModeConfig{1, coherent(1.1, 25), std::nullopt},
                       ModeConfig{1, coherent(Complex{0.3, 0.9}, 25), std::nullopt}},
                      0.25};
  for (double T = 0.0; T < 15.0; T += 1.3) {
    const EvolvedState state = evolve(config, T);
    CHECK(state.norm_sq() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(atomic_inversion(state) == doctest::Approx(atomic_inversion(config, T)).epsilon(1e-12));
  }
}

TEST_CASE("atomic inversion") {
  const SystemConfig vac = one_mode(number(0, 2), 1);
  for (double T = 0.0; T < 10.0; T += 0.37) {
    CHECK(atomic_inversion(vac, T) == doctest::Approx(std::cos(2.0 * T)).epsilon(1e-12));
  }
  // against the explicit Rabi-pair sum
  const FieldAmplitudes state = coherent(2.0, 40);
  std::vector<long double> weights;
  for (int n = 0; n <= 40; ++n) {
    weights.push_back(state.probability(n));
  }
  for (const int k : {1, 2}) {
    for (const double d : {0.0, 0.7}) {
      const SystemConfig config = one_mode(state, k, d);
      for (double T = 0.0; T < 8.0; T += 0.9) {
        const double want = static_cast<double>(oracle::inversion_from_weights(weights, k, d, T));
        CHECK(atomic_inversion(config, T) == doctest::Approx(want).epsilon(1e-12).scale(1e-12));
        // resonant inversion is even in T
        if (d == 0.0) {
          CHECK(atomic_inversion(config, -T) == doctest::Approx(atomic_inversion(config, T)).epsilon(1e-14));
        }
      }
    }
  }
}

TEST_CASE("photon count distribution") {
  const SystemConfig config = one_mode(coherent(2.0, 40), 1);
  const std::vector<double> p0 = photon_count_distribution(config, 0.0);
  CHECK(p0.size() == 42);
  for (int n = 0; n <= 40; ++n) {
    CHECK(p0[static_cast<std::size_t>(n)] == doctest::Approx(config.modes[0].state.probability(n)).epsilon(1e-15));
  }
  const std::vector<double> vac = photon_count_distribution(one_mode(number(0, 2), 1), std::numbers::pi / 2);
  CHECK(vac[0] < 1e-30);
  CHECK(vac[1] == doctest::Approx(1.0).epsilon(1e-15));

  // Diagonal of the reduced field density matrix of the dense-oracle state.
  const oracle::DenseModel model = model_for(config);
  const Eigen::VectorXcd psi = oracle::expm_apply(model.c2(0.0), 2.0, dense_initial(config, model));
  const std::vector<double> p = photon_count_distribution(config, 2.0);
  double total = 0.0;
  for (int n = 0; n < static_cast<int>(p.size()); ++n) {
    const double want = std::norm(psi(model.index(0, {n}))) + std::norm(psi(model.index(1, {n})));
    CHECK(std::abs(p[static_cast<std::size_t>(n)] - want) < 1e-8);
    total += p[static_cast<std::size_t>(n)];
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));

  SystemConfig two{{ModeConfig{1, number(0, 2), std::nullopt}, ModeConfig{1, number(0, 2), std::nullopt}}, 0.0};
  CHECK_THROWS_AS(photon_count_distribution(two, 1.0), UnsupportedArity);
}

TEST_CASE("fock grid") {
  const FockGrid grid({2, 3});
  CHECK(grid.size() == 6);
  std::vector<std::vector<int>> seen;
  grid.for_each([&](std::size_t flat, std::span<const int> n) {
    CHECK(flat == grid.flat(n));
    seen.emplace_back(n.begin(), n.end());
  });
  CHECK(seen.front() == std::vector<int>{0, 0});
  CHECK(seen[1] == std::vector<int>{0, 1});
  CHECK(seen.back() == std::vector<int>{1, 2});
  const std::vector<int> bad{2, 0};
  CHECK_THROWS_AS(static_cast<void>(grid.flat(bad)), IndexOutOfRange);
  CHECK_THROWS_AS(FockGrid({0}), InvalidArgument);
}
