#include <benchmark/benchmark.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <vector>

#include "qutrit/gellmann.hpp"
#include "qutrit/sampling.hpp"
#include "qutrit/statespace.hpp"

using namespace qutrit;

namespace {

std::vector<BlochVector> points(int count) {
  Sampler rng(1);
  std::vector<BlochVector> out(count);
  for (auto& p : out) p = rng.ball_point();
  return out;
}

const std::vector<BlochVector>& cached() {
  static const std::vector<BlochVector> p = points(4096);
  return p;
}

}  // namespace

static void BM_InStateSpace(benchmark::State& state) {
  const auto& p = cached();
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(in_state_space(p[i++ & 4095]));
}
BENCHMARK(BM_InStateSpace);

static void BM_EigenOracle(benchmark::State& state) {
  const auto& p = cached();
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(eigen_oracle(p[i++ & 4095]));
}
BENCHMARK(BM_EigenOracle);

static void BM_SelfAdjointSolver(benchmark::State& state) {
  const auto& p = cached();
  std::size_t i = 0;
  for (auto _ : state) {
    Eigen::SelfAdjointEigenSolver<Matrix3c> es(dot_lambda(p[i++ & 4095]), Eigen::EigenvaluesOnly);
    benchmark::DoNotOptimize(es.eigenvalues());
  }
}
BENCHMARK(BM_SelfAdjointSolver);

static void BM_CharPolyTest(benchmark::State& state) {
  const auto& p = cached();
  const double s3 = std::sqrt(3.0);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(charpoly_positive(s3 * dot_lambda(p[i++ & 4095])));
}
BENCHMARK(BM_CharPolyTest);

static void BM_BoundaryRadius(benchmark::State& state) {
  std::vector<BlochVector> dirs = cached();
  for (auto& d : dirs) d.normalize();
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(boundary_radius(dirs[i++ & 4095]));
}
BENCHMARK(BM_BoundaryRadius);

static void BM_StarProduct(benchmark::State& state) {
  const auto& p = cached();
  std::size_t i = 0;
  for (auto _ : state) {
    const BlochVector& n = p[i++ & 4095];
    benchmark::DoNotOptimize(star(n, n));
  }
}
BENCHMARK(BM_StarProduct);
