// Copyright 2026 sumkern developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>

#include "lattice.hpp"

using namespace sumkern;

namespace {

// Independent oracle: direct two-sided lattice summation.
double lattice_abs_sum(const ExprPtr& f, double x, int n) {
  double acc = 0.0;
  for (int m = -n; m <= n; ++m) acc += std::abs(eval(f, x + m));
  return acc;
}

const double kTheta = []() {
  // sum over Z of exp(-pi n^2), by direct summation (terms below 1e-30 by n=6).
  double acc = 0.0;
  for (int n = -8; n <= 8; ++n) acc += std::exp(-kPi * n * n);
  return acc;
}();

GridConfig small_grid() {
  GridConfig g;
  g.window_halfwidth = 4.0;
  g.step = 1.0 / 64.0;
  return g;
}

SequenceSpec random_phi(std::mt19937_64& rng, int radius) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::map<long long, cplx> entries;
  for (long long n = -radius; n <= radius; ++n) entries[n] = cplx(u(rng), u(rng));
  return SequenceSpec::finite(std::move(entries));
}

}  // namespace

TEST_CASE("periodization of tiling kernels is exactly one") {
  GridConfig g = small_grid();
  auto ind = periodization_sup(indicator(0, 1), g);
  CHECK(ind.delta == doctest::Approx(1.0));
  CHECK(ind.tail_bound == 0.0);

  auto tri = periodization_sup(triangle(0, 1), g);
  CHECK(tri.delta == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(tri.tail_bound == 0.0);
}

TEST_CASE("periodization of the gaussian is the theta value") {
  GridConfig g = small_grid();
  auto r = periodization_sup(gaussian(1), g);
  // Frozen oracle value: direct lattice sum at the worst point x = 0.
  CHECK(kTheta == doctest::Approx(1.0864348112133080).epsilon(1e-14));
  CHECK(r.delta >= kTheta - 1e-12);
  CHECK(r.delta <= kTheta + r.tail_bound + 1e-12);
  CHECK(r.tail_bound < 1e-8);
}

TEST_CASE("periodization requires a certificate") {
  GridConfig g = small_grid();
  CHECK_THROWS_AS(periodization_sup(rational_decay(1), g), Error);
  CHECK_THROWS_AS(periodization_sup(sinc(), g), Error);
}

TEST_CASE("periodize samples the wrapped sums") {
  GridConfig g = small_grid();
  g.step = 1.0 / 128.0;
  auto one = periodize(indicator(0, 1), g);
  for (const auto& v : one.values) CHECK(std::abs(v - cplx(1, 0)) < 1e-12);

  auto hat = periodize(triangle(0, 1), g);
  for (const auto& v : hat.values) CHECK(std::abs(v - cplx(1, 0)) < 1e-12);

  auto theta = periodize(gaussian(1), g);
  const std::size_t m = theta.values.size();
  // Symmetric about 0 and 1/2, and matches the direct oracle.
  for (std::size_t j = 1; j < m / 2; ++j) {
    CHECK(std::abs(theta.values[j] - theta.values[m - j]) < 1e-10);
    CHECK(std::abs(theta.values[m / 2 + j] - theta.values[m / 2 - j]) < 1e-10);
  }
  for (std::size_t j : {std::size_t(0), m / 4, m / 2}) {
    CHECK(theta.values[j].real() ==
          doctest::Approx(lattice_abs_sum(gaussian(1), theta.xs[j], 8)).epsilon(1e-10));
  }
}

TEST_CASE("extension of the delta sequence reproduces the kernel") {
  GridConfig g = small_grid();
  for (const auto& lam : {triangle(0, 1), gaussian(1)}) {
    GridFunction w = extend(SequenceSpec::delta(), lam, g);
    for (std::size_t j = 0; j < w.xs.size(); ++j)
      CHECK(std::abs(w.values[j] - eval(lam, w.xs[j])) < 1e-14);
  }
}

TEST_CASE("point extension matches the sampled series") {
  GridConfig g = small_grid();
  std::mt19937_64 rng(3);
  SequenceSpec phi = random_phi(rng, 4);
  GridFunction w = extend(phi, gaussian(1), g);
  for (std::size_t j : {std::size_t(0), w.xs.size() / 3, w.xs.size() - 1})
    CHECK(std::abs(extend_point(phi, gaussian(1), w.xs[j], g.lattice_truncation) -
                   w.values[j]) < 1e-14);
}

TEST_CASE("extension of the all-ones sequence tiles to one") {
  GridConfig g = small_grid();
  std::map<long long, cplx> ones;
  for (long long n = -32; n <= 32; ++n) ones[n] = cplx(1, 0);
  GridFunction w = extend(SequenceSpec::finite(std::move(ones)), triangle(0, 1), g);
  for (std::size_t j = 0; j < w.xs.size(); ++j)
    CHECK(std::abs(w.values[j] - cplx(1, 0)) < 1e-12);
}

TEST_CASE("extension commutes with modulation") {
  GridConfig g = small_grid();
  std::mt19937_64 rng(7);
  const double x = 1.0 / 3.0;
  SequenceSpec phi = random_phi(rng, 6);
  SequenceSpec phi_x = phi.modulated(x);
  const ExprPtr lam = gaussian(1);
  const ExprPtr lam_x = modulate(lam, x);
  GridFunction lhs = extend(phi_x, lam, g);
  GridFunction rhs = extend(phi, lam_x, g);
  for (std::size_t j = 0; j < lhs.xs.size(); ++j) {
    const cplx lhs_rot = lhs.values[j] * cis(kTwoPi * x * lhs.xs[j]);
    CHECK(std::abs(lhs_rot - rhs.values[j]) <= 1e-10);
  }
}

TEST_CASE("extension is linear at fixed truncation") {
  GridConfig g = small_grid();
  std::mt19937_64 rng(11);
  SequenceSpec phi = random_phi(rng, 5);
  SequenceSpec psi = random_phi(rng, 5);
  const cplx a(1.5, -0.5), b(-0.25, 2.0);
  std::map<long long, cplx> combo;
  for (long long n = -5; n <= 5; ++n) combo[n] = a * phi.eval(n) + b * psi.eval(n);
  GridFunction wc = extend(SequenceSpec::finite(std::move(combo)), triangle(0, 1), g);
  GridFunction w1 = extend(phi, triangle(0, 1), g);
  GridFunction w2 = extend(psi, triangle(0, 1), g);
  for (std::size_t j = 0; j < wc.xs.size(); ++j)
    CHECK(std::abs(wc.values[j] - (a * w1.values[j] + b * w2.values[j])) <= 1e-13);
}

TEST_CASE("pointwise bound by the periodization sup") {
  // |W(xi)| <= sup|phi| (delta at frac(xi)) on grids aligned with the
  // periodization grid.
  GridConfig g = small_grid();
  std::mt19937_64 rng(23);
  for (const auto& lam : {triangle(0, 1), gaussian(1)}) {
    auto per = periodization_sup(lam, g);
    for (int rep = 0; rep < 50; ++rep) {
      SequenceSpec phi = random_phi(rng, 8);
      double sup_phi = phi.sup_bound();
      GridFunction w = extend(phi, lam, g);
      const double bound = sup_phi * (per.delta + per.tail_bound) + w.tail_bound;
      CHECK(w.max_abs() <= bound + 1e-9);
    }
  }
}

TEST_CASE("periodization is translation invariant") {
  GridConfig g = small_grid();
  auto base = periodization_sup(gaussian(1), g);
  auto shifted = periodization_sup(translate(gaussian(1), 1.0), g);
  CHECK(std::abs(base.delta - shifted.delta) <= 1e-8 + base.tail_bound + shifted.tail_bound);
}

TEST_CASE("fejer weights") {
  SequenceSpec ones = SequenceSpec::closed({SequenceSpec::Form::Constant, 1.0, 0.0});
  SequenceSpec f1 = fejer_regularize(ones, 1);
  CHECK(f1.eval(0) == cplx(1, 0));
  CHECK(f1.eval(1) == cplx(0.5, 0));
  CHECK(f1.eval(-1) == cplx(0.5, 0));
  CHECK(f1.eval(2) == cplx(0, 0));
  CHECK(*f1.support_radius <= 1);

  SequenceSpec d = fejer_regularize(SequenceSpec::delta(), 5);
  CHECK(d.eval(0) == cplx(1, 0));
  CHECK(d.eval(1) == cplx(0, 0));

  SequenceSpec alt = SequenceSpec::closed({SequenceSpec::Form::Alternating, 1.0, 0.0});
  SequenceSpec f2 = fejer_regularize(alt, 2);
  CHECK(f2.eval(-2).real() == doctest::Approx(1.0 / 3.0));
  CHECK(f2.eval(-1).real() == doctest::Approx(-2.0 / 3.0));
  CHECK(f2.eval(0).real() == doctest::Approx(1.0));
  CHECK(f2.eval(1).real() == doctest::Approx(-2.0 / 3.0));
  CHECK(f2.eval(2).real() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("fejer regularization converges entrywise") {
  SequenceSpec phi = SequenceSpec::closed({SequenceSpec::Form::InverseSquare, 1.0, 0.0});
  double prev_err = 1e9;
  for (long long n_fejer : {8, 32, 128}) {
    SequenceSpec f = fejer_regularize(phi, n_fejer);
    double err = 0.0;
    for (long long idx = -5; idx <= 5; ++idx)
      err = std::max(err, std::abs(f.eval(idx) - phi.eval(idx)));
    CHECK(err < prev_err + 1e-15);
    prev_err = err;
  }
  CHECK(prev_err < 0.05);
}

TEST_CASE("transform sampling: closed form against quadrature path") {
  GridConfig g;
  g.window_halfwidth = 2.0;
  g.step = 0.25;
  g.tolerance = 1e-10;
  // The hat function assembled from polynomial pieces has no closed-form
  // transform, so this exercises the adaptive quadrature path.
  ExprPtr tri_poly = sum({polynomial_piece(-1, 0, {1.0, 1.0}),
                          polynomial_piece(0, 1, {1.0, -1.0})});
  GridFunction quad = fourier_transform(tri_poly, g);
  GridFunction closed = fourier_transform(triangle(0, 1), g);
  for (std::size_t j = 0; j < quad.xs.size(); ++j)
    CHECK(std::abs(quad.values[j] - closed.values[j]) <= g.tolerance * 10);
}

TEST_CASE("transform sampling rejects non-integrable inputs") {
  GridConfig g = small_grid();
  CHECK_THROWS_AS(fourier_transform(sinc(), g), Error);
  CHECK_THROWS_AS(fourier_transform(rational_decay(1), g), Error);
}

TEST_CASE("lattice sums of a window transform stay at the window's origin value") {
  GridConfig g;
  g.window_halfwidth = 1.0;
  g.step = 1.0 / 101.0;
  auto rc = poisson_constant(raised_cosine(0.25, 0.75), g);
  CHECK(rc.max_deviation <= rc.tail_bound + 1e-6);
  CHECK(std::abs(rc.constant_estimate) <= rc.tail_bound + 1e-6);

  auto tri = poisson_constant(triangle(0.5, 0.25), g);
  CHECK(tri.max_deviation <= tri.tail_bound + 1e-6);

  // Scaling the window scales the lattice sums linearly.
  auto tri2 = poisson_constant(scale(triangle(0.5, 0.25), cplx(2, 0)), g);
  CHECK(tri2.max_deviation == doctest::Approx(2.0 * tri.max_deviation).epsilon(1e-6));
}

TEST_CASE("window lattice sums reject bad inputs") {
  GridConfig g;
  g.window_halfwidth = 1.0;
  g.step = 1.0 / 101.0;
  CHECK_THROWS_AS(poisson_constant(triangle(0, 1), g), Error);          // support
  CHECK_THROWS_AS(poisson_constant(indicator(0.25, 0.75), g), Error);   // continuity
}
