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

// End-to-end acceptance: one check per shipped guarantee, each printed as a
// PASS/FAIL line. The process exit code is the number of failed checks.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "extension.hpp"
#include "lattice.hpp"
#include "measure.hpp"
#include "membership.hpp"
#include "norms.hpp"
#include "quadrature.hpp"
#include "serialize.hpp"
#include "wiener.hpp"

using namespace sumkern;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& what,
            const std::string& detail = "") {
  std::printf("%s criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion,
              what.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

double elapsed_s(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SequenceSpec random_phi(std::mt19937_64& rng, int radius) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::map<long long, cplx> entries;
  for (long long n = -radius; n <= radius; ++n) entries[n] = cplx(u(rng), u(rng));
  return SequenceSpec::finite(std::move(entries));
}

// ---- 1. partition of unity -------------------------------------------------

void criterion_partition_of_unity() {
  const auto t0 = std::chrono::steady_clock::now();
  GridConfig g;
  g.window_halfwidth = 100.0;
  g.step = 0.25;
  std::map<long long, cplx> ones;
  for (long long n = -128; n <= 128; ++n) ones[n] = cplx(1, 0);
  GridFunction w = extend(SequenceSpec::finite(std::move(ones)), triangle(0, 1), g);
  double dev = 0.0;
  for (const auto& v : w.values) dev = std::max(dev, std::abs(v - cplx(1, 0)));
  const double dt = elapsed_s(t0);
  report(1, dev <= 1e-10 && dt < 1.0, "all-ones extension through the hat kernel is 1",
         "max deviation " + format_double(dev) + ", " + format_double(dt) + " s");
}

// ---- 2. pointwise bound by the periodization sup ---------------------------

void criterion_pointwise_bound() {
  GridConfig g;
  g.window_halfwidth = 8.0;
  g.step = 1.0 / 64.0;
  std::mt19937_64 rng(1001);
  bool ok = true;
  std::string detail;
  const std::vector<ExprPtr> kernels = {triangle(0, 1), gaussian(1),
                                        ft(raised_cosine(-1, 1))};
  for (const auto& lam : kernels) {
    PeriodizationResult per = periodization_sup(lam, g);
    const double delta_cert = per.delta + per.tail_bound;
    for (int rep = 0; rep < 200; ++rep) {
      SequenceSpec phi = random_phi(rng, 16);
      GridFunction w = extend(phi, lam, g);
      const double bound = delta_cert * phi.sup_bound() + w.tail_bound + 1e-9;
      if (w.max_abs() > bound) {
        ok = false;
        detail = "violated at |W| = " + format_double(w.max_abs()) + " vs bound " +
                 format_double(bound);
        break;
      }
    }
    if (!ok) break;
  }
  report(2, ok, "600 random extensions stay below delta * sup|phi| + tail", detail);
}

// ---- 3. periodized-product integral bound ----------------------------------

void criterion_product_integral_bound() {
  GridConfig g;
  g.window_halfwidth = 8.0;
  g.step = 1.0 / 64.0;
  std::mt19937_64 rng(1002);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  bool ok = true;
  std::string detail;
  for (const auto& f : {triangle(0, 1), gaussian(1)}) {
    PeriodizationResult per = periodization_sup(f, g);
    const double delta_cert = per.delta + per.tail_bound;
    for (int rep = 0; rep < 25 && ok; ++rep) {
      std::vector<cplx> coeffs(17);
      for (auto& c : coeffs) c = cplx(u(rng), u(rng));
      auto poly = [&](double x) {
        cplx acc(0, 0);
        for (int n = -8; n <= 8; ++n)
          acc += coeffs[n + 8] * cis(kTwoPi * n * x);
        return acc;
      };
      const double p_norm =
          integrate([&](double x) { return cplx(std::abs(poly(x)), 0.0); }, 0.0, 1.0,
                    1e-10)
              .value.real();
      double lhs = 0.0;
      for (int k = -9; k < 9; ++k) {
        lhs += integrate(
                   [&](double x) {
                     return cplx(std::abs(eval(f, x)) * std::abs(poly(frac(x))), 0.0);
                   },
                   static_cast<double>(k), static_cast<double>(k) + 1.0, 1e-10)
                   .value.real();
      }
      const double rhs = delta_cert * p_norm;
      if (lhs > rhs + 1e-6 * std::max(1.0, rhs)) {
        ok = false;
        detail = "lhs " + format_double(lhs) + " vs rhs " + format_double(rhs);
      }
    }
  }
  report(3, ok, "50 periodized trig-polynomial products obey the L1 bound", detail);
}

// ---- 4. closed-form transfer atoms vs symmetric averages -------------------

void criterion_transfer_vs_averages() {
  const auto t0 = std::chrono::steady_clock::now();
  GridConfig g;
  g.window_halfwidth = 8.0;
  g.step = 1.0 / 64.0;
  const ExprPtr lam = ft(raised_cosine(-1, 1));
  WienerSchedule sched;
  sched.lambdas = {256.0, 1024.0, 4096.0};
  sched.step = 1.0 / 64.0;

  std::mt19937_64 rng(1003);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  bool ok = true;
  std::string detail;
  double worst_atom = 0.0, worst_probe = 0.0;
  int probes_done = 0;

  for (int rep = 0; rep < 10 && ok; ++rep) {
    TorusMeasure nu;
    const int n_atoms = 1 + static_cast<int>(u(rng) * 4.999);
    double tv = 0.0;
    for (int i = 0; i < n_atoms; ++i) {
      // Keep atoms separated on the torus so the window-4096 averages of
      // neighbouring atoms do not leak into each other's reads.
      double x = 0.0;
      for (int attempt = 0; attempt < 400; ++attempt) {
        x = u(rng) * 0.999;
        bool clear = true;
        for (const auto& a : nu.atoms) {
          const double d = std::abs(x - a.x);
          if (std::min(d, 1.0 - d) < 0.1) clear = false;
        }
        if (clear) break;
      }
      const cplx w(u(rng) - 0.5, u(rng) - 0.5);
      nu.atoms.push_back({x, w});
      tv += std::abs(w);
    }
    for (auto& a : nu.atoms) a.weight /= tv;  // total variation 1
    nu.normalize();

    LineMeasure mu = transfer(nu, lam, g);
    SeriesMuHat provider(nu, lam, g, sched.step, sched.lambdas.back());
    WienerAverager avg(provider, sched);

    for (const auto& atom : mu.atoms) {
      const cplx est = avg.atom(atom.y).value;
      const double err = std::abs(est - atom.weight);
      worst_atom = std::max(worst_atom, err);
      if (err > 1e-3) {
        ok = false;
        detail = "atom at y=" + format_double(atom.y) + " err " + format_double(err);
        break;
      }
    }
    for (int pr = 0; pr < 2 && ok; ++pr) {
      double y = 0.0;
      for (int attempt = 0; attempt < 200; ++attempt) {
        y = (u(rng) - 0.5) * 5.0;
        bool clear = true;
        for (const auto& atom : mu.atoms)
          if (std::abs(y - atom.y) < 0.15) clear = false;
        if (clear) break;
      }
      const double est = std::abs(avg.atom(y).value);
      worst_probe = std::max(worst_probe, est);
      ++probes_done;
      if (est > 1e-3) {
        ok = false;
        detail = "probe at y=" + format_double(y) + " read " + format_double(est);
      }
    }
  }
  const double dt = elapsed_s(t0);
  if (ok && probes_done != 20) {
    ok = false;
    detail = "expected 20 probes, ran " + std::to_string(probes_done);
  }
  if (ok && dt >= 60.0) {
    ok = false;
    detail = "runtime " + format_double(dt) + " s";
  }
  report(4, ok, "transfer atoms match the symmetric averages at lambda=4096",
         detail.empty() ? "worst atom err " + format_double(worst_atom) +
                              ", worst probe " + format_double(worst_probe) + ", " +
                              format_double(dt) + " s"
                        : detail);
}

// ---- 5. absolutely continuous inputs stay atom-free ------------------------

void criterion_continuous_transfer() {
  GridConfig g;
  g.window_halfwidth = 8.0;
  g.step = 1.0 / 64.0;
  const ExprPtr lam = ft(raised_cosine(-1, 1));
  WienerSchedule sched;
  sched.lambdas = {256.0, 1024.0, 4096.0};
  sched.step = 1.0 / 64.0;

  bool ok = true;
  std::string detail;
  const std::vector<ExprPtr> densities = {
      polynomial_piece(0, 1, {1.0}),
      scale(raised_cosine(0, 1), cplx(2, 0)),  // 1 - cos(2 pi x)
  };
  double worst = 0.0;
  for (const auto& dens : densities) {
    TorusMeasure nu;
    nu.density = dens;
    LineMeasure mu = transfer(nu, lam, g);
    if (!mu.atoms.empty()) {
      ok = false;
      detail = "unexpected atoms in the image of an absolutely continuous input";
      break;
    }
    SeriesMuHat provider(nu, lam, g, sched.step, sched.lambdas.back());
    const double energy = WienerAverager(provider, sched).energy().value;
    worst = std::max(worst, energy);
    if (energy > 1e-3) {
      ok = false;
      detail = "energy average " + format_double(energy);
      break;
    }
  }
  report(5, ok, "absolutely continuous transfer: no atoms, vanishing energy average",
         detail.empty() ? "worst energy " + format_double(worst) : detail);
}

// ---- 6. window transform lattice sums --------------------------------------

void criterion_window_lattice_sums() {
  GridConfig g;
  g.window_halfwidth = 1.0;
  g.step = 1.0 / 101.0;
  g.lattice_truncation = 64;
  const std::vector<ExprPtr> windows = {
      raised_cosine(0.25, 0.75),
      triangle(0.5, 0.25),
      triangle(0.5, 0.125),
      scale(raised_cosine(0.375, 0.625), cplx(2, 0)),
      sum({scale(raised_cosine(0.25, 0.75), cplx(0.5, 0)),
           scale(triangle(0.5, 1.0 / 6.0), cplx(0.5, 0))}),
  };
  bool ok = true;
  std::string detail;
  double worst = 0.0;
  for (const auto& s : windows) {
    PoissonResult r = poisson_constant(s, g);
    worst = std::max(worst, r.max_deviation);
    if (r.max_deviation > r.tail_bound + 1e-6) {
      ok = false;
      detail = "deviation " + format_double(r.max_deviation) + " vs tail " +
               format_double(r.tail_bound);
      break;
    }
  }
  report(6, ok, "5 admissible windows: lattice sums of the transform vanish",
         detail.empty() ? "worst deviation " + format_double(worst) : detail);
}

// ---- 7. q ranges ------------------------------------------------------------

void criterion_q_ranges() {
  bool ok = true;
  std::string detail;
  auto expect = [&](const Rational& p, const std::string& want) {
    const std::string got = q_range(p).str();
    if (got != want) {
      ok = false;
      detail += "p=" + p.str() + " gave " + got + " wanted " + want + "; ";
    }
  };
  expect(Rational(2, 1), "[1, inf)");
  expect(Rational(4, 3), "[4/3, 4]");
  expect(Rational(4, 1), "[4/3, 4]");
  for (const auto& p :
       {Rational(4, 3), Rational(3, 2), Rational(5, 2), Rational(4, 1)}) {
    QRange r = q_range(p);
    if (!r.q_hi ||
        Rational(r.q_lo.den, r.q_lo.num) + Rational(r.q_hi->den, r.q_hi->num) !=
            Rational(1, 1)) {
      ok = false;
      detail += "endpoints at p=" + p.str() + " not conjugate; ";
    }
  }
  report(7, ok, "q ranges: exact rationals, conjugate endpoints, [1, inf) at p=2",
         detail);
}

// ---- 8. Abel convergence -----------------------------------------------------

void criterion_abel_convergence() {
  GridConfig g;
  g.window_halfwidth = 4.0;
  g.step = 1.0 / 32.0;
  SequenceSpec phi = SequenceSpec::closed({SequenceSpec::Form::InverseSquare, 1.0, 0.0});
  ExtensionResult r = lp_extend(phi, raised_cosine(0.25, 0.75), Rational(3, 2),
                                {0.5, 0.9, 0.99, 0.999}, g);
  bool ok = r.abel.size() == 4;
  std::string detail;
  for (std::size_t i = 1; ok && i < r.abel.size(); ++i) {
    if (r.abel[i].second > r.abel[i - 1].second + 1e-9) {
      ok = false;
      detail = "distance increased at r=" + format_double(r.abel[i].first);
    }
  }
  if (ok && r.abel[3].second > 0.05 * r.abel[0].second) {
    ok = false;
    detail = "d(0.999)=" + format_double(r.abel[3].second) +
             " vs 0.05 d(0.5)=" + format_double(0.05 * r.abel[0].second);
  }
  report(8, ok, "Abel damping: sup distances shrink monotonically to the limit",
         detail.empty() ? "d(0.5)=" + format_double(r.abel[0].second) + ", d(0.999)=" +
                              format_double(r.abel[3].second)
                        : detail);
}

// ---- 9. estimator sanity -----------------------------------------------------

void criterion_estimator_sanity() {
  GridConfig g;
  g.window_halfwidth = 8.0;
  g.step = 1.0 / 64.0;
  const std::vector<ExprPtr> kernels = {
      triangle(0, 1),
      gaussian(1),
      ft(raised_cosine(-1, 1)),
      ft(triangle(0, 1)),
      scale(triangle(0, 1), cplx(2.5, 0)),
      sum({gaussian(1), translate(gaussian(1), 3.0)}),
      raised_cosine(-0.5, 0.5),
      indicator(-1, 1),
      wrap(polynomial_piece(0, 1, {1.0})),
      dilate(gaussian(1), 2.0),
  };
  bool ok = true;
  std::string detail;
  for (const auto& lam : kernels) {
    const double m2 = m2_norm(lam, g).value;
    NormCertificate a = mp_norm_lower_bound(lam, 2.0, g, 42);
    NormCertificate b = mp_norm_lower_bound(lam, 2.0, g, 42);
    if (norm_certificate_json(a) != norm_certificate_json(b)) {
      ok = false;
      detail = "seeded estimator not reproducible";
      break;
    }
    if (a.value < m2 - 1e-6 || a.value > m2) {
      ok = false;
      detail = "estimate " + format_double(a.value) + " vs sup certificate " +
               format_double(m2);
      break;
    }
  }
  report(9, ok, "p=2 lower bound sits in [m2 - 1e-6, m2], byte-reproducible", detail);
}

// ---- 10. round trip and determinism ------------------------------------------

ExprPtr corpus_expr(std::mt19937_64& rng, int depth) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_int_distribution<int> pick(0, 9);
  if (depth <= 0) {
    switch (pick(rng) % 5) {
      case 0: {
        double a = u(rng);
        return indicator(a, a + std::abs(u(rng)) + 0.1);
      }
      case 1:
        return triangle(u(rng), std::abs(u(rng)) + 0.1);
      case 2:
        return gaussian(std::abs(u(rng)) + 0.2);
      case 3: {
        double a = u(rng);
        return raised_cosine(a, a + 0.5);
      }
      default:
        return sinc();
    }
  }
  switch (pick(rng)) {
    case 0:
      return translate(corpus_expr(rng, depth - 1), u(rng));
    case 1:
      return modulate(corpus_expr(rng, depth - 1), u(rng));
    case 2:
      return dilate(corpus_expr(rng, depth - 1), 1.5);
    case 3:
      return scale(corpus_expr(rng, depth - 1), cplx(u(rng), u(rng)));
    case 4:
      return sum({corpus_expr(rng, depth - 1), corpus_expr(rng, depth - 1)});
    case 5:
      return product({corpus_expr(rng, depth - 1), corpus_expr(rng, depth - 1)});
    case 6:
      return ft(triangle(0, 1));
    case 7:
      return wrap(corpus_expr(rng, depth - 1));
    default:
      return corpus_expr(rng, depth - 1);
  }
}

std::string run_cli(const std::string& args, const std::filesystem::path& out,
                    bool* ok) {
  const std::string cmd =
      std::string(SUMKERN_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
  if (std::system(cmd.c_str()) != 0) {
    *ok = false;
    return {};
  }
  std::ifstream in(out);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion_round_trip_determinism() {
  bool ok = true;
  std::string detail;

  std::mt19937_64 rng(1010);
  for (int i = 0; i < 100 && ok; ++i) {
    ExprPtr f = corpus_expr(rng, 3);
    const std::string text = serialize_function(*f);
    if (!same_structure(*f, *parse_function_spec(text)) ||
        serialize_function(*parse_function_spec(text)) != text) {
      ok = false;
      detail = "round trip failed on case " + std::to_string(i);
    }
  }

  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "sumkern_acceptance";
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    report(10, false, "round trip and determinism", "cannot create temp dir");
    return;
  }
  {
    std::ofstream k(dir / "kernel.json");
    k << R"({"kind":"gaussian","params":[1]})";
  }
  if (ok) {
    const std::string a = run_cli("delta --kernel " + (dir / "kernel.json").string(),
                                  dir / "a.json", &ok);
    const std::string b = run_cli("delta --kernel " + (dir / "kernel.json").string(),
                                  dir / "b.json", &ok);
    if (!ok || a.empty() || a != b) {
      ok = false;
      detail = "delta runs differ";
    }
  }
  if (ok) {
    const std::string a = run_cli("qrange --p 4/3", dir / "qa.txt", &ok);
    const std::string b = run_cli("qrange --p 4/3", dir / "qb.txt", &ok);
    if (!ok || a != b || a.find("[4/3, 4]") == std::string::npos) {
      ok = false;
      detail = "qrange runs differ";
    }
  }
  if (ok) {
    const std::string args = "check-kernel --space s2 --kernel " +
                             (dir / "kernel.json").string() + " --seed 42";
    const std::string a = run_cli(args, dir / "ca.json", &ok);
    const std::string b = run_cli(args, dir / "cb.json", &ok);
    if (!ok || a != b) {
      ok = false;
      detail = "check-kernel runs differ";
    }
  }
  report(10, ok, "spec round trips and repeated runs are byte-identical", detail);
}

}  // namespace

int main() {
  criterion_partition_of_unity();
  criterion_pointwise_bound();
  criterion_product_integral_bound();
  criterion_transfer_vs_averages();
  criterion_continuous_transfer();
  criterion_window_lattice_sums();
  criterion_q_ranges();
  criterion_abel_convergence();
  criterion_estimator_sanity();
  criterion_round_trip_determinism();
  if (g_failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", g_failures);
  return g_failures;
}
