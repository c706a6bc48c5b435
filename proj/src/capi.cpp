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

#include "sumkern.h"

#include <cstdlib>
#include <cstring>
#include <random>
#include <string>

#include "extension.hpp"
#include "lattice.hpp"
#include "measure.hpp"
#include "membership.hpp"
#include "norms.hpp"
#include "serialize.hpp"
#include "wiener.hpp"

using namespace sumkern;

struct sk_function {
  ExprPtr v;
};
struct sk_sequence {
  SequenceSpec v;
};
struct sk_torus_measure {
  TorusMeasure v;
};
struct sk_line_measure {
  LineMeasure v;
};
struct sk_grid_function {
  GridFunction v;
};

namespace {

thread_local std::string t_last_error;

sk_status map_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse:
      return SK_ERROR_PARSE;
    case ErrorCode::Precondition:
      return SK_ERROR_PRECONDITION;
    case ErrorCode::Domain:
      return SK_ERROR_DOMAIN;
    case ErrorCode::Internal:
      return SK_ERROR_INTERNAL;
  }
  return SK_ERROR_INTERNAL;
}

template <typename Fn>
sk_status guarded(Fn&& fn) {
  try {
    fn();
    t_last_error.clear();
    return SK_OK;
  } catch (const Error& e) {
    t_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return SK_ERROR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) return nullptr;
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

GridConfig to_grid(const sk_grid* g) {
  GridConfig grid;
  if (g) {
    grid.window_halfwidth = g->window_halfwidth;
    grid.step = g->step;
    grid.lattice_truncation = g->lattice_truncation;
    grid.tolerance = g->tolerance;
  }
  grid.validate();
  return grid;
}

WienerSchedule to_schedule(const double* lambdas, size_t n, double step, double eps) {
  WienerSchedule sched;
  if (lambdas && n > 0) sched.lambdas.assign(lambdas, lambdas + n);
  if (step > 0.0) sched.step = step;
  if (eps > 0.0) sched.eps = eps;
  return sched;
}

// A finite table of the Fourier coefficients of nu, for sampling the series
// on a window.
SequenceSpec nu_hat_table(const TorusMeasure& nu, const GridConfig& grid) {
  std::map<long long, cplx> entries;
  const long long radius =
      static_cast<long long>(std::ceil(grid.window_halfwidth)) + grid.lattice_truncation + 1;
  for (long long n = -radius; n <= radius; ++n) {
    const cplx c = nu.fourier_coeff(n, grid.tolerance);
    if (c != cplx(0.0, 0.0)) entries[n] = c;
  }
  SequenceSpec s = SequenceSpec::finite(std::move(entries));
  s.support_radius = radius;
  return s;
}

}  // namespace

extern "C" {

sk_grid sk_grid_default(void) {
  GridConfig g;
  return sk_grid{g.window_halfwidth, g.step, g.lattice_truncation, g.tolerance};
}

const char* sk_version(void) { return "0.1.0"; }

const char* sk_last_error(void) { return t_last_error.c_str(); }

void sk_string_free(char* s) { std::free(s); }

sk_status sk_function_parse(const char* json, sk_function** out) {
  return guarded([&] {
    if (!json || !out) fail(ErrorCode::Domain, "null argument");
    *out = new sk_function{parse_function_spec(json)};
  });
}

sk_status sk_sequence_parse(const char* json, sk_sequence** out) {
  return guarded([&] {
    if (!json || !out) fail(ErrorCode::Domain, "null argument");
    *out = new sk_sequence{parse_sequence_spec(json)};
  });
}

sk_status sk_torus_measure_parse(const char* json, sk_torus_measure** out) {
  return guarded([&] {
    if (!json || !out) fail(ErrorCode::Domain, "null argument");
    *out = new sk_torus_measure{parse_torus_measure(json)};
  });
}

sk_status sk_function_serialize(const sk_function* f, char** json) {
  return guarded([&] {
    if (!f || !json) fail(ErrorCode::Domain, "null argument");
    *json = dup_string(serialize_function(*f->v));
  });
}

sk_status sk_sequence_serialize(const sk_sequence* s, char** json) {
  return guarded([&] {
    if (!s || !json) fail(ErrorCode::Domain, "null argument");
    *json = dup_string(serialize_sequence(s->v));
  });
}

sk_status sk_torus_measure_serialize(const sk_torus_measure* m, char** json) {
  return guarded([&] {
    if (!m || !json) fail(ErrorCode::Domain, "null argument");
    *json = dup_string(serialize_torus_measure(m->v));
  });
}

sk_status sk_line_measure_serialize(const sk_line_measure* m, char** json) {
  return guarded([&] {
    if (!m || !json) fail(ErrorCode::Domain, "null argument");
    *json = dup_string(serialize_line_measure(m->v));
  });
}

sk_status sk_grid_function_csv(const sk_grid_function* g, char** csv) {
  return guarded([&] {
    if (!g || !csv) fail(ErrorCode::Domain, "null argument");
    *csv = dup_string(g->v.to_csv());
  });
}

void sk_function_free(sk_function* f) { delete f; }
void sk_sequence_free(sk_sequence* s) { delete s; }
void sk_torus_measure_free(sk_torus_measure* m) { delete m; }
void sk_line_measure_free(sk_line_measure* m) { delete m; }
void sk_grid_function_free(sk_grid_function* g) { delete g; }

sk_status sk_eval_function(const sk_function* f, double x, double* re, double* im) {
  return guarded([&] {
    if (!f || !re || !im) fail(ErrorCode::Domain, "null argument");
    const cplx v = eval(f->v, x);
    *re = v.real();
    *im = v.imag();
  });
}

sk_status sk_fourier_transform(const sk_function* f, const sk_grid* grid,
                               sk_grid_function** out) {
  return guarded([&] {
    if (!f || !out) fail(ErrorCode::Domain, "null argument");
    *out = new sk_grid_function{fourier_transform(f->v, to_grid(grid))};
  });
}

sk_status sk_periodization_sup(const sk_function* f, const sk_grid* grid,
                               char** report_json) {
  return guarded([&] {
    if (!f || !report_json) fail(ErrorCode::Domain, "null argument");
    *report_json = dup_string(periodization_json(periodization_sup(f->v, to_grid(grid))));
  });
}

sk_status sk_periodize(const sk_function* f, const sk_grid* grid,
                       sk_grid_function** out) {
  return guarded([&] {
    if (!f || !out) fail(ErrorCode::Domain, "null argument");
    *out = new sk_grid_function{periodize(f->v, to_grid(grid))};
  });
}

sk_status sk_extend(const sk_sequence* phi, const sk_function* lambda,
                    const sk_grid* grid, sk_grid_function** out) {
  return guarded([&] {
    if (!phi || !lambda || !out) fail(ErrorCode::Domain, "null argument");
    *out = new sk_grid_function{extend(phi->v, lambda->v, to_grid(grid))};
  });
}

sk_status sk_fejer_regularize(const sk_sequence* phi, long long n, sk_sequence** out) {
  return guarded([&] {
    if (!phi || !out) fail(ErrorCode::Domain, "null argument");
    *out = new sk_sequence{fejer_regularize(phi->v, n)};
  });
}

sk_status sk_poisson_constant(const sk_function* s, const sk_grid* grid,
                              char** report_json) {
  return guarded([&] {
    if (!s || !report_json) fail(ErrorCode::Domain, "null argument");
    *report_json = dup_string(poisson_json(poisson_constant(s->v, to_grid(grid))));
  });
}

sk_status sk_m2_norm(const sk_function* f, const sk_grid* grid, char** certificate_json) {
  return guarded([&] {
    if (!f || !certificate_json) fail(ErrorCode::Domain, "null argument");
    *certificate_json = dup_string(norm_certificate_json(m2_norm(f->v, to_grid(grid))));
  });
}

sk_status sk_m1_norm(const sk_line_measure* mu, const sk_grid* grid,
                     char** certificate_json) {
  return guarded([&] {
    if (!mu || !certificate_json) fail(ErrorCode::Domain, "null argument");
    *certificate_json = dup_string(norm_certificate_json(m1_norm(mu->v, to_grid(grid))));
  });
}

sk_status sk_mp_norm_lower_bound(const sk_function* f, double p, const sk_grid* grid,
                                 uint64_t seed, char** certificate_json) {
  return guarded([&] {
    if (!f || !certificate_json) fail(ErrorCode::Domain, "null argument");
    *certificate_json =
        dup_string(norm_certificate_json(mp_norm_lower_bound(f->v, p, to_grid(grid), seed)));
  });
}

sk_status sk_classify_s2(const sk_function* f, const sk_grid* grid, char** report_json) {
  return guarded([&] {
    if (!f || !report_json) fail(ErrorCode::Domain, "null argument");
    *report_json = dup_string(membership_report_json(classify_s2(f->v, to_grid(grid))));
  });
}

sk_status sk_classify_s1(const sk_function* f, const sk_grid* grid, char** report_json) {
  return guarded([&] {
    if (!f || !report_json) fail(ErrorCode::Domain, "null argument");
    *report_json = dup_string(membership_report_json(classify_s1(f->v, to_grid(grid))));
  });
}

sk_status sk_fiber_norms(const sk_function* f, double p, const sk_grid* grid,
                         uint64_t seed, char** report_json) {
  return guarded([&] {
    if (!f || !report_json) fail(ErrorCode::Domain, "null argument");
    *report_json =
        dup_string(membership_report_json(fiber_norms(f->v, p, to_grid(grid), seed)));
  });
}

sk_status sk_block_sum_criterion(const sk_function* f, double p, const sk_grid* grid,
                                 int blocks, uint64_t seed, char** report_json) {
  return guarded([&] {
    if (!f || !report_json) fail(ErrorCode::Domain, "null argument");
    *report_json = dup_string(
        membership_report_json(block_sum_criterion(f->v, p, to_grid(grid), blocks, seed)));
  });
}

sk_status sk_product_kernel(const sk_function* f1, const sk_function* f2, double p,
                            const sk_grid* grid, uint64_t seed, char** report_json,
                            sk_function** product_out) {
  return guarded([&] {
    if (!f1 || !f2 || !report_json) fail(ErrorCode::Domain, "null argument");
    ProductKernelResult r = product_kernel(f1->v, f2->v, p, to_grid(grid), seed);
    *report_json = dup_string(membership_report_json(r.report));
    if (product_out) *product_out = new sk_function{r.product};
  });
}

sk_status sk_transfer(const sk_torus_measure* nu, const sk_function* lambda,
                      const sk_grid* grid, sk_line_measure** out,
                      char** rejection_json) {
  if (rejection_json) *rejection_json = nullptr;
  return guarded([&] {
    if (!nu || !lambda || !out) fail(ErrorCode::Domain, "null argument");
    MembershipReport rejection;
    try {
      *out = new sk_line_measure{transfer(nu->v, lambda->v, to_grid(grid), &rejection)};
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Precondition && rejection_json)
        *rejection_json = dup_string(membership_report_json(rejection));
      throw;
    }
  });
}

sk_status sk_transfer_muhat(const sk_torus_measure* nu, const sk_function* lambda,
                            const sk_grid* grid, sk_grid_function** out) {
  return guarded([&] {
    if (!nu || !lambda || !out) fail(ErrorCode::Domain, "null argument");
    const GridConfig g = to_grid(grid);
    *out = new sk_grid_function{extend(nu_hat_table(nu->v, g), lambda->v, g)};
  });
}

sk_status sk_wiener_atoms_series(const sk_torus_measure* nu, const sk_function* lambda,
                                 const sk_grid* grid, const double* probes,
                                 size_t n_probes, const double* lambdas,
                                 size_t n_lambdas, double step, double eps,
                                 uint64_t seed, char** report_json) {
  return guarded([&] {
    if (!nu || !lambda || !report_json) fail(ErrorCode::Domain, "null argument");
    const GridConfig g = to_grid(grid);
    const WienerSchedule sched = to_schedule(lambdas, n_lambdas, step, eps);

    std::vector<double> ys;
    if (probes && n_probes > 0) {
      ys.assign(probes, probes + n_probes);
    } else {
      // Union of the closed-form transfer atoms and seeded off-atom probes.
      LineMeasure mu = transfer(nu->v, lambda->v, g, nullptr);
      for (const auto& a : mu.atoms) ys.push_back(a.y);
      double reach = 2.0;
      for (const auto& a : mu.atoms) reach = std::max(reach, std::abs(a.y) + 1.0);
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> uni(-reach, reach);
      int added = 0, attempts = 0;
      while (added < 20 && attempts < 4000) {
        ++attempts;
        const double y = uni(rng);
        bool clear = true;
        for (const auto& a : mu.atoms)
          if (std::abs(y - a.y) < 0.15) clear = false;
        if (!clear) continue;
        ys.push_back(y);
        ++added;
      }
    }

    SeriesMuHat provider(nu->v, lambda->v, g, sched.step, sched.lambdas.back());
    WienerAverager avg(provider, sched);
    std::string out = "{\"atoms\":[";
    for (std::size_t i = 0; i < ys.size(); ++i) {
      if (i) out += ',';
      out += wiener_atom_json(ys[i], avg.atom(ys[i]), avg.lambdas());
    }
    out += "],\"coefficient_slack\":" + format_double(provider.coefficient_slack()) + "}";
    *report_json = dup_string(out);
  });
}

sk_status sk_wiener_atom_function(const sk_function* muhat, double y,
                                  const double* lambdas, size_t n_lambdas, double step,
                                  double eps, char** report_json) {
  return guarded([&] {
    if (!muhat || !report_json) fail(ErrorCode::Domain, "null argument");
    const WienerSchedule sched = to_schedule(lambdas, n_lambdas, step, eps);
    ExprMuHat provider(muhat->v);
    WienerAverager avg(provider, sched);
    *report_json = dup_string(wiener_atom_json(y, avg.atom(y), avg.lambdas()));
  });
}

sk_status sk_wiener_energy_series(const sk_torus_measure* nu, const sk_function* lambda,
                                  const sk_grid* grid, const double* lambdas,
                                  size_t n_lambdas, double step, double eps,
                                  char** report_json) {
  return guarded([&] {
    if (!nu || !lambda || !report_json) fail(ErrorCode::Domain, "null argument");
    const GridConfig g = to_grid(grid);
    const WienerSchedule sched = to_schedule(lambdas, n_lambdas, step, eps);
    SeriesMuHat provider(nu->v, lambda->v, g, sched.step, sched.lambdas.back());
    WienerAverager avg(provider, sched);
    *report_json = dup_string(wiener_energy_json(avg.energy(), avg.lambdas()));
  });
}

sk_status sk_wiener_energy_function(const sk_function* muhat, const double* lambdas,
                                    size_t n_lambdas, double step, double eps,
                                    char** report_json) {
  return guarded([&] {
    if (!muhat || !report_json) fail(ErrorCode::Domain, "null argument");
    const WienerSchedule sched = to_schedule(lambdas, n_lambdas, step, eps);
    ExprMuHat provider(muhat->v);
    WienerAverager avg(provider, sched);
    *report_json = dup_string(wiener_energy_json(avg.energy(), avg.lambdas()));
  });
}

sk_status sk_radial_majorant_check(const sk_function* lambda, const sk_function* majorant,
                                   const sk_grid* grid, char** report_json) {
  return guarded([&] {
    if (!lambda || !majorant || !report_json) fail(ErrorCode::Domain, "null argument");
    *report_json =
        dup_string(majorant_json(radial_majorant_check(lambda->v, majorant->v, to_grid(grid))));
  });
}

sk_status sk_jodeit_piecewise(const sk_sequence* phi, int order, const sk_grid* grid,
                              sk_grid_function** out) {
  return guarded([&] {
    if (!phi || !out) fail(ErrorCode::Domain, "null argument");
    *out = new sk_grid_function{jodeit_piecewise(phi->v, order, to_grid(grid))};
  });
}

sk_status sk_jodeit_bound(const sk_sequence* phi, const sk_function* s,
                          const sk_grid* grid, char** result_json,
                          sk_grid_function** w_out) {
  return guarded([&] {
    if (!phi || !s || !result_json) fail(ErrorCode::Domain, "null argument");
    ExtensionResult r = jodeit_bound(phi->v, s->v, to_grid(grid));
    *result_json = dup_string(extension_result_json(r));
    if (w_out) *w_out = new sk_grid_function{std::move(r.w)};
  });
}

sk_status sk_q_range(const char* p_rational, char** json) {
  return guarded([&] {
    if (!p_rational || !json) fail(ErrorCode::Domain, "null argument");
    *json = dup_string(qrange_json(q_range(Rational::parse(p_rational))));
  });
}

sk_status sk_lp_extend(const sk_sequence* phi, const sk_function* s,
                       const char* p_rational, const double* r_schedule, size_t n_r,
                       const sk_grid* grid, char** result_json, sk_grid_function** w_out) {
  return guarded([&] {
    if (!phi || !s || !p_rational || !result_json)
      fail(ErrorCode::Domain, "null argument");
    std::vector<double> schedule = default_r_schedule();
    if (r_schedule && n_r > 0) schedule.assign(r_schedule, r_schedule + n_r);
    ExtensionResult r =
        lp_extend(phi->v, s->v, Rational::parse(p_rational), schedule, to_grid(grid));
    *result_json = dup_string(extension_result_json(r));
    if (w_out) *w_out = new sk_grid_function{std::move(r.w)};
  });
}

sk_status sk_convolve_sequences(const sk_sequence* a, const sk_sequence* b,
                                const char* r_rational, sk_sequence** c_out,
                                char** report_json) {
  return guarded([&] {
    if (!a || !b || !r_rational || !c_out) fail(ErrorCode::Domain, "null argument");
    auto [c, rep] = convolve_sequences(a->v, b->v, Rational::parse(r_rational));
    *c_out = new sk_sequence{std::move(c)};
    if (report_json) *report_json = dup_string(convolution_json(rep));
  });
}

sk_status sk_support_normalize(const sk_function* s, int big_n, sk_function** out) {
  return guarded([&] {
    if (!s || !out) fail(ErrorCode::Domain, "null argument");
    *out = new sk_function{support_normalize(s->v, big_n)};
  });
}

sk_status sk_rescale(const sk_function* f, long long alpha, sk_function** out) {
  return guarded([&] {
    if (!f || !out) fail(ErrorCode::Domain, "null argument");
    *out = new sk_function{rescale(f->v, alpha).fn};
  });
}

sk_status sk_compact_support_lp(const sk_sequence* phi, const sk_function* s,
                                const char* p_rational, const sk_grid* grid,
                                char** result_json, sk_grid_function** w_out) {
  return guarded([&] {
    if (!phi || !s || !p_rational || !result_json)
      fail(ErrorCode::Domain, "null argument");
    ExtensionResult r =
        compact_support_lp(phi->v, s->v, Rational::parse(p_rational), to_grid(grid));
    *result_json = dup_string(extension_result_json(r));
    if (w_out) *w_out = new sk_grid_function{std::move(r.w)};
  });
}

}  // extern "C"
