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

#include "extension.hpp"

#include <algorithm>
#include <cmath>

#include "lattice.hpp"
#include "quadrature.hpp"

namespace sumkern {

std::string QRange::str() const {
  if (!q_hi) return "[" + q_lo.str() + ", inf)";
  return "[" + q_lo.str() + ", " + q_hi->str() + "]";
}

QRange q_range(const Rational& p) {
  const Rational one(1, 1), two(2, 1);
  if (!(one < p)) fail(ErrorCode::Domain, "q_range: requires p > 1");
  QRange out;
  out.p = p;
  if (p == two) {
    out.q_lo = one;
    out.q_hi = std::nullopt;
    return out;
  }
  const Rational twop = two * p;
  if (p < two) {
    out.q_lo = twop / (Rational(3, 1) * p - two);
    out.q_hi = twop / (two - p);
  } else {
    out.q_lo = twop / (p + two);
    out.q_hi = twop / (p - two);
  }
  // Endpoints must be Hoelder conjugate; this is an identity of the formulas.
  const Rational inv_sum =
      Rational(out.q_lo.den, out.q_lo.num) + Rational(out.q_hi->den, out.q_hi->num);
  if (inv_sum != one) fail(ErrorCode::Internal, "q_range endpoints not conjugate");
  return out;
}

namespace {

void require_window_support(const ExprPtr& s, const char* op) {
  auto supp = support_of(*s);
  constexpr double kSlack = 1e-12;
  if (!supp || supp->lo < 0.25 - kSlack || supp->hi > 0.75 + kSlack)
    fail(ErrorCode::Precondition,
         std::string(op) + ": window support must lie inside [1/4, 3/4] "
                           "(apply support_normalize first)");
}

Rational conjugate_exponent(const Rational& p) {
  return p / (p - Rational(1, 1));  // p' with 1/p + 1/p' = 1
}

std::string fmt(double v) { return format_double(v); }

}  // namespace

WindowCoeffs window_coefficients(const ExprPtr& s, const GridConfig& grid) {
  grid.validate();
  require_window_support(s, "window_coefficients");
  WindowCoeffs wc;
  wc.radius = 4 * static_cast<long long>(grid.lattice_truncation);
  wc.c.resize(2 * wc.radius + 1);

  auto hat = analytic_ft(*s);
  ExprPtr hat_resolved = hat ? resolve_transforms(*hat) : nullptr;
  for (long long n = -wc.radius; n <= wc.radius; ++n) {
    wc.c[n + wc.radius] = hat_resolved
                              ? eval(hat_resolved, static_cast<double>(n))
                              : ft_by_quadrature(*s, static_cast<double>(n), grid.tolerance);
  }
  double fit = 0.0;
  for (long long n = wc.radius / 2; n <= wc.radius; ++n) {
    const double nn = static_cast<double>(n) * static_cast<double>(n);
    fit = std::max(fit, std::abs(wc.at(n)) * nn);
    fit = std::max(fit, std::abs(wc.at(-n)) * nn);
  }
  wc.fit_c2 = fit;
  return wc;
}

double coeff_lp_sum(const WindowCoeffs& wc, double p, double* tail_out) {
  double acc = 0.0;
  for (const auto& v : wc.c) acc += std::pow(std::abs(v), p);
  // sum_{|n| > M} (c2/n^2)^p <= 2 c2^p M^{1-2p} / (2p - 1).
  const double m = static_cast<double>(wc.radius);
  const double tail =
      2.0 * std::pow(wc.fit_c2, p) * std::pow(m, 1.0 - 2.0 * p) / (2.0 * p - 1.0);
  if (tail_out) *tail_out = std::pow(tail, 1.0 / p);
  return std::pow(acc + tail, 1.0 / p);
}

GridFunction jodeit_piecewise(const SequenceSpec& phi, int order,
                              const GridConfig& grid) {
  if (order != 0 && order != 1)
    fail(ErrorCode::Domain, "jodeit_piecewise: order must be 0 or 1");
  return extend(phi, order == 0 ? indicator(0.0, 1.0) : triangle(0.0, 1.0), grid);
}

ExtensionResult jodeit_bound(const SequenceSpec& phi, const ExprPtr& s,
                             const GridConfig& grid) {
  grid.validate();
  phi.validate();
  require_window_support(s, "jodeit_bound");

  WindowCoeffs wc = window_coefficients(s, grid);
  double tau_tail = 0.0;
  double tau = 0.0;
  for (const auto& v : wc.c) tau += std::abs(v);
  tau_tail = 2.0 * wc.fit_c2 / static_cast<double>(wc.radius);
  tau += tau_tail;

  // Multiplier certificate for phi: the l_1 sum bounds the norm at every p;
  // fall back to sup|phi| (exact at p = 2 only) when phi is not summable.
  double phi_norm = 0.0;
  const char* phi_norm_kind = nullptr;
  if (auto l1 = phi.lp_norm(1.0)) {
    phi_norm = *l1;
    phi_norm_kind = "l1 (uniform in p)";
  } else {
    phi_norm = phi.sup_bound();
    phi_norm_kind = "sup (exact at p=2 only)";
  }

  ExtensionResult out;
  out.w = extend(phi, ft(s), grid);
  out.bound.p = 0.0;  // uniform in p up to the unquantified constant
  out.bound.value = tau * phi_norm;
  out.bound.kind = NormCertificate::Kind::UpperBound;
  out.bound.provenance =
      "tau * ||phi|| from the summable window coefficients; the p-dependent "
      "constant is unquantified and reported as 1";
  out.trace.emplace_back("tau", fmt(tau));
  out.trace.emplace_back("tau_tail_estimate", fmt(tau_tail));
  out.trace.emplace_back("coeff_fit_c2", fmt(wc.fit_c2));
  out.trace.emplace_back("phi_norm", fmt(phi_norm));
  out.trace.emplace_back("phi_norm_kind", phi_norm_kind);
  out.trace.emplace_back("constant_flag", "C_p unquantified; reported factor 1");
  return out;
}

ExtensionResult lp_extend(const SequenceSpec& phi, const ExprPtr& s,
                          const Rational& p, const std::vector<double>& r_schedule,
                          const GridConfig& grid) {
  grid.validate();
  phi.validate();
  require_window_support(s, "lp_extend");
  if (!(Rational(1, 1) < p)) fail(ErrorCode::Domain, "lp_extend: requires p > 1");

  const Rational pc = conjugate_exponent(p);
  auto phi_norm = phi.lp_norm(pc.to_double());
  if (!phi_norm)
    fail(ErrorCode::Precondition,
         "lp_extend: phi is not certifiably in l_{p'} (p' = " + pc.str() + ")");

  WindowCoeffs wc = window_coefficients(s, grid);
  double tau_tail = 0.0;
  const double tau_p = coeff_lp_sum(wc, p.to_double(), &tau_tail);

  ExtensionResult out;
  const ExprPtr hat_s = ft(s);
  out.w = extend(phi, hat_s, grid);

  for (double r : r_schedule) {
    if (!(r > 0.0) || !(r < 1.0))
      fail(ErrorCode::Domain, "lp_extend: Abel factors must lie in (0,1)");
    GridFunction fr = extend(phi.damped(r), hat_s, grid);
    double d = 0.0;
    for (std::size_t j = 0; j < fr.values.size(); ++j)
      d = std::max(d, std::abs(fr.values[j] - out.w.values[j]));
    out.abel.emplace_back(r, d);
  }
  for (std::size_t i = 1; i < out.abel.size(); ++i) {
    if (out.abel[i].second > out.abel[i - 1].second + grid.tolerance)
      out.trace.emplace_back("abel_monotonicity_violation",
                             "d(" + fmt(out.abel[i].first) + ") exceeds d(" +
                                 fmt(out.abel[i - 1].first) + ")");
  }

  out.bound.p = p.to_double();
  out.bound.value = tau_p * *phi_norm;
  out.bound.kind = NormCertificate::Kind::UpperBound;
  out.bound.provenance = "tau_p * ||phi||_{p'}; the p-dependent constant is "
                         "unquantified and reported as 1";
  out.range = q_range(p);
  out.trace.emplace_back("tau_p", fmt(tau_p));
  out.trace.emplace_back("tau_p_tail_estimate", fmt(tau_tail));
  out.trace.emplace_back("phi_lp_conjugate_norm", fmt(*phi_norm));
  out.trace.emplace_back("p_conjugate", pc.str());
  out.trace.emplace_back("assumption",
                         "restriction of the damped symbol to the integers is "
                         "transferred back to the line (recorded, not verified)");
  return out;
}

std::pair<SequenceSpec, ConvolutionReport> convolve_sequences(const SequenceSpec& a,
                                                              const SequenceSpec& b,
                                                              const Rational& r) {
  a.validate();
  b.validate();
  const Rational one(1, 1), two(2, 1);
  if (!(one < r) || two < r)
    fail(ErrorCode::Domain, "convolve_sequences: requires 1 < r <= 2");
  const Rational rc = conjugate_exponent(r);

  auto na = a.lp_norm(r.to_double());
  auto nb = b.lp_norm(rc.to_double());
  if (!na)
    fail(ErrorCode::Precondition, "convolve_sequences: a is not certifiably in l_r");
  if (!nb)
    fail(ErrorCode::Precondition,
         "convolve_sequences: b is not certifiably in l_{r'}");

  ConvolutionReport rep;
  rep.a_norm = {r.to_double(), *na, NormCertificate::Kind::Exact, "sequence l_p sum"};
  rep.b_norm = {rc.to_double(), *nb, NormCertificate::Kind::Exact, "sequence l_p sum"};
  rep.bound = *na * *nb;
  rep.range = q_range(r);

  const bool exact = a.is_finite() && b.is_finite();
  long long half_a = 512, half_b = 512, out_radius = 256;
  if (exact) {
    half_a = a.support_radius.value_or(0);
    half_b = b.support_radius.value_or(0);
    out_radius = half_a + half_b;
  } else {
    // Truncation slack: l_1 tails of each factor against the other's sup.
    auto tail_a = a.l1_tail(half_a);
    auto tail_b = b.l1_tail(half_b);
    if (!tail_a || !tail_b)
      fail(ErrorCode::Precondition,
           "convolve_sequences: closed-form inputs need certifiable l_1 tails");
    rep.tail = *tail_a * b.sup_bound() + *tail_b * a.sup_bound();
  }

  std::map<long long, cplx> entries;
  for (long long n = -out_radius; n <= out_radius; ++n) {
    cplx acc(0.0, 0.0);
    for (long long m = -half_a; m <= half_a; ++m) {
      const long long k = n - m;
      if (k < -half_b || k > half_b) continue;
      acc += a.eval(m) * b.eval(k);
    }
    if (acc != cplx(0.0, 0.0)) entries[n] = acc;
  }
  return {SequenceSpec::finite(std::move(entries)), rep};
}

ExprPtr support_normalize(const ExprPtr& s, int big_n) {
  if (big_n < 1) fail(ErrorCode::Domain, "support_normalize: N must be a positive integer");
  auto supp = support_of(*s);
  if (!supp || supp->lo < -static_cast<double>(big_n) - 1e-12 ||
      supp->hi > static_cast<double>(big_n) + 1e-12)
    fail(ErrorCode::Precondition,
         "support_normalize: support is not certifiably inside [-N, N]");
  return translate(dilate(s, 4.0 * big_n), 0.5);
}

RescaleResult rescale(const ExprPtr& lambda, long long alpha,
                      const MembershipReport* note) {
  if (alpha == 0) fail(ErrorCode::Domain, "rescale: alpha must be a nonzero integer");
  RescaleResult out;
  out.fn = (alpha == 1) ? lambda : dilate(lambda, static_cast<double>(alpha));
  if (note && note->holds()) {
    MembershipReport carried = *note;
    carried.reason = "carried through integer rescale of the argument "
                     "(membership is preserved; constants may change)";
    out.propagated = std::move(carried);
  }
  return out;
}

ExtensionResult compact_support_lp(const SequenceSpec& phi, const ExprPtr& s,
                                   const Rational& p, const GridConfig& grid) {
  grid.validate();
  phi.validate();
  const Rational one(1, 1), two(2, 1);
  if (!(one < p) || !(p < two))
    fail(ErrorCode::Domain, "compact_support_lp: requires 1 < p < 2");

  auto supp = support_of(*s);
  if (!supp)
    fail(ErrorCode::Precondition, "compact_support_lp: window support is unbounded");
  auto phi_norm = phi.lp_norm(p.to_double());
  if (!phi_norm)
    fail(ErrorCode::Precondition, "compact_support_lp: phi is not certifiably in l_p");

  // ||S||_p by quadrature over the support.
  const double pd = p.to_double();
  const double s_norm =
      std::pow(integrate([&](double x) { return cplx(std::pow(std::abs(eval(s, x)), pd), 0.0); },
                         supp->lo, supp->hi, grid.tolerance)
                   .value.real(),
               1.0 / pd);

  const int big_n = std::max(1, static_cast<int>(std::ceil(supp->radius())));
  const ExprPtr s_window = support_normalize(s, big_n);

  ExtensionResult out;
  out.w = extend(phi, ft(s), grid);
  // Abel trace on the normalized window (the construction device).
  const ExprPtr hat_sn = ft(s_window);
  GridConfig trace_grid = grid;
  GridFunction wn = extend(phi, hat_sn, trace_grid);
  for (double r : {0.5, 0.9, 0.99}) {
    GridFunction fr = extend(phi.damped(r), hat_sn, trace_grid);
    double d = 0.0;
    for (std::size_t j = 0; j < fr.values.size(); ++j)
      d = std::max(d, std::abs(fr.values[j] - wn.values[j]));
    out.abel.emplace_back(r, d);
  }

  out.bound.p = pd;
  out.bound.value = *phi_norm * s_norm;
  out.bound.kind = NormCertificate::Kind::UpperBound;
  out.bound.provenance = "||phi||_p ||S||_p via bilinear interpolation between the "
                         "l_1 x L^1 and l_2 x L^2 endpoints; constant reported as 1";
  out.range = QRange{p, one, std::nullopt};  // every finite q
  out.trace.emplace_back("phi_lp_norm", fmt(*phi_norm));
  out.trace.emplace_back("window_lp_norm", fmt(s_norm));
  out.trace.emplace_back("support_radius", fmt(supp->radius()));
  out.trace.emplace_back("normalized_window_n", std::to_string(big_n));
  out.trace.emplace_back("constant_flag",
                         "interpolation constant unquantified (may depend on the "
                         "support radius); reported factor 1");
  return out;
}

}  // namespace sumkern
