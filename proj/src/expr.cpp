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

#include "expr.hpp"

#include <algorithm>
#include <limits>

#include "quadrature.hpp"

namespace sumkern {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct KindInfo {
  Kind kind;
  const char* name;
  int min_params;   // -1: variadic (polynomial coefficients)
  int children;     // -1: one or more
};

constexpr KindInfo kKinds[] = {
    {Kind::Indicator, "indicator", 2, 0},
    {Kind::Triangle, "triangle", 2, 0},
    {Kind::Gaussian, "gaussian", 1, 0},
    {Kind::RaisedCosine, "raised_cosine", 2, 0},
    {Kind::PolynomialPiece, "polynomial_piece", -1, 0},
    {Kind::Sinc, "sinc", 0, 0},
    {Kind::RationalDecay, "rational_decay", 1, 0},
    {Kind::Translate, "translate", 1, 1},
    {Kind::Modulate, "modulate", 1, 1},
    {Kind::Dilate, "dilate", 1, 1},
    {Kind::Scale, "scale", 2, 1},
    {Kind::Sum, "sum", 0, -1},
    {Kind::Product, "product", 0, -1},
    {Kind::Ft, "ft", 0, 1},
    {Kind::Wrap, "wrap", 0, 1},
};

const KindInfo& info(Kind k) {
  for (const auto& ki : kKinds)
    if (ki.kind == k) return ki;
  fail(ErrorCode::Internal, "unknown expression kind");
}

double sinc_value(double x) {
  const double u = kPi * x;
  if (std::abs(u) < 1e-4) {
    const double u2 = u * u;
    return 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
  }
  return std::sin(u) / u;
}

double horner(const std::vector<double>& params, double x) {
  // params = [a, b, c0, c1, ...]
  double acc = 0.0;
  for (std::size_t i = params.size(); i > 2; --i) acc = acc * x + params[i - 1];
  return acc;
}

// Decay envelope of exp(-pi (x/s)^2): maximize (1+x)^k exp(-pi x^2/s^2).
double gaussian_decay_coeff(double s, double k) {
  if (k <= 0.0) return 1.0;
  const double xstar = 0.5 * (-1.0 + std::sqrt(1.0 + 2.0 * k * s * s / kPi));
  return std::pow(1.0 + xstar, k) * std::exp(-kPi * (xstar / s) * (xstar / s));
}

}  // namespace

const char* kind_name(Kind k) { return info(k).name; }

std::optional<Kind> kind_from_name(const std::string& name) {
  for (const auto& ki : kKinds)
    if (name == ki.name) return ki.kind;
  return std::nullopt;
}

ExprPtr make_expr(Kind kind, std::vector<double> params,
                  std::vector<ExprPtr> children) {
  const KindInfo& ki = info(kind);
  const std::string where = std::string("'") + ki.name + "'";

  for (double p : params)
    if (!std::isfinite(p)) fail(ErrorCode::Parse, where + ": non-finite parameter");
  for (const auto& c : children)
    if (!c) fail(ErrorCode::Parse, where + ": null child");

  if (ki.min_params >= 0 && static_cast<int>(params.size()) != ki.min_params)
    fail(ErrorCode::Parse, where + ": expected " + std::to_string(ki.min_params) +
                               " parameter(s), got " + std::to_string(params.size()));
  if (ki.children >= 0 && static_cast<int>(children.size()) != ki.children)
    fail(ErrorCode::Parse, where + ": expected " + std::to_string(ki.children) +
                               " child(ren), got " + std::to_string(children.size()));
  if (ki.children < 0 && children.empty())
    fail(ErrorCode::Parse, where + ": needs at least one child");

  switch (kind) {
    case Kind::Indicator:
      if (params[0] > params[1]) fail(ErrorCode::Parse, "'indicator': requires a <= b");
      break;
    case Kind::Triangle:
      if (params[1] <= 0.0) fail(ErrorCode::Parse, "'triangle': halfwidth must be positive");
      break;
    case Kind::Gaussian:
      if (params[0] <= 0.0) fail(ErrorCode::Parse, "'gaussian': sigma must be positive");
      break;
    case Kind::RaisedCosine:
      if (params[0] >= params[1]) fail(ErrorCode::Parse, "'raised_cosine': requires a < b");
      break;
    case Kind::PolynomialPiece:
      if (params.size() < 3)
        fail(ErrorCode::Parse, "'polynomial_piece': expected [a, b, c0, ...]");
      if (params[0] > params[1]) fail(ErrorCode::Parse, "'polynomial_piece': requires a <= b");
      break;
    case Kind::RationalDecay:
      if (params[0] < 1.0) fail(ErrorCode::Parse, "'rational_decay': exponent must be >= 1");
      break;
    case Kind::Dilate:
      if (params[0] == 0.0) fail(ErrorCode::Parse, "'dilate': factor must be nonzero");
      break;
    default:
      break;
  }

  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->params = std::move(params);
  e->children = std::move(children);
  return e;
}

ExprPtr indicator(double a, double b) { return make_expr(Kind::Indicator, {a, b}, {}); }
ExprPtr triangle(double center, double halfwidth) {
  return make_expr(Kind::Triangle, {center, halfwidth}, {});
}
ExprPtr gaussian(double sigma) { return make_expr(Kind::Gaussian, {sigma}, {}); }
ExprPtr raised_cosine(double a, double b) {
  return make_expr(Kind::RaisedCosine, {a, b}, {});
}
ExprPtr polynomial_piece(double a, double b, std::vector<double> coeffs) {
  std::vector<double> params{a, b};
  params.insert(params.end(), coeffs.begin(), coeffs.end());
  return make_expr(Kind::PolynomialPiece, std::move(params), {});
}
ExprPtr sinc() { return make_expr(Kind::Sinc, {}, {}); }
ExprPtr rational_decay(double k) { return make_expr(Kind::RationalDecay, {k}, {}); }
ExprPtr translate(ExprPtr f, double x0) {
  return make_expr(Kind::Translate, {x0}, {std::move(f)});
}
ExprPtr modulate(ExprPtr f, double xi0) {
  return make_expr(Kind::Modulate, {xi0}, {std::move(f)});
}
ExprPtr dilate(ExprPtr f, double alpha) {
  return make_expr(Kind::Dilate, {alpha}, {std::move(f)});
}
ExprPtr scale(ExprPtr f, cplx c) {
  return make_expr(Kind::Scale, {c.real(), c.imag()}, {std::move(f)});
}
ExprPtr sum(std::vector<ExprPtr> fs) { return make_expr(Kind::Sum, {}, std::move(fs)); }
ExprPtr product(std::vector<ExprPtr> fs) {
  return make_expr(Kind::Product, {}, std::move(fs));
}
ExprPtr ft(ExprPtr f) { return make_expr(Kind::Ft, {}, {std::move(f)}); }
ExprPtr wrap(ExprPtr f) { return make_expr(Kind::Wrap, {}, {std::move(f)}); }

cplx ft_by_quadrature(const Expr& f, double xi, double tol);

cplx eval(const Expr& f, double x) {
  switch (f.kind) {
    case Kind::Indicator:
      return (x >= f.params[0] && x < f.params[1]) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
    case Kind::Triangle: {
      const double t = 1.0 - std::abs(x - f.params[0]) / f.params[1];
      return cplx(t > 0.0 ? t : 0.0, 0.0);
    }
    case Kind::Gaussian: {
      const double u = x / f.params[0];
      return cplx(std::exp(-kPi * u * u), 0.0);
    }
    case Kind::RaisedCosine: {
      const double a = f.params[0], b = f.params[1];
      if (x < a || x > b) return cplx(0.0, 0.0);
      const double c = 0.5 * (a + b), w = b - a;
      return cplx(0.5 * (1.0 + std::cos(kTwoPi * (x - c) / w)), 0.0);
    }
    case Kind::PolynomialPiece:
      if (x < f.params[0] || x >= f.params[1]) return cplx(0.0, 0.0);
      return cplx(horner(f.params, x), 0.0);
    case Kind::Sinc:
      return cplx(sinc_value(x), 0.0);
    case Kind::RationalDecay:
      return cplx(std::pow(1.0 + std::abs(x), -f.params[0]), 0.0);
    case Kind::Translate:
      return eval(*f.children[0], x - f.params[0]);
    case Kind::Modulate:
      return cis(kTwoPi * f.params[0] * x) * eval(*f.children[0], x);
    case Kind::Dilate:
      return eval(*f.children[0], f.params[0] * x);
    case Kind::Scale:
      return cplx(f.params[0], f.params[1]) * eval(*f.children[0], x);
    case Kind::Sum: {
      cplx acc(0.0, 0.0);
      for (const auto& c : f.children) acc += eval(*c, x);
      return acc;
    }
    case Kind::Product: {
      cplx acc(1.0, 0.0);
      for (const auto& c : f.children) acc *= eval(*c, x);
      return acc;
    }
    case Kind::Ft: {
      if (auto cf = analytic_ft(*f.children[0])) return eval(**cf, x);
      return ft_by_quadrature(*f.children[0], x, 1e-10);
    }
    case Kind::Wrap:
      return eval(*f.children[0], frac(x));
  }
  fail(ErrorCode::Internal, "eval: unreachable");
}

std::optional<Support> support_of(const Expr& f) {
  switch (f.kind) {
    case Kind::Indicator:
    case Kind::RaisedCosine:
      return Support{f.params[0], f.params[1]};
    case Kind::PolynomialPiece:
      return Support{f.params[0], f.params[1]};
    case Kind::Triangle:
      return Support{f.params[0] - f.params[1], f.params[0] + f.params[1]};
    case Kind::Translate: {
      auto s = support_of(*f.children[0]);
      if (!s) return std::nullopt;
      return Support{s->lo + f.params[0], s->hi + f.params[0]};
    }
    case Kind::Modulate:
    case Kind::Scale:
      return support_of(*f.children[0]);
    case Kind::Dilate: {
      auto s = support_of(*f.children[0]);
      if (!s) return std::nullopt;
      double lo = s->lo / f.params[0], hi = s->hi / f.params[0];
      if (lo > hi) std::swap(lo, hi);
      return Support{lo, hi};
    }
    case Kind::Sum: {
      double lo = kInf, hi = -kInf;
      for (const auto& c : f.children) {
        auto s = support_of(*c);
        if (!s) return std::nullopt;
        lo = std::min(lo, s->lo);
        hi = std::max(hi, s->hi);
      }
      return Support{lo, hi};
    }
    case Kind::Product: {
      bool any = false;
      double lo = -kInf, hi = kInf;
      for (const auto& c : f.children) {
        if (auto s = support_of(*c)) {
          any = true;
          lo = std::max(lo, s->lo);
          hi = std::min(hi, s->hi);
        }
      }
      if (!any) return std::nullopt;
      if (lo > hi) return Support{0.0, 0.0};  // factors never overlap: f == 0
      return Support{lo, hi};
    }
    default:
      return std::nullopt;
  }
}

std::optional<double> sup_bound_of(const Expr& f) {
  switch (f.kind) {
    case Kind::Indicator:
    case Kind::Triangle:
    case Kind::Gaussian:
    case Kind::RaisedCosine:
    case Kind::Sinc:
    case Kind::RationalDecay:
      return 1.0;
    case Kind::PolynomialPiece: {
      const double r = std::max(std::abs(f.params[0]), std::abs(f.params[1]));
      double bound = 0.0, rpow = 1.0;
      for (std::size_t i = 2; i < f.params.size(); ++i) {
        bound += std::abs(f.params[i]) * rpow;
        rpow *= r;
      }
      return bound;
    }
    case Kind::Translate:
    case Kind::Modulate:
    case Kind::Dilate:
    case Kind::Wrap:
      return sup_bound_of(*f.children[0]);
    case Kind::Scale: {
      auto s = sup_bound_of(*f.children[0]);
      if (!s) return std::nullopt;
      return std::abs(cplx(f.params[0], f.params[1])) * *s;
    }
    case Kind::Sum: {
      double acc = 0.0;
      for (const auto& c : f.children) {
        auto s = sup_bound_of(*c);
        if (!s) return std::nullopt;
        acc += *s;
      }
      return acc;
    }
    case Kind::Product: {
      double acc = 1.0;
      for (const auto& c : f.children) {
        auto s = sup_bound_of(*c);
        if (!s) return std::nullopt;
        acc *= *s;
      }
      return acc;
    }
    case Kind::Ft:
      return l1_bound_of(*f.children[0]);
  }
  return std::nullopt;
}

namespace {
std::optional<double> l1_bound_direct(const Expr& f);
}

std::optional<double> l1_bound_of(const Expr& f) {
  if (auto direct = l1_bound_direct(f)) return direct;
  // Fallback: any decay envelope with exponent > 1 integrates in closed form.
  if (auto d = decay_of(f); d && d->k > 1.0) return 2.0 * d->c / (d->k - 1.0);
  return std::nullopt;
}

namespace {
std::optional<double> l1_bound_direct(const Expr& f) {
  switch (f.kind) {
    case Kind::Indicator:
      return f.params[1] - f.params[0];
    case Kind::Triangle:
      return f.params[1];
    case Kind::Gaussian:
      return f.params[0];
    case Kind::RaisedCosine:
      return 0.5 * (f.params[1] - f.params[0]);
    case Kind::PolynomialPiece: {
      auto s = sup_bound_of(f);
      if (!s) return std::nullopt;
      return *s * (f.params[1] - f.params[0]);
    }
    case Kind::Sinc:
    case Kind::Wrap:
      return std::nullopt;
    case Kind::RationalDecay:
      if (f.params[0] > 1.0) return 2.0 / (f.params[0] - 1.0);
      return std::nullopt;
    case Kind::Translate:
    case Kind::Modulate:
      return l1_bound_of(*f.children[0]);
    case Kind::Dilate: {
      auto v = l1_bound_of(*f.children[0]);
      if (!v) return std::nullopt;
      return *v / std::abs(f.params[0]);
    }
    case Kind::Scale: {
      auto v = l1_bound_of(*f.children[0]);
      if (!v) return std::nullopt;
      return std::abs(cplx(f.params[0], f.params[1])) * *v;
    }
    case Kind::Sum: {
      double acc = 0.0;
      for (const auto& c : f.children) {
        auto v = l1_bound_of(*c);
        if (!v) return std::nullopt;
        acc += *v;
      }
      return acc;
    }
    case Kind::Product: {
      // ||fg..||_1 <= ||f_i||_1 prod_{j!=i} sup|f_j|, best available split.
      std::optional<double> best;
      for (std::size_t i = 0; i < f.children.size(); ++i) {
        auto l1 = l1_bound_of(*f.children[i]);
        if (!l1) continue;
        double acc = *l1;
        bool ok = true;
        for (std::size_t j = 0; j < f.children.size(); ++j) {
          if (j == i) continue;
          auto s = sup_bound_of(*f.children[j]);
          if (!s) {
            ok = false;
            break;
          }
          acc *= *s;
        }
        if (ok && (!best || acc < *best)) best = acc;
      }
      return best;
    }
    case Kind::Ft: {
      const double kmax = ft_max_decay_exponent(*f.children[0]);
      if (kmax <= 1.0) return std::nullopt;
      const double k = std::isinf(kmax) ? 8.0 : kmax;
      auto c = ft_decay_coeff_at(*f.children[0], k);
      if (!c) return std::nullopt;
      return 2.0 * *c / (k - 1.0);
    }
  }
  return std::nullopt;
}
}  // namespace

double max_decay_exponent(const Expr& f) {
  if (support_of(f) && sup_bound_of(f)) return kInf;
  switch (f.kind) {
    case Kind::Gaussian:
      return kInf;
    case Kind::Sinc:
      return 1.0;
    case Kind::RationalDecay:
      return f.params[0];
    case Kind::Translate:
    case Kind::Modulate:
    case Kind::Dilate:
      return max_decay_exponent(*f.children[0]);
    case Kind::Scale:
      if (f.params[0] == 0.0 && f.params[1] == 0.0) return kInf;
      return max_decay_exponent(*f.children[0]);
    case Kind::Sum: {
      double m = kInf;
      for (const auto& c : f.children) m = std::min(m, max_decay_exponent(*c));
      return m;
    }
    case Kind::Product: {
      double m = 0.0;
      for (const auto& c : f.children) {
        const double e = max_decay_exponent(*c);
        if (std::isinf(e)) return kInf;
        m += e;
      }
      return m;
    }
    case Kind::Ft:
      return ft_max_decay_exponent(*f.children[0]);
    default:
      return 0.0;
  }
}

std::optional<double> decay_coeff_at(const Expr& f, double k) {
  if (k <= 0.0) return sup_bound_of(f);
  if (auto s = support_of(f)) {
    if (auto b = sup_bound_of(f)) return *b * std::pow(1.0 + s->radius(), k);
  }
  switch (f.kind) {
    case Kind::Gaussian:
      return gaussian_decay_coeff(f.params[0], k);
    case Kind::Sinc:
      if (k <= 1.0) return 2.0;
      return std::nullopt;
    case Kind::RationalDecay:
      if (k <= f.params[0]) return 1.0;
      return std::nullopt;
    case Kind::Translate: {
      auto c = decay_coeff_at(*f.children[0], k);
      if (!c) return std::nullopt;
      return *c * std::pow(1.0 + std::abs(f.params[0]), k);
    }
    case Kind::Modulate:
      return decay_coeff_at(*f.children[0], k);
    case Kind::Dilate: {
      auto c = decay_coeff_at(*f.children[0], k);
      if (!c) return std::nullopt;
      return *c * std::pow(std::max(1.0, 1.0 / std::abs(f.params[0])), k);
    }
    case Kind::Scale: {
      auto c = decay_coeff_at(*f.children[0], k);
      if (!c) return std::nullopt;
      return std::abs(cplx(f.params[0], f.params[1])) * *c;
    }
    case Kind::Sum: {
      double acc = 0.0;
      for (const auto& ch : f.children) {
        auto c = decay_coeff_at(*ch, k);
        if (!c) return std::nullopt;
        acc += *c;
      }
      return acc;
    }
    case Kind::Product: {
      // Split the exponent across factors; factors that can absorb any
      // exponent (compact, gaussian) soak up whatever remains.
      double remaining = k;
      double coeff = 1.0;
      const std::size_t n = f.children.size();
      for (std::size_t i = 0; i < n; ++i) {
        const Expr& ch = *f.children[i];
        double give = std::min(remaining, max_decay_exponent(ch));
        if (i + 1 == n) give = remaining;  // last factor must close the gap
        auto c = decay_coeff_at(ch, give);
        if (!c) return std::nullopt;
        coeff *= *c;
        remaining -= give;
      }
      if (remaining > 1e-12) return std::nullopt;
      return coeff;
    }
    case Kind::Ft:
      return ft_decay_coeff_at(*f.children[0], k);
    default:
      return std::nullopt;
  }
}

std::optional<Decay> decay_of(const Expr& f, double preferred_k) {
  const double kmax = max_decay_exponent(f);
  if (kmax <= 0.0) return std::nullopt;
  const double k = std::isinf(kmax) ? preferred_k : kmax;
  auto c = decay_coeff_at(f, k);
  if (!c) return std::nullopt;
  return Decay{*c, k};
}

double ft_max_decay_exponent(const Expr& f) {
  switch (f.kind) {
    case Kind::Gaussian:
      return kInf;
    case Kind::Sinc:
      return kInf;  // hat of sinc is an indicator
    case Kind::Triangle:
      return 2.0;
    case Kind::RaisedCosine:
      return 3.0;
    case Kind::Indicator:
      return 1.0;
    case Kind::Translate:
    case Kind::Modulate:
    case Kind::Dilate:
    case Kind::Scale:
      return ft_max_decay_exponent(*f.children[0]);
    case Kind::Sum: {
      double m = kInf;
      for (const auto& c : f.children) m = std::min(m, ft_max_decay_exponent(*c));
      return m;
    }
    case Kind::Ft:
      return max_decay_exponent(*f.children[0]);
    default:
      return 0.0;
  }
}

std::optional<double> ft_decay_coeff_at(const Expr& f, double k) {
  if (k < 0.0) return std::nullopt;
  switch (f.kind) {
    case Kind::Gaussian: {
      // hat f = s exp(-pi (s xi)^2)
      const double s = f.params[0];
      return s * gaussian_decay_coeff(1.0 / s, k);
    }
    case Kind::Sinc: {
      if (auto cf = analytic_ft(f)) return decay_coeff_at(**cf, k);
      return std::nullopt;
    }
    case Kind::Indicator: {
      if (k > 1.0) return std::nullopt;
      // |hat chi| = w |sinc(w xi)| <= w min(1, 1/(pi w |xi|))
      const double w = f.params[1] - f.params[0];
      if (w == 0.0) return 0.0;
      const double xi0 = 1.0 / w;
      return std::max(w * std::pow(1.0 + xi0, k),
                      (1.0 / kPi) * std::pow(1.0 + w, k) / std::pow(xi0, 1.0 - k));
    }
    case Kind::Triangle: {
      if (k > 2.0) return std::nullopt;
      // |hat tri| = hw sinc^2(hw xi) <= min(hw, 1/(pi^2 hw xi^2))
      const double hw = f.params[1];
      const double xi0 = 1.0 / hw;
      const double near = hw * std::pow(1.0 + xi0, k);
      const double far = (1.0 / (kPi * kPi * hw)) * std::pow(1.0 + hw, k) /
                         std::pow(xi0, 2.0 - k);
      return std::max(near, far);
    }
    case Kind::RaisedCosine: {
      if (k > 3.0) return std::nullopt;
      // |hat h| = (w/2)|sinc(w xi)| / |1-(w xi)^2| <= 1/(pi w^2 |xi|^3)
      // once (w xi)^2 >= 2; below that it is bounded by w/2.
      const double w = f.params[1] - f.params[0];
      const double xi1 = std::sqrt(2.0) / w;
      const double near = 0.5 * w * std::pow(1.0 + xi1, k);
      const double far = (1.0 / (kPi * w * w)) * std::pow(1.0 + 1.0 / xi1, k) /
                         std::pow(xi1, 3.0 - k);
      return std::max(near, far);
    }
    case Kind::Translate:
      return ft_decay_coeff_at(*f.children[0], k);
    case Kind::Modulate: {
      auto c = ft_decay_coeff_at(*f.children[0], k);
      if (!c) return std::nullopt;
      return *c * std::pow(1.0 + std::abs(f.params[0]), k);
    }
    case Kind::Dilate: {
      auto c = ft_decay_coeff_at(*f.children[0], k);
      if (!c) return std::nullopt;
      const double a = std::abs(f.params[0]);
      return *c * std::pow(std::max(1.0, a), k) / a;
    }
    case Kind::Scale: {
      auto c = ft_decay_coeff_at(*f.children[0], k);
      if (!c) return std::nullopt;
      return std::abs(cplx(f.params[0], f.params[1])) * *c;
    }
    case Kind::Sum: {
      double acc = 0.0;
      for (const auto& ch : f.children) {
        auto c = ft_decay_coeff_at(*ch, k);
        if (!c) return std::nullopt;
        acc += *c;
      }
      return acc;
    }
    case Kind::Ft:
      // hat hat f = reflect(f)
      return decay_coeff_at(*f.children[0], k);
    default:
      return std::nullopt;
  }
}

bool is_even_structural(const Expr& f) {
  switch (f.kind) {
    case Kind::Indicator:
    case Kind::RaisedCosine:
      return f.params[0] == -f.params[1];
    case Kind::Triangle:
      return f.params[0] == 0.0;
    case Kind::Gaussian:
    case Kind::Sinc:
    case Kind::RationalDecay:
      return true;
    case Kind::PolynomialPiece: {
      if (f.params[0] != -f.params[1]) return false;
      for (std::size_t i = 3; i < f.params.size(); i += 2)
        if (f.params[i] != 0.0) return false;
      return true;
    }
    case Kind::Translate:
      return f.params[0] == 0.0 && is_even_structural(*f.children[0]);
    case Kind::Modulate:
      return f.params[0] == 0.0 && is_even_structural(*f.children[0]);
    case Kind::Dilate:
    case Kind::Scale:
      return is_even_structural(*f.children[0]);
    case Kind::Sum:
    case Kind::Product: {
      for (const auto& c : f.children)
        if (!is_even_structural(*c)) return false;
      return true;
    }
    case Kind::Ft:
      return is_even_structural(*f.children[0]);
    case Kind::Wrap:
      return false;
  }
  return false;
}

bool is_real_structural(const Expr& f) {
  switch (f.kind) {
    case Kind::Indicator:
    case Kind::Triangle:
    case Kind::Gaussian:
    case Kind::RaisedCosine:
    case Kind::PolynomialPiece:
    case Kind::Sinc:
    case Kind::RationalDecay:
      return true;
    case Kind::Translate:
    case Kind::Dilate:
    case Kind::Wrap:
      return is_real_structural(*f.children[0]);
    case Kind::Modulate:
      return f.params[0] == 0.0 && is_real_structural(*f.children[0]);
    case Kind::Scale:
      return f.params[1] == 0.0 && is_real_structural(*f.children[0]);
    case Kind::Sum:
    case Kind::Product: {
      for (const auto& c : f.children)
        if (!is_real_structural(*c)) return false;
      return true;
    }
    case Kind::Ft:
      // hat of a real even function is real (and even).
      return is_real_structural(*f.children[0]) && is_even_structural(*f.children[0]);
  }
  return false;
}

bool is_continuous_structural(const Expr& f) {
  switch (f.kind) {
    case Kind::Indicator:
      return f.params[0] == f.params[1];  // empty indicator is the zero function
    case Kind::Triangle:
    case Kind::Gaussian:
    case Kind::RaisedCosine:
    case Kind::Sinc:
    case Kind::RationalDecay:
      return true;
    case Kind::PolynomialPiece: {
      // Continuous iff the polynomial vanishes at both cut points.
      const double scale_hint = 1.0 + std::abs(horner(f.params, 0.5 * (f.params[0] + f.params[1])));
      return std::abs(horner(f.params, f.params[0])) <= 1e-12 * scale_hint &&
             std::abs(horner(f.params, f.params[1])) <= 1e-12 * scale_hint;
    }
    case Kind::Translate:
    case Kind::Modulate:
    case Kind::Dilate:
    case Kind::Scale:
      return is_continuous_structural(*f.children[0]);
    case Kind::Sum:
    case Kind::Product: {
      for (const auto& c : f.children)
        if (!is_continuous_structural(*c)) return false;
      return true;
    }
    case Kind::Ft:
      return l1_bound_of(*f.children[0]).has_value();
    case Kind::Wrap: {
      if (!is_continuous_structural(*f.children[0])) return false;
      const cplx at0 = eval(*f.children[0], 0.0);
      const cplx at1 = eval(*f.children[0], 1.0);
      return std::abs(at0 - at1) <= 1e-12 * (1.0 + std::abs(at0));
    }
  }
  return false;
}

std::optional<ExprPtr> analytic_ft(const Expr& f) {
  switch (f.kind) {
    case Kind::Indicator: {
      const double a = f.params[0], b = f.params[1];
      const double c = 0.5 * (a + b), w = b - a;
      ExprPtr core = scale(dilate(sinc(), w), cplx(w, 0.0));
      if (c != 0.0) core = modulate(core, -c);
      return core;
    }
    case Kind::Triangle: {
      const double c = f.params[0], hw = f.params[1];
      ExprPtr d = dilate(sinc(), hw);
      ExprPtr core = scale(product({d, d}), cplx(hw, 0.0));
      if (c != 0.0) core = modulate(core, -c);
      return core;
    }
    case Kind::Gaussian: {
      const double s = f.params[0];
      return scale(gaussian(1.0 / s), cplx(s, 0.0));
    }
    case Kind::RaisedCosine: {
      const double a = f.params[0], b = f.params[1];
      const double c = 0.5 * (a + b), w = b - a;
      ExprPtr d = dilate(sinc(), w);
      ExprPtr core = sum({scale(d, cplx(0.5 * w, 0.0)),
                          scale(translate(d, 1.0 / w), cplx(0.25 * w, 0.0)),
                          scale(translate(d, -1.0 / w), cplx(0.25 * w, 0.0))});
      if (c != 0.0) core = modulate(core, -c);
      return core;
    }
    case Kind::Sinc:
      return indicator(-0.5, 0.5);
    case Kind::Translate: {
      auto cf = analytic_ft(*f.children[0]);
      if (!cf) return std::nullopt;
      if (f.params[0] == 0.0) return cf;
      return modulate(*cf, -f.params[0]);
    }
    case Kind::Modulate: {
      auto cf = analytic_ft(*f.children[0]);
      if (!cf) return std::nullopt;
      if (f.params[0] == 0.0) return cf;
      return translate(*cf, f.params[0]);
    }
    case Kind::Dilate: {
      auto cf = analytic_ft(*f.children[0]);
      if (!cf) return std::nullopt;
      const double a = f.params[0];
      return scale(dilate(*cf, 1.0 / a), cplx(1.0 / std::abs(a), 0.0));
    }
    case Kind::Scale: {
      auto cf = analytic_ft(*f.children[0]);
      if (!cf) return std::nullopt;
      return scale(*cf, cplx(f.params[0], f.params[1]));
    }
    case Kind::Sum: {
      std::vector<ExprPtr> parts;
      parts.reserve(f.children.size());
      for (const auto& c : f.children) {
        auto cf = analytic_ft(*c);
        if (!cf) return std::nullopt;
        parts.push_back(*cf);
      }
      return sum(std::move(parts));
    }
    case Kind::Ft: {
      // Fourier inversion: hat hat f = reflect f, valid when f is integrable
      // with integrable hat (true for every grammar node that reaches here).
      if (!l1_bound_of(*f.children[0])) return std::nullopt;
      return reflect(f.children[0]);
    }
    default:
      return std::nullopt;
  }
}

std::optional<ExprPtr> inverse_ft_witness(const ExprPtr& f) {
  // If hat(f) has closed form G then hat(reflect G) = f.
  auto g = analytic_ft(*f);
  if (!g) return std::nullopt;
  return reflect(*g);
}

cplx ft_by_quadrature(const Expr& f, double xi, double tol) {
  if (tol <= 0.0) tol = 1e-10;
  double lo, hi;
  if (auto s = support_of(f)) {
    lo = s->lo;
    hi = s->hi;
  } else {
    const double kmax = max_decay_exponent(f);
    if (kmax <= 1.0)
      fail(ErrorCode::Precondition,
           "fourier transform by quadrature requires an integrability certificate "
           "(compact support or decay exponent > 1)");
    const double k = std::isinf(kmax) ? 8.0 : kmax;
    auto c = decay_coeff_at(f, k);
    if (!c) fail(ErrorCode::Precondition, "no decay certificate for quadrature window");
    // Tail of the discarded region: 2 c (1+T)^{1-k} / (k-1) <= tol/2.
    const double target = std::max(4.0 * *c / ((k - 1.0) * tol), 2.0);
    const double T = std::pow(target, 1.0 / (k - 1.0)) - 1.0;
    if (T > 2e4)
      fail(ErrorCode::Precondition,
           "fourier transform by quadrature: decay too slow to reach the "
           "requested tolerance on a tractable window");
    lo = -T;
    hi = T;
  }
  if (hi <= lo) return cplx(0.0, 0.0);
  auto integrand = [&f, xi](double x) { return eval(f, x) * cis(-kTwoPi * xi * x); };
  QuadResult r = integrate(integrand, lo, hi, 0.5 * tol);
  return r.value;
}

ExprPtr resolve_transforms(const ExprPtr& f) {
  if (f->kind == Kind::Ft) {
    if (auto cf = analytic_ft(*f->children[0])) return resolve_transforms(*cf);
    return ft(resolve_transforms(f->children[0]));
  }
  if (f->children.empty()) return f;
  bool changed = false;
  std::vector<ExprPtr> kids;
  kids.reserve(f->children.size());
  for (const auto& c : f->children) {
    ExprPtr r = resolve_transforms(c);
    changed = changed || (r != c);
    kids.push_back(std::move(r));
  }
  if (!changed) return f;
  return make_expr(f->kind, f->params, std::move(kids));
}

bool same_structure(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.params != b.params ||
      a.children.size() != b.children.size())
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!same_structure(*a.children[i], *b.children[i])) return false;
  return true;
}

}  // namespace sumkern
