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

#ifndef SUMKERN_EXPR_HPP
#define SUMKERN_EXPR_HPP

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "common.hpp"

namespace sumkern {

// Functions on the line form a closed symbolic grammar: a fixed set of
// primitives under a fixed set of combinators. Keeping the grammar closed is
// what makes supports, decay envelopes, integrability and Fourier transforms
// computable by structural recursion instead of being user assertions.
//
// Primitives
//   indicator(a,b)          chi_[a,b)
//   triangle(c,hw)          max(0, 1-|x-c|/hw)
//   gaussian(s)             exp(-pi (x/s)^2)
//   raised_cosine(a,b)      Hann bump: (1+cos(2 pi (x-c)/w))/2 on [a,b], c=(a+b)/2
//   polynomial_piece(a,b,c0..) sum c_i x^i on [a,b)
//   sinc                    sin(pi x)/(pi x)
//   rational_decay(k)       (1+|x|)^-k
// Combinators
//   translate(x0) f  = f(x-x0)
//   modulate(xi0) f  = exp(2 pi i xi0 x) f(x)
//   dilate(al)    f  = f(al x),  al != 0
//   scale(c)      f  = c f(x),   c complex
//   sum(f1..fn), product(f1..fn)
//   ft(f)            = Fourier transform of f (hat), f integrable
//   wrap(f)          = f(frac(x)), the 1-periodic extension from [0,1)
enum class Kind {
  Indicator,
  Triangle,
  Gaussian,
  RaisedCosine,
  PolynomialPiece,
  Sinc,
  RationalDecay,
  Translate,
  Modulate,
  Dilate,
  Scale,
  Sum,
  Product,
  Ft,
  Wrap,
};

const char* kind_name(Kind k);
std::optional<Kind> kind_from_name(const std::string& name);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// |f(x)| <= c (1+|x|)^-k for all x.
struct Decay {
  double c = 0.0;
  double k = 0.0;
};

// f vanishes outside [lo, hi].
struct Support {
  double lo = 0.0;
  double hi = 0.0;
  double radius() const { return std::max(std::abs(lo), std::abs(hi)); }
};

struct Expr {
  Kind kind;
  std::vector<double> params;
  std::vector<ExprPtr> children;
};

// Validating constructor used by parsers and by all the helpers below.
ExprPtr make_expr(Kind kind, std::vector<double> params,
                  std::vector<ExprPtr> children);

ExprPtr indicator(double a, double b);
ExprPtr triangle(double center, double halfwidth);
ExprPtr gaussian(double sigma);
ExprPtr raised_cosine(double a, double b);
ExprPtr polynomial_piece(double a, double b, std::vector<double> coeffs);
ExprPtr sinc();
ExprPtr rational_decay(double k);
ExprPtr translate(ExprPtr f, double x0);
ExprPtr modulate(ExprPtr f, double xi0);
ExprPtr dilate(ExprPtr f, double alpha);
ExprPtr scale(ExprPtr f, cplx c);
ExprPtr sum(std::vector<ExprPtr> fs);
ExprPtr product(std::vector<ExprPtr> fs);
ExprPtr ft(ExprPtr f);
ExprPtr wrap(ExprPtr f);
inline ExprPtr reflect(ExprPtr f) { return dilate(std::move(f), -1.0); }

// Exact pointwise evaluation. A ft() node without a closed form falls back
// to adaptive quadrature at a tight internal tolerance.
cplx eval(const Expr& f, double x);
inline cplx eval(const ExprPtr& f, double x) { return eval(*f, x); }

// --- structural certificates ------------------------------------------------

// Smallest known interval outside which f vanishes.
std::optional<Support> support_of(const Expr& f);

// Certified decay envelope at the requested exponent k, when derivable.
std::optional<double> decay_coeff_at(const Expr& f, double k);
// Largest exponent (possibly +inf) at which a decay envelope exists.
double max_decay_exponent(const Expr& f);
// Natural certificate: compact support wins, else the best generic envelope.
std::optional<Decay> decay_of(const Expr& f, double preferred_k = 8.0);

// Certified bound on sup |f|; nullopt when boundedness is not derivable.
std::optional<double> sup_bound_of(const Expr& f);

// Certified bound on the L1 norm; nullopt when integrability is not derivable.
std::optional<double> l1_bound_of(const Expr& f);

bool is_even_structural(const Expr& f);
bool is_real_structural(const Expr& f);
bool is_continuous_structural(const Expr& f);

// Closed-form Fourier transform inside the grammar, when one exists.
std::optional<ExprPtr> analytic_ft(const Expr& f);
// Decay envelope of the Fourier transform of f (sharper than recursing into
// the closed form, which loses cancellation between oscillatory pieces).
std::optional<double> ft_decay_coeff_at(const Expr& f, double k);
double ft_max_decay_exponent(const Expr& f);

// Witness F with \hat F = f, when derivable (F need not be integrable; the
// caller checks l1_bound_of on it).
std::optional<ExprPtr> inverse_ft_witness(const ExprPtr& f);

// hat f at one point by adaptive quadrature over the certified window.
cplx ft_by_quadrature(const Expr& f, double xi, double tol);

// Rewrites ft() nodes to their closed forms where those exist, so repeated
// evaluation does not rebuild the transform expression each call.
ExprPtr resolve_transforms(const ExprPtr& f);

bool same_structure(const Expr& a, const Expr& b);

}  // namespace sumkern

#endif
