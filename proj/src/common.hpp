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

#ifndef SUMKERN_COMMON_HPP
#define SUMKERN_COMMON_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace sumkern {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

enum class ErrorCode {
  Parse = 1,         // malformed input text or schema violation
  Precondition = 2,  // operation rejected its input (with a structured reason)
  Domain = 3,        // parameter outside the operation's domain
  Internal = 4,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

// Fractional part in [0,1); the torus is identified with [0,1).
inline double frac(double x) {
  double f = x - std::floor(x);
  if (f >= 1.0) f = 0.0;
  return f;
}

inline cplx cis(double t) { return cplx(std::cos(t), std::sin(t)); }

}  // namespace sumkern

#endif
