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

#ifndef SUMKERN_SERIALIZE_HPP
#define SUMKERN_SERIALIZE_HPP

#include <string>

#include "extension.hpp"
#include "expr.hpp"
#include "grid.hpp"
#include "lattice.hpp"
#include "measure.hpp"
#include "membership.hpp"
#include "norms.hpp"
#include "sequence.hpp"
#include "wiener.hpp"

namespace sumkern {

// Parsers reject malformed inputs with positioned diagnostics: line/column
// for syntax errors, a JSON path for schema violations. Writers emit
// deterministic compact JSON with every number at 17 significant digits.

ExprPtr parse_function_spec(const std::string& text);
SequenceSpec parse_sequence_spec(const std::string& text);
TorusMeasure parse_torus_measure(const std::string& text);

std::string serialize_function(const Expr& f);
std::string serialize_sequence(const SequenceSpec& s);
std::string serialize_torus_measure(const TorusMeasure& m);
std::string serialize_line_measure(const LineMeasure& m);

std::string norm_certificate_json(const NormCertificate& c);
std::string membership_report_json(const MembershipReport& r);
std::string qrange_json(const QRange& q);
std::string extension_result_json(const ExtensionResult& r);
std::string periodization_json(const PeriodizationResult& r);
std::string poisson_json(const PoissonResult& r);
std::string majorant_json(const MajorantReport& r);
std::string convolution_json(const ConvolutionReport& r);
std::string wiener_atom_json(double y, const WienerAverager::AtomEstimate& e,
                             const std::vector<double>& lambdas);
std::string wiener_energy_json(const WienerAverager::EnergyEstimate& e,
                               const std::vector<double>& lambdas);

}  // namespace sumkern

#endif
