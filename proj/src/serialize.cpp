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

#include "serialize.hpp"

#include <json.hpp>

namespace sumkern {

namespace {

using njson = nlohmann::json;

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string jstr(const std::string& s) { return "\"" + json_escape(s) + "\""; }
std::string jnum(double v) { return format_double(v); }
std::string jbool(bool b) { return b ? "true" : "false"; }

// line/column of a byte offset, for syntax diagnostics.
std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

njson parse_text(const std::string& text, const char* what) {
  try {
    return njson::parse(text);
  } catch (const njson::parse_error& e) {
    auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    fail(ErrorCode::Parse, std::string(what) + ": line " + std::to_string(line) +
                               " column " + std::to_string(col) + ": " + e.what());
  }
}

[[noreturn]] void schema_fail(const std::string& path, const std::string& msg) {
  fail(ErrorCode::Parse, path + ": " + msg);
}

double need_number(const njson& j, const std::string& path) {
  if (!j.is_number()) schema_fail(path, "expected a number");
  return j.get<double>();
}

cplx need_complex(const njson& j, const std::string& path) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return cplx(j[0].get<double>(), j[1].get<double>());
  schema_fail(path, "expected a number or [re, im] pair");
}

ExprPtr parse_function_node(const njson& j, const std::string& path) {
  if (!j.is_object()) schema_fail(path, "expected an object with a \"kind\" field");
  if (!j.contains("kind") || !j["kind"].is_string())
    schema_fail(path, "missing string field \"kind\"");
  const std::string kname = j["kind"].get<std::string>();
  auto kind = kind_from_name(kname);
  if (!kind) schema_fail(path + ".kind", "unknown kind '" + kname + "'");
  for (const auto& [key, val] : j.items()) {
    if (key != "kind" && key != "params" && key != "children")
      schema_fail(path, "unexpected field \"" + key + "\"");
  }
  std::vector<double> params;
  if (j.contains("params")) {
    if (!j["params"].is_array()) schema_fail(path + ".params", "expected an array");
    for (std::size_t i = 0; i < j["params"].size(); ++i)
      params.push_back(
          need_number(j["params"][i], path + ".params[" + std::to_string(i) + "]"));
  }
  std::vector<ExprPtr> children;
  if (j.contains("children")) {
    if (!j["children"].is_array()) schema_fail(path + ".children", "expected an array");
    for (std::size_t i = 0; i < j["children"].size(); ++i)
      children.push_back(parse_function_node(
          j["children"][i], path + ".children[" + std::to_string(i) + "]"));
  }
  try {
    return make_expr(*kind, std::move(params), std::move(children));
  } catch (const Error& e) {
    schema_fail(path, e.what());
  }
}

}  // namespace

ExprPtr parse_function_spec(const std::string& text) {
  return parse_function_node(parse_text(text, "function spec"), "$");
}

SequenceSpec parse_sequence_spec(const std::string& text) {
  const njson j = parse_text(text, "sequence spec");
  const std::string path = "$";
  if (!j.is_object()) schema_fail(path, "expected an object");
  for (const auto& [key, val] : j.items()) {
    if (key != "entries" && key != "support_radius" && key != "closed_form" &&
        key != "damp")
      schema_fail(path, "unexpected field \"" + key + "\"");
  }
  SequenceSpec s;
  if (j.contains("damp")) s.damp = need_number(j["damp"], path + ".damp");
  if (j.contains("closed_form") && !j["closed_form"].is_null()) {
    const njson& cf = j["closed_form"];
    const std::string cfp = path + ".closed_form";
    if (!cf.is_object() || !cf.contains("kind") || !cf["kind"].is_string())
      schema_fail(cfp, "expected an object with a string \"kind\"");
    const std::string kind = cf["kind"].get<std::string>();
    SequenceSpec::ClosedForm form;
    if (kind == "geometric")
      form.form = SequenceSpec::Form::Geometric;
    else if (kind == "inverse_square")
      form.form = SequenceSpec::Form::InverseSquare;
    else if (kind == "alternating")
      form.form = SequenceSpec::Form::Alternating;
    else if (kind == "constant")
      form.form = SequenceSpec::Form::Constant;
    else
      schema_fail(cfp + ".kind", "unknown closed form '" + kind + "'");
    form.amplitude =
        cf.contains("amplitude") ? need_number(cf["amplitude"], cfp + ".amplitude") : 1.0;
    if (cf.contains("ratio")) form.ratio = need_number(cf["ratio"], cfp + ".ratio");
    s.closed_form = form;
  }
  if (j.contains("entries") && !j["entries"].is_null()) {
    if (!j["entries"].is_object()) schema_fail(path + ".entries", "expected an object");
    for (const auto& [key, val] : j["entries"].items()) {
      long long n = 0;
      try {
        std::size_t used = 0;
        n = std::stoll(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        schema_fail(path + ".entries", "key '" + key + "' is not an integer index");
      }
      s.entries[n] = need_complex(val, path + ".entries[\"" + key + "\"]");
    }
  }
  if (j.contains("support_radius") && !j["support_radius"].is_null()) {
    const double r = need_number(j["support_radius"], path + ".support_radius");
    if (r < 0 || r != std::floor(r))
      schema_fail(path + ".support_radius", "expected a nonnegative integer");
    s.support_radius = static_cast<long long>(r);
  }
  if (!s.closed_form && !s.support_radius) {
    // Entries-only input: infer the radius from the data.
    long long radius = 0;
    for (const auto& [n, v] : s.entries)
      if (v != cplx(0.0, 0.0)) radius = std::max(radius, std::abs(n));
    s.support_radius = radius;
  }
  try {
    s.validate();
  } catch (const Error& e) {
    schema_fail(path, e.what());
  }
  return s;
}

TorusMeasure parse_torus_measure(const std::string& text) {
  const njson j = parse_text(text, "measure spec");
  const std::string path = "$";
  if (!j.is_object()) schema_fail(path, "expected an object");
  for (const auto& [key, val] : j.items()) {
    if (key != "atoms" && key != "density")
      schema_fail(path, "unexpected field \"" + key + "\"");
  }
  TorusMeasure m;
  if (j.contains("atoms") && !j["atoms"].is_null()) {
    if (!j["atoms"].is_array()) schema_fail(path + ".atoms", "expected an array");
    for (std::size_t i = 0; i < j["atoms"].size(); ++i) {
      const njson& a = j["atoms"][i];
      const std::string ap = path + ".atoms[" + std::to_string(i) + "]";
      if (!a.is_array() || a.size() < 2 || a.size() > 3)
        schema_fail(ap, "expected [x, re] or [x, re, im]");
      TorusMeasure::Atom atom;
      atom.x = need_number(a[0], ap + "[0]");
      atom.weight = cplx(need_number(a[1], ap + "[1]"),
                         a.size() == 3 ? need_number(a[2], ap + "[2]") : 0.0);
      m.atoms.push_back(atom);
    }
  }
  if (j.contains("density") && !j["density"].is_null())
    m.density = parse_function_node(j["density"], path + ".density");
  try {
    m.normalize();
  } catch (const Error& e) {
    schema_fail(path + ".atoms", e.what());
  }
  return m;
}

std::string serialize_function(const Expr& f) {
  std::string out = "{\"kind\":" + jstr(kind_name(f.kind));
  out += ",\"params\":[";
  for (std::size_t i = 0; i < f.params.size(); ++i) {
    if (i) out += ',';
    out += jnum(f.params[i]);
  }
  out += ']';
  if (!f.children.empty()) {
    out += ",\"children\":[";
    for (std::size_t i = 0; i < f.children.size(); ++i) {
      if (i) out += ',';
      out += serialize_function(*f.children[i]);
    }
    out += ']';
  }
  out += '}';
  return out;
}

std::string serialize_sequence(const SequenceSpec& s) {
  std::string out = "{\"entries\":{";
  bool first = true;
  for (const auto& [n, v] : s.entries) {
    if (!first) out += ',';
    first = false;
    out += jstr(std::to_string(n)) + ":[" + jnum(v.real()) + "," + jnum(v.imag()) + "]";
  }
  out += '}';
  if (s.support_radius)
    out += ",\"support_radius\":" + std::to_string(*s.support_radius);
  if (s.closed_form) {
    const char* kind = nullptr;
    switch (s.closed_form->form) {
      case SequenceSpec::Form::Geometric:
        kind = "geometric";
        break;
      case SequenceSpec::Form::InverseSquare:
        kind = "inverse_square";
        break;
      case SequenceSpec::Form::Alternating:
        kind = "alternating";
        break;
      case SequenceSpec::Form::Constant:
        kind = "constant";
        break;
    }
    out += ",\"closed_form\":{\"kind\":" + jstr(kind) +
           ",\"amplitude\":" + jnum(s.closed_form->amplitude);
    if (s.closed_form->form == SequenceSpec::Form::Geometric)
      out += ",\"ratio\":" + jnum(s.closed_form->ratio);
    out += '}';
  }
  if (s.damp != 1.0) out += ",\"damp\":" + jnum(s.damp);
  out += '}';
  return out;
}

std::string serialize_torus_measure(const TorusMeasure& m) {
  std::string out = "{\"atoms\":[";
  for (std::size_t i = 0; i < m.atoms.size(); ++i) {
    if (i) out += ',';
    out += '[' + jnum(m.atoms[i].x) + ',' + jnum(m.atoms[i].weight.real()) + ',' +
           jnum(m.atoms[i].weight.imag()) + ']';
  }
  out += "],\"density\":";
  out += m.density ? serialize_function(*m.density) : "null";
  out += '}';
  return out;
}

std::string serialize_line_measure(const LineMeasure& m) {
  std::string out = "{\"atoms\":[";
  for (std::size_t i = 0; i < m.atoms.size(); ++i) {
    if (i) out += ',';
    out += "{\"y\":" + jnum(m.atoms[i].y) + ",\"re\":" + jnum(m.atoms[i].weight.real()) +
           ",\"im\":" + jnum(m.atoms[i].weight.imag()) + "}";
  }
  out += "],\"density\":";
  out += m.density ? serialize_function(*m.density) : "null";
  out += ",\"tail_bound\":" + jnum(m.tail_bound) + "}";
  return out;
}

std::string norm_certificate_json(const NormCertificate& c) {
  return "{\"p\":" + jnum(c.p) + ",\"value\":" + jnum(c.value) +
         ",\"kind\":" + jstr(certificate_kind_name(c.kind)) +
         ",\"provenance\":" + jstr(c.provenance) + "}";
}

std::string membership_report_json(const MembershipReport& r) {
  std::string out = "{\"space\":" + jstr(r.space) +
                    ",\"verdict\":" + jstr(verdict_name(r.verdict)) + ",\"witness\":{";
  for (std::size_t i = 0; i < r.witness.size(); ++i) {
    if (i) out += ',';
    out += jstr(r.witness[i].first) + ":" + jnum(r.witness[i].second);
  }
  out += '}';
  if (!r.reason.empty()) out += ",\"reason\":" + jstr(r.reason);
  if (!r.sub.empty()) {
    out += ",\"factors\":[";
    for (std::size_t i = 0; i < r.sub.size(); ++i) {
      if (i) out += ',';
      out += membership_report_json(r.sub[i]);
    }
    out += ']';
  }
  out += '}';
  return out;
}

std::string qrange_json(const QRange& q) {
  std::string out = "{\"p\":" + jstr(q.p.str()) + ",\"q_lo\":" + jstr(q.q_lo.str()) +
                    ",\"q_hi\":";
  out += q.q_hi ? jstr(q.q_hi->str()) : std::string("null");
  out += ",\"interval\":" + jstr(q.str()) + "}";
  return out;
}

std::string extension_result_json(const ExtensionResult& r) {
  std::string out = "{\"bound\":" + norm_certificate_json(r.bound);
  out += ",\"q_range\":";
  out += r.range ? qrange_json(*r.range) : std::string("null");
  out += ",\"abel\":[";
  for (std::size_t i = 0; i < r.abel.size(); ++i) {
    if (i) out += ',';
    out += '[' + jnum(r.abel[i].first) + ',' + jnum(r.abel[i].second) + ']';
  }
  out += "],\"trace\":{";
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    if (i) out += ',';
    out += jstr(r.trace[i].first) + ":" + jstr(r.trace[i].second);
  }
  out += "},\"w_tail_bound\":" + jnum(r.w.tail_bound) + "}";
  return out;
}

std::string periodization_json(const PeriodizationResult& r) {
  return "{\"delta\":" + jnum(r.delta) + ",\"tail\":" + jnum(r.tail_bound) + "}";
}

std::string poisson_json(const PoissonResult& r) {
  return "{\"constant_estimate\":" + jnum(r.constant_estimate) +
         ",\"max_deviation\":" + jnum(r.max_deviation) +
         ",\"tail_bound\":" + jnum(r.tail_bound) + "}";
}

std::string majorant_json(const MajorantReport& r) {
  return "{\"radial\":" + jbool(r.radial) + ",\"integrable\":" + jbool(r.integrable) +
         ",\"dominates\":" + jbool(r.dominates) +
         ",\"majorant_delta_finite\":" + jbool(r.majorant_delta_finite) +
         ",\"l1_value\":" + jnum(r.l1_value) + ",\"delta_value\":" + jnum(r.delta_value) +
         ",\"all_pass\":" + jbool(r.all_pass()) + "}";
}

std::string convolution_json(const ConvolutionReport& r) {
  return "{\"a_norm\":" + norm_certificate_json(r.a_norm) +
         ",\"b_norm\":" + norm_certificate_json(r.b_norm) +
         ",\"bound\":" + jnum(r.bound) + ",\"q_range\":" + qrange_json(r.range) +
         ",\"tail\":" + jnum(r.tail) + "}";
}

std::string wiener_atom_json(double y, const WienerAverager::AtomEstimate& e,
                             const std::vector<double>& lambdas) {
  std::string out = "{\"y\":" + jnum(y) + ",\"estimate\":[" + jnum(e.value.real()) + ',' +
                    jnum(e.value.imag()) + "],\"converged\":" + jbool(e.converged) +
                    ",\"per_lambda\":[";
  for (std::size_t i = 0; i < e.per_lambda.size(); ++i) {
    if (i) out += ',';
    out += '[' + jnum(lambdas[i]) + ',' + jnum(e.per_lambda[i].real()) + ',' +
           jnum(e.per_lambda[i].imag()) + ']';
  }
  out += "]}";
  return out;
}

std::string wiener_energy_json(const WienerAverager::EnergyEstimate& e,
                               const std::vector<double>& lambdas) {
  std::string out = "{\"estimate\":" + jnum(e.value) +
                    ",\"converged\":" + jbool(e.converged) + ",\"per_lambda\":[";
  for (std::size_t i = 0; i < e.per_lambda.size(); ++i) {
    if (i) out += ',';
    out += '[' + jnum(lambdas[i]) + ',' + jnum(e.per_lambda[i]) + ']';
  }
  out += "]}";
  return out;
}

}  // namespace sumkern
