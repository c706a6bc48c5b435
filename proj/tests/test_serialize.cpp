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

#include "serialize.hpp"

using namespace sumkern;

namespace {

// Random expression trees over the full grammar, bounded depth.
ExprPtr random_expr(std::mt19937_64& rng, int depth) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_int_distribution<int> prim(0, 6);
  std::uniform_int_distribution<int> comb(0, 7);
  if (depth <= 0 || prim(rng) < 3) {
    switch (prim(rng)) {
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
        return raised_cosine(a, a + std::abs(u(rng)) + 0.1);
      }
      case 4: {
        double a = u(rng);
        return polynomial_piece(a, a + 1.0, {u(rng), u(rng), u(rng)});
      }
      case 5:
        return sinc();
      default:
        return rational_decay(1.0 + std::abs(u(rng)));
    }
  }
  switch (comb(rng)) {
    case 0:
      return translate(random_expr(rng, depth - 1), u(rng));
    case 1:
      return modulate(random_expr(rng, depth - 1), u(rng));
    case 2:
      return dilate(random_expr(rng, depth - 1), u(rng) < 0 ? u(rng) - 0.2 : u(rng) + 0.2);
    case 3:
      return scale(random_expr(rng, depth - 1), cplx(u(rng), u(rng)));
    case 4:
      return sum({random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    case 5:
      return product({random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    case 6:
      return ft(gaussian(std::abs(u(rng)) + 0.2));
    default:
      return wrap(random_expr(rng, depth - 1));
  }
}

SequenceSpec random_sequence(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> mode(0, 3);
  switch (mode(rng)) {
    case 0: {
      std::map<long long, cplx> entries;
      std::uniform_int_distribution<long long> idx(-6, 6);
      for (int i = 0; i < 5; ++i) entries[idx(rng)] = cplx(u(rng), u(rng));
      return SequenceSpec::finite(std::move(entries));
    }
    case 1:
      return SequenceSpec::closed(
          {SequenceSpec::Form::Geometric, u(rng), 0.5 * std::abs(u(rng))});
    case 2:
      return SequenceSpec::closed({SequenceSpec::Form::InverseSquare, u(rng), 0.0},
                                  0.5 + 0.5 * std::abs(u(rng)));
    default:
      return SequenceSpec::closed({SequenceSpec::Form::Alternating, u(rng), 0.0});
  }
}

TorusMeasure random_measure(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  TorusMeasure m;
  std::uniform_int_distribution<int> n_atoms(0, 4);
  const int k = n_atoms(rng);
  for (int i = 0; i < k; ++i)
    m.atoms.push_back({u(rng) * 0.999, cplx(u(rng) - 0.5, u(rng) - 0.5)});
  if (u(rng) < 0.5) m.density = random_expr(rng, 1);
  m.normalize();
  return m;
}

bool sequences_equal(const SequenceSpec& a, const SequenceSpec& b) {
  if (a.entries != b.entries) return false;
  if (a.support_radius != b.support_radius) return false;
  if (a.damp != b.damp) return false;
  if (a.closed_form.has_value() != b.closed_form.has_value()) return false;
  if (a.closed_form) {
    if (a.closed_form->form != b.closed_form->form) return false;
    if (a.closed_form->amplitude != b.closed_form->amplitude) return false;
    if (a.closed_form->form == SequenceSpec::Form::Geometric &&
        a.closed_form->ratio != b.closed_form->ratio)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("documented schema examples parse") {
  ExprPtr tri = parse_function_spec(R"({"kind":"triangle","params":[0,1]})");
  CHECK(tri->kind == Kind::Triangle);
  CHECK(eval(tri, 0.0).real() == 1.0);

  TorusMeasure d0 = parse_torus_measure(R"({"atoms":[[0.0,1.0,0.0]],"density":null})");
  REQUIRE(d0.atoms.size() == 1);
  CHECK(d0.atoms[0].x == 0.0);
  CHECK(d0.atoms[0].weight == cplx(1, 0));

  SequenceSpec delta = parse_sequence_spec(R"({"entries":{"0":[1,0]},"support_radius":0})");
  CHECK(delta.eval(0) == cplx(1, 0));
  CHECK(delta.eval(1) == cplx(0, 0));
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_function_spec("{\n  \"kind\": \"triangle\",\n  params: [0,1]\n}");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("schema violations carry a json path") {
  try {
    parse_function_spec(R"({"kind":"sum","children":[{"kind":"nope","params":[]}]})");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("$.children[0]") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_function_spec(R"({"kind":"triangle","params":[0]})"), Error);
  CHECK_THROWS_AS(parse_function_spec(R"({"kind":"triangle","params":[0,1],"x":3})"),
                  Error);
  CHECK_THROWS_AS(parse_sequence_spec(R"({"entries":{"a":[1,0]}})"), Error);
  CHECK_THROWS_AS(parse_torus_measure(R"({"atoms":[[2.0,1.0]]})"), Error);
}

TEST_CASE("round trip on a generated corpus") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 40; ++i) {
    ExprPtr f = random_expr(rng, 3);
    const std::string text = serialize_function(*f);
    ExprPtr back = parse_function_spec(text);
    CHECK(same_structure(*f, *back));
    CHECK(serialize_function(*back) == text);  // fixed point
  }
  for (int i = 0; i < 30; ++i) {
    SequenceSpec s = random_sequence(rng);
    SequenceSpec back = parse_sequence_spec(serialize_sequence(s));
    CHECK(sequences_equal(s, back));
  }
  for (int i = 0; i < 30; ++i) {
    TorusMeasure m = random_measure(rng);
    TorusMeasure back = parse_torus_measure(serialize_torus_measure(m));
    REQUIRE(back.atoms.size() == m.atoms.size());
    for (std::size_t j = 0; j < m.atoms.size(); ++j) {
      CHECK(back.atoms[j].x == m.atoms[j].x);
      CHECK(back.atoms[j].weight == m.atoms[j].weight);
    }
    CHECK(m.density.operator bool() == back.density.operator bool());
    if (m.density) CHECK(same_structure(*m.density, *back.density));
  }
}

TEST_CASE("serialization is deterministic") {
  std::mt19937_64 rng(99);
  ExprPtr f = random_expr(rng, 3);
  CHECK(serialize_function(*f) == serialize_function(*f));
  CHECK(format_double(1.0 / 3.0) == format_double(1.0 / 3.0));
  CHECK(format_double(1.0) == "1");
}

TEST_CASE("grid csv format") {
  GridConfig g;
  g.window_halfwidth = 1.0;
  g.step = 0.5;
  GridFunction gf = GridFunction::on_window(g);
  gf.values[2] = cplx(0.25, -1.0);
  const std::string csv = gf.to_csv();
  CHECK(csv.rfind("# tail_bound=0\n", 0) == 0);
  CHECK(csv.find("xi,re,im\n") != std::string::npos);
  CHECK(csv.find("0,0.25,-1\n") != std::string::npos);
}
