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

#include <string>

#include "sumkern.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  sk_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("c api: parse, evaluate, serialize, free") {
  sk_function* f = nullptr;
  REQUIRE(sk_function_parse("{\"kind\":\"triangle\",\"params\":[0,1]}", &f) == SK_OK);
  double re = 0, im = 1;
  REQUIRE(sk_eval_function(f, 0.0, &re, &im) == SK_OK);
  CHECK(re == 1.0);
  CHECK(im == 0.0);
  char* json = nullptr;
  REQUIRE(sk_function_serialize(f, &json) == SK_OK);
  CHECK(take(json).find("\"triangle\"") != std::string::npos);
  sk_function_free(f);
}

TEST_CASE("c api: parse errors set status and message") {
  sk_function* f = nullptr;
  CHECK(sk_function_parse("{broken", &f) == SK_ERROR_PARSE);
  CHECK(std::string(sk_last_error()).find("line") != std::string::npos);
  CHECK(sk_function_parse("{\"kind\":\"nope\",\"params\":[]}", &f) == SK_ERROR_PARSE);
}

TEST_CASE("c api: extension series and csv") {
  sk_function* lam = nullptr;
  sk_sequence* phi = nullptr;
  REQUIRE(sk_function_parse("{\"kind\":\"triangle\",\"params\":[0,1]}", &lam) == SK_OK);
  REQUIRE(sk_sequence_parse("{\"entries\":{\"0\":[1,0]},\"support_radius\":0}", &phi) ==
          SK_OK);
  sk_grid grid = sk_grid_default();
  grid.window_halfwidth = 2.0;
  grid.step = 0.5;
  sk_grid_function* w = nullptr;
  REQUIRE(sk_extend(phi, lam, &grid, &w) == SK_OK);
  char* csv = nullptr;
  REQUIRE(sk_grid_function_csv(w, &csv) == SK_OK);
  const std::string text = take(csv);
  CHECK(text.rfind("# tail_bound=0\n", 0) == 0);
  CHECK(text.find("0,1,0\n") != std::string::npos);  // W(0) = 1
  sk_grid_function_free(w);
  sk_sequence_free(phi);
  sk_function_free(lam);
}

TEST_CASE("c api: q range text") {
  char* json = nullptr;
  REQUIRE(sk_q_range("2", &json) == SK_OK);
  CHECK(take(json).find("[1, inf)") != std::string::npos);
  REQUIRE(sk_q_range("4/3", &json) == SK_OK);
  CHECK(take(json).find("[4/3, 4]") != std::string::npos);
  CHECK(sk_q_range("1", &json) == SK_ERROR_DOMAIN);
  CHECK(sk_q_range("zebra", &json) == SK_ERROR_PARSE);
}

TEST_CASE("c api: transfer rejection carries the report") {
  sk_function* lam = nullptr;
  sk_torus_measure* nu = nullptr;
  REQUIRE(sk_function_parse("{\"kind\":\"indicator\",\"params\":[0,1]}", &lam) == SK_OK);
  REQUIRE(sk_torus_measure_parse("{\"atoms\":[[0.0,1.0,0.0]],\"density\":null}", &nu) ==
          SK_OK);
  sk_grid grid = sk_grid_default();
  sk_line_measure* mu = nullptr;
  char* rejection = nullptr;
  CHECK(sk_transfer(nu, lam, &grid, &mu, &rejection) == SK_ERROR_PRECONDITION);
  REQUIRE(rejection != nullptr);
  CHECK(take(rejection).find("\"undecided\"") != std::string::npos);
  sk_torus_measure_free(nu);
  sk_function_free(lam);
}

TEST_CASE("c api: membership and certificates") {
  sk_function* lam = nullptr;
  REQUIRE(sk_function_parse("{\"kind\":\"gaussian\",\"params\":[1]}", &lam) == SK_OK);
  sk_grid grid = sk_grid_default();
  char* rep = nullptr;
  REQUIRE(sk_classify_s2(lam, &grid, &rep) == SK_OK);
  CHECK(take(rep).find("\"holds\"") != std::string::npos);
  rep = nullptr;
  REQUIRE(sk_m2_norm(lam, &grid, &rep) == SK_OK);
  CHECK(take(rep).find("\"value\":1") != std::string::npos);
  sk_function_free(lam);
}

TEST_CASE("c api: full surface lifecycle") {
  sk_grid grid = sk_grid_default();
  grid.window_halfwidth = 2.0;
  grid.step = 0.25;

  sk_function* gauss = nullptr;
  sk_function* window = nullptr;
  sk_sequence* delta = nullptr;
  REQUIRE(sk_function_parse("{\"kind\":\"gaussian\",\"params\":[1]}", &gauss) == SK_OK);
  REQUIRE(sk_function_parse("{\"kind\":\"raised_cosine\",\"params\":[0.25,0.75]}",
                            &window) == SK_OK);
  REQUIRE(sk_sequence_parse("{\"entries\":{\"0\":[1,0]},\"support_radius\":0}",
                            &delta) == SK_OK);

  char* rep = nullptr;
  sk_grid_function* gf = nullptr;
  sk_sequence* seq = nullptr;
  sk_function* fn = nullptr;

  REQUIRE(sk_periodization_sup(gauss, &grid, &rep) == SK_OK);
  CHECK(take(rep).find("\"delta\":") != std::string::npos);
  REQUIRE(sk_periodize(gauss, &grid, &gf) == SK_OK);
  sk_grid_function_free(gf);
  gf = nullptr;
  REQUIRE(sk_fourier_transform(gauss, &grid, &gf) == SK_OK);
  sk_grid_function_free(gf);
  gf = nullptr;

  REQUIRE(sk_fejer_regularize(delta, 4, &seq) == SK_OK);
  char* sjson = nullptr;
  REQUIRE(sk_sequence_serialize(seq, &sjson) == SK_OK);
  CHECK(take(sjson).find("\"support_radius\"") != std::string::npos);
  sk_sequence_free(seq);
  seq = nullptr;

  REQUIRE(sk_poisson_constant(window, &grid, &rep) == SK_OK);
  CHECK(take(rep).find("max_deviation") != std::string::npos);
  REQUIRE(sk_mp_norm_lower_bound(gauss, 1.5, &grid, 42, &rep) == SK_OK);
  CHECK(take(rep).find("lower_bound") != std::string::npos);
  REQUIRE(sk_fiber_norms(gauss, 2.0, &grid, 42, &rep) == SK_OK);
  CHECK(take(rep).find("fiber_sup") != std::string::npos);
  REQUIRE(sk_block_sum_criterion(gauss, 2.0, &grid, 4, 42, &rep) == SK_OK);
  CHECK(take(rep).find("block_sum") != std::string::npos);
  sk_function* prod = nullptr;
  REQUIRE(sk_product_kernel(gauss, gauss, 2.0, &grid, 42, &rep, &prod) == SK_OK);
  CHECK(take(rep).find("\"holds\"") != std::string::npos);
  sk_function_free(prod);

  REQUIRE(sk_jodeit_piecewise(delta, 1, &grid, &gf) == SK_OK);
  sk_grid_function_free(gf);
  gf = nullptr;
  REQUIRE(sk_jodeit_bound(delta, window, &grid, &rep, &gf) == SK_OK);
  CHECK(take(rep).find("\"tau\"") != std::string::npos);
  sk_grid_function_free(gf);
  gf = nullptr;
  REQUIRE(sk_lp_extend(delta, window, "3/2", nullptr, 0, &grid, &rep, &gf) == SK_OK);
  CHECK(take(rep).find("q_range") != std::string::npos);
  sk_grid_function_free(gf);
  gf = nullptr;
  REQUIRE(sk_compact_support_lp(delta, window, "3/2", &grid, &rep, &gf) == SK_OK);
  CHECK(take(rep).find("upper_bound") != std::string::npos);
  sk_grid_function_free(gf);
  gf = nullptr;

  sk_sequence* conv = nullptr;
  REQUIRE(sk_convolve_sequences(delta, delta, "3/2", &conv, &rep) == SK_OK);
  CHECK(take(rep).find("\"bound\"") != std::string::npos);
  sk_sequence_free(conv);

  REQUIRE(sk_support_normalize(gauss, 1, &fn) == SK_ERROR_PRECONDITION);
  sk_function* tri = nullptr;
  REQUIRE(sk_function_parse("{\"kind\":\"triangle\",\"params\":[0,1]}", &tri) == SK_OK);
  REQUIRE(sk_support_normalize(tri, 1, &fn) == SK_OK);
  sk_function_free(fn);
  fn = nullptr;
  REQUIRE(sk_rescale(tri, 2, &fn) == SK_OK);
  sk_function_free(fn);
  fn = nullptr;
  REQUIRE(sk_radial_majorant_check(gauss, gauss, &grid, &rep) == SK_OK);
  CHECK(take(rep).find("\"all_pass\":true") != std::string::npos);

  const double lambdas[2] = {64.0, 256.0};
  REQUIRE(sk_wiener_atom_function(gauss, 0.0, lambdas, 2, 1.0 / 64.0, 1e-3, &rep) ==
          SK_OK);
  CHECK(take(rep).find("\"estimate\"") != std::string::npos);
  REQUIRE(sk_wiener_energy_function(gauss, lambdas, 2, 1.0 / 64.0, 1e-3, &rep) == SK_OK);
  CHECK(take(rep).find("per_lambda") != std::string::npos);

  sk_torus_measure* nu = nullptr;
  REQUIRE(sk_torus_measure_parse("{\"atoms\":[[0.0,1.0,0.0]],\"density\":null}", &nu) ==
          SK_OK);
  sk_function* hat_rc = nullptr;
  REQUIRE(sk_function_parse(
              "{\"kind\":\"ft\",\"children\":[{\"kind\":\"raised_cosine\","
              "\"params\":[-1,1]}]}",
              &hat_rc) == SK_OK);
  REQUIRE(sk_wiener_atoms_series(nu, hat_rc, &grid, nullptr, 0, lambdas, 2, 1.0 / 64.0,
                                 1e-3, 42, &rep) == SK_OK);
  CHECK(take(rep).find("\"atoms\"") != std::string::npos);
  REQUIRE(sk_wiener_energy_series(nu, hat_rc, &grid, lambdas, 2, 1.0 / 64.0, 1e-3,
                                  &rep) == SK_OK);
  CHECK(take(rep).find("\"estimate\"") != std::string::npos);
  sk_grid_function* muhat = nullptr;
  REQUIRE(sk_transfer_muhat(nu, hat_rc, &grid, &muhat) == SK_OK);
  sk_grid_function_free(muhat);

  sk_torus_measure_free(nu);
  sk_function_free(hat_rc);
  sk_function_free(tri);
  sk_sequence_free(delta);
  sk_function_free(window);
  sk_function_free(gauss);
}
