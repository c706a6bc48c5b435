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

// Batch CLI over the sumkern C API: reads JSON spec files, runs one library
// operation, writes a JSON report (stdout or --out) and optional CSV grid
// data. Exit codes: 0 success, 2 rejected precondition (with the structured
// reason on stdout), 1 parse or I/O errors.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "sumkern.h"

namespace {

struct CliError {
  int exit_code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{1, "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{1, "cannot write '" + path + "'"};
  out << content;
}

std::string take_string(char* s) {
  if (!s) return {};
  std::string out(s);
  sk_string_free(s);
  return out;
}

// Failed sk_* calls become structured CLI failures.
void check(sk_status st) {
  if (st == SK_OK) return;
  const std::string msg = sk_last_error();
  const std::string body = "{\"status\":\"rejected\",\"message\":\"" + [&] {
    std::string esc;
    for (char c : msg) {
      if (c == '"' || c == '\\') esc += '\\';
      if (c == '\n') {
        esc += "\\n";
        continue;
      }
      esc += c;
    }
    return esc;
  }() + "\"}";
  const int code = (st == SK_ERROR_PRECONDITION || st == SK_ERROR_DOMAIN) ? 2 : 1;
  throw CliError{code, body};
}

struct FunctionHandle {
  sk_function* p = nullptr;
  ~FunctionHandle() { sk_function_free(p); }
};
struct SequenceHandle {
  sk_sequence* p = nullptr;
  ~SequenceHandle() { sk_sequence_free(p); }
};
struct MeasureHandle {
  sk_torus_measure* p = nullptr;
  ~MeasureHandle() { sk_torus_measure_free(p); }
};
struct LineMeasureHandle {
  sk_line_measure* p = nullptr;
  ~LineMeasureHandle() { sk_line_measure_free(p); }
};
struct GridFnHandle {
  sk_grid_function* p = nullptr;
  ~GridFnHandle() { sk_grid_function_free(p); }
};

FunctionHandle load_function(const std::string& path) {
  FunctionHandle h;
  check(sk_function_parse(read_file(path).c_str(), &h.p));
  return h;
}
SequenceHandle load_sequence(const std::string& path) {
  SequenceHandle h;
  check(sk_sequence_parse(read_file(path).c_str(), &h.p));
  return h;
}
MeasureHandle load_measure(const std::string& path) {
  MeasureHandle h;
  check(sk_torus_measure_parse(read_file(path).c_str(), &h.p));
  return h;
}

struct Common {
  sk_grid grid = sk_grid_default();
  std::string out_path;   // report JSON destination ('' = stdout)
  std::string csv_path;   // grid CSV destination ('' = none)
  std::uint64_t seed = 42;

  void attach(CLI::App* cmd) {
    cmd->add_option("-L,--window-halfwidth", grid.window_halfwidth,
                    "sampling window halfwidth");
    cmd->add_option("-s,--step", grid.step, "sampling step (window/step integral)");
    cmd->add_option("-N,--lattice-truncation", grid.lattice_truncation,
                    "integer-sum truncation radius");
    cmd->add_option("-t,--tolerance", grid.tolerance, "per-point tolerance");
    cmd->add_option("-o,--out", out_path, "report JSON path (default stdout)");
    cmd->add_option("--csv", csv_path, "grid samples CSV path");
    cmd->add_option("--seed", seed, "seed for estimator test families");
  }

  void emit_report(const std::string& json) const {
    if (out_path.empty())
      std::cout << json << "\n";
    else
      write_file(out_path, json + "\n");
  }
  void emit_csv(sk_grid_function* g) const {
    if (csv_path.empty() || !g) return;
    char* csv = nullptr;
    check(sk_grid_function_csv(g, &csv));
    write_file(csv_path, take_string(csv));
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"summability-kernel toolkit: extend integer multiplier sequences "
               "to the line, test kernel membership, transfer measures"};
  app.require_subcommand(1);

  // ---- extend ----
  auto* c_extend = app.add_subcommand("extend", "sample W_{phi,Lambda} on the window");
  Common g_extend;
  std::string extend_phi, extend_kernel;
  c_extend->add_option("--phi", extend_phi, "sequence spec file")->required();
  c_extend->add_option("--kernel", extend_kernel, "kernel function spec file")->required();
  g_extend.attach(c_extend);

  // ---- delta ----
  auto* c_delta = app.add_subcommand("delta", "periodization sup of the kernel");
  Common g_delta;
  std::string delta_kernel;
  c_delta->add_option("--kernel", delta_kernel, "function spec file")->required();
  g_delta.attach(c_delta);

  // ---- check-kernel ----
  auto* c_check = app.add_subcommand("check-kernel", "membership reports");
  Common g_check;
  std::string check_kernel, check_kernel2, check_space = "s2";
  double check_p = 2.0;
  int check_blocks = 16;
  c_check->add_option("--kernel", check_kernel, "function spec file")->required();
  c_check->add_option("--kernel2", check_kernel2, "second factor (product space)");
  c_check->add_option("--space", check_space, "s2 | s1 | fiber | block | product");
  c_check->add_option("--p", check_p, "exponent for fiber/block/product");
  c_check->add_option("--blocks", check_blocks, "block count for the block criterion");
  g_check.attach(c_check);

  // ---- transfer ----
  auto* c_transfer = app.add_subcommand("transfer", "push a torus measure to the line");
  Common g_transfer;
  std::string tr_measure, tr_kernel, tr_muhat_csv;
  c_transfer->add_option("--measure", tr_measure, "torus measure spec file")->required();
  c_transfer->add_option("--kernel", tr_kernel, "kernel function spec file")->required();
  c_transfer->add_option("--muhat-csv", tr_muhat_csv, "write transform samples CSV");
  g_transfer.attach(c_transfer);

  // ---- atoms ----
  auto* c_atoms = app.add_subcommand("atoms", "symmetric-average atom detection");
  Common g_atoms;
  std::string at_measure, at_kernel, at_muhat;
  std::vector<double> at_probes, at_lambdas;
  double at_step = 1.0 / 64.0, at_eps = 1e-3;
  c_atoms->add_option("--measure", at_measure, "torus measure spec file");
  c_atoms->add_option("--kernel", at_kernel, "kernel function spec file");
  c_atoms->add_option("--muhat", at_muhat, "transform given directly as a function spec");
  c_atoms->add_option("--probe", at_probes, "probe location (repeatable)");
  c_atoms->add_option("--lambda", at_lambdas, "averaging halfwidth schedule");
  c_atoms->add_option("--wiener-step", at_step, "sample spacing for the averages");
  c_atoms->add_option("--eps", at_eps, "convergence tolerance");
  g_atoms.attach(c_atoms);

  // ---- energy ----
  auto* c_energy = app.add_subcommand("energy", "average of |transform|^2");
  Common g_energy;
  std::string en_measure, en_kernel, en_muhat;
  std::vector<double> en_lambdas;
  double en_step = 1.0 / 64.0, en_eps = 1e-3;
  c_energy->add_option("--measure", en_measure, "torus measure spec file");
  c_energy->add_option("--kernel", en_kernel, "kernel function spec file");
  c_energy->add_option("--muhat", en_muhat, "transform given directly as a function spec");
  c_energy->add_option("--lambda", en_lambdas, "averaging halfwidth schedule");
  c_energy->add_option("--wiener-step", en_step, "sample spacing for the averages");
  c_energy->add_option("--eps", en_eps, "convergence tolerance");
  g_energy.attach(c_energy);

  // ---- qrange ----
  auto* c_qrange = app.add_subcommand("qrange", "admissible q interval for l_p extension");
  Common g_qrange;
  std::string qr_p;
  c_qrange->add_option("--p", qr_p, "exponent as an exact rational a/b")->required();
  g_qrange.attach(c_qrange);

  // ---- extend-lp ----
  auto* c_lp = app.add_subcommand("extend-lp", "Abel-regularized l_p extension");
  Common g_lp;
  std::string lp_phi, lp_window, lp_p;
  std::vector<double> lp_r;
  c_lp->add_option("--phi", lp_phi, "sequence spec file")->required();
  c_lp->add_option("--window", lp_window, "window function spec file")->required();
  c_lp->add_option("--p", lp_p, "exponent as an exact rational a/b")->required();
  c_lp->add_option("--r", lp_r, "Abel factor schedule (repeatable)");
  g_lp.attach(c_lp);

  // ---- jodeit ----
  auto* c_jodeit = app.add_subcommand(
      "jodeit", "piecewise extension, or windowed extension with tau bound");
  Common g_jodeit;
  std::string jd_phi, jd_window;
  int jd_order = 0;
  c_jodeit->add_option("--phi", jd_phi, "sequence spec file")->required();
  c_jodeit->add_option("--order", jd_order, "0 piecewise constant, 1 piecewise linear");
  c_jodeit->add_option("--window", jd_window,
                       "window spec file (switches to the tau-bound extension)");
  g_jodeit.attach(c_jodeit);

  // ---- poisson ----
  auto* c_poisson = app.add_subcommand("poisson", "lattice sums of the window transform");
  Common g_poisson;
  std::string ps_window;
  c_poisson->add_option("--window", ps_window, "window function spec file")->required();
  g_poisson.attach(c_poisson);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_extend) {
      auto phi = load_sequence(extend_phi);
      auto ker = load_function(extend_kernel);
      GridFnHandle w;
      check(sk_extend(phi.p, ker.p, &g_extend.grid, &w.p));
      char* csv = nullptr;
      check(sk_grid_function_csv(w.p, &csv));
      const std::string text = take_string(csv);
      if (!g_extend.csv_path.empty())
        write_file(g_extend.csv_path, text);
      else
        std::cout << text;
      if (!g_extend.out_path.empty())
        write_file(g_extend.out_path, "{\"status\":\"ok\"}\n");
    } else if (*c_delta) {
      auto ker = load_function(delta_kernel);
      char* rep = nullptr;
      check(sk_periodization_sup(ker.p, &g_delta.grid, &rep));
      g_delta.emit_report(take_string(rep));
    } else if (*c_check) {
      auto ker = load_function(check_kernel);
      char* rep = nullptr;
      if (check_space == "s2") {
        check(sk_classify_s2(ker.p, &g_check.grid, &rep));
      } else if (check_space == "s1") {
        check(sk_classify_s1(ker.p, &g_check.grid, &rep));
      } else if (check_space == "fiber") {
        check(sk_fiber_norms(ker.p, check_p, &g_check.grid, g_check.seed, &rep));
      } else if (check_space == "block") {
        check(sk_block_sum_criterion(ker.p, check_p, &g_check.grid, check_blocks,
                                     g_check.seed, &rep));
      } else if (check_space == "product") {
        if (check_kernel2.empty())
          throw CliError{1, "--space product needs --kernel2"};
        auto ker2 = load_function(check_kernel2);
        check(sk_product_kernel(ker.p, ker2.p, check_p, &g_check.grid, g_check.seed,
                                &rep, nullptr));
      } else {
        throw CliError{1, "unknown --space '" + check_space + "'"};
      }
      g_check.emit_report(take_string(rep));
    } else if (*c_transfer) {
      auto nu = load_measure(tr_measure);
      auto ker = load_function(tr_kernel);
      LineMeasureHandle mu;
      char* rejection = nullptr;
      sk_status st = sk_transfer(nu.p, ker.p, &g_transfer.grid, &mu.p, &rejection);
      if (st == SK_ERROR_PRECONDITION && rejection) {
        std::cout << take_string(rejection) << "\n";
        std::cerr << "transfer rejected: " << sk_last_error() << "\n";
        return 2;
      }
      check(st);
      char* json = nullptr;
      check(sk_line_measure_serialize(mu.p, &json));
      g_transfer.emit_report(take_string(json));
      if (!tr_muhat_csv.empty()) {
        GridFnHandle samples;
        check(sk_transfer_muhat(nu.p, ker.p, &g_transfer.grid, &samples.p));
        char* csv = nullptr;
        check(sk_grid_function_csv(samples.p, &csv));
        write_file(tr_muhat_csv, take_string(csv));
      }
    } else if (*c_atoms) {
      char* rep = nullptr;
      if (!at_muhat.empty()) {
        if (at_probes.empty())
          throw CliError{1, "atoms with --muhat needs at least one --probe"};
        auto mh = load_function(at_muhat);
        std::string out = "{\"atoms\":[";
        for (std::size_t i = 0; i < at_probes.size(); ++i) {
          check(sk_wiener_atom_function(mh.p, at_probes[i],
                                        at_lambdas.empty() ? nullptr : at_lambdas.data(),
                                        at_lambdas.size(), at_step, at_eps, &rep));
          if (i) out += ',';
          out += take_string(rep);
          rep = nullptr;
        }
        out += "]}";
        g_atoms.emit_report(out);
      } else {
        if (at_measure.empty() || at_kernel.empty())
          throw CliError{1, "atoms needs --measure and --kernel (or --muhat)"};
        auto nu = load_measure(at_measure);
        auto ker = load_function(at_kernel);
        check(sk_wiener_atoms_series(nu.p, ker.p, &g_atoms.grid,
                                     at_probes.empty() ? nullptr : at_probes.data(),
                                     at_probes.size(),
                                     at_lambdas.empty() ? nullptr : at_lambdas.data(),
                                     at_lambdas.size(), at_step, at_eps, g_atoms.seed,
                                     &rep));
        g_atoms.emit_report(take_string(rep));
      }
    } else if (*c_energy) {
      char* rep = nullptr;
      if (!en_muhat.empty()) {
        auto mh = load_function(en_muhat);
        check(sk_wiener_energy_function(mh.p,
                                        en_lambdas.empty() ? nullptr : en_lambdas.data(),
                                        en_lambdas.size(), en_step, en_eps, &rep));
      } else {
        if (en_measure.empty() || en_kernel.empty())
          throw CliError{1, "energy needs --measure and --kernel (or --muhat)"};
        auto nu = load_measure(en_measure);
        auto ker = load_function(en_kernel);
        check(sk_wiener_energy_series(nu.p, ker.p, &g_energy.grid,
                                      en_lambdas.empty() ? nullptr : en_lambdas.data(),
                                      en_lambdas.size(), en_step, en_eps, &rep));
      }
      g_energy.emit_report(take_string(rep));
    } else if (*c_qrange) {
      char* rep = nullptr;
      check(sk_q_range(qr_p.c_str(), &rep));
      const std::string json = take_string(rep);
      // The interval as exact rationals, for the console.
      const std::string key = "\"interval\":\"";
      const auto pos = json.find(key);
      if (pos != std::string::npos) {
        const auto end = json.find('"', pos + key.size());
        std::cout << json.substr(pos + key.size(), end - pos - key.size()) << "\n";
      }
      if (!g_qrange.out_path.empty()) write_file(g_qrange.out_path, json + "\n");
    } else if (*c_lp) {
      auto phi = load_sequence(lp_phi);
      auto win = load_function(lp_window);
      char* rep = nullptr;
      GridFnHandle w;
      check(sk_lp_extend(phi.p, win.p, lp_p.c_str(),
                         lp_r.empty() ? nullptr : lp_r.data(), lp_r.size(), &g_lp.grid,
                         &rep, &w.p));
      g_lp.emit_report(take_string(rep));
      g_lp.emit_csv(w.p);
    } else if (*c_jodeit) {
      auto phi = load_sequence(jd_phi);
      if (jd_window.empty()) {
        GridFnHandle w;
        check(sk_jodeit_piecewise(phi.p, jd_order, &g_jodeit.grid, &w.p));
        char* csv = nullptr;
        check(sk_grid_function_csv(w.p, &csv));
        const std::string text = take_string(csv);
        if (!g_jodeit.csv_path.empty())
          write_file(g_jodeit.csv_path, text);
        else
          std::cout << text;
      } else {
        auto win = load_function(jd_window);
        char* rep = nullptr;
        GridFnHandle w;
        check(sk_jodeit_bound(phi.p, win.p, &g_jodeit.grid, &rep, &w.p));
        g_jodeit.emit_report(take_string(rep));
        g_jodeit.emit_csv(w.p);
      }
    } else if (*c_poisson) {
      auto win = load_function(ps_window);
      char* rep = nullptr;
      check(sk_poisson_constant(win.p, &g_poisson.grid, &rep));
      g_poisson.emit_report(take_string(rep));
    }
  } catch (const CliError& e) {
    if (e.message.rfind("{", 0) == 0)
      std::cout << e.message << "\n";
    else
      std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  }
  return 0;
}
