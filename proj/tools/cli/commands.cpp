// Copyright 2026 The Symphoton Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <numeric>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "symphoton/errors.hpp"
#include "symphoton/multiport.hpp"
#include "symphoton/oracle.hpp"
#include "symphoton/schemes.hpp"
#include "symphoton/slocc.hpp"

namespace symphoton::cli {

using nlohmann::json;

namespace {

constexpr double kAcceptTol = 1e-9;
constexpr double kRenormalizeTol = 1e-6;
constexpr double kIdentityTol = 1e-9;
constexpr double kOracleTol = 1e-10;

// ---------------------------------------------------------------- encoding

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json complex_list(const std::vector<Complex>& zs) {
  json out = json::array();
  for (const auto& z : zs) out.push_back(complex_json(z));
  return out;
}

json params_json(std::span<const PolarizationAmplitude> params) {
  json out = json::array();
  for (const auto& p : params) {
    out.push_back({{"alpha", complex_json(p.alpha())}, {"beta", complex_json(p.beta())}});
  }
  return out;
}

Complex parse_complex(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im") || !j["re"].is_number() ||
      !j["im"].is_number()) {
    throw InputError(where + ": expected {\"re\": number, \"im\": number}");
  }
  return {j["re"].get<double>(), j["im"].get<double>()};
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// ---------------------------------------------------------------- rendering

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_table(const json& v, std::ostream& out, const std::string& indent) {
  for (const auto& [key, value] : v.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      render_table(value, out, indent + "  ");
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << indent << key << ":\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        out << indent << "  [" << i << "]\n";
        render_table(value[i], out, indent + "    ");
      }
    } else {
      out << indent << key << ": " << scalar_text(value) << "\n";
    }
  }
}

void render_rates_table(const json& v, std::ostream& out) {
  out << "N = " << v["N"].dump() << ", norm2 = " << v["normalization_squared"].dump() << "\n";
  out << std::left << std::setw(8) << "scheme" << std::setw(20) << "source_factor"
      << std::setw(20) << "p_input" << std::setw(20) << "p_output" << "rate\n";
  for (const char* s : {"sps", "ncl", "cl"}) {
    const auto& row = v["schemes"][s];
    out << std::setw(8) << s << std::setw(20) << row["source_factor"].dump() << std::setw(20)
        << row["p_input"].dump() << std::setw(20) << row["p_output"].dump()
        << row["rate"].dump() << "\n";
  }
  out << "R_ncl/R_SPS = " << v["ratios"]["ncl_over_sps"].dump()
      << ", R_cl/R_ncl = " << v["ratios"]["cl_over_ncl"].dump() << "\n";
  if (v.contains("notes")) {
    for (const auto& n : v["notes"]) out << "note: " << n.get<std::string>() << "\n";
  }
}

// ---------------------------------------------------------------- context

enum class Format { Json, Table };

struct Options {
  double tol_root;
  double tol_cluster;
  std::uint64_t seed = 20260101;
  int max_n = 8;
  int max_n_pair = 4;
  Format format = Format::Json;
};

struct Context {
  Options opt;
  std::istream& in;
  std::ostream& out;
};

json read_document(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open input file '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

void check_photon_guard(int photons, int limit, const char* what) {
  if (photons < 1) throw InputError("N must be at least 1");
  if (photons > limit) {
    throw InputError(std::string(what) + " is limited to N <= " + std::to_string(limit) +
                     " (raise --max-n to override), got N = " + std::to_string(photons));
  }
}

void emit(const Context& ctx, const json& body, const std::function<void(const json&)>& table) {
  const json r = rounded(body);
  if (ctx.opt.format == Format::Table) {
    if (table) {
      table(r);
    } else {
      render_table(r, ctx.out, "");
    }
  } else {
    ctx.out << r.dump(2) << "\n";
  }
}

json class_json(const ClassLabel& label) {
  return {{"degeneracy_configuration", label.configuration.multiplicities()},
          {"diversity_degree", label.configuration.diversity_degree()},
          {"class", label.name}};
}

json warnings_json(std::vector<std::string> w) { return json(std::move(w)); }

std::vector<PolarizationAmplitude> random_params(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<PolarizationAmplitude> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(PolarizationAmplitude::normalized({g(rng), g(rng)}, {g(rng), g(rng)}));
  }
  return out;
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double d = 0.0;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Complex x = i < a.size() ? a[i] : Complex{};
    const Complex y = i < b.size() ? b[i] : Complex{};
    d = std::max(d, std::abs(x - y));
  }
  return d;
}

// Largest amplitude deviation after removing the global phase of `got`
// relative to `want`.
double phase_aligned_deviation(const std::vector<Complex>& got, const std::vector<Complex>& want) {
  Complex ip{};
  for (std::size_t i = 0; i < std::min(got.size(), want.size()); ++i) {
    ip += std::conj(got[i]) * want[i];
  }
  const Complex phase = std::abs(ip) > 0.0 ? ip / std::abs(ip) : Complex{1.0};
  std::vector<Complex> aligned(got);
  for (auto& a : aligned) a *= phase;
  return max_abs_diff(aligned, want);
}

double fock_deviation(const FockVector& a, const FockVector& b) {
  double d = 0.0;
  for (const auto& [s, amp] : a.terms()) d = std::max(d, std::abs(amp - b.amplitude(s)));
  for (const auto& [s, amp] : b.terms()) d = std::max(d, std::abs(amp - a.amplitude(s)));
  return d;
}

// ---------------------------------------------------------------- commands

int cmd_synthesize(const Context& ctx, const std::string& input) {
  const auto spec = parse_state_spec(read_document(input, ctx.in));
  if (!spec.coefficients) {
    throw InputError("synthesize expects a document with \"dicke_coefficients\"");
  }
  check_photon_guard(spec.photons(), ctx.opt.max_n, "synthesize");
  const auto target = spec.coefficients->unit();
  const auto syn = synthesize(target, 1e-9, ctx.opt.tol_root);
  auto clustering = cluster_states(syn.params, ctx.opt.tol_cluster);
  auto label = label_configuration(clustering.configuration);

  const auto piped = run_pipeline(syn.params);
  const double fid = fidelity(*piped.state, output_state(target));

  auto warnings = spec.warnings;
  warnings.insert(warnings.end(), clustering.warnings.begin(), clustering.warnings.end());
  json body = class_json(label);
  body["N"] = target.photons();
  body["params"] = params_json(syn.params);
  body["majorana_roots"] = complex_list(syn.roots);
  body["majorana_degree"] = syn.degree;
  body["max_root_residual"] = syn.max_residual;
  body["round_trip_fidelity"] = fid;
  body["groups"] = clustering.groups;
  body["warnings"] = warnings_json(std::move(warnings));
  emit(ctx, body, nullptr);
  return kOk;
}

int cmd_simulate(const Context& ctx, const std::string& input, bool dump_fock) {
  const auto spec = parse_state_spec(read_document(input, ctx.in));
  if (!spec.params) throw InputError("simulate expects a document with \"params\"");
  const int n = spec.photons();
  check_photon_guard(n, ctx.opt.max_n, "simulate");
  const auto& params = *spec.params;

  const auto result = run_pipeline(params);
  const auto report = rates(n, params, {});
  json body;
  body["N"] = n;
  body["amplitudes"] = complex_list(result.state->amplitudes());
  body["p_output"] = result.probability;
  body["p_output_expected"] = one_per_mode_probability(n);
  body["normalization_squared"] = report.normalization_squared;
  body["p_input"] = {{"sps", report.sps.p_input},
                     {"ncl", report.ncl.p_input},
                     {"cl", report.cl.p_input}};
  body["dicke_coefficients"] = complex_list(dicke_coefficients(*result.state).values());
  if (dump_fock) body["input_fock_state"] = fock_to_json(product_state(params));
  body["warnings"] = warnings_json(spec.warnings);
  emit(ctx, body, nullptr);
  return kOk;
}

int cmd_classify(const Context& ctx, const std::string& input) {
  const auto spec = parse_state_spec(read_document(input, ctx.in));
  check_photon_guard(spec.photons(), ctx.opt.max_n, "classify");
  json body;
  std::vector<PolarizationAmplitude> params;
  if (spec.coefficients) {
    params = synthesize(*spec.coefficients, 1e-9, ctx.opt.tol_root).params;
  } else {
    params = *spec.params;
  }
  auto clustering = cluster_states(params, ctx.opt.tol_cluster);
  body = class_json(label_configuration(clustering.configuration));
  body["N"] = spec.photons();
  body["params"] = params_json(params);
  body["groups"] = clustering.groups;
  body["cluster_tolerance"] = ctx.opt.tol_cluster;
  auto warnings = spec.warnings;
  warnings.insert(warnings.end(), clustering.warnings.begin(), clustering.warnings.end());
  body["warnings"] = warnings_json(std::move(warnings));
  emit(ctx, body, nullptr);
  return kOk;
}

json rate_row(const SchemeRate& r) {
  return {{"source_factor", r.source_factor},
          {"p_input", r.p_input},
          {"p_output", r.p_output},
          {"rate", r.rate}};
}

json ratio(double num, double den) { return den > 0.0 ? json(num / den) : json(nullptr); }

int cmd_rates(const Context& ctx, const std::string& input, std::optional<int> n_flag,
              const SourceRates& src) {
  RateReport report;
  json body;
  std::vector<std::string> warnings;
  if (input.empty()) {
    if (!n_flag) throw InputError("rates needs --n or an input document");
    check_photon_guard(*n_flag, ctx.opt.max_n, "rates");
    report = rates(*n_flag, 1.0, src);
    body["normalization"] = "per unit norm2";
  } else {
    const auto spec = parse_state_spec(read_document(input, ctx.in));
    warnings = spec.warnings;
    const int n = spec.photons();
    if (n_flag && *n_flag != n) {
      throw InputError("--n " + std::to_string(*n_flag) + " disagrees with the document (N = " +
                       std::to_string(n) + ")");
    }
    check_photon_guard(n, ctx.opt.max_n, "rates");
    const auto params =
        spec.params ? *spec.params : synthesize(*spec.coefficients, 1e-9, ctx.opt.tol_root).params;
    report = rates(n, params, src);
  }
  body["N"] = report.photons;
  body["normalization_squared"] = report.normalization_squared;
  body["source_rates"] = {{"sps", src.sps}, {"ncl", src.ncl}, {"cl", src.cl}};
  body["schemes"] = {{"sps", rate_row(report.sps)},
                     {"ncl", rate_row(report.ncl)},
                     {"cl", rate_row(report.cl)}};
  body["ratios"] = {{"ncl_over_sps", ratio(report.ncl.rate, report.sps.rate)},
                    {"cl_over_ncl", ratio(report.cl.rate, report.ncl.rate)}};
  json notes = json::array();
  if (report.cl.rate > report.ncl.rate) {
    notes.push_back(
        "R_cl exceeds R_ncl under the collinear rate formula as printed (happens for N >= 4); "
        "see the README section on collinear rates");
  }
  if (!notes.empty()) body["notes"] = notes;
  body["warnings"] = warnings_json(std::move(warnings));
  emit(ctx, body, [&](const json& r) { render_rates_table(r, ctx.out); });
  return kOk;
}

json dicke_check(const PostSelection& got, int n, const char* construction) {
  const auto target = dicke_state(2 * n, n);
  const double dev = phase_aligned_deviation(got.state->amplitudes(), target.amplitudes());
  return {{"construction", construction},
          {"probability", got.probability},
          {"max_deviation", dev},
          {"pass", dev < kIdentityTol}};
}

int cmd_identity_check(const Context& ctx, int n, const std::string& which) {
  check_photon_guard(n, ctx.opt.max_n_pair, "identity-check");
  json body;
  body["N"] = n;
  body["which"] = which;
  json checks = json::array();

  if (which == "eq17") {
    checks.push_back(dicke_check(cl_dicke_construction(n), n, "collinear"));
    checks.push_back(dicke_check(dicke_2n_construction(n, BellKind::Plus), n, "psi_plus_ncl"));
  } else if (which == "eq15") {
    const auto got = dicke_2n_construction(n, BellKind::Minus);
    const auto s = split_dicke_coefficients(*got.state, 1.0);
    std::vector<Complex> expected(n + 1);
    for (int k = 0; k <= n; ++k) {
      expected[k] = (k % 2 ? -1.0 : 1.0) * binomial(n, k) / std::sqrt(binomial(2 * n, n));
    }
    const double dev = phase_aligned_deviation(s, expected);
    checks.push_back({{"construction", "psi_minus_ncl"},
                      {"probability", got.probability},
                      {"schmidt_coefficients", complex_list(s)},
                      {"expected", complex_list(expected)},
                      {"max_deviation", dev},
                      {"pass", dev < kIdentityTol}});
  } else if (which == "permutation") {
    // Project different N-subsets of the collinear 2N-qubit state onto the
    // same projector list; the residuals and probabilities must agree.
    const auto full = cl_dicke_construction(n);
    std::mt19937_64 rng(ctx.opt.seed);
    const auto onto = random_params(n, rng);
    std::vector<int> first(n), last(n);
    std::iota(first.begin(), first.end(), 0);
    std::iota(last.begin(), last.end(), n);
    std::vector<int> shuffled(2 * n);
    std::iota(shuffled.begin(), shuffled.end(), 0);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    shuffled.resize(n);
    const auto ref = project_qubits(*full.state, first, onto);
    for (const auto& [name, qubits] : {std::pair{"last", last}, std::pair{"random", shuffled}}) {
      const auto alt = project_qubits(*full.state, qubits, onto);
      const double dev = std::max(
          phase_aligned_deviation(alt.state->amplitudes(), ref.state->amplitudes()),
          std::abs(alt.probability - ref.probability));
      checks.push_back({{"construction", std::string("collinear, first vs ") + name},
                        {"projected_qubits", qubits},
                        {"probability", alt.probability},
                        {"max_deviation", dev},
                        {"pass", dev < kIdentityTol}});
    }
  } else {
    throw InputError("identity-check: unknown identity '" + which + "'");
  }

  double worst = 0.0;
  bool pass = true;
  for (const auto& c : checks) {
    worst = std::max(worst, c["max_deviation"].get<double>());
    pass = pass && c["pass"].get<bool>();
  }
  body["checks"] = checks;
  body["max_deviation"] = worst;
  body["tolerance"] = kIdentityTol;
  body["pass"] = pass;
  emit(ctx, body, nullptr);
  return pass ? kOk : kInvariantViolation;
}

int cmd_self_test(const Context& ctx, int trials) {
  if (trials < 1) throw InputError("--trials must be positive");
  std::mt19937_64 rng(ctx.opt.seed);
  const int top = std::min(ctx.opt.max_n, 6);
  const int top_pair = std::min(ctx.opt.max_n_pair, 4);
  json checks = json::array();
  auto record = [&](const char* name, double dev) {
    checks.push_back({{"check", name}, {"max_deviation", dev}, {"pass", dev <= kOracleTol}});
  };

  double ck = 0.0, state = 0.0, post = 0.0, sps = 0.0, proj = 0.0, dicke = 0.0;
  for (int t = 0; t < trials; ++t) {
    for (int n = 1; n <= top; ++n) {
      const auto params = random_params(n, rng);
      const auto c = coefficients_from_params(params);
      for (int k = 0; k <= n; ++k) {
        ck = std::max(ck, std::abs(c[k] - oracle::to_double(oracle::tuple_sum_ck(params, k))));
      }
      const auto piped = run_pipeline(params);
      state = std::max(state, max_abs_diff(piped.state->amplitudes(),
                                           oracle::brute_output_state(params).amplitudes()));
      const auto spread = distribute(product_state(params), build_cascade(n));
      post = std::max(post, std::abs(postselect_one_per_mode(spread).probability -
                                     oracle::brute_postselect(spread, n)));
      sps = std::max(sps, std::abs(sps_combine(params).probability -
                                   oracle::brute_sps_probability(params)));
    }
    for (int n = 1; n <= top_pair; ++n) {
      const auto params = random_params(n, rng);
      for (auto kind : {BellKind::Minus, BellKind::Plus}) {
        const auto joint = ncl_joint_state(n, kind);
        const auto projector = projector_state(params, kind);
        proj = std::max(proj, fock_deviation(project_onto(joint, projector).residual,
                                             oracle::brute_partial_projection(joint, projector)));
      }
    }
  }
  for (int n = 1; n <= top; ++n) {
    for (int k = 0; k <= n; ++k) {
      dicke = std::max(dicke, max_abs_diff(dicke_state(n, k).amplitudes(),
                                           oracle::literal_dicke_state(n, k).amplitudes()));
    }
  }
  record("coefficients_vs_tuple_sum", ck);
  record("pipeline_state_vs_ladder_expansion", state);
  record("postselection_vs_enumeration", post);
  record("sps_combine_vs_ladder_expansion", sps);
  record("projection_vs_pairwise_scan", proj);
  record("dicke_state_vs_permutations", dicke);

  bool pass = true;
  for (const auto& c : checks) pass = pass && c["pass"].get<bool>();
  json body{{"seed", ctx.opt.seed},
            {"trials", trials},
            {"tolerance", kOracleTol},
            {"checks", checks},
            {"pass", pass}};
  emit(ctx, body, nullptr);
  return pass ? kOk : kInvariantViolation;
}

}  // namespace

// ---------------------------------------------------------------- public

Defaults defaults_from_env(std::vector<std::string>* warnings) {
  Defaults d;
  auto read = [&](const char* name, double& slot) {
    const char* v = std::getenv(name);
    if (!v || !*v) return;
    char* end = nullptr;
    const double x = std::strtod(v, &end);
    if (end && *end == '\0' && x > 0.0 && std::isfinite(x)) {
      slot = x;
    } else if (warnings) {
      warnings->push_back(std::string("ignoring ") + name + "='" + v + "'");
    }
  };
  read("SYMPHOTON_TOL_ROOT", d.tol_root);
  read("SYMPHOTON_TOL_CLUSTER", d.tol_cluster);
  return d;
}

int StateSpec::photons() const {
  if (coefficients) return coefficients->photons();
  return static_cast<int>(params->size());
}

StateSpec parse_state_spec(const json& doc) {
  if (!doc.is_object()) throw InputError("state document must be a JSON object");
  const bool has_c = doc.contains("dicke_coefficients");
  const bool has_p = doc.contains("params");
  if (has_c == has_p) {
    throw InputError("state document needs exactly one of \"dicke_coefficients\" and \"params\"");
  }

  StateSpec spec;
  if (has_c) {
    if (!doc.contains("N") || !doc["N"].is_number_integer()) {
      throw InputError("\"N\" must be an integer");
    }
    const auto n = doc["N"].get<long long>();
    const auto& arr = doc["dicke_coefficients"];
    if (!arr.is_array()) throw InputError("\"dicke_coefficients\" must be an array");
    if (n < 1 || arr.size() != static_cast<std::size_t>(n) + 1) {
      throw InputError("\"dicke_coefficients\" must hold N+1 entries with N >= 1");
    }
    std::vector<Complex> c;
    for (std::size_t k = 0; k < arr.size(); ++k) {
      c.push_back(parse_complex(arr[k], "dicke_coefficients[" + std::to_string(k) + "]"));
    }
    if (std::none_of(c.begin(), c.end(), [](Complex z) { return std::abs(z) > 0.0; })) {
      throw InputError("coefficient vector is zero");
    }
    spec.coefficients.emplace(std::move(c));
    return spec;
  }

  const auto& arr = doc["params"];
  if (!arr.is_array() || arr.empty()) throw InputError("\"params\" must be a non-empty array");
  if (doc.contains("N") && (!doc["N"].is_number_integer() ||
                            doc["N"].get<long long>() != static_cast<long long>(arr.size()))) {
    throw InputError("\"N\" disagrees with the number of params");
  }
  std::vector<PolarizationAmplitude> params;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "params[" + std::to_string(i) + "]";
    if (!arr[i].is_object() || !arr[i].contains("alpha") || !arr[i].contains("beta")) {
      throw InputError(where + ": expected {\"alpha\": ..., \"beta\": ...}");
    }
    const Complex a = parse_complex(arr[i]["alpha"], where + ".alpha");
    const Complex b = parse_complex(arr[i]["beta"], where + ".beta");
    const double deviation = std::abs(std::sqrt(std::norm(a) + std::norm(b)) - 1.0);
    if (deviation > kRenormalizeTol) {
      throw InputError(where + " is not normalized (|norm - 1| = " + fmt("%.3e", deviation) + ")");
    }
    if (deviation > kAcceptTol) {
      spec.warnings.push_back(where + " renormalized (|norm - 1| = " + fmt("%.3e", deviation) +
                              ")");
    }
    params.push_back(PolarizationAmplitude::normalized(a, b));
  }
  spec.params = std::move(params);
  return spec;
}

json rounded(const json& value) {
  if (value.is_number_float()) {
    const double x = value.get<double>();
    if (!std::isfinite(x)) return nullptr;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
  }
  if (value.is_array()) {
    json out = json::array();
    for (const auto& v : value) out.push_back(rounded(v));
    return out;
  }
  if (value.is_object()) {
    json out = json::object();
    for (const auto& [k, v] : value.items()) out[k] = rounded(v);
    return out;
  }
  return value;
}

json fock_to_json(const FockVector& state) {
  json terms = json::array();
  for (const auto& [basis, amp] : state.terms()) {
    terms.push_back({{"occupation", std::vector<unsigned>(basis.flat().begin(), basis.flat().end())},
                     {"re", amp.real()},
                     {"im", amp.imag()}});
  }
  return {{"modes", state.mode_count()}, {"terms", terms}};
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err, const Defaults& defaults) {
  CLI::App app{"Symmetric multi-photon polarization state synthesis and simulation", "symphoton"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may also follow the subcommand

  Options opt{defaults.tol_root, defaults.tol_cluster};
  std::string format = "json";
  app.add_option("--tol-root", opt.tol_root, "Majorana root residual tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-cluster", opt.tol_cluster, "Degeneracy clustering tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "Seed for randomized checks");
  std::optional<int> max_n;
  app.add_option("--max-n", max_n,
                 "Photon-number guard (default 8, or 4 for two-register checks)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

  std::string input;
  auto* synth = app.add_subcommand("synthesize", "Dicke coefficients to single-photon states");
  synth->add_option("input", input, "State document path, or - for stdin")->default_val("-");

  bool dump_fock = false;
  std::string sim_input;
  auto* sim = app.add_subcommand("simulate", "Run the multiport pipeline on params");
  sim->add_option("input", sim_input, "State document path, or - for stdin")->default_val("-");
  sim->add_flag("--dump-fock", dump_fock, "Include the input Fock state");

  std::string cls_input;
  auto* cls = app.add_subcommand("classify", "Degeneracy configuration and class label");
  cls->add_option("input", cls_input, "State document path, or - for stdin")->default_val("-");

  std::string rates_input;
  std::optional<int> rates_n;
  SourceRates src;
  auto* rts = app.add_subcommand("rates", "Generation rates of the three source schemes");
  rts->add_option("input", rates_input, "State document path, or - for stdin (optional)");
  rts->add_option("--n", rates_n, "Photon number when no document is given")
      ->check(CLI::PositiveNumber);
  rts->add_option("--c-sps", src.sps, "Single-photon source rate")->check(CLI::NonNegativeNumber);
  rts->add_option("--c-ncl", src.ncl, "Non-collinear pair rate")->check(CLI::NonNegativeNumber);
  rts->add_option("--c-cl", src.cl, "Collinear pair rate")->check(CLI::NonNegativeNumber);

  int id_n = 0;
  std::string which;
  auto* idc = app.add_subcommand("identity-check", "Two-register Dicke identities");
  idc->add_option("--n", id_n, "Photons per register")->required();
  idc->add_option("which", which, "eq15, eq17 or permutation")
      ->required()
      ->check(CLI::IsMember({"eq15", "eq17", "permutation"}));

  int trials = 20;
  auto* self = app.add_subcommand("self-test", "Randomized oracle equivalence checks");
  self->add_option("--trials", trials, "Random trials per photon number")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  opt.format = format == "table" ? Format::Table : Format::Json;
  if (max_n) opt.max_n = opt.max_n_pair = *max_n;
  Context ctx{opt, in, out};
  try {
    if (*synth) return cmd_synthesize(ctx, input);
    if (*sim) return cmd_simulate(ctx, sim_input, dump_fock);
    if (*cls) return cmd_classify(ctx, cls_input);
    if (*rts) return cmd_rates(ctx, rates_input, rates_n, src);
    if (*idc) return cmd_identity_check(ctx, id_n, which);
    if (*self) return cmd_self_test(ctx, trials);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << " (residual " << fmt("%.3e", e.residual()) << ")\n";
    return kNumericalFailure;
  }
  return kInputError;
}

}  // namespace symphoton::cli
