// Copyright 2026 The ehrtomo Authors.
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

#include "ehrtomo/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ehrtomo/body_json.hpp"
#include "ehrtomo/error.hpp"
#include "ehrtomo/lattice.hpp"
#include "ehrtomo/projections.hpp"
#include "ehrtomo/pseudopyramid.hpp"
#include "ehrtomo/tomography.hpp"
#include "json.hpp"

namespace ehrtomo::cli {

namespace {

using nlohmann::json;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string join(const RationalVector& v) { return to_string(v, ';'); }

std::string join(const FloatVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + fmt(v[i]);
  return s;
}

std::string direction_text(const DirectionSample& v) { return v.primitive ? join(*v.primitive) : join(v.v); }

struct Params {
  std::string body, a, b;
  std::string dilate, translate, dir;
  std::string mu_schedule, s_list;
  std::string method, mode;
  std::string out;
  int height = -1;
  double mu_max = 64;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  double tol = -1;
  unsigned threads = 1;
};

struct Run {
  Run(Params params, std::ostream& o, std::ostream& e) : p(std::move(params)), out(o), err(e) {}
  Params p;
  std::ostream& out;
  std::ostream& err;
  json parameters = json::object();
  json inputs = json::object();
  json bodies = json::object();
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::optional<json> summary;
  int exit_code = kExitOk;
};

BodySpec with_cli_modifiers(BodySpec body, const Params& p) {
  if (!p.dilate.empty()) body = dilate(body, parse_rational(p.dilate));
  if (!p.translate.empty()) body = translate(body, parse_rational_vector(p.translate));
  return body;
}

BodySpec load_input(Run& r, const std::string& key, const std::string& path, bool modifiers) {
  if (path.empty()) throw Error(ErrorCode::InvalidArgument, "--" + key + " is required");
  BodySpec body = load_body(path);
  if (modifiers) body = with_cli_modifiers(std::move(body), r.p);
  r.inputs[key] = path;
  r.bodies[key] = body_to_json(body);
  return body;
}

DirectionSample parse_direction(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::InvalidArgument, "--dir is required");
  try {
    return DirectionSample::from_rational(parse_rational_vector(text));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError) throw;
  }
  return DirectionSample::from_float(parse_float_vector(text));
}

std::vector<double> parse_schedule(const std::string& text) {
  return text.empty() ? std::vector<double>{8, 16, 32, 64} : parse_float_vector(text);
}

MonteCarloParams montecarlo(const Params& p) { return {p.samples, p.seed, p.threads}; }

void check_dim(const BodySpec& K, std::size_t n, const char* what) {
  if (K.dim() != n) throw Error(ErrorCode::DimensionMismatch, std::string(what) + " dimension differs from the body's");
}

void cmd_count(Run& r) {
  const BodySpec K = load_input(r, "body", r.p.body, false);
  const Rational s = r.p.dilate.empty() ? Rational(1) : parse_rational(r.p.dilate);
  const RationalVector w = r.p.translate.empty() ? zeros(K.dim()) : parse_rational_vector(r.p.translate);
  check_dim(K, w.size(), "--translate");
  const BigInt c = count({K, w, s}, {r.p.threads});
  r.parameters["dilate"] = to_string(s);
  r.parameters["translate"] = to_string(w);
  r.header = {"s", "count"};
  r.rows.push_back({to_string(s), c.get_str()});
  r.out << c.get_str() << "\n";
}

void cmd_profile(Run& r) {
  const BodySpec K = load_input(r, "body", r.p.body, false);
  const RationalVector w = r.p.translate.empty() ? zeros(K.dim()) : parse_rational_vector(r.p.translate);
  check_dim(K, w.size(), "--translate");
  const std::vector<Rational> s_list = r.p.s_list.empty() ? default_probe_dilations() : parse_rational_vector(r.p.s_list);
  const CountProfile prof = count_profile(K, w, s_list, {r.p.threads});
  r.parameters["translate"] = to_string(w);
  r.parameters["s_list"] = to_string(RationalVector(s_list.begin(), s_list.end()));
  r.header = {"s", "count"};
  for (const auto& row : prof.rows) {
    r.rows.push_back({to_string(row.s), row.count.get_str()});
    r.out << to_string(row.s) << "," << row.count.get_str() << "\n";
  }
}

void cmd_ppyr_volume(Run& r) {
  const BodySpec K = load_input(r, "body", r.p.body, true);
  const std::string method = r.p.method.empty() ? (K.has_hull() ? "exact" : "montecarlo") : r.p.method;
  r.parameters["method"] = method;
  r.header = {"method", "volume", "volume_float", "standard_error", "samples", "hits"};
  if (method == "exact") {
    const Rational v = ppyr_volume_exact(K);
    r.rows.push_back({method, to_string(v), fmt(v.get_d()), "0", "0", "0"});
    r.out << to_string(v) << "\n";
  } else if (method == "montecarlo") {
    r.parameters["samples"] = r.p.samples;
    r.parameters["seed"] = r.p.seed;
    const MonteCarloEstimate e = ppyr_volume_montecarlo(K, montecarlo(r.p));
    r.rows.push_back({method, fmt(e.estimate), fmt(e.estimate), fmt(e.standard_error), std::to_string(e.samples),
                      std::to_string(e.hits)});
    r.out << fmt(e.estimate) << "\n";
  } else {
    throw Error(ErrorCode::InvalidArgument, "--method must be exact or montecarlo");
  }
}

void cmd_radii(Run& r) {
  const BodySpec K = load_input(r, "body", r.p.body, true);
  if (!K.has_hull()) throw Error(ErrorCode::InvalidArgument, "radii need a polytope of dimension at most 3");
  const Radii rad = radii(ppyr_polytope(K));
  r.header = {"outer_sq", "outer", "inner_sq", "inner", "empty_front_shell"};
  r.rows.push_back({to_string(rad.outer_sq), fmt(rad.outer), to_string(rad.inner_sq), fmt(rad.inner),
                    rad.empty_front_shell ? "true" : "false"});
  r.out << "R " << fmt(rad.outer) << "\nr " << fmt(rad.inner) << "\n";
  if (rad.empty_front_shell) r.out << "empty front shell\n";
}

void cmd_brightness(Run& r) {
  const BodySpec K = load_input(r, "body", r.p.body, true);
  const DirectionSample v = parse_direction(r.p.dir);
  check_dim(K, v.v.size(), "--dir");
  const std::string method = r.p.method.empty() ? "hull" : r.p.method;
  double value = 0;
  if (method == "hull") {
    value = brightness_hull(K, v);
  } else if (method == "facet-sum") {
    value = brightness_facet_sum(K, v);
  } else {
    throw Error(ErrorCode::InvalidArgument, "--method must be hull or facet-sum");
  }
  r.parameters["dir"] = r.p.dir;
  r.parameters["method"] = method;
  r.header = {"direction", "method", "brightness"};
  r.rows.push_back({direction_text(v), method, fmt(value)});
  r.out << fmt(value) << "\n";
}

SphereAreaOptions sphere_options(const Params& p) {
  SphereAreaOptions o;
  if (p.method == "exact2d") {
    o.method = SphereMethod::Exact2d;
  } else if (p.method == "quadrature3d") {
    o.method = SphereMethod::Quadrature3d;
  } else if (p.method == "montecarlo") {
    o.method = SphereMethod::MonteCarlo;
  } else if (!p.method.empty()) {
    throw Error(ErrorCode::InvalidArgument, "--method must be exact2d, quadrature3d or montecarlo");
  }
  if (p.tol >= 0) o.tol = p.tol;
  o.samples = p.samples;
  o.seed = p.seed;
  o.threads = p.threads;
  return o;
}

const char* method_name(SphereMethod m) {
  switch (m) {
    case SphereMethod::Exact2d: return "exact2d";
    case SphereMethod::Quadrature3d: return "quadrature3d";
    case SphereMethod::MonteCarlo: return "montecarlo";
  }
  return "unknown";
}

void cmd_sphere_area(Run& r) {
  const BodySpec K = load_input(r, "body", r.p.body, true);
  const SphereAreaOptions o = sphere_options(r.p);
  const SphereAreaResult a = spherical_area(K, o);
  r.parameters["method"] = method_name(a.method);
  r.parameters["tol"] = o.tol;
  r.parameters["samples"] = o.samples;
  r.parameters["seed"] = o.seed;
  r.header = {"method", "area", "error_estimate"};
  r.rows.push_back({method_name(a.method), fmt(a.value), fmt(a.error_estimate)});
  r.out << fmt(a.value) << "\n";
}

void cmd_hausdorff(Run& r) {
  const BodySpec A = load_input(r, "a", r.p.a, false);
  const BodySpec B = load_input(r, "b", r.p.b, false);
  const double h = hausdorff_distance(A, B);
  r.header = {"hausdorff"};
  r.rows.push_back({fmt(h)});
  r.out << fmt(h) << "\n";
}

std::string opt_text(const std::optional<double>& x) { return x ? fmt(*x) : ""; }

void emit_table(Run& r, const ConvergenceTable& t, bool ppyr) {
  r.header = {"mu", "estimate", "reference", "abs_error", "estimate_stderr"};
  if (ppyr)
    for (const char* c : {"exact_volume", "sandwich_lower", "volume_over_mu", "sandwich_upper", "sandwich_holds"})
      r.header.push_back(c);
  for (const auto& row : t.rows) {
    std::vector<std::string> cells = {fmt(row.mu), fmt(row.estimate), fmt(row.reference), fmt(row.abs_error),
                                      fmt(row.estimate_stderr)};
    if (ppyr) {
      cells.push_back(row.exact_volume ? to_string(*row.exact_volume) : "");
      cells.push_back(opt_text(row.sandwich_lower));
      cells.push_back(opt_text(row.volume_over_mu));
      cells.push_back(opt_text(row.sandwich_upper));
      cells.push_back(row.sandwich_holds ? "true" : "false");
    }
    r.rows.push_back(std::move(cells));
  }
  for (std::size_t i = 0; i < r.header.size(); ++i) r.out << (i ? "," : "") << r.header[i];
  r.out << "\n";
  for (const auto& cells : r.rows) {
    for (std::size_t i = 0; i < cells.size(); ++i) r.out << (i ? "," : "") << cells[i];
    r.out << "\n";
  }
}

void cmd_converge_sphere(Run& r) {
  const BodySpec K = load_input(r, "body", r.p.body, true);
  const DirectionSample v = parse_direction(r.p.dir);
  check_dim(K, v.v.size(), "--dir");
  const std::vector<double> mus = parse_schedule(r.p.mu_schedule);
  const SphereAreaOptions o = sphere_options(r.p);
  r.parameters["dir"] = r.p.dir;
  r.parameters["mu_schedule"] = mus;
  r.parameters["method"] = method_name(o.method.value_or(default_sphere_method(K.dim())));
  r.parameters["tol"] = o.tol;
  r.parameters["samples"] = o.samples;
  r.parameters["seed"] = o.seed;
  emit_table(r, spherical_limit_table(K, v, mus, o), false);
}

void cmd_converge_ppyr(Run& r) {
  const BodySpec K = load_input(r, "body", r.p.body, true);
  const DirectionSample v = parse_direction(r.p.dir);
  check_dim(K, v.v.size(), "--dir");
  const std::vector<double> mus = parse_schedule(r.p.mu_schedule);
  PpyrLimitOptions o;
  const std::string mode = r.p.mode.empty() ? (K.has_hull() ? "exact" : "montecarlo") : r.p.mode;
  if (mode == "exact") {
    o.mode = VolumeMode::Exact;
  } else if (mode == "montecarlo") {
    o.mode = VolumeMode::MonteCarlo;
  } else {
    throw Error(ErrorCode::InvalidArgument, "--mode must be exact or montecarlo");
  }
  o.montecarlo = montecarlo(r.p);
  o.sphere = sphere_options(r.p);
  r.parameters["dir"] = r.p.dir;
  r.parameters["mu_schedule"] = mus;
  r.parameters["mode"] = mode;
  r.parameters["samples"] = r.p.samples;
  r.parameters["seed"] = r.p.seed;
  emit_table(r, ppyr_limit_brightness(K, v, mus, o), true);
}

void cmd_compare(Run& r) {
  const BodySpec A = load_input(r, "a", r.p.a, false);
  const BodySpec B = load_input(r, "b", r.p.b, false);
  CompareOptions o;
  if (r.p.height >= 0) o.height = r.p.height;
  o.mu_max = r.p.mu_max;
  if (r.p.tol >= 0) o.tol = r.p.tol;
  o.montecarlo = montecarlo(r.p);
  o.threads = r.p.threads;
  const CompareVerdict v = compare_bodies(A, B, o);
  r.parameters["height"] = o.height;
  r.parameters["mu_max"] = o.mu_max;
  r.parameters["tol"] = o.tol;
  r.parameters["samples"] = o.montecarlo.samples;
  r.parameters["seed"] = o.montecarlo.seed;
  r.header = {"direction", "va", "vb", "va_raw", "vb_raw", "err_a", "err_b", "gap", "tolerance"};
  for (const auto& row : v.rows)
    r.rows.push_back({direction_text(row.direction), fmt(row.va), fmt(row.vb), fmt(row.va_raw), fmt(row.vb_raw),
                      fmt(row.err_a), fmt(row.err_b), fmt(row.gap), fmt(row.tolerance)});
  json s;
  s["verdict"] = to_string(v.kind);
  s["witness"] = v.witness ? json(direction_text(*v.witness)) : json(nullptr);
  s["gap"] = v.gap;
  s["warnings"] = v.warnings;
  s["status"] = v.status;
  r.summary = s;
  r.out << to_string(v.kind) << "\n";
  if (v.witness) r.out << "witness " << to_string(*v.witness->primitive) << "\n";
  r.out << "gap " << fmt(v.gap) << "\n";
  for (const auto& w : v.warnings) r.err << "warning: " << w << "\n";
  r.exit_code = v.kind == VerdictKind::Distinct       ? kExitDistinct
                : v.kind == VerdictKind::Inconclusive ? kExitInconclusive
                                                      : kExitOk;
}

void cmd_probe(Run& r) {
  const BodySpec A = load_input(r, "a", r.p.a, false);
  const BodySpec B = load_input(r, "b", r.p.b, false);
  const int h = r.p.height >= 0 ? r.p.height : 3;
  const std::vector<Rational> s_list = r.p.s_list.empty() ? default_probe_dilations() : parse_rational_vector(r.p.s_list);
  const auto m = ehrhart_equality_probe(A, B, h, s_list, {r.p.threads});
  r.parameters["height"] = h;
  r.parameters["s_list"] = to_string(RationalVector(s_list.begin(), s_list.end()));
  r.header = {"found", "w", "s", "count_a", "count_b"};
  if (m) {
    r.rows.push_back({"true", join(m->w), to_string(m->s), m->count_a.get_str(), m->count_b.get_str()});
    r.out << "mismatch w=" << to_string(m->w) << " s=" << to_string(m->s) << " counts " << m->count_a.get_str()
          << " " << m->count_b.get_str() << "\n";
  } else {
    r.rows.push_back({"false", "", "", "", ""});
    r.out << "no mismatch\n";
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  f << content;
}

void write_outputs(const Run& r, const std::string& sub, double seconds) {
  std::ostringstream csv;
  for (std::size_t i = 0; i < r.header.size(); ++i) csv << (i ? "," : "") << r.header[i];
  csv << "\n";
  for (const auto& cells : r.rows) {
    for (std::size_t i = 0; i < cells.size(); ++i) csv << (i ? "," : "") << cells[i];
    csv << "\n";
  }
  write_file(r.p.out + ".csv", csv.str());
  json outputs = json::array({r.p.out + ".csv"});
  if (r.summary) {
    write_file(r.p.out + ".summary.json", r.summary->dump(2) + "\n");
    outputs.push_back(r.p.out + ".summary.json");
  }
  json m;
  m["subcommand"] = sub;
  m["version"] = EHRTOMO_VERSION;
  m["inputs"] = r.inputs;
  m["bodies"] = r.bodies;
  m["parameters"] = r.parameters;
  m["threads"] = r.p.threads;
  m["outputs"] = outputs;
  m["exit_code"] = r.exit_code;
  m["duration_seconds"] = seconds;
  write_file(r.p.out + ".manifest.json", m.dump(2) + "\n");
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidBody: return kExitUsage;
    default: return kExitPrecondition;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convex bodies from lattice counts, pseudopyramid volumes and projections"};
  app.set_version_flag("--version", EHRTOMO_VERSION);
  app.require_subcommand(1);
  Params p;

  auto body = [&](CLI::App* c) { c->add_option("--body", p.body, "JSON body file")->required(); };
  auto pair = [&](CLI::App* c) {
    c->add_option("--a", p.a, "JSON body file A")->required();
    c->add_option("--b", p.b, "JSON body file B")->required();
  };
  auto modifiers = [&](CLI::App* c) {
    c->add_option("--dilate", p.dilate, "dilation p/q applied to the body");
    c->add_option("--translate", p.translate, "translation \"a,b[,c]\" applied after dilating");
  };
  auto mc = [&](CLI::App* c) {
    c->add_option("--samples", p.samples, "Monte-Carlo samples")->capture_default_str();
    c->add_option("--seed", p.seed, "Monte-Carlo seed")->capture_default_str();
  };
  auto common = [&](CLI::App* c) {
    c->add_option("--out", p.out, "write <out>.csv and <out>.manifest.json");
    c->add_option("--threads", p.threads, "worker cap")->capture_default_str()->check(CLI::PositiveNumber);
  };

  auto* count_cmd = app.add_subcommand("count", "exact lattice count of s(K + w)");
  body(count_cmd);
  count_cmd->add_option("--dilate", p.dilate, "s as p/q (default 1)");
  count_cmd->add_option("--translate", p.translate, "integer vector w (default 0)");
  common(count_cmd);
  count_cmd->footer("CSV columns: s,count");

  auto* profile_cmd = app.add_subcommand("profile", "lattice counts over a list of dilations");
  body(profile_cmd);
  profile_cmd->add_option("--translate", p.translate, "integer vector w (default 0)");
  profile_cmd->add_option("--s-list", p.s_list, "dilations \"s1,s2,...\" (default k/4, k = 1..16)");
  common(profile_cmd);
  profile_cmd->footer("CSV columns: s,count");

  auto* ppyr_cmd = app.add_subcommand("ppyr-volume", "volume of conv(K and the origin)");
  body(ppyr_cmd);
  modifiers(ppyr_cmd);
  ppyr_cmd->add_option("--method", p.method, "exact | montecarlo");
  mc(ppyr_cmd);
  common(ppyr_cmd);
  ppyr_cmd->footer("CSV columns: method,volume,volume_float,standard_error,samples,hits");

  auto* radii_cmd = app.add_subcommand("radii", "outer and inner radii of the pseudopyramid");
  body(radii_cmd);
  modifiers(radii_cmd);
  common(radii_cmd);
  radii_cmd->footer("CSV columns: outer_sq,outer,inner_sq,inner,empty_front_shell");

  auto* bright_cmd = app.add_subcommand("brightness", "(d-1)-volume of the shadow on the plane orthogonal to --dir");
  body(bright_cmd);
  modifiers(bright_cmd);
  bright_cmd->add_option("--dir", p.dir, "direction \"x,y[,z]\"")->required();
  bright_cmd->add_option("--method", p.method, "hull | facet-sum");
  common(bright_cmd);
  bright_cmd->footer("CSV columns: direction,method,brightness");

  auto* sphere_cmd = app.add_subcommand("sphere-area", "area of the radial projection onto the unit sphere");
  body(sphere_cmd);
  modifiers(sphere_cmd);
  sphere_cmd->add_option("--method", p.method, "exact2d | quadrature3d | montecarlo (default by dimension)");
  sphere_cmd->add_option("--tol", p.tol, "quadrature tolerance");
  mc(sphere_cmd);
  common(sphere_cmd);
  sphere_cmd->footer("CSV columns: method,area,error_estimate");

  auto* haus_cmd = app.add_subcommand("hausdorff", "Hausdorff distance between two bodies");
  pair(haus_cmd);
  common(haus_cmd);
  haus_cmd->footer("CSV columns: hausdorff");

  auto* cs_cmd = app.add_subcommand("converge-sphere", "mu^(d-1) area S(K + mu v) against the brightness");
  body(cs_cmd);
  modifiers(cs_cmd);
  cs_cmd->add_option("--dir", p.dir, "direction v")->required();
  cs_cmd->add_option("--mu-schedule", p.mu_schedule, "\"m1,m2,...\" (default 8,16,32,64)");
  cs_cmd->add_option("--method", p.method, "sphere-area method");
  cs_cmd->add_option("--tol", p.tol, "quadrature tolerance");
  mc(cs_cmd);
  common(cs_cmd);
  cs_cmd->footer("CSV columns: mu,estimate,reference,abs_error,estimate_stderr");

  auto* cp_cmd = app.add_subcommand("converge-ppyr", "d vol ppyr(K + mu v) / mu against the brightness");
  body(cp_cmd);
  modifiers(cp_cmd);
  cp_cmd->add_option("--dir", p.dir, "direction v")->required();
  cp_cmd->add_option("--mu-schedule", p.mu_schedule, "\"m1,m2,...\" (default 8,16,32,64)");
  cp_cmd->add_option("--mode", p.mode, "exact | montecarlo");
  cp_cmd->add_option("--method", p.method, "sphere-area method for the sandwich");
  cp_cmd->add_option("--tol", p.tol, "quadrature tolerance");
  mc(cp_cmd);
  common(cp_cmd);
  cp_cmd->footer(
      "CSV columns: mu,estimate,reference,abs_error,estimate_stderr,exact_volume,sandwich_lower,volume_over_mu,"
      "sandwich_upper,sandwich_holds");

  auto* cmp_cmd = app.add_subcommand("compare", "decide whether two symmetric bodies differ");
  pair(cmp_cmd);
  cmp_cmd->add_option("--height", p.height, "direction height h (default 2)");
  cmp_cmd->add_option("--mu-max", p.mu_max, "largest mu")->capture_default_str();
  cmp_cmd->add_option("--tol", p.tol, "gap tolerance (default 0.05)");
  mc(cmp_cmd);
  common(cmp_cmd);
  cmp_cmd->footer(
      "CSV columns: direction,va,vb,va_raw,vb_raw,err_a,err_b,gap,tolerance\n"
      "Exit codes: 0 equal within tolerance, 10 distinct, 11 inconclusive");

  auto* probe_cmd = app.add_subcommand("probe", "search for a lattice count mismatch");
  pair(probe_cmd);
  probe_cmd->add_option("--height", p.height, "translations in [-h, h]^d (default 3)");
  probe_cmd->add_option("--s-list", p.s_list, "dilations (default k/4, k = 1..16)");
  common(probe_cmd);
  probe_cmd->footer("CSV columns: found,w,s,count_a,count_b");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  Run r(p, out, err);
  r.parameters["threads"] = p.threads;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (name == "count") cmd_count(r);
    else if (name == "profile") cmd_profile(r);
    else if (name == "ppyr-volume") cmd_ppyr_volume(r);
    else if (name == "radii") cmd_radii(r);
    else if (name == "brightness") cmd_brightness(r);
    else if (name == "sphere-area") cmd_sphere_area(r);
    else if (name == "hausdorff") cmd_hausdorff(r);
    else if (name == "converge-sphere") cmd_converge_sphere(r);
    else if (name == "converge-ppyr") cmd_converge_ppyr(r);
    else if (name == "compare") cmd_compare(r);
    else if (name == "probe") cmd_probe(r);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!p.out.empty()) write_outputs(r, name, seconds);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const json::exception& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return r.exit_code;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace ehrtomo::cli
