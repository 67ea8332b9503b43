// Command-line front end: builds gallery complexes, computes face and
// h-polynomials, refines complexes, checks shellings and interlacing, walks
// line shellings of rational polytopes, and runs the bundled verification
// suites. Reports carry a stable JSON schema; --format only toggles rendering.
#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "polyshell/cellcomplex.hpp"
#include "polyshell/constructions.hpp"
#include "polyshell/eulerian.hpp"
#include "polyshell/json_io.hpp"
#include "polyshell/lineshell.hpp"
#include "polyshell/realroot.hpp"
#include "polyshell/shelling.hpp"
#include "polyshell/subdivision.hpp"
#include "polyshell/verify.hpp"

using namespace polyshell;

namespace {

struct Emit {
  std::string format = "text";
  std::string out_path;

  void operator()(const Json& report, const std::string& text) const {
    const std::string payload = format == "json" ? report.dump(2) + "\n" : text;
    if (out_path.empty()) {
      std::cout << payload;
      return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << payload;
  }
};

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string kind_name(CellKind k) { return k == CellKind::cube ? "cubical" : "simplicial"; }

std::vector<Rat> parse_rat_csv(const std::string& s, const char* what) {
  std::vector<Rat> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(rat_from_string(item));
  if (out.empty()) throw parse_error(std::string(what) + ": expected comma-separated rationals");
  return out;
}

std::string rat_csv(const std::vector<Rat>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += rat_to_string(v[i]);
  }
  return out;
}

std::vector<int> parse_order(const std::string& s, int cells) {
  std::vector<int> order;
  if (s == "lex") {
    order.resize(cells);
    std::iota(order.begin(), order.end(), 0);
    return order;
  }
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size())
      throw parse_error("--order must be \"lex\" or a comma-separated list of cell indices");
    order.push_back(v);
  }
  return order;
}

// accepts a bare complex document or a construct report wrapping one
Complex load_complex(const std::string& arg) {
  Json j = json_from_arg(arg);
  if (j.is_object() && j.contains("complex")) return complex_from_json(j.at("complex"));
  return complex_from_json(j);
}

Json poly_report(const IntPolynomial& p) {
  return Json{{"coeffs", poly_to_json(p)}, {"poly", p.str()}};
}

struct BuiltScenario {
  std::string name;
  Complex complex;
  std::vector<int> order;
  bool expect_shelling = true;
  bool expect_stable = true;
};

constexpr const char* kFamilyUsage =
    "cube-boundary --d D | pile --sides A,B,... | cuboid --d D --l L | "
    "capped --folds 1|2 | stacked --d D --k K";

BuiltScenario build_scenario(const std::string& name, int d, int l, int k, int folds,
                             const std::vector<int>& sides) {
  for (NamedScenario& sc : standard_scenarios())
    if (sc.name == name)
      return {sc.name, std::move(sc.complex), std::move(sc.order), true, sc.expect_stable};
  auto need = [&](bool ok, const char* msg) {
    if (!ok) throw unsupported_input("construct " + name + " needs " + msg);
  };
  auto identity = [](const Complex& c) {
    std::vector<int> o(c.cell_count());
    std::iota(o.begin(), o.end(), 0);
    return o;
  };
  if (name == "cube-boundary") {
    need(d >= 1, "--d >= 1");
    Complex c = cube_boundary(d);
    std::vector<int> o = identity(c);
    return {name, std::move(c), std::move(o), true, true};
  }
  if (name == "pile") {
    need(!sides.empty(), "--sides");
    Complex c = pile_of_cubes(sides);
    std::vector<int> o = identity(c);
    return {name, std::move(c), std::move(o), true, true};
  }
  if (name == "cuboid") {
    need(d >= 1 && l >= 0, "--d and --l");
    Complex c = cuboid_boundary(d, l);
    std::vector<int> o = identity(c);
    return {name, std::move(c), std::move(o), true, true};
  }
  if (name == "capped") {
    need(folds == 1 || folds == 2, "--folds 1 or 2");
    OrderedScenario sc = capped_cube(folds);
    return {name, std::move(sc.complex), std::move(sc.order), true, true};
  }
  if (name == "stacked") {
    need(d >= 1 && k >= 0, "--d and --k");
    OrderedScenario sc = stacked_simplicial(d, k);
    return {name, std::move(sc.complex), std::move(sc.order), true, true};
  }
  throw unsupported_input("unknown construction \"" + name +
                          "\"; run `construct --list` for the gallery, or use one of: " +
                          kFamilyUsage);
}

int cmd_construct(const Emit& emit, const std::string& name, bool list, int d, int l, int k,
                  int folds, const std::vector<int>& sides) {
  if (list || name.empty()) {
    Json names = Json::array();
    std::ostringstream text;
    text << "gallery scenarios:\n";
    for (const NamedScenario& sc : standard_scenarios()) {
      names.push_back(sc.name);
      text << "  " << sc.name << "\n";
    }
    text << "parameterized families:\n  " << kFamilyUsage << "\n";
    emit(Json{{"scenarios", std::move(names)},
              {"families", Json::array({"cube-boundary", "pile", "cuboid", "capped", "stacked"})}},
         text.str());
    return 0;
  }
  BuiltScenario sc = build_scenario(name, d, l, k, folds, sides);
  Json j;
  j["name"] = sc.name;
  j["complex"] = complex_to_json(sc.complex);
  j["order"] = sc.order;
  j["expected"] = Json{{"is_shelling", sc.expect_shelling}, {"is_stable", sc.expect_stable}};
  std::ostringstream text;
  text << "name: " << sc.name << "\nkind: " << kind_name(sc.complex.kind())
       << "  dim: " << sc.complex.dim() << "  cells: " << sc.complex.cell_count() << "\norder:";
  for (int i : sc.order) text << ' ' << i;
  text << "\nexpected: shelling=" << yn(sc.expect_shelling) << " stable=" << yn(sc.expect_stable)
       << "\n";
  emit(j, text.str());
  return 0;
}

int cmd_faces(const Emit& emit, const std::string& arg) {
  Complex c = load_complex(arg);
  RelativeComplex rc(c, {});
  IntPolynomial f = rc.f_polynomial();
  std::vector<long long> counts(c.dim() + 1, 0);
  for (const auto& [key, fd] : c.face_dims()) {
    (void)key;
    counts[fd] += 1;
  }
  Json j;
  j["kind"] = kind_name(c.kind());
  j["dim"] = c.dim();
  j["cells"] = c.cell_count();
  j["face_counts"] = counts;
  j["f"] = poly_report(f);
  std::ostringstream text;
  text << "kind: " << kind_name(c.kind()) << "  dim: " << c.dim() << "  cells: " << c.cell_count()
       << "\nfaces by dimension (0.." << c.dim() << "):";
  for (long long n : counts) text << ' ' << n;
  text << "\nf-polynomial: " << f.str() << "\n";
  emit(j, text.str());
  return 0;
}

int cmd_hpoly(const Emit& emit, const std::string& arg) {
  Complex c = load_complex(arg);
  RelativeComplex rc(c, {});
  IntPolynomial h = rc.h_polynomial();
  bool rr = is_real_rooted(h);
  Json j;
  j["kind"] = kind_name(c.kind());
  j["dim"] = c.dim();
  j["m"] = rc.m();
  j["h"] = poly_report(h);
  j["real_rooted"] = rr;
  j["symmetric"] = is_symmetric(h, rc.m());
  std::ostringstream text;
  text << "h-polynomial: " << h.str() << "\nreal-rooted: " << yn(rr) << "\n";
  emit(j, text.str());
  return 0;
}

Int refined_cell_estimate(const Complex& c, SubdivOp op, int r) {
  const int d = c.dim();
  Int per(1);
  if (op == SubdivOp::barycentric) {
    // maximal chains per cell
    if (c.kind() == CellKind::simplex)
      for (int i = 2; i <= d + 1; ++i) per *= i;
    else
      for (int i = 1; i <= d; ++i) per *= 2 * i;
  } else {
    per = int_pow(Int(r), d);
    if (c.kind() == CellKind::cube)
      for (int i = 2; i <= d; ++i) per *= i;
  }
  return per * c.cell_count();
}

int cmd_subdivide(const Emit& emit, const std::string& arg, const std::string& op_name, int r,
                  std::uint64_t budget) {
  Complex c = load_complex(arg);
  SubdivOp op = op_name == "barycentric" ? SubdivOp::barycentric : SubdivOp::edgewise;
  Int estimate = refined_cell_estimate(c, op, r);
  if (estimate > Int(budget))
    throw budget_exceeded("refinement would produce " + estimate.str() +
                          " top cells, over the budget of " + std::to_string(budget));
  SubdividedComplex sc = subdivide(c, op, r);
  IntPolynomial h = RelativeComplex(sc.complex, {}).h_polynomial();
  bool rr = is_real_rooted(h);
  Json j = subdivided_to_json(sc);
  j["op"] = op_name;
  j["r"] = r;
  j["h"] = poly_report(h);
  j["real_rooted"] = rr;
  std::ostringstream text;
  text << "op: " << op_name;
  if (op == SubdivOp::edgewise) text << "  r: " << r;
  text << "\ncells: " << sc.complex.cell_count() << "  (from " << c.cell_count()
       << " source cells)\nh-polynomial: " << h.str() << "\nreal-rooted: " << yn(rr) << "\n";
  emit(j, text.str());
  return 0;
}

int cmd_shelling(const Emit& emit, const std::string& arg, const std::string& order_arg) {
  Complex c = load_complex(arg);
  std::vector<int> order = parse_order(order_arg, c.cell_count());
  ShellingCheck shc = is_shelling(c, order);
  ShellingCheck stc = is_stable_shelling(c, order);
  std::vector<ShellingStep> steps = shelling_steps(c, order);
  std::vector<IntPolynomial> hs = step_h_polynomials(c, order);
  IntPolynomial h_total;
  for (const IntPolynomial& h : hs) h_total = h_total + h;
  bool rr = is_real_rooted(h_total);

  Json jsteps = Json::array();
  bool steps_clean = true;  // nonnegative and real-rooted throughout
  for (std::size_t i = 0; i < steps.size(); ++i) {
    std::set<int> removed(steps[i].shared_facets.begin(), steps[i].shared_facets.end());
    bool stable = is_stable_removed_set(c.kind(), c.cell(steps[i].cell), c.dim(), removed);
    if (hs[i].has_negative_coeff() || !is_real_rooted(hs[i])) steps_clean = false;
    jsteps.push_back(Json{{"cell", steps[i].cell},
                          {"removed_facets", steps[i].shared_facets},
                          {"stable", stable},
                          {"h_coeffs", poly_to_json(hs[i])}});
  }
  Json order_json = nullptr;
  bool interlacing = false;
  std::vector<int> sorted_idx;
  if (steps_clean && !hs.empty()) {
    sorted_idx.resize(hs.size());
    std::iota(sorted_idx.begin(), sorted_idx.end(), 0);
    std::stable_sort(sorted_idx.begin(), sorted_idx.end(),
                     [&](int a, int b) { return compare_root_lists(hs[a], hs[b]) < 0; });
    std::vector<IntPolynomial> sorted;
    for (int i : sorted_idx) sorted.push_back(hs[i]);
    interlacing = is_interlacing_sequence(sorted);
    order_json = sorted_idx;
  }
  Json j;
  j["steps"] = std::move(jsteps);
  j["summary"] = Json{{"is_shelling", shc.ok},
                      {"is_stable", stc.ok},
                      {"h_total", poly_to_json(h_total)},
                      {"real_rooted", rr},
                      {"interlacing", interlacing},
                      {"interlacing_order", order_json}};
  if (!shc.ok)
    j["summary"]["failure"] = Json{{"check", "shelling"}, {"step", shc.failing_step},
                                   {"reason", shc.reason}};
  else if (!stc.ok)
    j["summary"]["failure"] = Json{{"check", "stable"}, {"step", stc.failing_step},
                                   {"reason", stc.reason}};

  std::ostringstream text;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    std::set<int> removed(steps[i].shared_facets.begin(), steps[i].shared_facets.end());
    bool stable = is_stable_removed_set(c.kind(), c.cell(steps[i].cell), c.dim(), removed);
    text << "step " << std::setw(2) << i + 1 << ": cell " << std::setw(2) << steps[i].cell
         << "  removed facets {";
    for (std::size_t t = 0; t < steps[i].shared_facets.size(); ++t)
      text << (t ? "," : "") << steps[i].shared_facets[t];
    text << "}  stable=" << yn(stable) << "  h = " << hs[i].str() << "\n";
  }
  text << "is_shelling: " << yn(shc.ok);
  if (!shc.ok) text << "  (" << shc.reason << ")";
  text << "\nis_stable: " << yn(stc.ok);
  if (shc.ok && !stc.ok) text << "  (" << stc.reason << ")";
  text << "\nh_total: " << h_total.str() << "\nreal-rooted: " << yn(rr) << "\n";
  if (order_json.is_null()) {
    text << "interlacing: not applicable (a step h is negative or not real-rooted)\n";
  } else {
    text << "interlacing: " << yn(interlacing) << "  (order";
    for (int i : sorted_idx) text << ' ' << i;
    text << ")\n";
  }
  emit(j, text.str());
  return 0;
}

int cmd_eulerian(const Emit& emit, int d, int l, int r) {
  std::vector<int> ls;
  if (l >= 0)
    ls.push_back(l);
  else
    for (int i = 0; i <= d; ++i) ls.push_back(i);
  Json rows = Json::array();
  std::ostringstream text;
  for (int li : ls) {
    IntPolynomial p = colored_eulerian(d, li, r);
    rows.push_back(Json{{"d", d},
                        {"l", li},
                        {"r", r},
                        {"coeffs", poly_to_json(p)},
                        {"poly", p.str()},
                        {"degree", p.degree()}});
    if (ls.size() == 1)
      text << p.str() << "\n";
    else
      text << "d=" << d << " l=" << li << " r=" << r << "  " << p.str() << "\n";
  }
  emit(Json{{"rows", std::move(rows)}}, text.str());
  return 0;
}

int cmd_interlace(const Emit& emit, const std::string& arg, bool sort) {
  Json jin = json_from_arg(arg);
  if (!jin.is_array()) throw parse_error("--polys must be a JSON array of coefficient arrays");
  std::vector<IntPolynomial> ps;
  for (const auto& e : jin) ps.push_back(poly_from_json(e));
  if (ps.empty()) throw parse_error("--polys: need at least one polynomial");
  std::vector<bool> rr;
  for (const IntPolynomial& p : ps) rr.push_back(is_real_rooted(p));
  std::vector<int> order(ps.size());
  std::iota(order.begin(), order.end(), 0);
  if (sort) {
    bool sortable = std::all_of(rr.begin(), rr.end(), [](bool b) { return b; }) &&
                    std::none_of(ps.begin(), ps.end(),
                                 [](const IntPolynomial& p) { return p.is_zero(); });
    if (!sortable)
      throw unsupported_input("--sort needs nonzero real-rooted polynomials throughout");
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return compare_root_lists(ps[a], ps[b]) < 0; });
  }
  std::vector<IntPolynomial> seq;
  for (int i : order) seq.push_back(ps[i]);
  bool ok = is_interlacing_sequence(seq);
  Json j;
  j["count"] = ps.size();
  j["real_rooted"] = rr;
  j["order"] = order;
  j["interlacing"] = ok;
  std::ostringstream text;
  text << "polynomials: " << ps.size() << "\nreal-rooted:";
  for (bool b : rr) text << ' ' << yn(b);
  text << "\norder:";
  for (int i : order) text << ' ' << i;
  text << "\ninterlacing sequence: " << yn(ok) << "\n";
  emit(j, text.str());
  return 0;
}

int cmd_lineshell(const Emit& emit, const std::string& poly_arg, const std::string& point_arg,
                  const std::string& dir_arg, int trials, std::uint64_t seed) {
  PolytopeHV P = polytope_from_json(json_from_arg(poly_arg));
  if (trials > 0) {
    LineSearchStats st = random_line_search(P, trials, seed);
    Json j{{"trials", st.trials},
           {"seed", seed},
           {"shellings", st.shellings},
           {"stable", st.stable},
           {"strongly_stable", st.strongly_stable},
           {"genericity_failures", st.genericity_failures},
           {"chain_ok", true}};
    std::ostringstream text;
    text << "trials: " << st.trials << "  (seed " << seed << ")\nshellings: " << st.shellings
         << "\nstable: " << st.stable << "\nstrongly stable: " << st.strongly_stable
         << "\ngenericity failures: " << st.genericity_failures
         << "\nchain strongly-stable => facet-condition => stable held on every sample\n";
    emit(j, text.str());
    return 0;
  }
  if (point_arg.empty() || dir_arg.empty())
    throw unsupported_input("lineshell needs either --trials or both --point and --dir");
  LineQuery L{parse_rat_csv(point_arg, "--point"), parse_rat_csv(dir_arg, "--dir")};
  try {
    LineShellingResult res = line_shelling_order(P, L);
    LineCheck lc = is_stable_line_shelling(P, L);
    RegionCheck facet = facet_region_check(P, L);
    bool strong = is_strongly_stable(P, L);
    Json jparams = Json::array();
    for (const Rat& t : res.params) jparams.push_back(rat_to_string(t));
    Json j{{"point", Json::array()}, {"dir", Json::array()}};
    for (const Rat& x : L.p) j["point"].push_back(rat_to_string(x));
    for (const Rat& x : L.v) j["dir"].push_back(rat_to_string(x));
    j["order"] = res.order;
    j["exit_count"] = res.exit_count;
    j["params"] = std::move(jparams);
    j["stable"] = lc.ok;
    if (!lc.ok) j["failure"] = Json{{"step", lc.failing_step}, {"reason", lc.reason}};
    j["facet_condition"] = facet.all;
    j["strongly_stable"] = strong;
    std::ostringstream text;
    text << "order:";
    for (int i = 0; i < static_cast<int>(res.order.size()); ++i)
      text << (i == res.exit_count ? " |" : "") << ' ' << res.order[i];
    text << "  (| marks the pass through infinity)\nparams:";
    for (int i = 0; i < static_cast<int>(res.params.size()); ++i)
      text << (i == res.exit_count ? " |" : "") << ' ' << rat_to_string(res.params[i]);
    text << "\nstable: " << yn(lc.ok);
    if (!lc.ok) text << "  (step " << lc.failing_step << ": " << lc.reason << ")";
    text << "\nfacet-region condition: " << yn(facet.all)
         << "\nstrongly stable: " << yn(strong) << "\n";
    emit(j, text.str());
    return 0;
  } catch (const genericity_error& e) {
    std::cerr << "error: non-generic line: " << e.what() << "\n";
    try {
      LineQuery fix = suggest_generic_query(P, L);
      std::cerr << "try a generic query: --point " << rat_csv(fix.p) << " --dir "
                << rat_csv(fix.v) << "\n";
    } catch (const std::exception&) {
      // no nearby generic query found; leave just the diagnostic
    }
    return 2;
  }
}

int cmd_verify(const Emit& emit, std::vector<std::string> ids) {
  if (ids.empty()) ids = verification_suite_ids();
  std::vector<SuiteResult> results;
  for (const std::string& id : ids) results.push_back(run_verification_suite(id));
  bool all = true;
  Json jsuites = Json::array();
  std::ostringstream text;
  for (const SuiteResult& r : results) {
    all = all && r.pass;
    jsuites.push_back(
        Json{{"id", r.id}, {"pass", r.pass}, {"seconds", r.seconds}, {"notes", r.notes}});
    text << (r.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(20) << r.id
         << std::right << std::fixed << std::setprecision(2) << std::setw(7) << r.seconds
         << "s\n";
    if (!r.notes.empty()) text << "      " << r.notes << "\n";
  }
  int failed = 0;
  for (const SuiteResult& r : results)
    if (!r.pass) ++failed;
  text << (all ? "all suites passed"
               : std::to_string(failed) + " of " + std::to_string(results.size()) +
                     " suites failed")
       << "\n";
  emit(Json{{"suites", std::move(jsuites)}, {"all_pass", all}}, text.str());
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rational toolkit for h-polynomials of subdivided shellable complexes"};
  app.require_subcommand(1);

  Emit emit;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 2024;
  app.add_option("--format", emit.format, "report rendering: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", emit.out_path, "write the report to FILE instead of stdout");
  app.add_option("--budget", budget, "cap on enumerated objects for expensive expansions");
  app.add_option("--seed", seed, "seed for randomized searches (echoed in reports)");

  auto* c_cmd =
      app.add_subcommand("construct",
                         "emit a gallery or parameterized complex with cell order and "
                         "expected verdicts")
          ->fallthrough();
  std::string c_name;
  bool c_list = false;
  int p_d = -1, p_l = -1, p_k = -1, p_folds = -1;
  std::vector<int> p_sides;
  c_cmd->add_option("name", c_name, "scenario or family name");
  c_cmd->add_flag("--list", c_list, "list available names");
  c_cmd->add_option("--d", p_d, "dimension parameter");
  c_cmd->add_option("--l", p_l, "cut count (cuboid)");
  c_cmd->add_option("--k", p_k, "stacking count (stacked)");
  c_cmd->add_option("--folds", p_folds, "capped walls: 1 or 2");
  c_cmd->add_option("--sides", p_sides, "pile box sides, e.g. --sides 1,3,2")->delimiter(',');

  auto* f_cmd =
      app.add_subcommand("faces", "face counts and f-polynomial of a complex")->fallthrough();
  std::string f_complex;
  f_cmd->add_option("--complex", f_complex, "complex JSON (file path or inline)")->required();

  auto* h_cmd =
      app.add_subcommand("hpoly", "h-polynomial of a complex and real-rootedness")->fallthrough();
  std::string h_complex;
  h_cmd->add_option("--complex", h_complex, "complex JSON (file path or inline)")->required();

  auto* s_cmd =
      app.add_subcommand("subdivide", "refine a complex; report cells, provenance and h")
          ->fallthrough();
  std::string s_complex, s_op = "barycentric";
  int s_r = 2;
  s_cmd->add_option("--complex", s_complex, "complex JSON (file path or inline)")->required();
  s_cmd->add_option("--op", s_op, "barycentric or edgewise")
      ->check(CLI::IsMember({"barycentric", "edgewise"}));
  s_cmd->add_option("--r", s_r, "edgewise refinement order (>= 1)");

  auto* sh_cmd =
      app.add_subcommand("shelling", "per-step shelling report with stability and step h's")
          ->fallthrough();
  std::string sh_complex, sh_order = "lex";
  sh_cmd->add_option("--complex", sh_complex, "complex JSON (file path or inline)")->required();
  sh_cmd->add_option("--order", sh_order, "\"lex\" (listed order) or comma-separated indices");

  auto* e_cmd =
      app.add_subcommand("eulerian", "colored Eulerian polynomial rows")->fallthrough();
  int e_d = 0, e_l = -1, e_r = 1;
  e_cmd->add_option("--d", e_d, "number of letters")->required();
  e_cmd->add_option("--l", e_l, "marked prefix length (default: all 0..d)");
  e_cmd->add_option("--r", e_r, "color count (>= 1)");

  auto* i_cmd =
      app.add_subcommand("interlace", "test a polynomial list for interlacing")->fallthrough();
  std::string i_polys;
  bool i_sort = false;
  i_cmd->add_option("--polys", i_polys, "JSON array of coefficient arrays (file or inline)")
      ->required();
  i_cmd->add_flag("--sort", i_sort, "sort by root lists before testing");

  auto* l_cmd =
      app.add_subcommand("lineshell", "line shelling walk or seeded random line search")
          ->fallthrough();
  std::string l_poly, l_point, l_dir;
  int l_trials = 0;
  l_cmd->add_option("--polytope", l_poly, "polytope JSON (file path or inline)")->required();
  l_cmd->add_option("--point", l_point, "line base point, comma-separated rationals");
  l_cmd->add_option("--dir", l_dir, "line direction, comma-separated rationals");
  l_cmd->add_option("--trials", l_trials, "random line count (uses --seed)");

  auto* v_cmd =
      app.add_subcommand("verify", "run verification suites; exit 0 only if all pass")
          ->fallthrough();
  std::vector<std::string> v_ids;
  v_cmd->add_option("ids", v_ids, "suite identifiers (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_cmd) return cmd_construct(emit, c_name, c_list, p_d, p_l, p_k, p_folds, p_sides);
    if (*f_cmd) return cmd_faces(emit, f_complex);
    if (*h_cmd) return cmd_hpoly(emit, h_complex);
    if (*s_cmd) return cmd_subdivide(emit, s_complex, s_op, s_r, budget);
    if (*sh_cmd) return cmd_shelling(emit, sh_complex, sh_order);
    if (*e_cmd) return cmd_eulerian(emit, e_d, e_l, e_r);
    if (*i_cmd) return cmd_interlace(emit, i_polys, i_sort);
    if (*l_cmd) return cmd_lineshell(emit, l_poly, l_point, l_dir, l_trials, seed);
    if (*v_cmd) return cmd_verify(emit, v_ids);
  } catch (const parse_error& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const invalid_complex& e) {
    std::cerr << "error: invalid complex: " << e.what() << "\n";
    return 2;
  } catch (const genericity_error& e) {
    std::cerr << "error: non-generic line: " << e.what() << "\n";
    return 2;
  } catch (const unsupported_input& e) {
    std::cerr << "error: unsupported input: " << e.what() << "\n";
    return 2;
  } catch (const budget_exceeded& e) {
    std::cerr << "error: budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
