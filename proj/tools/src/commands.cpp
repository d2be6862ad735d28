#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "poissonkit/errors.hpp"
#include "poissonkit/poisson_cohomology.hpp"
#include "poissonkit_cli/cli.hpp"
#include "poissonkit_cli/formats.hpp"

namespace poissonkit::cli {
namespace {

constexpr const char* kStableTheorem =
    "Stable by Theorem (H^2 = 0 criterion): a fixed point whose isotropy algebra has vanishing second "
    "Chevalley-Eilenberg cohomology is stable.";
constexpr const char* kLinearCorollary =
    "Corollary (linear structures): the origin of a linear Poisson structure is stable if and only if H^2 = 0; "
    "otherwise a pencil pi0 + t*pi1 from a nontrivial 2-cocycle has no zero for t != 0.";
constexpr const char* kConverseOnlyLinear =
    "H^2 = 0 is sufficient for stability; its necessity is established only for linear structures.";
constexpr const char* kWhitehead = "Second Whitehead lemma: H^1 = H^2 = 0 for semisimple Lie algebras.";
constexpr const char* kCartan = "Cartan's criterion: a Lie algebra is semisimple iff its Killing form is nondegenerate.";
constexpr const char* kJacobi = "Jacobi identity: [[x,y],z] + [[y,z],x] + [[z,x],y] = 0.";
constexpr const char* kPoissonCondition = "A bivector pi is Poisson iff its Schouten bracket [pi, pi] vanishes.";
constexpr const char* kLiePoisson =
    "Lie-Poisson structure: pi^{ij} = -sum_k c^k_{ij} x_k; the origin is a fixed point with isotropy algebra g.";
constexpr const char* kIsotropy =
    "Isotropy algebra at a fixed point x0: the linear part of pi, c^k_{ij} = -d_k pi^{ij}(x0).";
constexpr const char* kPointLeaf =
    "For a fixed point the relative Poisson cohomology is the Chevalley-Eilenberg cohomology of the isotropy "
    "algebra.";
constexpr const char* kDeformations =
    "H^2_pi parametrizes infinitesimal deformations of pi (T_pi Poiss = H^2_pi); values are formal, per "
    "homogeneous degree.";
constexpr const char* kExactness = "pi is exact when pi = [X, pi] for a vector field X; linear structures admit X = -E.";
constexpr const char* kPencil =
    "Pencil pi_t = pi0 + t*pi1 with [pi0, pi1] = [pi1, pi1] = 0; x is a zero of pi_t iff pi0(x) = -t*pi1, "
    "solvable iff t*c is a coboundary.";
constexpr const char* kStableDefinition =
    "Definition of stable fixed point: every nearby Poisson structure has a fixed point nearby (checked "
    "numerically along the pencil).";

enum class Output { Table, Json };

struct Report {
  std::string command;
  Json args = Json::object();
  std::string digest;
  Json results = Json::object();
  std::vector<std::pair<std::string, std::string>> rows;
  std::vector<std::string> citations;
};

struct Outcome {
  Report report;
  int code = kOk;
  std::string diagnostic;
};

Outcome started(std::string command) {
  Outcome o;
  o.report.command = std::move(command);
  return o;
}

struct Options {
  std::string output = "table";
  std::string file;
  int max_degree = -1;
  std::string point;
  std::size_t form_degree = 2;
  std::size_t poly_degree_max = 2;
  std::size_t degree_cap = 1;
  std::string cocycle;
  std::vector<std::string> t_values;
  double t_max = 1.0;
  std::size_t steps = 50;
  double radius = 1.0;
  std::string start;
};

struct Input {
  Json json;
  std::string digest;
};

Input load(const std::string& path) {
  const std::string text = read_file(path);
  return {parse_json_text(text), sha256_hex(text)};
}

void emit(const Report& r, Output mode, std::ostream& out) {
  if (mode == Output::Json) {
    Json j;
    j["command"] = Json{{"name", r.command}, {"args", r.args}};
    j["input_digest"] = "sha256:" + r.digest;
    j["results"] = r.results;
    j["citations"] = r.citations;
    out << j.dump(2) << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows{{"command", r.command},
                                                        {"input", "sha256:" + r.digest}};
  rows.insert(rows.end(), r.rows.begin(), r.rows.end());
  std::size_t width = 0;
  for (const auto& [label, value] : rows) width = std::max(width, label.size());
  for (const auto& [label, value] : rows) {
    std::istringstream lines(value);
    std::string line;
    bool first = true;
    while (std::getline(lines, line) || first) {
      out << std::left << std::setw(static_cast<int>(width) + 2) << (first ? label : "") << line << '\n';
      first = false;
    }
  }
  if (!r.citations.empty()) {
    out << "\ncitations\n";
    for (const auto& c : r.citations) out << "  - " << c << '\n';
  }
}

std::string display(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

std::string combination(const std::map<std::size_t, Rational>& row, const std::vector<std::string>& names) {
  std::string s;
  for (const auto& [k, q] : row) {
    const Rational mag = abs(q);
    if (s.empty()) {
      if (q < 0) s += "-";
    } else {
      s += q < 0 ? " - " : " + ";
    }
    if (mag != 1) s += to_string(mag) + " ";
    s += names[k];
  }
  return s.empty() ? "0" : s;
}

std::string bracket_table(const LieAlgebra& g) {
  std::string s;
  const auto& names = g.basis_names();
  for (const auto& [ij, row] : g.brackets()) {
    if (!s.empty()) s += '\n';
    s += "[" + names[ij.first] + ", " + names[ij.second] + "] = " + combination(row, names);
  }
  return s.empty() ? "abelian" : s;
}

std::string matrix_table(const std::vector<Vector>& m) {
  std::string s;
  for (const auto& row : m) s += (s.empty() ? "" : "\n") + display(row);
  return s;
}

Json matrix_json(const std::vector<Vector>& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(to_json(row));
  return out;
}

LieAlgebraFile load_lie_file(const Json& j) {
  if (detect_kind(j) != FileKind::LieAlgebra) throw ParseError("field $: expected a Lie algebra file");
  return lie_file_from_json(j);
}

PoissonStructure load_structure(const Json& j) {
  switch (detect_kind(j)) {
    case FileKind::LieAlgebra:
      return from_lie_algebra(build(lie_file_from_json(j)));
    case FileKind::Bivector:
      return certify(bivector_from_json(j));
    default:
      throw ParseError("field $: expected a Lie algebra or bivector file");
  }
}

Json violation_json(const StructureConstants::Violation& v) {
  return Json{{"i", v.i}, {"j", v.j}, {"k", v.k}, {"l", v.l}, {"residual", to_string(v.residual)}};
}

std::string violation_text(const StructureConstants::Violation& v, const std::vector<std::string>& names) {
  return "Jacobiator(" + names[v.i] + ", " + names[v.j] + ", " + names[v.k] + ") has component " +
         to_string(v.residual) + " along " + names[v.l];
}

Outcome check_lie(const Input& in) {
  Outcome o = started("check-lie");
  Report& r = o.report;
  const LieAlgebraFile f = load_lie_file(in.json);
  r.results["dim"] = f.dim;
  r.rows.emplace_back("dim", std::to_string(f.dim));
  r.citations.push_back(kJacobi);
  if (const auto v = StructureConstants(f.dim, f.brackets).jacobi_violation()) {
    r.results["jacobi"] = Json{{"holds", false}, {"violation", violation_json(*v)}};
    r.rows.emplace_back("jacobi", "violated: " + violation_text(*v, f.basis));
    o.code = kPreconditionFailed;
    o.diagnostic = "Jacobi identity fails: " + violation_text(*v, f.basis);
    return o;
  }
  const LieAlgebra g = build(f);
  const auto killing = killing_form(g);
  const bool semisimple = is_semisimple(g);
  r.results["jacobi"] = Json{{"holds", true}};
  r.results["killing_form"] = matrix_json(killing);
  r.results["semisimple"] = semisimple;
  r.rows.emplace_back("jacobi", "holds");
  r.rows.emplace_back("brackets", bracket_table(g));
  r.rows.emplace_back("killing form", matrix_table(killing));
  r.rows.emplace_back("semisimple", semisimple ? "true" : "false");
  r.citations.push_back(kCartan);
  return o;
}

Outcome ce_cohomology_cmd(const Options& opt, const Input& in) {
  Outcome o = started("ce-cohomology");
  Report& r = o.report;
  const LieAlgebra g = build(load_lie_file(in.json));
  const std::size_t max_degree = opt.max_degree < 0 ? g.dim() : static_cast<std::size_t>(opt.max_degree);
  r.args["max_degree"] = max_degree;
  Json dims = Json::array();
  Json degrees = Json::array();
  std::string dims_text;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    const CeCohomology h = ce_cohomology(g, k);
    dims.push_back(h.dim);
    Json reps = Json::array();
    std::string reps_text;
    for (const auto& c : h.representatives) {
      reps.push_back(cochain_to_json(c));
      reps_text += (reps_text.empty() ? "" : "\n") + to_string(c, g.basis_names());
    }
    degrees.push_back(Json{{"degree", k}, {"dim", h.dim}, {"representatives", reps}});
    dims_text += (k ? ", " : "") + std::to_string(h.dim);
    r.rows.emplace_back("H^" + std::to_string(k), std::to_string(h.dim) + (reps_text.empty() ? "" : "\n" + reps_text));
  }
  r.rows.insert(r.rows.begin(), {"dims", dims_text});
  r.results["dim"] = g.dim();
  r.results["dims"] = dims;
  r.results["degrees"] = degrees;
  r.citations.push_back(kStableTheorem);
  if (max_degree >= 2 && is_semisimple(g)) r.citations.push_back(kWhitehead);
  return o;
}

Outcome check_jacobi(const Input& in) {
  Outcome o = started("check-jacobi");
  Report& r = o.report;
  if (detect_kind(in.json) == FileKind::LieAlgebra) {
    const LieAlgebraFile f = lie_file_from_json(in.json);
    r.results["kind"] = "lie-algebra";
    r.citations.push_back(kJacobi);
    if (const auto v = StructureConstants(f.dim, f.brackets).jacobi_violation()) {
      r.results["holds"] = false;
      r.results["violation"] = violation_json(*v);
      r.rows.emplace_back("jacobi", "violated: " + violation_text(*v, f.basis));
      o.code = kPreconditionFailed;
      o.diagnostic = "Jacobi identity fails: " + violation_text(*v, f.basis);
    } else {
      r.results["holds"] = true;
      r.rows.emplace_back("jacobi", "holds");
    }
    return o;
  }
  if (detect_kind(in.json) != FileKind::Bivector) throw ParseError("field $: expected a Lie algebra or bivector file");
  const PolyMultivector pi = bivector_from_json(in.json);
  r.results["kind"] = "bivector";
  r.citations.push_back(kPoissonCondition);
  r.rows.emplace_back("pi", to_string(pi));
  const PolyMultivector self = schouten(pi, pi);
  r.results["holds"] = self.is_zero();
  r.results["schouten_self_bracket"] = field_to_json(self);
  r.rows.emplace_back("[pi, pi]", to_string(self));
  r.rows.emplace_back("jacobi", self.is_zero() ? "holds" : "violated");
  if (!self.is_zero()) {
    o.code = kPreconditionFailed;
    try {
      certify(pi);
    } catch (const NotPoisson& e) {
      o.diagnostic = e.what();
    }
  }
  return o;
}

Outcome linear_poisson(const Input& in) {
  Outcome o = started("linear-poisson");
  const PoissonStructure p = from_lie_algebra(build(load_lie_file(in.json)));
  o.report.results["bivector"] = bivector_to_json(p.bivector());
  o.report.rows.emplace_back("pi", to_string(p.bivector()));
  o.report.citations.push_back(kLiePoisson);
  return o;
}

Outcome isotropy_cmd(const Options& opt, const Input& in) {
  Outcome o = started("isotropy");
  Report& r = o.report;
  const PoissonStructure p = load_structure(in.json);
  const Vector x0 = parse_point(opt.point, p.ambient_dim());
  r.args["point"] = to_json(x0);
  const LieAlgebra g = isotropy_at(p, x0);
  r.results["point"] = to_json(x0);
  r.results["isotropy"] = to_json(lie_file_of(g));
  r.rows.emplace_back("point", display(x0));
  r.rows.emplace_back("isotropy", bracket_table(g));
  r.citations.push_back(kIsotropy);
  return o;
}

Outcome poisson_cohomology_cmd(const Options& opt, const Input& in) {
  Outcome o = started("poisson-cohomology");
  Report& r = o.report;
  const PoissonStructure p = load_structure(in.json);
  r.args["form_degree"] = opt.form_degree;
  r.args["poly_degree_max"] = opt.poly_degree_max;
  const std::size_t h = homogeneity_degree(p);
  Json pieces = Json::array();
  for (const auto& piece : formal_poisson_cohomology(p, opt.form_degree, opt.poly_degree_max)) {
    Json reps = Json::array();
    std::string text = std::to_string(piece.dim);
    for (const auto& rep : piece.representatives) {
      reps.push_back(field_to_json(rep));
      text += "\n" + to_string(rep);
    }
    pieces.push_back(Json{{"poly_degree", piece.poly_degree}, {"dim", piece.dim}, {"representatives", reps}});
    r.rows.emplace_back("H^" + std::to_string(opt.form_degree) + " degree " + std::to_string(piece.poly_degree), text);
  }
  r.results["form_degree"] = opt.form_degree;
  r.results["homogeneity_degree"] = h;
  r.results["scope"] = "formal, per homogeneous degree";
  r.results["pieces"] = pieces;
  r.rows.insert(r.rows.begin(), {"scope", "formal, per homogeneous degree"});
  r.citations.push_back(kDeformations);
  return o;
}

Outcome exactness_cmd(const Options& opt, const Input& in) {
  Outcome o = started("exactness");
  Report& r = o.report;
  const PoissonStructure p = load_structure(in.json);
  r.args["degree_cap"] = opt.degree_cap;
  const auto w = exactness_witness(p, opt.degree_cap);
  const bool verified = w && schouten(*w, p.bivector()) == p.bivector();
  const bool euler = schouten(negative_euler_field(p.ambient_dim()), p.bivector()) == p.bivector();
  r.results["degree_cap"] = opt.degree_cap;
  r.results["exact"] = w.has_value();
  r.results["witness"] = w ? field_to_json(*w) : Json(nullptr);
  r.results["verified"] = verified;
  r.results["negative_euler_field_verifies"] = euler;
  r.rows.emplace_back("exact", w ? "yes" : "no witness within degree cap");
  if (w) r.rows.emplace_back("X", to_string(*w));
  r.rows.emplace_back("[X, pi] = pi", verified ? "verified" : "n/a");
  r.rows.emplace_back("[-E, pi] = pi", euler ? "yes" : "no");
  r.citations.push_back(kExactness);
  return o;
}

Outcome classify_cmd(const Options& opt, const Input& in) {
  Outcome o = started("classify");
  Report& r = o.report;
  const PoissonStructure p = load_structure(in.json);
  const Vector x0 = parse_point(opt.point, p.ambient_dim());
  r.args["point"] = to_json(x0);
  const StabilityVerdict v = classify_fixed_point(p, x0);
  const bool semisimple = is_semisimple(v.isotropy);
  Json certified = Json::array();
  std::string certified_text;
  for (const auto& t : v.certified_t) {
    certified.push_back(to_string(t));
    certified_text += (certified_text.empty() ? "" : ", ") + to_string(t);
  }
  r.results["point"] = to_json(x0);
  r.results["verdict"] = to_string(v.tag);
  r.results["h2_dim"] = v.h2_dim;
  r.results["isotropy"] = to_json(lie_file_of(v.isotropy));
  r.results["semisimple"] = semisimple;
  r.results["witness"] = v.witness ? pencil_to_json(*v.witness) : Json(nullptr);
  r.results["certified_t"] = certified;
  r.results["empty_for_all_nonzero_t"] = v.empty_for_all_nonzero_t;
  r.results["notes"] = v.notes;

  r.rows.emplace_back("point", display(x0));
  r.rows.emplace_back("verdict", to_string(v.tag));
  r.rows.emplace_back("isotropy", bracket_table(v.isotropy));
  r.rows.emplace_back("dim H^2", std::to_string(v.h2_dim));
  if (v.witness) {
    r.rows.emplace_back("witness pi0", to_string(v.witness->base().bivector()));
    r.rows.emplace_back("witness pi1", to_string(v.witness->direction()));
    r.rows.emplace_back("no zero at t", certified_text);
    r.rows.emplace_back("all t != 0", v.empty_for_all_nonzero_t ? "no zero" : "not certified");
  }
  r.rows.emplace_back("notes", v.notes);

  switch (v.tag) {
    case Verdict::Stable:
      r.citations.push_back(kStableTheorem);
      if (semisimple) r.citations.push_back(kWhitehead);
      break;
    case Verdict::UnstableWitness:
      r.citations.push_back(kLinearCorollary);
      r.citations.push_back(kPencil);
      break;
    case Verdict::Inconclusive:
      r.citations.push_back(kStableTheorem);
      r.citations.push_back(kConverseOnlyLinear);
      break;
  }
  r.citations.push_back(kPointLeaf);
  return o;
}

Json zero_set_json(const Rational& t, const ZeroSet& z) {
  Json kernel = Json::array();
  for (const auto& k : z.kernel_basis) kernel.push_back(to_json(k));
  return Json{{"t", to_string(t)},
              {"empty", z.empty},
              {"particular", z.particular ? to_json(*z.particular) : Json(nullptr)},
              {"kernel_basis", kernel}};
}

Outcome pencil_cmd(const Options& opt, const Input& in) {
  Outcome o = started("pencil");
  Report& r = o.report;
  const LieAlgebra g = build(load_lie_file(in.json));
  CeCochain c(g.dim(), 2);
  if (!opt.cocycle.empty()) {
    const Input cocycle = load(opt.cocycle);
    if (detect_kind(cocycle.json) != FileKind::Cochain) throw ParseError("--cocycle: expected a cochain file");
    c = cochain_from_json(cocycle.json);
    if (c.algebra_dim() != g.dim() || c.degree() != 2) {
      throw ParseError("--cocycle: expected a 2-cochain on a " + std::to_string(g.dim()) + "-dimensional algebra");
    }
    r.args["cocycle_digest"] = "sha256:" + cocycle.digest;
  } else {
    const CeCohomology h2 = ce_cohomology(g, 2);
    if (h2.representatives.empty()) {
      throw PreconditionError("H^2 of the algebra vanishes; pass --cocycle to build a pencil from a coboundary");
    }
    c = h2.representatives.front();
  }
  std::vector<Rational> ts;
  if (opt.t_values.empty()) {
    ts = witness_sample_t();
  } else {
    for (const auto& text : opt.t_values) {
      try {
        ts.push_back(parse_rational(text));
      } catch (const std::invalid_argument& e) {
        throw ParseError("--t: " + std::string(e.what()));
      }
    }
  }
  Json t_echo = Json::array();
  for (const auto& t : ts) t_echo.push_back(to_string(t));
  r.args["t"] = t_echo;

  const Pencil p = pencil_from_cocycle(g, c);
  const bool coboundary = coboundary_witness(g, c).has_value();
  Json zero_sets = Json::array();
  for (const auto& t : ts) {
    const ZeroSet z = pencil_zero_set(p, t);
    zero_sets.push_back(zero_set_json(t, z));
    std::string text = z.empty ? "empty" : "x = " + display(*z.particular);
    for (const auto& k : z.kernel_basis) text += " + s " + display(k);
    r.rows.emplace_back("zeros at t = " + to_string(t), text);
  }
  const bool all_empty = zero_set_empty_for_all_nonzero_t(p);
  r.results["cocycle"] = cochain_to_json(c);
  r.results["cocycle_class"] = coboundary ? "coboundary" : "nontrivial";
  r.results["pencil"] = pencil_to_json(p);
  r.results["zero_sets"] = zero_sets;
  r.results["empty_for_all_nonzero_t"] = all_empty;
  r.rows.insert(r.rows.begin(), {{"cocycle", to_string(c, g.basis_names())},
                                 {"class", coboundary ? "coboundary" : "nontrivial"},
                                 {"pi0", to_string(p.base().bivector())},
                                 {"pi1", to_string(p.direction())}});
  r.rows.emplace_back("all t != 0", all_empty ? "no zero" : "zeros exist");
  r.citations.push_back(kPencil);
  if (!coboundary) r.citations.push_back(kLinearCorollary);
  return o;
}

std::vector<double> parse_start(const std::string& text, std::size_t n) {
  std::vector<double> out;
  for (const auto& q : parse_point(text, n)) out.push_back(q.get_d());
  return out;
}

Outcome track_cmd(const Options& opt, const Input& in) {
  Outcome o = started("track");
  Report& r = o.report;
  if (detect_kind(in.json) != FileKind::Pencil) throw ParseError("field $: expected a pencil file");
  const Pencil p = pencil_from_json(in.json);
  if (!std::isfinite(opt.t_max) || opt.t_max < 0) throw ParseError("--t-max: expected a finite nonnegative number");
  if (opt.steps == 0) throw ParseError("--steps: expected at least one grid point");
  if (!std::isfinite(opt.radius) || opt.radius <= 0) throw ParseError("--radius: expected a positive number");
  std::vector<double> grid;
  for (std::size_t i = 0; i < opt.steps; ++i) {
    grid.push_back(opt.steps == 1 ? 0.0 : opt.t_max * static_cast<double>(i) / static_cast<double>(opt.steps - 1));
  }
  const std::vector<double> start = parse_start(opt.start, p.ambient_dim());
  r.args["t_max"] = opt.t_max;
  r.args["steps"] = opt.steps;
  r.args["radius"] = opt.radius;
  r.args["start"] = start;

  const Vector origin(p.ambient_dim());
  const bool linear = is_linear_at(p.base().bivector(), origin);
  Json trajectory = Json::array();
  std::ostringstream text;
  text << std::setprecision(6);
  for (const auto& point : track_zero_numeric(p, grid, start, opt.radius)) {
    Json entry{{"t", point.t}, {"zero", point.zero ? Json(*point.zero) : Json(nullptr)}, {"residual", point.residual}};
    text << "t = " << point.t << ": ";
    if (point.zero) {
      text << "(";
      for (std::size_t i = 0; i < point.zero->size(); ++i) text << (i ? ", " : "") << (*point.zero)[i];
      text << ")";
    } else {
      text << "no zero";
    }
    text << "  residual " << point.residual;
    if (linear) {
      const bool exact_empty = pencil_zero_set(p, Rational(point.t)).empty;
      entry["exact_zero_set_empty"] = exact_empty;
      text << (exact_empty ? "  exact: empty" : "  exact: nonempty");
    }
    text << '\n';
    trajectory.push_back(std::move(entry));
  }
  r.results["pencil"] = pencil_to_json(p);
  r.results["trajectory"] = trajectory;
  r.rows.emplace_back("pi0", to_string(p.base().bivector()));
  r.rows.emplace_back("pi1", to_string(p.direction()));
  r.rows.emplace_back("trajectory", text.str());
  r.citations.push_back(kStableDefinition);
  r.citations.push_back(kPencil);
  return o;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Lie algebra and Poisson cohomology, and stability of Poisson fixed points.", "poissonkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--output", opt.output, "Report format")->check(CLI::IsMember({"json", "table"}));

  const auto with_file = [&](const char* name, const char* about, const char* file_help) {
    CLI::App* sub = app.add_subcommand(name, about);
    sub->add_option("file", opt.file, file_help)->required();
    return sub;
  };
  CLI::App* check_lie_sub = with_file("check-lie", "Jacobi identity, Killing form and semisimplicity", "Lie algebra file");
  CLI::App* ce_sub = with_file("ce-cohomology", "Chevalley-Eilenberg cohomology with representatives", "Lie algebra file");
  ce_sub->add_option("--max-degree", opt.max_degree, "Highest degree (default: dimension)")->check(CLI::NonNegativeNumber);
  CLI::App* jacobi_sub = with_file("check-jacobi", "Jacobi identity of a bracket or [pi, pi] = 0", "Lie algebra or bivector file");
  CLI::App* linear_sub = with_file("linear-poisson", "Lie-Poisson bivector of a Lie algebra", "Lie algebra file");
  CLI::App* isotropy_sub = with_file("isotropy", "Isotropy Lie algebra at a fixed point", "Bivector or Lie algebra file");
  isotropy_sub->add_option("--point", opt.point, "Comma-separated exact coordinates (default: origin)");
  CLI::App* pcoh_sub = with_file("poisson-cohomology", "Formal Poisson cohomology per homogeneous degree", "Bivector or Lie algebra file");
  pcoh_sub->add_option("--form-degree", opt.form_degree, "Multivector degree k")->required();
  pcoh_sub->add_option("--poly-degree-max", opt.poly_degree_max, "Highest coefficient degree")->capture_default_str();
  CLI::App* exact_sub = with_file("exactness", "Vector field X with [X, pi] = pi", "Bivector or Lie algebra file");
  exact_sub->add_option("--degree-cap", opt.degree_cap, "Highest coefficient degree of X")->capture_default_str();
  CLI::App* classify_sub = with_file("classify", "Stability verdict at a fixed point", "Bivector or Lie algebra file");
  classify_sub->add_option("--point", opt.point, "Comma-separated exact coordinates (default: origin)");
  CLI::App* pencil_sub = with_file("pencil", "Pencil from a 2-cocycle and its exact zero sets", "Lie algebra file");
  pencil_sub->add_option("--cocycle", opt.cocycle, "2-cochain file (default: first H^2 representative)");
  pencil_sub->add_option("--t", opt.t_values, "Comma-separated exact t values")->delimiter(',');
  CLI::App* track_sub = with_file("track", "Numeric continuation of a zero along a pencil", "Pencil file or pencil report");
  track_sub->add_option("--t-max", opt.t_max, "Grid end point")->capture_default_str();
  track_sub->add_option("--steps", opt.steps, "Number of grid points")->capture_default_str();
  track_sub->add_option("--radius", opt.radius, "Ball radius around the start point")->capture_default_str();
  track_sub->add_option("--start", opt.start, "Comma-separated start point (default: origin)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kParseError;
  }
  const Output mode = opt.output == "json" ? Output::Json : Output::Table;

  try {
    const Input in = load(opt.file);
    Outcome result;
    if (app.got_subcommand(check_lie_sub)) {
      result = check_lie(in);
    } else if (app.got_subcommand(ce_sub)) {
      result = ce_cohomology_cmd(opt, in);
    } else if (app.got_subcommand(jacobi_sub)) {
      result = check_jacobi(in);
    } else if (app.got_subcommand(linear_sub)) {
      result = linear_poisson(in);
    } else if (app.got_subcommand(isotropy_sub)) {
      result = isotropy_cmd(opt, in);
    } else if (app.got_subcommand(pcoh_sub)) {
      result = poisson_cohomology_cmd(opt, in);
    } else if (app.got_subcommand(exact_sub)) {
      result = exactness_cmd(opt, in);
    } else if (app.got_subcommand(classify_sub)) {
      result = classify_cmd(opt, in);
    } else if (app.got_subcommand(pencil_sub)) {
      result = pencil_cmd(opt, in);
    } else {
      result = track_cmd(opt, in);
    }
    result.report.digest = in.digest;
    emit(result.report, mode, out);
    if (!result.diagnostic.empty()) err << "error: " << result.diagnostic << '\n';
    return result.code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kPreconditionFailed;
  } catch (const InvariantBreach& e) {
    err << "internal invariant breach: " << e.what() << '\n';
    return kInvariantBreach;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kParseError;
  } catch (const std::out_of_range& e) {
    err << "invalid input: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariantBreach;
  }
}

}  // namespace poissonkit::cli
