#include "magnitude/cli.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "magnitude/chain.hpp"
#include "magnitude/derived.hpp"
#include "magnitude/distmod.hpp"
#include "magnitude/quiver.hpp"
#include "magnitude/random.hpp"
#include "magnitude/report.hpp"
#include "magnitude/ring.hpp"

namespace magnitude {

namespace {

struct Coefficients {
  bool integral = true;
  Field field = Field::rationals();
};

Coefficients parse_coefficients(const std::string& text, bool default_integral) {
  if (text.empty()) return {default_integral, Field::rationals()};
  if (text == "Z") return {true, Field::rationals()};
  return {false, Field::parse(text)};
}

Field require_field(const std::string& text, const std::string& command) {
  Coefficients c = parse_coefficients(text, false);
  if (c.integral) throw Error(ErrorCode::InvalidField, command + " works over a field (Q or Fp:P), not Z", {text});
  return c.field;
}

/// The loaded input: a space, and the digraph or module it came from when relevant.
struct Input {
  InputKind kind;
  QuasimetricSpace space;
  std::optional<Digraph> graph;
  std::optional<DistanceModule> module;
};

Input load_input(const JobSpec& job) {
  Json j = read_json_file(job.input);
  InputKind kind = job.kind ? *job.kind : detect_kind(j);
  const auto base = job.input.parent_path();
  switch (kind) {
    case InputKind::Digraph: {
      Digraph g = parse_digraph(j);
      return {kind, digraph_to_space(g), g, std::nullopt};
    }
    case InputKind::Space:
      return {kind, parse_space(j), std::nullopt, std::nullopt};
    case InputKind::Module: {
      DistanceModule m = parse_module(j, base);
      return {kind, m.space(), std::nullopt, m};
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown input kind");
}

/// The coefficient module of the job: --coefficients, a module input, or none.
std::optional<DistanceModule> load_coefficients(const JobSpec& job, const Input& input) {
  if (job.coefficients) {
    Json j = read_json_file(*job.coefficients);
    if (j.is_object() && !j.contains("space")) j["space"] = space_to_json(input.space);
    DistanceModule m = parse_module(j, job.coefficients->parent_path());
    if (!(m.space() == input.space)) {
      throw Error(ErrorCode::SpaceMismatch, "coefficient module lives over a different space");
    }
    return m;
  }
  return input.module;
}

std::string torsion_text(const std::vector<Integer>& torsion) {
  std::string out;
  for (std::size_t i = 0; i < torsion.size(); ++i) out += (i ? " " : "") + torsion[i].get_str();
  return out;
}

Json torsion_json(const std::vector<Integer>& torsion) {
  Json out = Json::array();
  for (const auto& t : torsion) {
    if (t.fits_slong_p()) {
      out.push_back(t.get_si());
    } else {
      out.push_back(t.get_str());
    }
  }
  return out;
}

Json grade_json(const Grade& g) {
  if (g.get_den() == 1 && g.get_num().fits_slong_p()) return g.get_num().get_si();
  return g.get_str();
}

std::vector<Grade> module_grades(const std::optional<DistanceModule>& m) {
  if (!m) return {Grade(0)};
  return m->grades();
}

/// Grades ℓ ≤ l_max at which MC_{•,ℓ}(X; M) can be nonzero: h + |t| for h a grade of M.
std::vector<Grade> chain_grades(const QuasimetricSpace& space, const std::optional<DistanceModule>& m,
                                const Grade& l_max) {
  std::set<Grade> out;
  for (const Grade& h : module_grades(m)) {
    if (h > l_max) continue;
    for (const Grade& a : attainable_grades(space, l_max - h))
      if (h + a >= 0) out.insert(h + a);
  }
  return {out.begin(), out.end()};
}

/// Grades 0 ≤ ℓ ≤ l_max with some |t| - ℓ a grade of M.
std::vector<Grade> cochain_grades(const QuasimetricSpace& space, const std::optional<DistanceModule>& m,
                                  const Grade& l_max) {
  std::vector<Grade> hs = module_grades(m);
  Grade top = l_max + *std::max_element(hs.begin(), hs.end());
  std::set<Grade> out;
  if (top < 0) return {};
  for (const Grade& a : attainable_grades(space, top))
    for (const Grade& h : hs)
      if (a - h >= 0 && a - h <= l_max) out.insert(a - h);
  return {out.begin(), out.end()};
}

Grade min_grade(const std::optional<DistanceModule>& m) {
  auto hs = module_grades(m);
  return hs.empty() ? Grade(0) : hs.front();
}

Grade max_grade(const std::optional<DistanceModule>& m) {
  auto hs = module_grades(m);
  return hs.empty() ? Grade(0) : hs.back();
}

DistanceModule coefficient_module(const Input& input, const std::optional<DistanceModule>& m) {
  return m ? *m : trivial_module(input.space, Grade(0), 1);
}

Grade nonneg(const Grade& g) { return g < 0 ? Grade(0) : g; }

struct HomologyCell {
  int n;
  Grade grade;
  HomologySummary value;
};

std::vector<HomologyCell> chain_pipeline(const JobSpec& job, const Input& input,
                                         const std::optional<DistanceModule>& m, const Coefficients& c) {
  std::vector<HomologyCell> out;
  for (const Grade& l : chain_grades(input.space, m, job.l_max)) {
    BasedComplex cx = m ? magnitude_complex_with_coefficients(input.space, *m, l, job.n_max)
                        : magnitude_complex(input.space, l, job.n_max);
    for (int n = 0; n <= job.n_max; ++n) out.push_back({n, l, c.integral ? cx.homology(n) : cx.homology(n, c.field)});
  }
  return out;
}

std::vector<HomologyCell> tor_pipeline(const JobSpec& job, const Input& input, const std::optional<DistanceModule>& m,
                                       const Coefficients& c) {
  DistanceModule module = coefficient_module(input, m);
  BarResolution left(input.space, Side::Left, job.n_max + 1, nonneg(job.l_max - min_grade(m)));
  std::vector<HomologyCell> out;
  for (const Grade& l : chain_grades(input.space, m, job.l_max)) {
    BasedComplex cx = tor_complex(left, module, l, job.n_max + 1);
    for (int n = 0; n <= job.n_max; ++n) out.push_back({n, l, c.integral ? cx.homology(n) : cx.homology(n, c.field)});
  }
  return out;
}

struct DimCell {
  int n;
  Grade grade;
  std::size_t dim;
};

std::vector<DimCell> ext_pipeline(const JobSpec& job, const Input& input, const std::optional<DistanceModule>& m,
                                  const Field& field) {
  DistanceModule module = coefficient_module(input, m);
  BarResolution right(input.space, Side::Right, job.n_max + 1, nonneg(job.l_max + max_grade(m)));
  std::vector<DimCell> out;
  for (const Grade& l : cochain_grades(input.space, m, job.l_max)) {
    CochainComplex cx = ext_complex(right, module, l, job.n_max + 1, field);
    for (int n = 0; n <= job.n_max; ++n) out.push_back({n, l, cx.cohomology_dim(n)});
  }
  return out;
}

Report homology_report(const std::string& kind, const std::vector<HomologyCell>& cells) {
  Report r;
  r.kind = kind;
  r.columns = {"n", "l", "betti", "torsion"};
  Json rows = Json::array();
  for (const auto& cell : cells) {
    r.rows.push_back({std::to_string(cell.n), cell.grade.get_str(), std::to_string(cell.value.betti),
                      torsion_text(cell.value.torsion)});
    rows.push_back(Json{{"n", cell.n},
                        {"l", grade_json(cell.grade)},
                        {"betti", cell.value.betti},
                        {"torsion", torsion_json(cell.value.torsion)}});
  }
  r.json = Json{{"kind", kind}, {"rows", rows}};
  return r;
}

std::string summary_text(const HomologySummary& h) {
  std::string out = std::to_string(h.betti);
  if (!h.torsion.empty()) out += " [" + torsion_text(h.torsion) + "]";
  return out;
}

RunResult cmd_validate(const JobSpec& job) {
  Json j = read_json_file(job.input);
  InputKind kind = job.kind ? *job.kind : detect_kind(j);
  Report r;
  r.kind = "validate";
  r.columns = {"kind", "points", "valid"};
  std::size_t points = 0;
  if (kind == InputKind::Digraph) {
    points = digraph_to_space(parse_digraph(j)).size();
  } else if (kind == InputKind::Space) {
    points = parse_space(j).size();
  } else {
    auto [space, data] = parse_module_data(j, job.input.parent_path());
    auto violations = validate_module(space, data);
    if (!violations.empty()) {
      Json list = Json::array();
      for (const auto& v : violations) {
        Json labels = Json::array();
        for (PointId p : v.points) labels.push_back(space.label(p));
        list.push_back(Json{{"error", std::string(to_string(v.kind))},
                            {"points", labels},
                            {"grade", grade_json(v.grade)},
                            {"message", v.message}});
      }
      Json err{{"error", std::string(to_string(violations.front().kind))},
               {"message", violations.front().message},
               {"violations", list}};
      return {1, "", err.dump(2) + "\n"};
    }
    points = space.size();
  }
  r.rows.push_back({to_string(kind), std::to_string(points), "true"});
  r.json = Json{{"kind", "validate"}, {"input", to_string(kind)}, {"points", points}, {"valid", true}};
  return {0, emit(r, job.format), ""};
}

RunResult cmd_mh(const JobSpec& job) {
  Input input = load_input(job);
  auto m = load_coefficients(job, input);
  Coefficients c = parse_coefficients(job.field, true);
  return {0, emit(homology_report("mh", chain_pipeline(job, input, m, c)), job.format), ""};
}

RunResult cmd_tor(const JobSpec& job) {
  Input input = load_input(job);
  auto m = load_coefficients(job, input);
  Coefficients c = parse_coefficients(job.field, true);
  return {0, emit(homology_report("tor", tor_pipeline(job, input, m, c)), job.format), ""};
}

RunResult cmd_ext(const JobSpec& job) {
  Input input = load_input(job);
  auto m = load_coefficients(job, input);
  Field field = require_field(job.field.empty() ? "Q" : job.field, "ext");
  Report r;
  r.kind = "ext";
  r.columns = {"n", "l", "dim"};
  Json rows = Json::array();
  for (const auto& cell : ext_pipeline(job, input, m, field)) {
    r.rows.push_back({std::to_string(cell.n), cell.grade.get_str(), std::to_string(cell.dim)});
    rows.push_back(Json{{"n", cell.n}, {"l", grade_json(cell.grade)}, {"dim", cell.dim}});
  }
  r.json = Json{{"kind", "ext"}, {"field", field.name()}, {"rows", rows}};
  return {0, emit(r, job.format), ""};
}

RunResult cmd_crosscheck(const JobSpec& job) {
  Input input = load_input(job);
  auto m = load_coefficients(job, input);
  Coefficients c = parse_coefficients(job.field, true);
  auto chain = chain_pipeline(job, input, m, c);
  auto tor = tor_pipeline(job, input, m, c);

  // Over a field with trivial coefficients, Ext and the cochain complex join in.
  const bool with_cohomology = !c.integral && !m;
  std::map<std::pair<int, Grade>, std::pair<std::size_t, std::size_t>> cohom;
  if (with_cohomology) {
    for (const auto& cell : ext_pipeline(job, input, m, c.field)) cohom[{cell.n, cell.grade}].first = cell.dim;
    for (const Grade& l : cochain_grades(input.space, m, job.l_max)) {
      CochainComplex cx = magnitude_cochain_complex(input.space, l, job.n_max, c.field);
      for (int n = 0; n <= job.n_max; ++n) cohom[{n, l}].second = cx.cohomology_dim(n);
    }
  }

  Report r;
  r.kind = "crosscheck";
  r.columns = {"n", "l", "mh", "tor"};
  if (with_cohomology) r.columns.insert(r.columns.end(), {"ext", "cochain"});
  r.columns.push_back("agree");
  Json rows = Json::array();
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto& a = chain[i];
    const auto& b = tor[i];
    bool agree = a.n == b.n && a.grade == b.grade && a.value.betti == b.value.betti &&
                 a.value.torsion == b.value.torsion;
    std::vector<std::string> row{std::to_string(a.n), a.grade.get_str(), summary_text(a.value), summary_text(b.value)};
    Json jrow{{"n", a.n},
              {"l", grade_json(a.grade)},
              {"mh", Json{{"betti", a.value.betti}, {"torsion", torsion_json(a.value.torsion)}}},
              {"tor", Json{{"betti", b.value.betti}, {"torsion", torsion_json(b.value.torsion)}}}};
    if (with_cohomology) {
      auto [ext, cochain] = cohom[{a.n, a.grade}];
      agree = agree && ext == a.value.betti && cochain == a.value.betti;
      row.insert(row.end(), {std::to_string(ext), std::to_string(cochain)});
      jrow["ext"] = ext;
      jrow["cochain"] = cochain;
    }
    row.push_back(agree ? "yes" : "NO");
    jrow["agree"] = agree;
    if (!agree) ++mismatches;
    r.rows.push_back(std::move(row));
    rows.push_back(std::move(jrow));
  }
  r.summary = mismatches == 0 ? "all bidegrees agree" : std::to_string(mismatches) + " bidegrees disagree";
  r.json = Json{{"kind", "crosscheck"}, {"field", c.integral ? "Z" : c.field.name()}, {"rows", rows},
                {"agree", mismatches == 0}, {"summary", r.summary}};
  return {mismatches == 0 ? 0 : 1, emit(r, job.format), ""};
}

RunResult cmd_ring(const JobSpec& job) {
  Input input = load_input(job);
  Field field = require_field(job.field.empty() ? "Q" : job.field, "ring");
  RingTable table = ring_table(input.space, job.n_max, job.l_max, field);
  Report r;
  r.kind = "ring";
  r.columns = {"lhs", "rhs", "result"};
  auto cls = [](int n, const Grade& l, std::size_t i) {
    return "(" + std::to_string(n) + "," + l.get_str() + ")#" + std::to_string(i);
  };
  for (const auto& p : table.products) {
    std::string result;
    for (const auto& [coeff, index] : p.result) {
      if (!result.empty()) result += " + ";
      result += coeff.get_str() + "*#" + std::to_string(index);
    }
    r.rows.push_back({cls(p.lhs_degree, p.lhs_grade, p.lhs_index), cls(p.rhs_degree, p.rhs_grade, p.rhs_index),
                      result.empty() ? "0" : result});
  }
  r.json = ring_table_to_json(table);
  return {0, emit(r, job.format), ""};
}

std::string path_text(const Digraph& g, const Path& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "->" : "") + g.vertices()[p[i]];
  return out;
}

RunResult cmd_relations(const JobSpec& job) {
  Input input = load_input(job);
  if (!input.graph) throw Error(ErrorCode::InvalidArgument, "relations need a digraph input");
  QuiverRelations rel = quiver_relations(*input.graph);
  Report r;
  r.kind = "relations";
  r.columns = {"type", "relation"};
  for (const auto& [p, q] : rel.r1)
    r.rows.push_back({"R1", path_text(*input.graph, p) + " = " + path_text(*input.graph, q)});
  for (const auto& p : rel.r2) r.rows.push_back({"R2", path_text(*input.graph, p)});
  r.json = relations_to_json(*input.graph, rel);
  return {0, emit(r, job.format), ""};
}

DistanceModule require_module(const JobSpec& job, const Input& input) {
  auto m = load_coefficients(job, input);
  if (!m) throw Error(ErrorCode::InvalidArgument, job.command + " needs a module input or --coefficients");
  return *m;
}

RunResult cmd_inv(const JobSpec& job) {
  Input input = load_input(job);
  DistanceModule m = require_module(job, input);
  Report r;
  r.kind = "inv";
  r.columns = {"grade", "rank"};
  Json rows = Json::array();
  for (const auto& inv : invariants(m)) {
    r.rows.push_back({inv.grade.get_str(), std::to_string(inv.rank)});
    rows.push_back(Json{{"grade", grade_json(inv.grade)}, {"rank", inv.rank}});
  }
  r.json = Json{{"kind", "inv"}, {"rows", rows}};
  return {0, emit(r, job.format), ""};
}

RunResult cmd_coinv(const JobSpec& job) {
  Input input = load_input(job);
  DistanceModule m = require_module(job, input);
  Report r;
  r.kind = "coinv";
  r.columns = {"grade", "betti", "torsion"};
  Json rows = Json::array();
  for (const auto& c : coinvariants(m)) {
    r.rows.push_back({c.grade.get_str(), std::to_string(c.betti), torsion_text(c.torsion)});
    rows.push_back(Json{{"grade", grade_json(c.grade)}, {"betti", c.betti}, {"torsion", torsion_json(c.torsion)}});
  }
  r.json = Json{{"kind", "coinv"}, {"rows", rows}};
  return {0, emit(r, job.format), ""};
}

RunResult cmd_gen(const JobSpec& job) {
  std::mt19937_64 rng(job.seed);
  InputKind kind = job.kind.value_or(InputKind::Space);
  Json out;
  switch (kind) {
    case InputKind::Space: out = space_to_json(random_space(rng, job.points)); break;
    case InputKind::Digraph: out = digraph_to_json(random_digraph(rng, job.points)); break;
    case InputKind::Module: {
      QuasimetricSpace space = digraph_to_space(random_digraph(rng, job.points));
      out = module_to_json(random_module(rng, space));
      break;
    }
  }
  return {0, out.dump(2) + "\n", ""};
}

}  // namespace

Json error_json(const Error& error) {
  return Json{{"error", std::string(to_string(error.code()))}, {"message", error.what()}, {"witness", error.witness()}};
}

RunResult run(const JobSpec& job) {
  try {
    if (job.n_max < 0) throw Error(ErrorCode::InvalidArgument, "--nmax must be nonnegative");
    if (job.l_max < 0) throw Error(ErrorCode::InvalidArgument, "--lmax must be nonnegative");
    if (job.format != "json" && job.format != "csv" && job.format != "table") {
      throw Error(ErrorCode::UnsupportedFormat, "unsupported output format '" + job.format + "'", {job.format});
    }
    if (!job.field.empty()) parse_coefficients(job.field, true);
    if (job.command == "validate") return cmd_validate(job);
    if (job.command == "mh") return cmd_mh(job);
    if (job.command == "tor") return cmd_tor(job);
    if (job.command == "ext") return cmd_ext(job);
    if (job.command == "crosscheck") return cmd_crosscheck(job);
    if (job.command == "ring") return cmd_ring(job);
    if (job.command == "relations") return cmd_relations(job);
    if (job.command == "inv") return cmd_inv(job);
    if (job.command == "coinv") return cmd_coinv(job);
    if (job.command == "gen") return cmd_gen(job);
    throw Error(ErrorCode::InvalidArgument, "unknown command '" + job.command + "'", {job.command});
  } catch (const Error& e) {
    return {2, "", error_json(e).dump(2) + "\n"};
  } catch (const std::exception& e) {
    return {2, "", error_json(Error(ErrorCode::InvalidArgument, e.what())).dump(2) + "\n"};
  }
}

}  // namespace magnitude
