#include "magnitude/io.hpp"

#include <fstream>
#include <sstream>

#include "magnitude/error.hpp"

namespace magnitude {

namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorCode::ParseError, message); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail("expected an exact rational (integer or \"p/q\" string), got " + j.dump());
}

Integer integer_from(const Json& j) {
  Rational r = rational_from(j);
  if (r.get_den() != 1) fail("expected an integer, got " + j.dump());
  return r.get_num();
}

ExtDist distance_from(const Json& j) {
  if (j.is_string()) return ExtDist::parse(j.get<std::string>());
  return ExtDist(rational_from(j));
}

std::string string_from(const Json& j) {
  if (!j.is_string()) fail("expected a string, got " + j.dump());
  return j.get<std::string>();
}

const Json& array_from(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  return j;
}

/// Integers and integral grades as JSON numbers when they fit, everything else as exact strings.
Json exact(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

Json path_json(const Digraph& graph, const Path& p) {
  Json out = Json::array();
  for (PointId v : p) out.push_back(graph.vertices()[v]);
  return out;
}

}  // namespace

std::string to_string(InputKind kind) {
  switch (kind) {
    case InputKind::Digraph: return "digraph";
    case InputKind::Space: return "space";
    case InputKind::Module: return "module";
  }
  return "?";
}

InputKind parse_input_kind(const std::string& text) {
  if (text == "digraph") return InputKind::Digraph;
  if (text == "space") return InputKind::Space;
  if (text == "module") return InputKind::Module;
  throw Error(ErrorCode::InvalidArgument, "unknown input kind '" + text + "'");
}

InputKind detect_kind(const Json& j) {
  if (!j.is_object()) fail("input must be a JSON object");
  if (j.contains("components")) return InputKind::Module;
  if (j.contains("vertices")) return InputKind::Digraph;
  if (j.contains("points")) return InputKind::Space;
  fail("cannot tell whether the input is a digraph, a space or a module");
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(path.string() + ": " + e.what());
  }
}

Digraph parse_digraph(const Json& j) {
  std::vector<std::string> vertices;
  for (const auto& v : array_from(member(j, "vertices"), "vertices")) vertices.push_back(string_from(v));
  std::vector<std::pair<std::string, std::string>> arcs;
  for (const auto& a : array_from(member(j, "arcs"), "arcs")) {
    if (!a.is_array() || a.size() != 2) fail("each arc must be a pair [u, v]");
    arcs.emplace_back(string_from(a[0]), string_from(a[1]));
  }
  return Digraph(std::move(vertices), arcs);
}

Json digraph_to_json(const Digraph& graph) {
  Json arcs = Json::array();
  for (const auto& [u, v] : graph.arcs()) arcs.push_back({graph.vertices()[u], graph.vertices()[v]});
  return Json{{"vertices", graph.vertices()}, {"arcs", arcs}};
}

QuasimetricSpace parse_space(const Json& j) {
  std::vector<std::string> points;
  for (const auto& p : array_from(member(j, "points"), "points")) points.push_back(string_from(p));
  std::vector<std::vector<ExtDist>> matrix;
  for (const auto& row : array_from(member(j, "dist"), "dist")) {
    std::vector<ExtDist> r;
    for (const auto& e : array_from(row, "dist rows")) r.push_back(distance_from(e));
    matrix.push_back(std::move(r));
  }
  return validate_space(std::move(points), std::move(matrix));
}

Json space_to_json(const QuasimetricSpace& space) {
  Json dist = Json::array();
  for (PointId x = 0; x < space.size(); ++x) {
    Json row = Json::array();
    for (PointId y = 0; y < space.size(); ++y) {
      const ExtDist& d = space.dist(x, y);
      row.push_back(d.is_finite() ? exact(d.value()) : Json("inf"));
    }
    dist.push_back(row);
  }
  return Json{{"points", space.labels()}, {"dist", dist}};
}

QuasimetricSpace parse_space_reference(const Json& j, const std::filesystem::path& base) {
  if (j.is_string()) {
    std::filesystem::path p = j.get<std::string>();
    if (p.is_relative()) p = base / p;
    return parse_space_reference(read_json_file(p), p.parent_path());
  }
  InputKind kind = detect_kind(j);
  if (kind == InputKind::Digraph) return digraph_to_space(parse_digraph(j));
  if (kind == InputKind::Space) return parse_space(j);
  fail("a module's space must be a space or a digraph");
}

std::pair<QuasimetricSpace, ModuleData> parse_module_data(const Json& j, const std::filesystem::path& base) {
  QuasimetricSpace space = parse_space_reference(member(j, "space"), base);
  ModuleData data;
  data.components.resize(space.size());
  const Json& comps = member(j, "components");
  if (!comps.is_object()) fail("components must be an object keyed by point");
  for (const auto& [label, list] : comps.items()) {
    PointId x = space.index_of(label);
    for (const auto& entry : array_from(list, "component lists")) {
      if (!entry.is_array() || entry.size() != 2) fail("each component must be [grade, rank]");
      Integer rank = integer_from(entry[1]);
      if (rank < 0) fail("negative rank at point " + label);
      data.components[x][rational_from(entry[0])] += rank.get_ui();
    }
  }
  if (j.contains("actions")) {
    const Json& actions = j.at("actions");
    if (!actions.is_object()) fail("actions must be an object keyed by \"x->y\"");
    for (const auto& [key, by_grade] : actions.items()) {
      auto arrow = key.find("->");
      if (arrow == std::string::npos) fail("action key '" + key + "' is not of the form x->y");
      PointId x = space.index_of(key.substr(0, arrow));
      PointId y = space.index_of(key.substr(arrow + 2));
      if (!by_grade.is_object()) fail("actions of " + key + " must be an object keyed by grade");
      for (const auto& [grade_text, rows] : by_grade.items()) {
        Grade g = parse_rational(grade_text);
        array_from(rows, "action matrices");
        std::size_t cols = rows.empty() ? 0 : array_from(rows[0], "matrix rows").size();
        if (rows.empty()) {
          auto it = data.components[x].find(g);
          cols = it == data.components[x].end() ? 0 : it->second;
        }
        IntMatrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
          if (array_from(rows[r], "matrix rows").size() != cols) fail("ragged matrix for " + key);
          for (std::size_t c = 0; c < cols; ++c) m(r, c) = integer_from(rows[r][c]);
        }
        data.actions[{x, y}][g] = std::move(m);
      }
    }
  }
  return {std::move(space), std::move(data)};
}

DistanceModule parse_module(const Json& j, const std::filesystem::path& base) {
  auto [space, data] = parse_module_data(j, base);
  return DistanceModule::create(std::move(space), std::move(data));
}

Json module_to_json(const DistanceModule& module) {
  const QuasimetricSpace& space = module.space();
  Json comps = Json::object();
  for (PointId x = 0; x < space.size(); ++x) {
    Json list = Json::array();
    for (const auto& [g, r] : module.components(x))
      if (r) list.push_back({exact(g), r});
    comps[space.label(x)] = list;
  }
  Json actions = Json::object();
  for (PointId x = 0; x < space.size(); ++x)
    for (PointId y = 0; y < space.size(); ++y) {
      if (x == y || space.dist(x, y).is_infinite()) continue;
      Json by_grade = Json::object();
      for (const auto& [g, r] : module.components(x)) {
        IntMatrix m = module.action(x, y, g);
        if (r == 0 || m.is_zero()) continue;
        Json rows = Json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
          Json row = Json::array();
          for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(exact(Rational(m(i, c))));
          rows.push_back(row);
        }
        by_grade[g.get_str()] = rows;
      }
      if (!by_grade.empty()) actions[space.label(x) + "->" + space.label(y)] = by_grade;
    }
  return Json{{"space", space_to_json(space)}, {"components", comps}, {"actions", actions}};
}

Json relations_to_json(const Digraph& graph, const QuiverRelations& relations) {
  Json r1 = Json::array();
  for (const auto& [p, q] : relations.r1) r1.push_back({path_json(graph, p), path_json(graph, q)});
  Json r2 = Json::array();
  for (const auto& p : relations.r2) r2.push_back(path_json(graph, p));
  return Json{{"R1", r1}, {"R2", r2}};
}

Json ring_table_to_json(const RingTable& table) {
  Json classes = Json::object();
  for (const auto& [key, set] : table.classes) {
    classes[std::to_string(key.first) + "," + key.second.get_str()] = set.size();
  }
  Json products = Json::array();
  for (const auto& p : table.products) {
    Json result = Json::array();
    for (const auto& [coeff, index] : p.result) result.push_back({exact(coeff), index});
    products.push_back(Json{{"lhs", {p.lhs_degree, exact(p.lhs_grade), p.lhs_index}},
                            {"rhs", {p.rhs_degree, exact(p.rhs_grade), p.rhs_index}},
                            {"result", result}});
  }
  return Json{{"field", table.field.name()}, {"classes", classes}, {"products", products}};
}

}  // namespace magnitude
