#include "otg/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace otg {

namespace {

using Json = nlohmann::ordered_json;

Side side_from_string(const std::string& s) {
  if (s == "right") return Side::kRight;
  if (s == "left") return Side::kLeft;
  if (s == "full") return Side::kFull;
  throw IoError("unknown side '" + s + "'");
}

}  // namespace

std::string serialize_terrain(const Terrain& t) {
  Json j;
  j["version"] = 1;
  Json verts = Json::array();
  for (const Point& p : t.points()) verts.push_back(Json::array({p.x, p.y}));
  j["vertices"] = std::move(verts);
  return j.dump();
}

Terrain parse_terrain(const std::string& text, BuildMode mode) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed terrain document: ") + e.what());
  }
  if (!j.is_object() || !j.contains("version") || !j.contains("vertices"))
    throw IoError("terrain document must carry 'version' and 'vertices'");
  if (!j["version"].is_number_integer() || j["version"].get<int>() != 1)
    throw IoError("unsupported terrain document version");
  if (!j["vertices"].is_array()) throw IoError("'vertices' must be an array");
  std::vector<Point> pts;
  pts.reserve(j["vertices"].size());
  for (const Json& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
        !v[1].is_number_integer())
      throw IoError("each vertex must be an [x,y] integer pair");
    pts.push_back(Point{v[0].get<Coord>(), v[1].get<Coord>()});
  }
  return Terrain::build(std::move(pts), mode);
}

std::string serialize_solution(const GuardSolution& sol) {
  Json j;
  j["side"] = to_string(sol.side);
  Json guards = Json::array();
  for (int g : sol.guards) guards.push_back(g + 1);
  j["guards"] = std::move(guards);
  Json assignment = Json::object();
  for (size_t i = 0; i < sol.assignment.size(); ++i) {
    if (sol.assignment[i] < 0) continue;
    assignment[std::to_string(i + 1)] = std::to_string(sol.assignment[i] + 1);
  }
  j["assignment"] = std::move(assignment);
  Json witnesses = Json::array();
  for (int w : sol.witnesses) witnesses.push_back(w + 1);
  j["witnesses"] = std::move(witnesses);
  j["visits"] = sol.visits;
  return j.dump();
}

GuardSolution parse_solution(const std::string& text, int n) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed solution document: ") + e.what());
  }
  if (!j.is_object() || !j.contains("side") || !j.contains("guards"))
    throw IoError("solution document must carry 'side' and 'guards'");
  GuardSolution sol;
  sol.side = side_from_string(j["side"].get<std::string>());
  sol.assignment.assign(static_cast<size_t>(n), -1);
  auto to_index = [n](long long one_based, const char* what) {
    if (one_based < 1 || one_based > n)
      throw IoError(std::string(what) + " index " + std::to_string(one_based) +
                    " outside 1.." + std::to_string(n));
    return static_cast<int>(one_based - 1);
  };
  for (const Json& g : j["guards"]) {
    if (!g.is_number_integer()) throw IoError("guard indices must be integers");
    sol.guards.push_back(to_index(g.get<long long>(), "guard"));
  }
  if (j.contains("witnesses")) {
    for (const Json& w : j["witnesses"])
      sol.witnesses.push_back(to_index(w.get<long long>(), "witness"));
  }
  if (j.contains("assignment")) {
    for (const auto& [key, value] : j["assignment"].items()) {
      const int w = to_index(std::stoll(key), "assignment witness");
      const int g = to_index(std::stoll(value.get<std::string>()), "assignment guard");
      sol.assignment[static_cast<size_t>(w)] = g;
    }
  }
  if (j.contains("visits")) sol.visits = j["visits"].get<std::uint64_t>();
  return sol;
}

std::string serialize_property_report(const PropertyReport& report) {
  Json props = Json::array();
  for (size_t i = 0; i < report.counters.size(); ++i) {
    const PropertyCounters& c = report.counters[i];
    Json p;
    p["name"] = to_string(static_cast<PropertyId>(i));
    p["checked"] = c.checked;
    p["violations"] = c.violations;
    Json samples = Json::array();
    for (const PropertyCounterexample& s : c.samples) {
      Json e;
      Json idx = Json::array();
      for (int v : s.indices) idx.push_back(v + 1);
      e["indices"] = std::move(idx);
      e["terrain"] = Json::parse(s.terrain_doc);
      samples.push_back(std::move(e));
    }
    p["counterexamples"] = std::move(samples);
    props.push_back(std::move(p));
  }
  Json j;
  j["properties"] = std::move(props);
  return j.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << data;
  if (!out) throw IoError("short write to '" + path + "'");
}

}  // namespace otg
