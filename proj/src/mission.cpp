#include "mission.hpp"

#include <cmath>

#include <json.hpp>

#include "dubins.hpp"

namespace dubcov {

namespace {

using nlohmann::ordered_json;

MissionElement line_element(const Point& a, const Point& b, bool covering) {
  MissionElement e;
  e.kind = MissionElement::Kind::Line;
  e.start = a;
  e.end = b;
  e.heading_start = e.heading_end = std::atan2(b.y - a.y, b.x - a.x);
  e.covering = covering;
  return e;
}

ordered_json point_json(const Point& p) { return ordered_json::array({p.x, p.y}); }

Point point_from_json(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2) throw MissionError("expected [x, y] point");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

double MissionElement::length() const {
  if (kind == Kind::Line) return distance(start, end);
  return sweep * radius;
}

std::vector<MissionElement> dubins_path_elements(const DubinsPath& path) {
  std::vector<MissionElement> elements;
  const auto kinds = word_segments(path.word);
  double traveled = 0.0;
  Configuration at = path.start;
  for (int i = 0; i < 3; ++i) {
    const double len = path.seg_lengths[i];
    if (len < 1e-9) {
      traveled += len;
      continue;
    }
    const Configuration next = dubins_at(path, traveled + len);
    MissionElement e;
    e.start = {at.x, at.y};
    e.end = {next.x, next.y};
    e.heading_start = at.theta;
    e.heading_end = next.theta;
    if (kinds[i] == SegmentKind::Straight) {
      e.kind = MissionElement::Kind::Line;
    } else {
      e.kind = MissionElement::Kind::Arc;
      e.radius = path.radius;
      e.sweep = len / path.radius;
      e.ccw = kinds[i] == SegmentKind::Left;
      const double side = e.ccw ? 1.0 : -1.0;
      e.center = {at.x - side * path.radius * std::sin(at.theta),
                  at.y + side * path.radius * std::cos(at.theta)};
    }
    elements.push_back(e);
    at = next;
    traveled += len;
  }
  return elements;
}

Mission build_mission(const std::vector<Tour>& tours, const std::string& algorithm,
                      const std::string& solver, int robots, double turning_radius,
                      double footprint, std::uint64_t seed, const Point& depot) {
  Mission m;
  m.algorithm = algorithm;
  m.solver = solver;
  m.robots = robots;
  m.turning_radius = turning_radius;
  m.footprint = footprint;
  m.seed = seed;
  m.depot = depot;

  for (const Tour& tour : tours) {
    RobotProgram program;
    program.robot_id = tour.robot_id;
    program.cost = tour.cost;
    if (!tour.stops.empty()) {
      const RouteStop& first = tour.stops.front();
      program.elements.push_back(
          line_element(depot, {first.entry.x, first.entry.y}, false));
      for (std::size_t i = 0; i < tour.stops.size(); ++i) {
        const RouteStop& stop = tour.stops[i];
        MissionElement pass_line =
            line_element({stop.entry.x, stop.entry.y}, {stop.exit.x, stop.exit.y}, true);
        pass_line.heading_start = pass_line.heading_end = stop.entry.theta;
        program.elements.push_back(pass_line);
        if (i + 1 < tour.stops.size()) {
          const auto transition = dubins_path_elements(tour.transitions[i]);
          program.elements.insert(program.elements.end(), transition.begin(), transition.end());
        }
      }
      const RouteStop& last = tour.stops.back();
      program.elements.push_back(line_element({last.exit.x, last.exit.y}, depot, false));
    }
    m.programs.push_back(std::move(program));
  }
  return m;
}

std::string mission_to_json(const Mission& m) {
  ordered_json j;
  j["schema_version"] = m.schema_version;
  j["parameters"] = {
      {"algorithm", m.algorithm},        {"solver", m.solver},
      {"robots", m.robots},              {"turning_radius_m", m.turning_radius},
      {"footprint_m", m.footprint},      {"seed", m.seed},
      {"depot", point_json(m.depot)},
  };
  j["robots"] = ordered_json::array();
  for (const RobotProgram& program : m.programs) {
    ordered_json rj;
    rj["robot_id"] = program.robot_id;
    rj["cost_m"] = program.cost;
    rj["elements"] = ordered_json::array();
    for (const MissionElement& e : program.elements) {
      ordered_json ej;
      ej["kind"] = e.kind == MissionElement::Kind::Line ? "line" : "arc";
      ej["start"] = point_json(e.start);
      ej["end"] = point_json(e.end);
      ej["heading_start"] = e.heading_start;
      ej["heading_end"] = e.heading_end;
      ej["covering"] = e.covering;
      if (e.kind == MissionElement::Kind::Arc) {
        ej["center"] = point_json(e.center);
        ej["direction"] = e.ccw ? "ccw" : "cw";
        ej["sweep_rad"] = e.sweep;
        ej["radius_m"] = e.radius;
      }
      rj["elements"].push_back(std::move(ej));
    }
    j["robots"].push_back(std::move(rj));
  }
  return j.dump(2);
}

Mission mission_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MissionError(std::string("mission is not valid JSON: ") + e.what());
  }
  Mission m;
  try {
    m.schema_version = j.at("schema_version").get<int>();
    const auto& p = j.at("parameters");
    m.algorithm = p.at("algorithm").get<std::string>();
    m.solver = p.at("solver").get<std::string>();
    m.robots = p.at("robots").get<int>();
    m.turning_radius = p.at("turning_radius_m").get<double>();
    m.footprint = p.at("footprint_m").get<double>();
    m.seed = p.at("seed").get<std::uint64_t>();
    m.depot = point_from_json(p.at("depot"));
    for (const auto& rj : j.at("robots")) {
      RobotProgram program;
      program.robot_id = rj.at("robot_id").get<int>();
      program.cost = rj.at("cost_m").get<double>();
      for (const auto& ej : rj.at("elements")) {
        MissionElement e;
        const std::string kind = ej.at("kind").get<std::string>();
        if (kind == "line") {
          e.kind = MissionElement::Kind::Line;
        } else if (kind == "arc") {
          e.kind = MissionElement::Kind::Arc;
        } else {
          throw MissionError("unknown element kind: " + kind);
        }
        e.start = point_from_json(ej.at("start"));
        e.end = point_from_json(ej.at("end"));
        e.heading_start = ej.at("heading_start").get<double>();
        e.heading_end = ej.at("heading_end").get<double>();
        e.covering = ej.at("covering").get<bool>();
        if (e.kind == MissionElement::Kind::Arc) {
          e.center = point_from_json(ej.at("center"));
          e.ccw = ej.at("direction").get<std::string>() == "ccw";
          e.sweep = ej.at("sweep_rad").get<double>();
          e.radius = ej.at("radius_m").get<double>();
        }
        program.elements.push_back(std::move(e));
      }
      m.programs.push_back(std::move(program));
    }
  } catch (const nlohmann::json::exception& e) {
    throw MissionError(std::string("mission missing required field: ") + e.what());
  }
  return m;
}

MissionStats recompute_stats(const Mission& mission) {
  MissionStats stats;
  for (const RobotProgram& program : mission.programs) {
    stats.stored_costs.push_back(program.cost);
    if (program.elements.size() < 3) {
      stats.recomputed_costs.push_back(0.0);
      continue;
    }
    const MissionElement* first_pass = nullptr;
    const MissionElement* last_pass = nullptr;
    for (const MissionElement& e : program.elements) {
      if (!e.covering) continue;
      if (!first_pass) first_pass = &e;
      last_pass = &e;
    }
    if (!first_pass) throw MissionError("robot program has no covering elements");
    const Point first_mid{0.5 * (first_pass->start.x + first_pass->end.x),
                          0.5 * (first_pass->start.y + first_pass->end.y)};
    const Point last_mid{0.5 * (last_pass->start.x + last_pass->end.x),
                         0.5 * (last_pass->start.y + last_pass->end.y)};
    double interior = 0.0;
    for (std::size_t i = 1; i + 1 < program.elements.size(); ++i)
      interior += program.elements[i].length();
    stats.recomputed_costs.push_back(distance(mission.depot, first_mid) + interior +
                                     distance(last_mid, mission.depot));
  }
  for (const double c : stats.recomputed_costs) stats.max_cost = std::max(stats.max_cost, c);
  return stats;
}

}  // namespace dubcov
