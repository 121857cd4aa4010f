#include "stabcov/io.hpp"

#include <fstream>
#include <sstream>

#include "stabcov/error.hpp"

namespace stabcov::io {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

json wrap(std::string_view type, json body) {
  body["type"] = std::string(type);
  return body;
}

std::int64_t int_from_json(const json& j) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    Rational q = parse_rational(j.get<std::string>());
    if (!is_integer(q)) throw Error(ErrorCode::Parse, "expected an integer, got " + j.get<std::string>());
    return floor_int(q);
  }
  throw Error(ErrorCode::Parse, "expected an integer, got " + j.dump());
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::Parse, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorCode::Parse, "expected a rational string, got " + j.dump());
}

json to_json(const Rational& q) { return format_rational(q); }

QVec qvec_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "expected an array of rationals");
  QVec out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

json to_json(const QVec& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(format_rational(q));
  return out;
}

IntVec intvec_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "expected an array of integers");
  IntVec out;
  for (const auto& x : j) out.push_back(int_from_json(x));
  return out;
}

DualGraph graph_from_json(const json& j) {
  DualGraph g;
  g.n_curves = static_cast<int>(int_from_json(field(j, "n_curves")));
  const json& edges = j.contains("edges") ? j.at("edges") : json::array();
  if (!edges.is_array()) throw Error(ErrorCode::Parse, "edges must be an array");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::Parse, "an edge is a pair [i, j]");
    g.edges.emplace_back(static_cast<int>(int_from_json(e[0])), static_cast<int>(int_from_json(e[1])));
  }
  return g;
}

json to_json(const DualGraph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  return json{{"n_curves", g.n_curves}, {"edges", edges}};
}

ComplexDivisor point_from_json(const json& j) {
  ComplexDivisor p{qvec_from_json(field(j, "beta")), qvec_from_json(field(j, "omega"))};
  if (p.beta.size() != p.omega.size()) throw Error(ErrorCode::DimensionMismatch, "beta and omega lengths differ");
  return p;
}

json to_json(const ComplexDivisor& p) { return json{{"beta", to_json(p.beta)}, {"omega", to_json(p.omega)}}; }

PLPath path_from_json(const json& j) {
  const json& pts = j.is_object() ? field(j, "breakpoints") : j;
  if (!pts.is_array()) throw Error(ErrorCode::Parse, "a path is an array of points");
  PLPath p;
  for (const auto& x : pts) p.breakpoints.push_back(point_from_json(x));
  return p;
}

json to_json(const PLPath& p) {
  json out = json::array();
  for (const auto& b : p.breakpoints) out.push_back(to_json(b));
  return out;
}

KClass kclass_from_json(const json& j) {
  IntVec v = intvec_from_json(j);
  if (v.empty()) throw Error(ErrorCode::Parse, "a class needs at least the point multiplicity");
  return KClass{v[0], IntVec(v.begin() + 1, v.end())};
}

json to_json(const KClass& c) {
  json out = json::array({c.point_mult});
  for (auto m : c.curve_mult) out.push_back(m);
  return out;
}

json to_json(const ExactComplex& z) { return json{{"re", to_json(z.re)}, {"im", to_json(z.im)}}; }

json to_json(const Root& r) { return json(r.coords); }

json to_json(const IntMatrix& m) { return json(m.rows()); }

json to_json(const WeylElement& w) {
  return json{{"matrix", to_json(w.mat())}, {"dual_matrix", to_json(w.dual_mat())}, {"word", w.word()}};
}

json to_json(const AffineMap& t) { return json{{"linear", to_json(t.linear)}, {"translation", t.trans}}; }

FMWord word_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "a word is an array of generators");
  FMWord u;
  for (const auto& g : j) {
    if (g.is_object() && g.contains("twist") && g.size() == 1) {
      u.gens.push_back(Twist{intvec_from_json(g.at("twist"))});
    } else if (g.is_object() && g.contains("flop") && g.size() == 1) {
      u.gens.push_back(Flop{static_cast<int>(int_from_json(g.at("flop")))});
    } else {
      throw Error(ErrorCode::Parse, "unknown generator " + g.dump());
    }
  }
  return u;
}

json to_json(const FMWord& u) {
  json out = json::array();
  for (const auto& g : u.gens) {
    std::visit(overloaded{[&](const Twist& t) { out.push_back(json{{"twist", t.divisor}}); },
                          [&](const Flop& f) { out.push_back(json{{"flop", f.curve}}); }},
               g);
  }
  return out;
}

json to_json(const StratumLabel& s) {
  return std::visit(
      overloaded{
          [](const AmpleChamber& a) { return wrap("AmpleChamber", json{{"chamber", to_json(a.chamber)}}); },
          [](const WallStrip& w) {
            return wrap("WallStrip", json{{"curve", w.curve}, {"strip", w.strip}, {"frame", to_json(w.frame)}});
          },
          [](const DeepStratum& d) {
            json strips = json::object();
            for (const auto& [i, k] : d.strips) strips[std::to_string(i)] = k;
            json roots = json::array();
            for (const auto& [v, k] : d.root_strips) roots.push_back(json{{"root", to_json(v)}, {"strip", k}});
            return wrap("DeepStratum", json{{"curves", d.curves},
                                            {"strips", strips},
                                            {"root_strips", roots},
                                            {"frame", to_json(d.frame)},
                                            {"alcove", to_json(d.alcove)}});
          },
          [](const Forbidden& f) { return wrap("Forbidden", json{{"root", to_json(f.root)}, {"k", f.k}}); },
      },
      s);
}

json to_json(const HeartDescriptor& h) {
  json gens = json::array();
  for (const auto& g : h.generators)
    gens.push_back(json{{"label", g.label}, {"class", to_json(g.cls)}, {"role", std::string(role_name(g.role))}});
  json out{{"kind", std::string(heart_kind_name(h.kind))}, {"frame", to_json(h.frame)}, {"generators", gens}};
  if (h.kind == HeartKind::Tilted) {
    out["curve"] = h.tilt_curve;
    out["strip"] = h.tilt_strip;
  }
  if (h.kind == HeartKind::PartialPerverse) {
    out["curves"] = h.partial_curves;
    json strips = json::object();
    for (const auto& [i, k] : h.strips) strips[std::to_string(i)] = k;
    out["strips"] = strips;
  }
  return out;
}

json to_json(const StabilityReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back(json{{"label", e.label},
                           {"class", to_json(e.cls)},
                           {"role", std::string(role_name(e.role))},
                           {"z", to_json(e.z)},
                           {"ok", e.ok}});
  }
  return json{{"pass", r.pass}, {"generators", entries}};
}

json to_json(const Crossing& c) {
  return json{{"curve", c.curve},
              {"strip", c.strip},
              {"direction", c.direction == Crossing::Direction::Forward ? "forward" : "backtrack"}};
}

namespace {

json stack_json(const std::vector<Crossing>& stack) {
  json out = json::array();
  for (const auto& c : stack) out.push_back(to_json(c));
  return out;
}

json trace_json(const std::vector<CrossingEvent>& trace) {
  json out = json::array();
  for (const auto& e : trace) {
    out.push_back(json{{"segment", e.segment},
                       {"time", to_json(e.time)},
                       {"crossing", to_json(e.crossing)},
                       {"point", to_json(e.point)},
                       {"framed_point", to_json(e.framed_point)}});
  }
  return out;
}

}  // namespace

json to_json(const LiftResult& r) {
  const auto& st = r.state;
  return json{{"stack", stack_json(st.stack)},
              {"theta", to_json(st.theta_word)},
              {"model", to_json(st.model())},
              {"history", to_json(st.history)},
              {"position", to_json(st.position)},
              {"framed_position", to_json(st.framed_position())},
              {"trace", trace_json(r.trace)}};
}

json to_json(const DeckElement& d) {
  return json{{"word", to_json(d.word)},
              {"reduced_stack", stack_json(d.reduced_stack)},
              {"unnormalized_theta", to_json(d.unnormalized_theta)},
              {"normalization", d.normalization},
              {"loop", to_json(d.loop)},
              {"trace", trace_json(d.trace)}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
}

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (text.empty() || text.back() == ',') throw Error(ErrorCode::Parse, "empty entry in list \"" + text + "\"");
  return parts;
}

}  // namespace

QVec parse_qvec_list(const std::string& text) {
  QVec out;
  for (const auto& p : split_commas(text)) out.push_back(parse_rational(p));
  return out;
}

IntVec parse_int_list(const std::string& text) {
  IntVec out;
  for (const auto& p : split_commas(text)) {
    Rational q = parse_rational(p);
    if (!is_integer(q)) throw Error(ErrorCode::Parse, "expected an integer, got " + p);
    out.push_back(floor_int(q));
  }
  return out;
}

}  // namespace stabcov::io
