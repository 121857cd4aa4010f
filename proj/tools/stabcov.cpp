// Command-line front end. Every command reads a dual graph, runs one query
// and prints JSON (default) or a short human-readable table.

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "stabcov/charge.hpp"
#include "stabcov/covering.hpp"
#include "stabcov/error.hpp"
#include "stabcov/hearts.hpp"
#include "stabcov/io.hpp"
#include "stabcov/lattice.hpp"
#include "stabcov/plot.hpp"
#include "stabcov/strata.hpp"

namespace {

using namespace stabcov;
using nlohmann::json;

enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kInvalidLattice = 2,
  kForbidden = 3,
  kNonGeneric = 4,
  kDomain = 5,
};

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::IndexOutOfRange:
      return kUsage;
    case ErrorCode::NotATree:
    case ErrorCode::NotNegativeDefinite:
      return kInvalidLattice;
    case ErrorCode::PathHitsForbidden:
    case ErrorCode::ForbiddenStratum:
      return kForbidden;
    case ErrorCode::NonGenericCrossing:
    case ErrorCode::StartNotGeneric:
    case ErrorCode::OnWall:
      return kNonGeneric;
    default:
      return kDomain;
  }
}

struct Options {
  std::string graph;
  std::string out;
  std::string format = "json";
  std::string beta;
  std::string omega;
  std::string cls;
  std::string heart = "auto";
  std::string path;
  std::string meridian;
  int curve = 1;
  std::int64_t k = 0;
  int slice = 0;
  std::size_t cap = 100000;
};

RootLattice load_lattice(const Options& o) {
  if (o.graph.empty()) throw Error(ErrorCode::Parse, "--graph is required");
  return RootLattice::build(io::graph_from_json(io::read_json_file(o.graph)));
}

RootLattice conifold() { return RootLattice::build(DualGraph{1, {}}); }

ComplexDivisor point_option(const Options& o, std::size_t n, bool required) {
  if (o.beta.empty() && o.omega.empty()) {
    if (required) throw Error(ErrorCode::Parse, "--beta and --omega are required");
    return default_basepoint(n);
  }
  if (o.beta.empty() || o.omega.empty()) throw Error(ErrorCode::Parse, "give both --beta and --omega");
  ComplexDivisor p{io::parse_qvec_list(o.beta), io::parse_qvec_list(o.omega)};
  if (p.beta.size() != n || p.omega.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "point has the wrong number of coordinates for this graph");
  return p;
}

std::string vec_text(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string class_text(const KClass& c) { return "(" + std::to_string(c.point_mult) + "," + vec_text(c.curve_mult) + ")"; }

std::string z_text(const ExactComplex& z) {
  return format_rational(z.re) + (z.im < 0 ? " - " : " + ") + format_rational(abs(z.im)) + "i";
}

std::string word_text(const FMWord& u) {
  std::string s;
  for (const auto& g : u.gens) {
    if (!s.empty()) s += " o ";
    if (const auto* t = std::get_if<Twist>(&g)) s += "Twist" + vec_text(t->divisor);
    else s += "Flop(" + std::to_string(std::get<Flop>(g).curve) + ")";
  }
  return s.empty() ? "id" : s;
}

std::string stack_text(const std::vector<Crossing>& st) {
  std::string s = "[";
  for (std::size_t i = 0; i < st.size(); ++i)
    s += (i ? "," : "") + std::string("(") + std::to_string(st[i].curve) + "," + std::to_string(st[i].strip) + ")";
  return s + "]";
}

std::string affine_text(const AffineMap& t) {
  std::string s = "linear [";
  const auto rows = t.linear.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) s += (r ? "; " : "") + vec_text(rows[r]);
  return s + "], translation " + vec_text(t.trans);
}

std::string label_text(const StratumLabel& s) {
  if (const auto* a = std::get_if<AmpleChamber>(&s)) {
    IntVec w(a->chamber.word().begin(), a->chamber.word().end());
    return "AmpleChamber w = " + vec_text(w);
  }
  if (const auto* w = std::get_if<WallStrip>(&s)) {
    IntVec fw(w->frame.word().begin(), w->frame.word().end());
    return "WallStrip(" + std::to_string(w->curve) + ", " + std::to_string(w->strip) + ") frame " + vec_text(fw);
  }
  if (const auto* d = std::get_if<DeepStratum>(&s)) {
    IntVec cs(d->curves.begin(), d->curves.end());
    std::string strips;
    for (const auto& [i, k] : d->strips) strips += (strips.empty() ? "" : ", ") + std::to_string(i) + ":" + std::to_string(k);
    return "DeepStratum curves " + vec_text(cs) + " strips {" + strips + "}";
  }
  const auto& f = std::get<Forbidden>(s);
  return "Forbidden root " + vec_text(f.root.coords) + " k = " + std::to_string(f.k);
}

class Output {
 public:
  explicit Output(const Options& o) : opts_(o) {}
  bool table() const { return opts_.format == "table"; }
  void emit(const json& j, const std::string& text) {
    const std::string body = table() ? text : j.dump(2) + "\n";
    if (opts_.out.empty()) {
      std::cout << body;
    } else {
      std::ofstream f(opts_.out);
      if (!f) throw Error(ErrorCode::Parse, "cannot write " + opts_.out);
      f << body;
    }
  }

 private:
  const Options& opts_;
};

int cmd_validate(const Options& o) {
  const auto l = load_lattice(o);
  const auto roots = l.enumerate_roots().size();
  json j{{"valid", true}, {"n_curves", l.rank()}, {"roots", roots}, {"gram", io::to_json(l.gram())}};
  std::string order;
  try {
    const auto w = l.enumerate_weyl(o.cap).size();
    j["weyl_order"] = w;
    order = std::to_string(w);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
    j["weyl_order"] = nullptr;
    order = "more than " + std::to_string(o.cap);
  }
  Output(o).emit(j, "n_curves: " + std::to_string(l.rank()) + "\nroots: " + std::to_string(roots) +
                        ", weyl order: " + order + "\n");
  return kOk;
}

int cmd_roots(const Options& o) {
  const auto l = load_lattice(o);
  json arr = json::array();
  std::string text;
  for (const auto& r : l.enumerate_roots()) {
    arr.push_back(io::to_json(r));
    text += vec_text(r.coords) + "\n";
  }
  Output(o).emit(json{{"count", arr.size()}, {"roots", arr}}, text + "count: " + std::to_string(arr.size()) + "\n");
  return kOk;
}

int cmd_weyl(const Options& o) {
  const auto l = load_lattice(o);
  const auto elems = l.enumerate_weyl(o.cap);
  json arr = json::array();
  std::string text;
  for (const auto& w : elems) {
    arr.push_back(io::to_json(w));
    IntVec word(w.word().begin(), w.word().end());
    text += "word " + vec_text(word) + "\n";
  }
  Output(o).emit(json{{"order", elems.size()}, {"elements", arr}}, text + "order: " + std::to_string(elems.size()) + "\n");
  return kOk;
}

int cmd_classify(const Options& o) {
  const auto l = load_lattice(o);
  const auto p = point_option(o, l.rank(), true);
  const auto s = classify(l, p);
  Output(o).emit(json{{"point", io::to_json(p)}, {"label", io::to_json(s)}}, label_text(s) + "\n");
  return kOk;
}

int cmd_charge(const Options& o) {
  const auto l = load_lattice(o);
  const auto p = point_option(o, l.rank(), true);
  if (o.cls.empty()) throw Error(ErrorCode::Parse, "--class a,m1,...,mN is required");
  const IntVec v = io::parse_int_list(o.cls);
  const KClass c{v[0], IntVec(v.begin() + 1, v.end())};
  if (c.curve_mult.size() != l.rank()) throw Error(ErrorCode::DimensionMismatch, "class has the wrong length");
  const auto z = central_charge(p, c);
  Output(o).emit(json{{"class", io::to_json(c)}, {"point", io::to_json(p)}, {"z", io::to_json(z)}, {"in_sector", in_sector(z)}},
                 "Z" + class_text(c) + " = " + z_text(z) + (in_sector(z) ? "" : "  (outside the sector)") + "\n");
  return kOk;
}

HeartDescriptor heart_option(const RootLattice& l, const std::string& choice, const ComplexDivisor& p) {
  if (choice == "auto") return heart_for_stratum(l, classify(l, p));
  if (choice == "coh") return coh_heart(l);
  if (choice == "per0") return perverse_heart(l, 0);
  if (choice == "per-1") return perverse_heart(l, -1);
  const auto colon = choice.find(':');
  const std::string kind = choice.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : choice.substr(colon + 1);
  if (kind == "tilted") {
    const IntVec v = io::parse_int_list(args);
    if (v.size() != 2) throw Error(ErrorCode::Parse, "tilted:i,k expects two integers");
    if (v[0] < 1 || static_cast<std::size_t>(v[0]) > l.rank()) throw Error(ErrorCode::IndexOutOfRange, "tilt curve");
    return tilted_heart(l, static_cast<int>(v[0]), v[1]);
  }
  if (kind == "partial") {
    std::vector<int> curves;
    for (auto x : io::parse_int_list(args)) {
      if (x < 1 || static_cast<std::size_t>(x) > l.rank()) throw Error(ErrorCode::IndexOutOfRange, "partial curve");
      curves.push_back(static_cast<int>(x));
    }
    return partial_perverse_heart(l, curves);
  }
  throw Error(ErrorCode::Parse, "unknown heart '" + choice + "' (auto, coh, per0, per-1, tilted:i,k, partial:i,j,...)");
}

int cmd_heart_check(const Options& o) {
  const auto l = load_lattice(o);
  const auto p = point_option(o, l.rank(), true);
  const auto h = heart_option(l, o.heart, p);
  const auto r = stability_check(h, p);
  std::string text = std::string("heart: ") + std::string(heart_kind_name(h.kind)) + "\n";
  for (const auto& e : r.entries)
    text += "  " + e.label + " " + class_text(e.cls) + " [" + std::string(role_name(e.role)) + "] Z = " + z_text(e.z) +
            (e.ok ? "  ok" : "  FAIL") + "\n";
  text += r.pass ? "pass\n" : "fail\n";
  Output(o).emit(json{{"heart", io::to_json(h)}, {"report", io::to_json(r)}}, text);
  return kOk;
}

std::string lift_table(const LiftResult& r) {
  std::string text;
  for (const auto& e : r.trace) {
    text += "segment " + std::to_string(e.segment) + " t=" + format_rational(e.time) + " " +
            (e.crossing.direction == Crossing::Direction::Forward ? "cross" : "back ") + " (" +
            std::to_string(e.crossing.curve) + "," + std::to_string(e.crossing.strip) + ")\n";
  }
  text += "stack: " + stack_text(r.state.stack) + "\n";
  text += "theta: " + affine_text(r.state.theta_word) + "\n";
  return text;
}

int cmd_lift(const Options& o) {
  const auto l = load_lattice(o);
  if (o.path.empty()) throw Error(ErrorCode::Parse, "a path file is required");
  const auto path = io::path_from_json(io::read_json_file(o.path));
  const auto r = lift_path(l, path);
  Output(o).emit(io::to_json(r), lift_table(r));
  return kOk;
}

std::string deck_table(const DeckElement& d) {
  std::string text = "reduced stack: " + stack_text(d.reduced_stack) + "\n";
  text += "unnormalized theta: " + affine_text(d.unnormalized_theta) + "\n";
  text += "normalization twist: " + vec_text(d.normalization) + "\n";
  text += "word: " + word_text(d.word) + "\n";
  return text;
}

int cmd_meridian(const Options& o) {
  const auto l = load_lattice(o);
  const auto base = point_option(o, l.rank(), false);
  const auto d = meridian(l, o.curve, o.k, base);
  json j = io::to_json(d);
  j["theta"] = io::to_json(theta(l, d.word));
  j["in_G0"] = is_in_G0(l, d.word);
  Output(o).emit(j, deck_table(d));
  return kOk;
}

int cmd_plot(const Options& o) {
  const auto l = load_lattice(o);
  PlotOptions po;
  po.slice_curve = o.slice;
  if (!o.beta.empty() || !o.omega.empty()) po.base = point_option(o, l.rank(), true);
  if (!o.path.empty() && !o.meridian.empty()) throw Error(ErrorCode::Parse, "give either a path or --meridian, not both");
  if (!o.path.empty()) po.path = io::path_from_json(io::read_json_file(o.path));
  if (!o.meridian.empty()) {
    const IntVec v = io::parse_int_list(o.meridian);
    if (v.size() != 2) throw Error(ErrorCode::Parse, "--meridian i,k expects two integers");
    po.path = meridian_loop(l, static_cast<int>(v[0]), v[1], po.base ? *po.base : default_basepoint(l.rank()));
  }
  if (po.path) po.crossings = lift_path(l, *po.path).trace;
  const std::string svg = render_svg(l, po);
  if (o.out.empty()) {
    std::cout << svg;
  } else {
    std::ofstream f(o.out);
    if (!f) throw Error(ErrorCode::Parse, "cannot write " + o.out);
    f << svg;
  }
  return kOk;
}

// The conifold example end to end: one curve, base C \ Z, and a cover whose
// chambers over each strip (k-1, k) come in pairs.
int cmd_demo_conifold(const Options& o) {
  const auto l = conifold();
  json j;
  std::ostringstream text;
  const auto roots = l.enumerate_roots().size();
  const auto order = l.enumerate_weyl(o.cap).size();
  j["roots"] = roots;
  j["weyl_order"] = order;
  text << "conifold: roots " << roots << ", weyl order " << order << "\n";

  const auto pt = [](Rational b, Rational w) { return ComplexDivisor{{b}, {w}}; };
  json samples = json::array();
  for (const auto& p : {pt(Rational(1, 2), 1), pt(Rational(1, 2), 0), pt(0, 0), pt(Rational(-3, 2), -1)}) {
    const auto s = classify(l, p);
    json e{{"point", io::to_json(p)}, {"label", io::to_json(s)}};
    text << "classify " << format_rational(p.beta[0]) << (p.omega[0] < 0 ? " - " : " + ")
         << format_rational(abs(p.omega[0])) << "i: " << label_text(s);
    if (!std::holds_alternative<Forbidden>(s)) {
      const auto r = stability_check(heart_for_stratum(l, s), p);
      e["heart_check"] = r.pass;
      text << " (heart " << (r.pass ? "passes" : "fails") << ")";
    }
    text << "\n";
    samples.push_back(e);
  }
  j["classify"] = samples;

  const auto d = meridian(l, 1, 0, default_basepoint(1));
  j["meridian"] = io::to_json(d);
  text << "meridian(1,0): stack " << stack_text(d.reduced_stack) << ", unnormalized theta translation "
       << vec_text(d.unnormalized_theta.trans) << ", normalized word " << word_text(d.word) << " in G0: "
       << (is_in_G0(l, d.word) ? "yes" : "no") << "\n";

  // Lift straight segments from a point above each strip to sample points
  // of the strip on both sides of the real axis and count distinct labels.
  json counts = json::object();
  for (std::int64_t k = -2; k <= 3; ++k) {
    const ComplexDivisor start = pt(make_rational(2 * k - 1, 2), 1);
    std::set<std::vector<std::pair<int, std::int64_t>>> chambers;
    for (int a = 1; a < 8; ++a) {
      for (int b = -4; b <= 4; ++b) {
        if (b == 0) continue;
        const ComplexDivisor target = pt(Rational(k - 1) + make_rational(a, 8), make_rational(b, 2));
        if (target == start) continue;
        const auto r = lift_path(l, PLPath{{start, target}});
        std::vector<std::pair<int, std::int64_t>> label;
        for (const auto& c : r.state.stack) label.emplace_back(c.curve, c.strip);
        chambers.insert(label);
      }
    }
    counts["(" + std::to_string(k - 1) + "," + std::to_string(k) + ")"] = chambers.size();
    text << "strip (" << k - 1 << "," << k << "): " << chambers.size() << " chambers\n";
  }
  j["chambers_per_strip"] = counts;
  Output(o).emit(j, text.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabcov: chambers, wall crossing and covering combinatorics of normalized stability conditions"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--graph", o.graph, "dual graph JSON {\"n_curves\": N, \"edges\": [[i,j],...]}");
  app.add_option("--out", o.out, "write output to this file");
  app.add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.fallthrough();

  auto* validate = app.add_subcommand("validate", "check the graph and count roots and Weyl elements");
  auto* roots = app.add_subcommand("roots", "list all roots");
  auto* weyl = app.add_subcommand("weyl", "list the Weyl group");
  for (auto* s : {validate, weyl}) s->add_option("--cap", o.cap, "maximum Weyl group size to enumerate");
  auto* classify_cmd = app.add_subcommand("classify", "stratum label of a point");
  auto* charge = app.add_subcommand("charge", "central charge of a K-class at a point");
  auto* heart = app.add_subcommand("heart-check", "stability check of a heart at a point");
  auto* lift = app.add_subcommand("lift", "lift a piecewise-linear path to the cover");
  auto* merid = app.add_subcommand("meridian", "deck element of a meridian loop");
  auto* plot = app.add_subcommand("plot", "SVG picture of a slice");
  auto* demo = app.add_subcommand("demo-conifold", "the one-curve example end to end");

  for (auto* s : {classify_cmd, charge, heart, merid, plot}) {
    s->add_option("--beta", o.beta, "comma-separated rationals");
    s->add_option("--omega", o.omega, "comma-separated rationals");
  }
  charge->add_option("--class", o.cls, "K-class a,m1,...,mN")->required();
  heart->add_option("--heart", o.heart, "auto, coh, per0, per-1, tilted:i,k or partial:i,j,...");
  lift->add_option("path", o.path, "path JSON file")->required();
  merid->add_option("--curve", o.curve, "curve index i")->required();
  merid->add_option("--k", o.k, "puncture beta_i = k")->required();
  plot->add_option("--slice", o.slice, "curve whose (beta_i, omega_i) plane is drawn");
  plot->add_option("--path", o.path, "path JSON file to overlay");
  plot->add_option("--meridian", o.meridian, "overlay the meridian loop i,k");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*roots) return cmd_roots(o);
    if (*weyl) return cmd_weyl(o);
    if (*classify_cmd) return cmd_classify(o);
    if (*charge) return cmd_charge(o);
    if (*heart) return cmd_heart_check(o);
    if (*lift) return cmd_lift(o);
    if (*merid) return cmd_meridian(o);
    if (*plot) return cmd_plot(o);
    if (*demo) return cmd_demo_conifold(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}
