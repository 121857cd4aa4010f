#include "stabcov/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <variant>

#include "stabcov/error.hpp"
#include "stabcov/strata.hpp"

namespace stabcov {

namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 500;
constexpr double kMargin = 40;

const char* const kPalette[] = {"#dbe9f6", "#fde2c8", "#d9f0d3", "#f3d9ec", "#fff3bf", "#e0e0f8",
                                "#cdeee9", "#f8d7d7", "#e8e3d3", "#d7ecf8", "#efe1f7", "#e3f5c9"};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

struct Frame {
  double x0, x1, y0, y1;
  double sx(double x) const { return kMargin + (x - x0) / (x1 - x0) * (kWidth - 2 * kMargin); }
  double sy(double y) const { return kHeight - kMargin - (y - y0) / (y1 - y0) * (kHeight - 2 * kMargin); }
};

// A root hyperplane seen in the slice: the horizontal line omega_i = level.
struct SliceWall {
  Root root;
  Rational level;
  Rational beta_rest;  // beta.v minus its C_i contribution
  std::int64_t coeff;  // coefficient of e_i in v
};

std::string label_text(const StratumLabel& s) {
  if (const auto* w = std::get_if<WallStrip>(&s))
    return "W(" + std::to_string(w->curve) + "," + std::to_string(w->strip) + ")";
  if (std::holds_alternative<DeepStratum>(s)) return "deep";
  return "";
}

}  // namespace

std::string render_svg(const RootLattice& l, const PlotOptions& opts) {
  const auto n = l.rank();
  int curve = opts.slice_curve;
  if (curve == 0) {
    if (n != 1) throw Error(ErrorCode::UnsupportedSlice, "name a curve to slice along when N >= 2");
    curve = 1;
  }
  if (curve < 1 || static_cast<std::size_t>(curve) > n)
    throw Error(ErrorCode::UnsupportedSlice, "slice curve " + std::to_string(curve) + " out of range");
  const auto ii = static_cast<std::size_t>(curve - 1);
  const ComplexDivisor base = opts.base ? *opts.base : default_basepoint(n);
  if (base.beta.size() != n || base.omega.size() != n) throw Error(ErrorCode::DimensionMismatch, "slice base");

  std::vector<SliceWall> walls;
  for (const auto& v : l.positive_roots()) {
    const auto c = v.coords[ii];
    Rational rest_w = dot(std::span<const Rational>(base.omega), std::span<const std::int64_t>(v.coords)) -
                      Rational(static_cast<long>(c)) * base.omega[ii];
    Rational rest_b = dot(std::span<const Rational>(base.beta), std::span<const std::int64_t>(v.coords)) -
                      Rational(static_cast<long>(c)) * base.beta[ii];
    if (c == 0) {
      if (sgn(rest_w) == 0) throw Error(ErrorCode::UnsupportedSlice, "the slice lies inside a root hyperplane");
      continue;
    }
    walls.push_back(SliceWall{v, -rest_w / c, rest_b, c});
  }

  // Window: integers around the interesting region, stretched to fit the path.
  Rational X0(-3), X1(3), Y0(-2), Y1(2);
  for (const auto& w : walls) {
    Y0 = std::min(Y0, Rational(floor_int(w.level) - 1));
    Y1 = std::max(Y1, Rational(floor_int(w.level) + 2));
  }
  if (opts.path) {
    for (const auto& p : opts.path->breakpoints) {
      if (p.rank() != n) throw Error(ErrorCode::DimensionMismatch, "path point");
      X0 = std::min(X0, Rational(floor_int(p.beta[ii]) - 1));
      X1 = std::max(X1, Rational(floor_int(p.beta[ii]) + 2));
      Y0 = std::min(Y0, Rational(floor_int(p.omega[ii]) - 1));
      Y1 = std::max(Y1, Rational(floor_int(p.omega[ii]) + 2));
    }
  }
  const double x0 = X0.get_d(), x1 = X1.get_d(), y0 = Y0.get_d(), y1 = Y1.get_d();
  const Frame f{x0, x1, y0, y1};

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";

  // Chamber bands. In the slice omega depends only on omega_i, so the
  // Weyl chamber is constant between consecutive wall levels.
  std::set<Rational> levels{Y0, Y1};
  for (const auto& w : walls)
    if (w.level > Y0 && w.level < Y1) levels.insert(w.level);
  std::vector<WeylElement> seen;
  for (auto it = levels.begin(); std::next(it) != levels.end(); ++it) {
    const Rational& lo = *it;
    const Rational& hi = *std::next(it);
    QVec omega = base.omega;
    omega[ii] = (lo + hi) / 2;
    auto loc = locate_weyl_chamber(l, omega);
    auto pos = std::find(seen.begin(), seen.end(), loc.weyl);
    const auto index = static_cast<std::size_t>(pos - seen.begin());
    if (pos == seen.end()) seen.push_back(loc.weyl);
    const double top = f.sy(hi.get_d());
    const double bottom = f.sy(lo.get_d());
    svg << "<rect x=\"" << num(kMargin) << "\" y=\"" << num(top) << "\" width=\"" << num(kWidth - 2 * kMargin)
        << "\" height=\"" << num(bottom - top) << "\" fill=\"" << kPalette[index % std::size(kPalette)] << "\"/>\n";
    std::string word;
    for (int s : loc.weyl.word()) word += (word.empty() ? "" : " ") + std::to_string(s);
    svg << "<text x=\"" << num(kWidth - kMargin - 4) << "\" y=\"" << num(top + 14)
        << "\" font-size=\"11\" text-anchor=\"end\" fill=\"#555\">chamber w = [" << word << "]</text>\n";
  }

  // Axes.
  svg << "<line x1=\"" << num(f.sx(x0)) << "\" y1=\"" << num(f.sy(0)) << "\" x2=\"" << num(f.sx(x1)) << "\" y2=\""
      << num(f.sy(0)) << "\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";
  for (long x = static_cast<long>(std::ceil(x0)); x <= static_cast<long>(std::floor(x1)); ++x) {
    svg << "<text x=\"" << num(f.sx(static_cast<double>(x))) << "\" y=\"" << num(kHeight - kMargin + 16)
        << "\" font-size=\"11\" text-anchor=\"middle\">" << x << "</text>\n";
  }
  svg << "<text x=\"" << num(kWidth / 2) << "\" y=\"" << num(kHeight - 6) << "\" font-size=\"12\" text-anchor=\"middle\">beta_"
      << curve << "</text>\n";
  svg << "<text x=\"12\" y=\"" << num(kHeight / 2) << "\" font-size=\"12\">omega_" << curve << "</text>\n";

  // Walls with their strip labels and punctures.
  for (const auto& w : walls) {
    const double y = w.level.get_d();
    if (y < y0 || y > y1) continue;
    svg << "<line x1=\"" << num(f.sx(x0)) << "\" y1=\"" << num(f.sy(y)) << "\" x2=\"" << num(f.sx(x1)) << "\" y2=\""
        << num(f.sy(y)) << "\" stroke=\"#1f4e79\" stroke-width=\"1.5\"/>\n";
    // Punctures: beta.v = k, i.e. beta_i = (k - rest) / c.
    const auto kmin = static_cast<long>(std::floor(x0 * static_cast<double>(w.coeff) + w.beta_rest.get_d())) - 1;
    const auto kmax = static_cast<long>(std::ceil(x1 * static_cast<double>(w.coeff) + w.beta_rest.get_d())) + 1;
    std::vector<Rational> holes;
    for (long k = kmin; k <= kmax; ++k) {
      Rational x = (Rational(k) - w.beta_rest) / static_cast<long>(w.coeff);
      if (x.get_d() < x0 || x.get_d() > x1) continue;
      holes.push_back(x);
    }
    for (std::size_t h = 0; h + 1 < holes.size(); ++h) {
      ComplexDivisor p = base;
      p.beta[ii] = (holes[h] + holes[h + 1]) / 2;
      p.omega[ii] = w.level;
      const std::string text = label_text(classify(l, p));
      if (text.empty()) continue;
      svg << "<text x=\"" << num(f.sx(p.beta[ii].get_d())) << "\" y=\"" << num(f.sy(y) - 4)
          << "\" font-size=\"10\" text-anchor=\"middle\" fill=\"#1f4e79\">" << escape(text) << "</text>\n";
    }
    for (const auto& x : holes) {
      svg << "<circle cx=\"" << num(f.sx(x.get_d())) << "\" cy=\"" << num(f.sy(y))
          << "\" r=\"4\" fill=\"white\" stroke=\"#c00000\" stroke-width=\"1.5\"/>\n";
    }
  }

  if (opts.path && !opts.path->breakpoints.empty()) {
    svg << "<polyline fill=\"none\" stroke=\"#222\" stroke-width=\"1.5\" points=\"";
    for (const auto& p : opts.path->breakpoints)
      svg << num(f.sx(p.beta[ii].get_d())) << ',' << num(f.sy(p.omega[ii].get_d())) << ' ';
    svg << "\"/>\n";
    const auto& s = opts.path->breakpoints.front();
    svg << "<circle cx=\"" << num(f.sx(s.beta[ii].get_d())) << "\" cy=\"" << num(f.sy(s.omega[ii].get_d()))
        << "\" r=\"3\" fill=\"#222\"/>\n";
  }
  for (const auto& e : opts.crossings) {
    const double cx = f.sx(e.point.beta[ii].get_d());
    const double cy = f.sy(e.point.omega[ii].get_d());
    svg << "<path class=\"crossing\" d=\"M " << num(cx) << ' ' << num(cy - 6) << " L " << num(cx + 6) << ' ' << num(cy)
        << " L " << num(cx) << ' ' << num(cy + 6) << " L " << num(cx - 6) << ' ' << num(cy)
        << " Z\" fill=\"#e69f00\" stroke=\"#222\"/>\n";
    svg << "<text x=\"" << num(cx + 8) << "\" y=\"" << num(cy + 14) << "\" font-size=\"10\">(" << e.crossing.curve << ','
        << e.crossing.strip << ")</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace stabcov
