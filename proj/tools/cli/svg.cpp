#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "fundom/ak_reduction.hpp"
#include "fundom/gl3_paving.hpp"
#include "fundom/orthogonal_family.hpp"

namespace fundom::cli {

namespace {

constexpr double kUnit = 36.0;
const double kHalfRoot3 = std::sqrt(3.0) / 2.0;

struct P2 {
  double x;
  double y;
};

// mu1 up, mu2 lower left, mu3 lower right; SVG y grows downwards.
P2 project(const Coweight& mu) {
  const double x = kHalfRoot3 * (mu[2] - mu[1]);
  const double y = mu[0] - 0.5 * (mu[1] + mu[2]);
  return {kUnit * x, -kUnit * y};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string escape(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '<') r += "&lt;";
    else if (c == '>') r += "&gt;";
    else if (c == '&') r += "&amp;";
    else r += c;
  }
  return r;
}

const std::vector<std::string>& palette() {
  static const std::vector<std::string> p{"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1",
                                          "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295", "#8cd17d", "#a0cbe8"};
  return p;
}

class Canvas {
 public:
  void line(P2 a, P2 b, const std::string& style) {
    grow(a);
    grow(b);
    body_ << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x) << "\" y2=\"" << num(b.y)
          << "\" " << style << "/>\n";
  }
  void polygon(const std::vector<P2>& pts, const std::string& style) {
    body_ << "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      grow(pts[i]);
      body_ << (i ? " " : "") << num(pts[i].x) << ',' << num(pts[i].y);
    }
    body_ << "\" " << style << "/>\n";
  }
  void circle(P2 c, double r, const std::string& style) {
    grow({c.x - r, c.y - r});
    grow({c.x + r, c.y + r});
    body_ << "<circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\"" << num(r) << "\" " << style << "/>\n";
  }
  void text(P2 at, const std::string& s, double size, const std::string& extra = "") {
    grow(at);
    body_ << "<text x=\"" << num(at.x) << "\" y=\"" << num(at.y) << "\" font-size=\"" << num(size)
          << "\" text-anchor=\"middle\"" << (extra.empty() ? "" : " " + extra) << ">" << escape(s) << "</text>\n";
  }

  std::string finish(const std::string& title) const {
    const double margin = 40.0;
    const double x0 = min_x_ - margin;
    const double y0 = min_y_ - margin - 20.0;
    const double w = max_x_ - min_x_ + 2 * margin;
    const double h = max_y_ - min_y_ + 2 * margin + 20.0;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(x0) << ' ' << num(y0) << ' ' << num(w) << ' '
       << num(h) << "\" width=\"" << num(w) << "\" height=\"" << num(h) << "\" font-family=\"sans-serif\">\n"
       << "<rect x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\"" << num(w) << "\" height=\"" << num(h)
       << "\" fill=\"white\"/>\n"
       << "<text x=\"" << num(x0 + w / 2) << "\" y=\"" << num(y0 + 22) << "\" font-size=\"14.00\" text-anchor=\"middle\">"
       << escape(title) << "</text>\n"
       << body_.str() << "</svg>\n";
    return os.str();
  }

 private:
  void grow(P2 p) {
    min_x_ = std::min(min_x_, p.x);
    max_x_ = std::max(max_x_, p.x);
    min_y_ = std::min(min_y_, p.y);
    max_y_ = std::max(max_y_, p.y);
  }
  std::ostringstream body_;
  double min_x_ = 1e300;
  double max_x_ = -1e300;
  double min_y_ = 1e300;
  double max_y_ = -1e300;
};

using Labelling = std::map<Coweight, std::string>;

std::map<std::string, std::string> colour_map(const Labelling& labels) {
  std::vector<std::string> names;
  for (const auto& [mu, l] : labels) names.push_back(l);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  std::map<std::string, std::string> colours;
  for (std::size_t i = 0; i < names.size(); ++i) colours[names[i]] = palette()[i % palette().size()];
  return colours;
}

// Segments of the hexagonal Voronoi diagram separating differently labelled
// neighbours.
void draw_boundaries(Canvas& c, const Labelling& labels) {
  const std::vector<Coweight> roots{{1, -1, 0}, {1, 0, -1}, {0, 1, -1}};
  for (const auto& [mu, l] : labels) {
    for (const auto& r : roots) {
      auto it = labels.find(mu + r);
      if (it == labels.end() || it->second == l) continue;
      const P2 a = project(mu);
      const P2 b = project(it->first);
      const P2 m{(a.x + b.x) / 2, (a.y + b.y) / 2};
      const double dx = b.x - a.x;
      const double dy = b.y - a.y;
      const double len = std::sqrt(dx * dx + dy * dy);
      const double half = len / (2 * std::sqrt(3.0));
      const P2 n{-dy / len * half, dx / len * half};
      c.line({m.x + n.x, m.y + n.y}, {m.x - n.x, m.y - n.y}, "stroke=\"black\" stroke-width=\"2.00\"");
    }
  }
}

void draw_points(Canvas& c, const Labelling& labels, bool coordinates) {
  const auto colours = colour_map(labels);
  for (const auto& [mu, l] : labels) {
    const P2 p = project(mu);
    c.circle(p, 4.0, "fill=\"" + colours.at(l) + "\" stroke=\"black\" stroke-width=\"0.50\"");
    if (coordinates) {
      std::ostringstream os;
      os << mu[0] << ',' << mu[1] << ',' << mu[2];
      c.text({p.x, p.y + 14.0}, os.str(), 7.0, "fill=\"#555555\"");
    }
  }
}

void draw_region_names(Canvas& c, const Labelling& labels) {
  std::map<std::string, std::pair<P2, int>> acc;
  for (const auto& [mu, l] : labels) {
    auto& [sum, count] = acc[l];
    const P2 p = project(mu);
    sum.x += p.x;
    sum.y += p.y;
    ++count;
  }
  for (const auto& [l, sc] : acc) {
    c.text({sc.first.x / sc.second, sc.first.y / sc.second - 8.0}, l, 13.0, "font-weight=\"bold\"");
  }
}

std::vector<P2> outline(const std::vector<Coweight>& corners) {
  std::vector<P2> pts;
  for (const auto& mu : corners) pts.push_back(project(mu));
  return pts;
}

std::vector<Coweight> hexagon_vertices(const RootValuation& rv) {
  const auto fam = regular_family(rv);
  std::vector<Coweight> v;
  for (const auto& [w, mu] : fam.vertices()) v.push_back(mu);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  double cx = 0;
  double cy = 0;
  for (const auto& mu : v) {
    cx += project(mu).x / static_cast<double>(v.size());
    cy += project(mu).y / static_cast<double>(v.size());
  }
  std::sort(v.begin(), v.end(), [&](const Coweight& a, const Coweight& b) {
    const P2 pa = project(a);
    const P2 pb = project(b);
    return std::atan2(pa.y - cy, pa.x - cx) < std::atan2(pb.y - cy, pb.x - cx);
  });
  return v;
}

void draw_hexagon(Canvas& c, const RootValuation& rv, bool vertex_labels) {
  const auto v = hexagon_vertices(rv);
  c.polygon(outline(v), "fill=\"none\" stroke=\"#333333\" stroke-width=\"1.50\" stroke-dasharray=\"4 3\"");
  if (!vertex_labels) return;
  for (const auto& mu : v) {
    const P2 p = project(mu);
    c.text({p.x, p.y - 10.0}, mu.str(), 10.0);
  }
}

std::vector<Coweight> triangle_corners(int level) { return {{level, 0, 0}, {0, level, 0}, {0, 0, level}}; }

const char* kThin = "fill=\"none\" stroke=\"#333333\" stroke-width=\"1.00\"";

std::string title_of(const std::string& figure, int n1, int n2) {
  std::ostringstream os;
  os << figure << " n=(" << n1 << "," << n2 << ")";
  return os.str();
}

}  // namespace

std::string render_svg(const std::string& figure, int n1, int n2) {
  const RootValuation rv({n1, n2});
  Canvas c;
  if (figure == "partition") {
    const AkPartition partition(rv);
    const int level = regular_family(rv).common_level();
    const int bound = level + 3;
    Labelling labels;
    for (const auto& mu : window_points({level, bound})) labels[mu] = partition.classify(mu).str();
    draw_boundaries(c, labels);
    draw_points(c, labels, false);
    draw_hexagon(c, rv, true);
    draw_region_names(c, labels);
  } else if (figure == "triangle" || figure == "complement") {
    const int level = 2 * n1 + n2;
    Labelling labels;
    for (const auto& mu : triangle_points(rv)) {
      if (figure == "triangle") {
        labels[mu] = std::string(to_string(triangle_region(rv, mu)));
      } else {
        const auto t = complement_region(rv, mu);
        labels[mu] = t ? std::string(to_string(*t)) : "F";
      }
    }
    c.polygon(outline(triangle_corners(level)), kThin);
    if (figure == "complement") draw_hexagon(c, rv, false);
    draw_boundaries(c, labels);
    draw_points(c, labels, true);
    draw_region_names(c, labels);
  } else if (figure == "nonstandard") {
    const auto report = v_partition(rv);
    Labelling labels;
    for (const auto& [mu, l] : report.labelled) labels[mu] = std::string(to_string(l));
    for (const auto& mu : report.gaps) labels[mu] = "gap";
    draw_hexagon(c, rv, false);
    draw_boundaries(c, labels);
    draw_points(c, labels, true);
    for (const auto& mu : report.overlap) c.circle(project(mu), 7.0, "fill=\"none\" stroke=\"black\" stroke-width=\"1.00\"");
    draw_region_names(c, labels);
  } else if (figure == "hexagon") {
    const int level = 2 * n1 + n2;
    c.polygon(outline(triangle_corners(level)), kThin);
    // mu1 <= 2n1, mu2 <= n1+n2, mu3 <= n1+n2 cut out the inverted triangle.
    const int a = 2 * n1;
    const int b = n1 + n2;
    c.polygon(outline({{a, b, level - a - b}, {level - 2 * b, b, b}, {a, level - a - b, b}}), kThin);
    c.polygon(outline(hexagon_vertices(rv)), "fill=\"#dbe8f5\" stroke=\"#1f4e79\" stroke-width=\"2.00\"");
    for (const auto& mu : fundamental_fixed_points(rv)) c.circle(project(mu), 3.0, "fill=\"#1f4e79\"");
    for (const auto& mu : hexagon_vertices(rv)) {
      const P2 p = project(mu);
      c.text({p.x, p.y - 10.0}, mu.str(), 10.0);
    }
  } else {
    throw std::invalid_argument("unknown figure " + figure);
  }
  return c.finish(title_of(figure, n1, n2));
}

}  // namespace fundom::cli
