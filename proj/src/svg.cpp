#include <algorithm>
#include <cstdio>
#include <sstream>

#include "ctv/io.hpp"

namespace ctv::io {

namespace {

constexpr double kSize = 600;
constexpr double kMargin = 40;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s(buf);
  return s == "-0.000" ? "0.000" : s;
}

const char* color(std::size_t i) { return kPalette[i % std::size(kPalette)]; }

// Counter-clockwise hull by monotone chain, exact.
std::vector<Point> hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Point> h(2 * pts.size());
  std::size_t n = 0;
  for (const auto& p : pts) {
    while (n >= 2 && cross(h[n - 2], h[n - 1], p) <= 0) --n;
    h[n++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = n + 1; i-- > 0;) {
    while (n >= lower && cross(h[n - 2], h[n - 1], pts[i]) <= 0) --n;
    h[n++] = pts[i];
  }
  h.resize(n - 1);
  return h;
}

struct Frame {
  double xmin, ymin, scale;

  [[nodiscard]] double x(const Rational& v) const { return kMargin + (v.get_d() - xmin) * scale; }
  [[nodiscard]] double y(const Rational& v) const { return kSize - kMargin - (v.get_d() - ymin) * scale; }
};

}  // namespace

std::string render_svg(const ProblemInstance& instance, const Certificate* cert) {
  if (instance.d != 2) throw Error(ErrorKind::InvalidParameter, "plots need d = 2");

  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool first = true;
  auto extend = [&](const Point& p) {
    const double x = p[0].get_d();
    const double y = p[1].get_d();
    if (first) {
      xmin = xmax = x;
      ymin = ymax = y;
      first = false;
    }
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  };
  for (const auto& c : instance.collections) {
    for (const auto& p : c.points) extend(p);
  }
  if (cert && cert->tverberg) extend(cert->tverberg->witness.point);
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
  const Frame f{xmin - (span - (xmax - xmin)) / 2, ymin - (span - (ymax - ymin)) / 2, (kSize - 2 * kMargin) / span};

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  auto draw_pieces = [&](const ColoredConfig& c, const PartitionTuple& part, std::size_t collection) {
    for (std::size_t j = 0; j < part.pieces.size(); ++j) {
      std::vector<Point> pts;
      for (auto i : part.pieces[j]) pts.push_back(c.points.at(i));
      const auto h = hull(pts);
      const char* stroke = color(j + 3 * collection);
      if (h.size() == 1) continue;
      if (h.size() == 2) {
        out << "<line x1=\"" << fmt(f.x(h[0][0])) << "\" y1=\"" << fmt(f.y(h[0][1])) << "\" x2=\""
            << fmt(f.x(h[1][0])) << "\" y2=\"" << fmt(f.y(h[1][1])) << "\" stroke=\"" << stroke
            << "\" stroke-width=\"2\"/>\n";
        continue;
      }
      out << "<polygon points=\"";
      for (std::size_t i = 0; i < h.size(); ++i) out << (i ? " " : "") << fmt(f.x(h[i][0])) << ',' << fmt(f.y(h[i][1]));
      out << "\" fill=\"" << stroke << "\" fill-opacity=\"0.15\" stroke=\"" << stroke << "\" stroke-width=\"2\"/>\n";
    }
  };

  if (cert && cert->tverberg && !instance.collections.empty()) {
    draw_pieces(instance.collections[0], cert->tverberg->partition, 0);
  }
  if (cert && cert->transversal) {
    const auto& t = *cert->transversal;
    for (std::size_t l = 0; l < t.partitions.size() && l < instance.collections.size(); ++l) {
      draw_pieces(instance.collections[l], t.partitions[l], l);
    }
    if (t.plane.directions.size() == 1) {
      // Clip the line to the drawing square (Liang-Barsky on the parameter).
      const double bx = f.x(t.plane.base[0]);
      const double by = f.y(t.plane.base[1]);
      const double dx = t.plane.directions[0][0].get_d() * f.scale;
      const double dy = -t.plane.directions[0][1].get_d() * f.scale;
      double lo = -1e18, hi = 1e18;
      auto clip = [&](double p, double q) {
        if (p == 0) return;
        const double r = q / p;
        if (p < 0) lo = std::max(lo, r);
        else hi = std::min(hi, r);
      };
      clip(-dx, bx);
      clip(dx, kSize - bx);
      clip(-dy, by);
      clip(dy, kSize - by);
      if (lo < hi) {
        out << "<line x1=\"" << fmt(bx + lo * dx) << "\" y1=\"" << fmt(by + lo * dy) << "\" x2=\""
            << fmt(bx + hi * dx) << "\" y2=\"" << fmt(by + hi * dy) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
      }
    } else if (t.plane.directions.empty()) {
      out << "<circle cx=\"" << fmt(f.x(t.plane.base[0])) << "\" cy=\"" << fmt(f.y(t.plane.base[1]))
          << "\" r=\"5\" fill=\"black\"/>\n";
    }
  }

  for (std::size_t l = 0; l < instance.collections.size(); ++l) {
    const auto& c = instance.collections[l];
    for (std::size_t cls = 0; cls < c.classes.size(); ++cls) {
      for (auto i : c.classes[cls]) {
        const auto& p = c.points.at(i);
        const double x = f.x(p[0]);
        const double y = f.y(p[1]);
        if (l % 2 == 0) {
          out << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"4\"";
        } else {
          out << "<rect x=\"" << fmt(x - 4) << "\" y=\"" << fmt(y - 4) << "\" width=\"8\" height=\"8\"";
        }
        out << " fill=\"" << color(cls) << "\" stroke=\"black\" stroke-width=\"0.5\"><title>collection " << l
            << " point " << i << " class " << cls << "</title></" << (l % 2 == 0 ? "circle" : "rect") << ">\n";
      }
    }
  }

  if (cert && cert->tverberg) {
    const auto& p = cert->tverberg->witness.point;
    const double x = f.x(p[0]);
    const double y = f.y(p[1]);
    out << "<path d=\"M " << fmt(x - 6) << ' ' << fmt(y) << " L " << fmt(x + 6) << ' ' << fmt(y) << " M " << fmt(x)
        << ' ' << fmt(y - 6) << " L " << fmt(x) << ' ' << fmt(y + 6) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace ctv::io
