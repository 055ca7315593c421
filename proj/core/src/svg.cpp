#include <cstdio>
#include <sstream>

#include "qdulac/polygon.hpp"

namespace qdulac {

namespace {

constexpr double kSize = 400.0;
constexpr double kMargin = 50.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Frame {
  long x0, x1, y0, y1;
  double scale;

  double px(const Rat& v) const { return kMargin + (v.to_double() - static_cast<double>(x0)) * scale; }
  double py(const Rat& v) const { return kSize - kMargin - (v.to_double() - static_cast<double>(y0)) * scale; }
};

Frame make_frame(const PointSet& pts) {
  mpz_class x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  bool first = true;
  for (const auto& p : pts) {
    const mpz_class fx = p.q1.floor(), cx = p.q1.ceil(), fy = p.q2.floor(), cy = p.q2.ceil();
    if (first) {
      x0 = std::min(fx, mpz_class(0));
      y0 = std::min(fy, mpz_class(0));
      x1 = cx;
      y1 = cy;
      first = false;
    } else {
      x0 = std::min(x0, fx);
      x1 = std::max(x1, cx);
      y0 = std::min(y0, fy);
      y1 = std::max(y1, cy);
    }
  }
  // Square frame, at least one unit wide, with one unit of headroom.
  x1 += 1;
  y1 += 1;
  const mpz_class span = std::max(x1 - x0, y1 - y0);
  Frame f{x0.get_si(), x0.get_si() + span.get_si(), y0.get_si(), y0.get_si() + span.get_si(), 0.0};
  f.scale = (kSize - 2 * kMargin) / static_cast<double>(span.get_si());
  return f;
}

} // namespace

std::string polygon_svg(const NewtonPolygon& polygon, const std::string& title) {
  const Frame fr = make_frame(polygon.support);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"400\" height=\"400\" fill=\"white\"/>\n";
  if (!title.empty()) {
    out << "<text x=\"200\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
        << title << "</text>\n";
  }

  // Axes with integer ticks.
  const double ax = fr.px(Rat(0));
  const double ay = fr.py(Rat(0));
  out << "<g stroke=\"black\" stroke-width=\"1\">\n";
  out << "<line x1=\"" << fmt(kMargin) << "\" y1=\"" << fmt(ay) << "\" x2=\"" << fmt(kSize - kMargin / 2)
      << "\" y2=\"" << fmt(ay) << "\"/>\n";
  out << "<line x1=\"" << fmt(ax) << "\" y1=\"" << fmt(kSize - kMargin) << "\" x2=\"" << fmt(ax)
      << "\" y2=\"" << fmt(kMargin / 2) << "\"/>\n";
  out << "</g>\n";
  out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
  for (long i = fr.x0; i <= fr.x1; ++i) {
    const double x = fr.px(Rat(i));
    out << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(ay - 3) << "\" x2=\"" << fmt(x) << "\" y2=\""
        << fmt(ay + 3) << "\" stroke=\"black\"/>";
    out << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(ay + 16) << "\" text-anchor=\"middle\">" << i
        << "</text>\n";
  }
  for (long j = fr.y0; j <= fr.y1; ++j) {
    const double y = fr.py(Rat(j));
    out << "<line x1=\"" << fmt(ax - 3) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(ax + 3) << "\" y2=\""
        << fmt(y) << "\" stroke=\"black\"/>";
    out << "<text x=\"" << fmt(ax - 8) << "\" y=\"" << fmt(y + 4) << "\" text-anchor=\"end\">" << j
        << "</text>\n";
  }
  out << "<text x=\"" << fmt(kSize - kMargin / 2) << "\" y=\"" << fmt(ay + 16) << "\">q1</text>\n";
  out << "<text x=\"" << fmt(ax + 6) << "\" y=\"" << fmt(kMargin / 2) << "\">q2</text>\n";
  out << "</g>\n";

  const auto& hv = polygon.hull_vertices;
  if (hv.size() >= 2) {
    out << "<polygon points=\"";
    for (std::size_t i = 0; i < hv.size(); ++i) {
      if (i > 0) out << ' ';
      out << fmt(fr.px(hv[i].q1)) << ',' << fmt(fr.py(hv[i].q2));
    }
    out << "\" fill=\"#dbe9f6\" fill-opacity=\"0.6\" stroke=\"#1f4e79\" stroke-width=\"2\"/>\n";
  }

  out << "<g fill=\"#1f4e79\">\n";
  for (const auto& p : polygon.support) {
    out << "<circle cx=\"" << fmt(fr.px(p.q1)) << "\" cy=\"" << fmt(fr.py(p.q2)) << "\" r=\"4\"/>\n";
  }
  out << "</g>\n";

  out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#7a1f1f\">\n";
  for (const auto& v : hv) {
    out << "<text x=\"" << fmt(fr.px(v.q1) + 6) << "\" y=\"" << fmt(fr.py(v.q2) - 6) << "\">" << v.str()
        << "</text>\n";
  }
  out << "</g>\n";
  out << "</svg>\n";
  return out.str();
}

} // namespace qdulac
