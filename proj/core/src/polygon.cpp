#include "qdulac/polygon.hpp"

#include <algorithm>

namespace qdulac {

namespace {

Rat cross(const Point& o, const Point& a, const Point& b) {
  return (a.q1 - o.q1) * (b.q2 - o.q2) - (a.q2 - o.q2) * (b.q1 - o.q1);
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  if (!cross(a, b, p).is_zero()) return false;
  return min(a.q1, b.q1) <= p.q1 && p.q1 <= max(a.q1, b.q1) && min(a.q2, b.q2) <= p.q2 &&
         p.q2 <= max(a.q2, b.q2);
}

// Andrew's monotone chain; strict turns only, so collinear points drop out.
std::vector<Point> convex_hull(const PointSet& support) {
  std::vector<Point> pts;
  pts.reserve(support.size());
  for (const auto& p : support) pts.push_back(p);
  // Sort by (q2, q1) so the chain starts at the lowest-then-leftmost point.
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.q2 != b.q2 ? a.q2 < b.q2 : a.q1 < b.q1;
  });
  if (pts.size() <= 2) return pts;

  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p).sign() <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]).sign() <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

Rat pairing(const Rat& r, const Point& p) { return -p.q1 - r * p.q2; }

} // namespace

bool Face::contains(const Point& p) const { return std::binary_search(points.begin(), points.end(), p); }

std::string Face::str() const {
  if (dim == 0) return from.str();
  return from.str() + "-" + to.str();
}

std::vector<Face> NewtonPolygon::vertices() const {
  std::vector<Face> out;
  std::copy_if(faces.begin(), faces.end(), std::back_inserter(out), [](const Face& f) { return f.dim == 0; });
  return out;
}

std::vector<Face> NewtonPolygon::edges() const {
  std::vector<Face> out;
  std::copy_if(faces.begin(), faces.end(), std::back_inserter(out), [](const Face& f) { return f.dim == 1; });
  return out;
}

NewtonPolygon build_polygon(const PointSet& support) {
  NewtonPolygon poly;
  poly.support = support;
  poly.hull_vertices = convex_hull(support);
  const auto& hv = poly.hull_vertices;

  for (const auto& v : hv) poly.faces.push_back(Face{0, {v}, v, v, std::nullopt});

  const std::size_t n_edges = hv.size() < 2 ? 0 : (hv.size() == 2 ? 1 : hv.size());
  for (std::size_t i = 0; i < n_edges; ++i) {
    const Point& a = hv[i];
    const Point& b = hv[(i + 1) % hv.size()];
    Face e{1, {}, a, b, std::nullopt};
    for (const auto& p : support) {
      if (on_segment(a, b, p)) e.points.push_back(p);
    }
    // (-1,-r) must be orthogonal to b - a: r = -(b1 - a1)/(b2 - a2).
    const Point d = b - a;
    if (!d.q2.is_zero()) {
      const Rat r = -d.q1 / d.q2;
      if (cone_contains(e, support, r)) e.r = r;
    }
    poly.faces.push_back(std::move(e));
  }
  return poly;
}

bool cone_contains(const Face& face, const PointSet& support, const Rat& r) {
  if (face.points.empty()) return false;
  const Rat level = pairing(r, face.points.front());
  for (const auto& p : face.points) {
    if (pairing(r, p) != level) return false;
  }
  for (const auto& p : support) {
    if (face.contains(p)) continue;
    if (!(pairing(r, p) < level)) return false;
  }
  return true;
}

std::optional<RInterval> vertex_r_interval(const Point& vertex, const PointSet& support) {
  // -v1 - r v2 > -p1 - r p2  <=>  r (v2 - p2) < p1 - v1
  RInterval iv;
  for (const auto& p : support) {
    if (p == vertex) continue;
    const Rat a = vertex.q2 - p.q2;
    const Rat b = p.q1 - vertex.q1;
    if (a.is_zero()) {
      if (b.sign() <= 0) return std::nullopt;
    } else if (a.sign() > 0) {
      const Rat bound = b / a;
      if (!iv.hi || bound < *iv.hi) iv.hi = bound;
    } else {
      const Rat bound = b / a;
      if (!iv.lo || bound > *iv.lo) iv.lo = bound;
    }
  }
  if (iv.lo && iv.hi && !(*iv.lo < *iv.hi)) return std::nullopt;
  return iv;
}

std::vector<Face> faces_for_x_to_zero(const NewtonPolygon& polygon) {
  struct Keyed {
    Face face;
    std::optional<Rat> key; // empty = -infinity
    int rank;               // vertex before edge before vertex at a shared r
  };
  std::vector<Keyed> sel;
  for (const auto& f : polygon.faces) {
    if (f.dim == 0) {
      auto iv = vertex_r_interval(f.from, polygon.support);
      if (!iv) continue;
      // A vertex ending at edge slope r sorts just before that edge.
      sel.push_back({f, iv->lo, iv->lo ? 2 : 0});
    } else if (f.r) {
      sel.push_back({f, f.r, 1});
    }
  }
  std::stable_sort(sel.begin(), sel.end(), [](const Keyed& a, const Keyed& b) {
    if (a.key.has_value() != b.key.has_value()) return !a.key.has_value();
    if (a.key && *a.key != *b.key) return *a.key < *b.key;
    return a.rank < b.rank;
  });
  std::vector<Face> out;
  out.reserve(sel.size());
  for (auto& k : sel) out.push_back(std::move(k.face));
  return out;
}

} // namespace qdulac
