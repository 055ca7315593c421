#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdulac/qpoly.hpp"

namespace qdulac {

/// A vertex (dim 0) or edge (dim 1) of a Newton polygon together with its
/// boundary subset: every support point lying on it.
struct Face {
  int dim = 0;
  /// Boundary subset, sorted.
  std::vector<Point> points;
  /// Hull endpoints; for a vertex both equal the vertex.
  Point from;
  Point to;
  /// Edges only: the slope r for which (-1,-r) is normal to the edge and
  /// points away from the polygon. Empty when no such r exists.
  std::optional<Rat> r;

  PointSet point_set() const { return PointSet(points.begin(), points.end()); }
  bool contains(const Point& p) const;
  std::string str() const;

  friend bool operator==(const Face&, const Face&) = default;
};

/// Open interval of r; an absent bound is infinite.
struct RInterval {
  std::optional<Rat> lo;
  std::optional<Rat> hi;
  bool contains(const Rat& r) const { return (!lo || *lo < r) && (!hi || r < *hi); }
};

struct NewtonPolygon {
  PointSet support;
  /// Counterclockwise, starting at the lowest-then-leftmost vertex. Collinear
  /// points are never vertices.
  std::vector<Point> hull_vertices;
  /// All vertices, then all edges (hull order).
  std::vector<Face> faces;

  std::vector<Face> vertices() const;
  std::vector<Face> edges() const;
};

/// Exact convex hull and face enumeration. A single point gives one vertex;
/// a collinear set gives two vertices joined by one edge.
NewtonPolygon build_polygon(const PointSet& support);

/// True iff P = (-1,-r) takes one common value on the face's boundary subset
/// and strictly smaller values on every other support point.
bool cone_contains(const Face& face, const PointSet& support, const Rat& r);

/// The r-values with (-1,-r) in the vertex's normal cone (an open interval,
/// possibly empty).
std::optional<RInterval> vertex_r_interval(const Point& vertex, const PointSet& support);

/// Faces whose normal cone meets {p1 < 0}, ordered by increasing r: an edge
/// sits at its slope and a vertex at its r-interval.
std::vector<Face> faces_for_x_to_zero(const NewtonPolygon& polygon);

/// Deterministic SVG (400x400 viewport) with support dots, hull outline,
/// labeled vertices and integer-labeled axes.
std::string polygon_svg(const NewtonPolygon& polygon, const std::string& title = "");

} // namespace qdulac
