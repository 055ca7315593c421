#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdulac/polygon.hpp"
#include "qdulac/qpoly.hpp"
#include "qdulac/roots.hpp"
#include "qdulac/upoly.hpp"

namespace qdulac {

enum class Provenance { vertex_root, edge_root, user_supplied };

std::string_view provenance_name(Provenance p) noexcept;

/// Sum of the terms of f whose exponent point lies on the face.
QPolynomial truncated_sum(const QPolynomial& f, const Face& face);

/// True iff truncated_sum(f, face) vanishes identically at y = c x^r.
bool solves_truncated(const QPolynomial& f, const Face& face, const ParamPoly& c, const Rat& r, const Rat& q);

/// Leading-order candidate y = c x^r attached to a face. Construction checks
/// that it solves the face's truncated equation.
class TruncatedSolution {
public:
  /// Throws Errc::truncated_solution when c x^r does not solve the truncated
  /// equation, Errc::invalid_argument when c is zero.
  static TruncatedSolution make(const QPolynomial& f, Face face, ParamPoly c, Rat r, const Rat& q,
                                Provenance provenance);

  const ParamPoly& c() const noexcept { return c_; }
  const Rat& r() const noexcept { return r_; }
  const Face& face() const noexcept { return face_; }
  Provenance provenance() const noexcept { return provenance_; }

private:
  TruncatedSolution(ParamPoly c, Rat r, Face face, Provenance p)
      : c_(std::move(c)), r_(std::move(r)), face_(std::move(face)), provenance_(p) {}

  ParamPoly c_;
  Rat r_;
  Face face_;
  Provenance provenance_;
};

bool verify_truncated(const TruncatedSolution& ts, const QPolynomial& f, const Rat& q);

/// chi(w), w = q^r, for a truncation whose terms all share one exponent
/// point. Throws Errc::not_a_vertex otherwise.
UPoly vertex_char_poly(const QPolynomial& g, const Rat& q);

/// Polynomial in c obtained from g(x, c x^r) after dividing out the common
/// x power. Throws Errc::inconsistent_edge if the x powers differ.
UPoly determining_poly(const QPolynomial& g, const Rat& r, const Rat& q);

/// Everything the truncation step learns about one face.
struct FaceAnalysis {
  Face face;
  QPolynomial truncated;
  /// "w" for a vertex (chi in w = q^r), "c" for an edge.
  std::string poly_variable;
  UPoly poly;
  std::vector<RationalRoot> roots;
  std::vector<TruncatedSolution> candidates;
  std::vector<std::string> diagnostics;
  /// The polynomial depends on parameters; the user must supply c.
  bool needs_c = false;
};

/// Solves the truncated equation of one face. Edges use their slope r; only
/// rational, nonzero c are kept. Vertices keep rational w > 0 with rational
/// log_q w inside the vertex's cone; c is then a free symbol.
FaceAnalysis analyze_face(const QPolynomial& f, const NewtonPolygon& polygon, const Face& face, const Rat& q);

/// analyze_face over faces_for_x_to_zero, in order.
std::vector<FaceAnalysis> solve_truncated(const QPolynomial& f, const Rat& q);

/// Name for the free leading coefficient of a vertex solution, chosen so it
/// does not clash with symbols already in f.
std::string free_coefficient_name(const QPolynomial& f);

} // namespace qdulac
