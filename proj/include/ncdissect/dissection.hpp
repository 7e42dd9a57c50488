#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ncdissect {

// Vertices of the (sn+2)-gon are numbered 1..sn+2 anti-clockwise.

/// Unordered vertex pair, stored with u < w.
struct Diagonal {
  int u = 0;
  int w = 0;

  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

Diagonal make_diagonal(int a, int b);

/// True when {a,b} and {c,d} cross in the interior of a convex polygon.
bool chords_cross(const Diagonal& x, const Diagonal& y);

struct Dissection {
  int s = 1;
  int n = 1;
  std::vector<Diagonal> diagonals;  // sorted, each with u < w

  int vertex_count() const { return s * n + 2; }

  friend bool operator==(const Dissection&, const Dissection&) = default;
};

/// Builds a dissection with normalized (u < w, sorted) diagonals. Performs no
/// validation beyond normalization.
Dissection make_dissection(int s, int n, std::vector<std::pair<int, int>> pairs);

/// One face of a dissection. Vertices are listed anti-clockwise starting at
/// the smallest vertex, which for a convex polygon means ascending order.
struct Region {
  std::vector<int> vertices;

  bool contains(int v) const;

  friend auto operator<=>(const Region&, const Region&) = default;
};

/// Rotates a cyclic vertex list so that it starts at its smallest vertex.
Region canonical_region(std::vector<int> cyclic_vertices);

struct PointedDissection {
  Dissection dissection;
  Region base;

  friend bool operator==(const PointedDissection&, const PointedDissection&) = default;
};

enum class DissectionViolation {
  none,
  bad_parameters,
  vertex_out_of_range,
  not_a_diagonal,
  duplicate_diagonal,
  crossing,
  face_size,
  base_not_a_face,
};

struct DissectionReport {
  DissectionViolation kind = DissectionViolation::none;
  std::string message;
  std::vector<Diagonal> witness_diagonals;  // offending diagonal(s)
  std::optional<Region> witness_face;

  bool ok() const { return kind == DissectionViolation::none; }
};

/// Checks the non-adjacency, non-crossing and face-size invariants. Reports
/// the first violation found together with its witness.
DissectionReport validate(const Dissection& d);

/// Same as validate(), plus membership of the base among the faces.
DissectionReport validate(const PointedDissection& pd);

/// The |diagonals|+1 faces, ordered lexicographically. Throws InvalidInput
/// when the diagonals are out of range or cross.
std::vector<Region> faces(const Dissection& d);

/// The endpoint x of `diag` such that every base vertex lies on the closed
/// anti-clockwise arc from the other endpoint to x; with the base on the
/// left, x is where travel along the diagonal begins.
int diagonal_beginning(const PointedDissection& pd, const Diagonal& diag);

/// Sorted beginnings of all diagonals.
std::vector<int> beginnings_sequence(const PointedDissection& pd);

/// Visits every element of Q_i(s,n) once, in lexicographic order of the
/// sorted diagonal list. Independent of the Psi codec.
void for_each_dissection(int s, int n, int i,
                         const std::function<void(const Dissection&)>& visit);
std::vector<Dissection> enumerate_dissections(int s, int n, int i);

/// Every dissection of Q_i(s,n) paired with each of its faces, in the order
/// (dissection, face) as produced by enumerate_dissections and faces().
void for_each_pointed(int s, int n, int i,
                      const std::function<void(const PointedDissection&)>& visit);
std::vector<PointedDissection> enumerate_pointed(int s, int n, int i);

}  // namespace ncdissect
