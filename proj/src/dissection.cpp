#include "ncdissect/dissection.hpp"

#include <algorithm>
#include <string>

#include "ncdissect/errors.hpp"

namespace ncdissect {

namespace {

std::string to_string(const Diagonal& d) {
  return "{" + std::to_string(d.u) + "," + std::to_string(d.w) + "}";
}

std::string to_string(const Region& r) {
  std::string out = "(";
  for (std::size_t k = 0; k < r.vertices.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(r.vertices[k]);
  }
  return out + ")";
}

void require_params(int s, int n) {
  if (s < 1 || n < 1) throw DomainError("require s >= 1 and n >= 1");
}

void require_enum_params(int s, int n, int i) {
  require_params(s, n);
  if (i < 0 || i > n - 1) throw DomainError("require 0 <= i <= n-1");
}

bool adjacent(int a, int b, int vertex_count) {
  const int gap = b > a ? b - a : a - b;
  return gap == 1 || gap == vertex_count - 1;
}

// Walks the face lying inside the interval [lo, hi] (closed by the chord or
// boundary edge hi--lo), appending it and every face nested under it.
void collect_faces(int lo, int hi, const std::vector<std::vector<int>>& right_partners,
                   std::vector<Region>& out) {
  Region face;
  face.vertices.push_back(lo);
  int x = lo;
  while (x != hi) {
    int next = x + 1;
    for (int partner : right_partners[x]) {
      if (partner <= hi && !(x == lo && partner == hi)) next = std::max(next, partner);
    }
    if (next > x + 1) collect_faces(x, next, right_partners, out);
    face.vertices.push_back(next);
    x = next;
  }
  out.push_back(std::move(face));
}

std::vector<Region> faces_unchecked(const Dissection& d) {
  const int vertex_count = d.vertex_count();
  std::vector<std::vector<int>> right_partners(vertex_count + 1);
  for (const auto& diag : d.diagonals) right_partners[diag.u].push_back(diag.w);
  std::vector<Region> out;
  out.reserve(d.diagonals.size() + 1);
  collect_faces(1, vertex_count, right_partners, out);
  std::sort(out.begin(), out.end());
  return out;
}

DissectionReport structural_check(const Dissection& d) {
  DissectionReport report;
  auto fail = [&report](DissectionViolation kind, std::string message,
                        std::vector<Diagonal> witness) {
    report.kind = kind;
    report.message = std::move(message);
    report.witness_diagonals = std::move(witness);
    return report;
  };
  if (d.s < 1 || d.n < 1) {
    return fail(DissectionViolation::bad_parameters, "require s >= 1 and n >= 1", {});
  }
  const int vertex_count = d.vertex_count();
  for (const auto& diag : d.diagonals) {
    if (diag.u < 1 || diag.w > vertex_count || diag.u >= diag.w) {
      return fail(DissectionViolation::vertex_out_of_range,
                  "diagonal " + to_string(diag) + " is outside 1.." +
                      std::to_string(vertex_count),
                  {diag});
    }
    if (adjacent(diag.u, diag.w, vertex_count)) {
      return fail(DissectionViolation::not_a_diagonal,
                  "pair " + to_string(diag) + " joins adjacent vertices", {diag});
    }
  }
  for (std::size_t a = 0; a < d.diagonals.size(); ++a) {
    for (std::size_t b = a + 1; b < d.diagonals.size(); ++b) {
      const auto& x = d.diagonals[a];
      const auto& y = d.diagonals[b];
      if (x == y) {
        return fail(DissectionViolation::duplicate_diagonal,
                    "diagonal " + to_string(x) + " listed twice", {x});
      }
      if (chords_cross(x, y)) {
        return fail(DissectionViolation::crossing,
                    "diagonals " + to_string(x) + " and " + to_string(y) + " cross",
                    {x, y});
      }
    }
  }
  return report;
}

}  // namespace

Diagonal make_diagonal(int a, int b) { return a < b ? Diagonal{a, b} : Diagonal{b, a}; }

bool chords_cross(const Diagonal& x, const Diagonal& y) {
  return (x.u < y.u && y.u < x.w && x.w < y.w) || (y.u < x.u && x.u < y.w && y.w < x.w);
}

Dissection make_dissection(int s, int n, std::vector<std::pair<int, int>> pairs) {
  Dissection d{s, n, {}};
  d.diagonals.reserve(pairs.size());
  for (auto [a, b] : pairs) d.diagonals.push_back(make_diagonal(a, b));
  std::sort(d.diagonals.begin(), d.diagonals.end());
  return d;
}

bool Region::contains(int v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

Region canonical_region(std::vector<int> cyclic_vertices) {
  auto smallest = std::min_element(cyclic_vertices.begin(), cyclic_vertices.end());
  std::rotate(cyclic_vertices.begin(), smallest, cyclic_vertices.end());
  return Region{std::move(cyclic_vertices)};
}

DissectionReport validate(const Dissection& d) {
  DissectionReport report = structural_check(d);
  if (!report.ok()) return report;
  for (auto& face : faces_unchecked(d)) {
    const int size = static_cast<int>(face.vertices.size());
    if ((size - 2) % d.s != 0) {
      report.kind = DissectionViolation::face_size;
      report.message = "face " + to_string(face) + " has " + std::to_string(size) +
                       " vertices, not 2 mod " + std::to_string(d.s);
      report.witness_face = std::move(face);
      return report;
    }
  }
  return report;
}

DissectionReport validate(const PointedDissection& pd) {
  DissectionReport report = validate(pd.dissection);
  if (!report.ok()) return report;
  const auto all = faces_unchecked(pd.dissection);
  if (std::find(all.begin(), all.end(), pd.base) == all.end()) {
    report.kind = DissectionViolation::base_not_a_face;
    report.message = "base " + to_string(pd.base) + " is not a face";
    report.witness_face = pd.base;
  }
  return report;
}

std::vector<Region> faces(const Dissection& d) {
  const DissectionReport report = structural_check(d);
  if (!report.ok()) throw InvalidInput(report.message);
  return faces_unchecked(d);
}

int diagonal_beginning(const PointedDissection& pd, const Diagonal& diag) {
  const auto& diagonals = pd.dissection.diagonals;
  const Diagonal key = make_diagonal(diag.u, diag.w);
  if (!std::binary_search(diagonals.begin(), diagonals.end(), key)) {
    throw InvalidInput("diagonal " + to_string(key) + " is not in the dissection");
  }
  const auto& base = pd.base.vertices;
  const bool inside = std::all_of(base.begin(), base.end(),
                                  [&](int v) { return key.u <= v && v <= key.w; });
  const bool outside = std::all_of(base.begin(), base.end(),
                                   [&](int v) { return v <= key.u || v >= key.w; });
  if (inside == outside) {
    throw InvalidInput("base " + to_string(pd.base) + " is not on one side of " +
                       to_string(key));
  }
  // Arc u -> w holds the base: travel starts at w. Otherwise arc w -> u does.
  return inside ? key.w : key.u;
}

std::vector<int> beginnings_sequence(const PointedDissection& pd) {
  std::vector<int> out;
  out.reserve(pd.dissection.diagonals.size());
  for (const auto& diag : pd.dissection.diagonals) out.push_back(diagonal_beginning(pd, diag));
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_dissection(int s, int n, int i,
                         const std::function<void(const Dissection&)>& visit) {
  require_enum_params(s, n, i);
  const int vertex_count = s * n + 2;
  // Both sides of a usable diagonal must themselves have 2 mod s vertices,
  // i.e. w - u - 1 must be a multiple of s.
  std::vector<Diagonal> candidates;
  for (int u = 1; u <= vertex_count; ++u) {
    for (int w = u + 2; w <= vertex_count; ++w) {
      if (adjacent(u, w, vertex_count)) continue;
      if ((w - u - 1) % s == 0) candidates.push_back({u, w});
    }
  }

  Dissection current{s, n, {}};
  current.diagonals.reserve(i);
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    if (static_cast<int>(current.diagonals.size()) == i) {
      if (validate(current).ok()) visit(current);
      return;
    }
    const std::size_t needed = i - current.diagonals.size();
    for (std::size_t c = from; c + needed <= candidates.size(); ++c) {
      const Diagonal& cand = candidates[c];
      const bool crosses =
          std::any_of(current.diagonals.begin(), current.diagonals.end(),
                      [&](const Diagonal& chosen) { return chords_cross(chosen, cand); });
      if (crosses) continue;
      current.diagonals.push_back(cand);
      extend(c + 1);
      current.diagonals.pop_back();
    }
  };
  extend(0);
}

std::vector<Dissection> enumerate_dissections(int s, int n, int i) {
  std::vector<Dissection> out;
  for_each_dissection(s, n, i, [&out](const Dissection& d) { out.push_back(d); });
  return out;
}

void for_each_pointed(int s, int n, int i,
                      const std::function<void(const PointedDissection&)>& visit) {
  for_each_dissection(s, n, i, [&visit](const Dissection& d) {
    for (auto& face : faces(d)) visit(PointedDissection{d, std::move(face)});
  });
}

std::vector<PointedDissection> enumerate_pointed(int s, int n, int i) {
  std::vector<PointedDissection> out;
  for_each_pointed(s, n, i, [&out](const PointedDissection& pd) { out.push_back(pd); });
  return out;
}

}  // namespace ncdissect
