// Labeled convex polygons and their dissections.
//
// Vertices are 0..n-1 in counterclockwise order. A dissection is a set of
// pairwise noncrossing diagonals; faces are reported as ascending vertex
// lists, which for a convex polygon is also their cyclic order.

#pragma once

#include <compare>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lf {

/// Unordered vertex pair stored with a < b.
struct Chord {
  int a = 0;
  int b = 0;

  Chord() = default;
  Chord(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}

  bool touches(int v) const { return a == v || b == v; }
  friend auto operator<=>(const Chord&, const Chord&) = default;
};

/// Proper interior crossing; chords sharing an endpoint do not cross.
bool crosses(const Chord& x, const Chord& y);

class DissectionError : public std::invalid_argument {
 public:
  enum class Kind { too_few_vertices, vertex_out_of_range, degenerate_pair, crossing_pair, not_an_ear };

  DissectionError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct Face {
  std::vector<int> vertices;

  int size() const { return static_cast<int>(vertices.size()); }
  bool contains(int v) const;
  friend auto operator<=>(const Face&, const Face&) = default;
};

class Dissection {
 public:
  /// Validates and normalizes. Throws DissectionError.
  Dissection(int n, const std::vector<Chord>& diagonals);

  int n() const { return n_; }
  /// Sorted, each with a < b, duplicates collapsed.
  const std::vector<Chord>& diagonals() const { return diagonals_; }
  bool has_diagonal(const Chord& c) const;

  friend bool operator==(const Dissection&, const Dissection&) = default;
  friend auto operator<=>(const Dissection&, const Dissection&) = default;

 private:
  int n_;
  std::vector<Chord> diagonals_;
};

struct DualTree {
  std::vector<Face> nodes;
  std::vector<std::pair<int, int>> edges;  // indices into nodes, first < second

  std::vector<int> degrees() const;
  std::vector<Face> leaves() const;
};

/// Subpolygons sorted lexicographically (hence by minimal vertex first).
std::vector<Face> faces(const Dissection& d);
bool is_p_angulation(const Dissection& d, int p);
/// q_v = number of faces containing v.
std::vector<int> quiddity_counts(const Dissection& d);
/// Faces bounded by exactly one diagonal.
std::vector<Face> ears(const Dissection& d);
/// Removes the ear's boundary-only vertices and relabels survivors
/// order-preservingly to 0..n'-1. The ear's diagonal becomes a polygon edge.
Dissection cut_ear(const Dissection& d, const Face& ear);
DualTree dual_tree(const Dissection& d);

/// Number of vertices of a p-angulation with s faces.
int p_angulation_vertices(int s, int p);

/// Calls visit once for every p-angulation of the labeled
/// ((p-2)s+2)-gon. Supported p: 3, 4, 6.
void for_each_p_angulation(int s, int p, const std::function<void(const Dissection&)>& visit);
/// All p-angulations, sorted lexicographically by diagonal list.
std::vector<Dissection> enumerate_p_angulations(int s, int p);
/// (1/s) * C((p-1)s, s-1)
long long fuss_catalan(int s, int p);

}  // namespace lf
