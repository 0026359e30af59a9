// Vertex coloring, the quadrangulation <-> noncrossing tree bijection and the
// triangulations associated to 4- and 6-angulations.
//
// Odd vertices are black, even vertices white. Every diagonal of a
// p-angulation (p = 4, 6) joins a black and a white vertex.

#pragma once

#include "lf/polygon.hpp"

#include <vector>

namespace lf {

enum class Color { white, black };

/// Throws std::invalid_argument for odd n or v outside 0..n-1.
Color color(int v, int n);

/// Noncrossing spanning tree on the black vertices of an even host polygon.
class NoncrossingTree {
 public:
  /// Throws std::invalid_argument unless edges form a noncrossing spanning
  /// tree on the odd vertices of the host polygon.
  NoncrossingTree(int host_n, const std::vector<Chord>& edges);

  int host_n() const { return host_n_; }
  const std::vector<Chord>& edges() const { return edges_; }

  friend bool operator==(const NoncrossingTree&, const NoncrossingTree&) = default;

 private:
  int host_n_;
  std::vector<Chord> edges_;
};

/// A dissection whose faces are all triangles.
class Triangulation {
 public:
  explicit Triangulation(Dissection d);

  const Dissection& dissection() const { return d_; }
  int n() const { return d_.n(); }

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  Dissection d_;
};

NoncrossingTree quad_to_tree(const Dissection& d);
Dissection tree_to_quad(const NoncrossingTree& t);

Triangulation associated_triangulation_p4(const Dissection& d);
Triangulation associated_triangulation_p6(const Dissection& d);
/// Dispatches on p in {4, 6}.
Triangulation associated_triangulation(const Dissection& d, int p);

/// Incident-triangle counts; the Conway-Coxeter quiddity sequence of t.
std::vector<int> triangle_counts(const Triangulation& t);

}  // namespace lf
