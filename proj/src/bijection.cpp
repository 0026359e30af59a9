#include "lf/bijection.hpp"
#include "lf/error.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lf {

Color color(int v, int n) {
  if (n % 2 != 0) throw std::invalid_argument("coloring needs an even vertex count, got " + std::to_string(n));
  if (v < 0 || v >= n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  return v % 2 == 1 ? Color::black : Color::white;
}

namespace {

bool is_black(int v) { return v % 2 == 1; }

std::string chord_str(const Chord& c) { return "{" + std::to_string(c.a) + "," + std::to_string(c.b) + "}"; }

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

}  // namespace

NoncrossingTree::NoncrossingTree(int host_n, const std::vector<Chord>& edges) : host_n_(host_n), edges_(edges) {
  if (host_n < 4 || host_n % 2 != 0) throw std::invalid_argument("noncrossing tree host polygon must have an even size >= 4");
  std::sort(edges_.begin(), edges_.end());
  const int black_count = host_n / 2;
  if (static_cast<int>(edges_.size()) != black_count - 1) {
    throw std::invalid_argument("noncrossing tree on " + std::to_string(black_count) + " black vertices needs " +
                                std::to_string(black_count - 1) + " edges, got " + std::to_string(edges_.size()));
  }
  std::vector<int> parent(host_n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Chord& e = edges_[i];
    if (e.a < 0 || e.b >= host_n || e.a == e.b) throw std::invalid_argument("tree edge " + chord_str(e) + " out of range");
    if (!is_black(e.a) || !is_black(e.b)) throw std::invalid_argument("tree edge " + chord_str(e) + " has a white endpoint");
    for (std::size_t j = 0; j < i; ++j) {
      if (crosses(e, edges_[j])) throw std::invalid_argument("tree edges " + chord_str(e) + " and " + chord_str(edges_[j]) + " cross");
    }
    int ra = find_root(parent, e.a);
    int rb = find_root(parent, e.b);
    if (ra == rb) throw std::invalid_argument("tree edges contain a cycle through " + chord_str(e));
    parent[ra] = rb;
  }
  // s edges, no cycle on s+1 vertices: connected.
}

Triangulation::Triangulation(Dissection d) : d_(std::move(d)) {
  if (static_cast<int>(d_.diagonals().size()) != d_.n() - 3 || !is_p_angulation(d_, 3)) {
    throw std::invalid_argument("dissection is not a triangulation");
  }
}

NoncrossingTree quad_to_tree(const Dissection& d) {
  if (d.n() % 2 != 0 || !is_p_angulation(d, 4)) throw std::invalid_argument("quad_to_tree needs a 4-angulation");
  std::vector<Chord> edges;
  for (const Face& f : faces(d)) {
    std::vector<int> black;
    for (int v : f.vertices) {
      if (is_black(v)) black.push_back(v);
    }
    if (black.size() != 2) throw InternalError("quadrangle without exactly two black vertices");
    edges.emplace_back(black[0], black[1]);
  }
  return NoncrossingTree(d.n(), edges);
}

Dissection tree_to_quad(const NoncrossingTree& t) {
  const int n = t.host_n();
  std::vector<Chord> diagonals;
  for (int b = 1; b < n; b += 2) {
    for (int w = 0; w < n; w += 2) {
      Chord c(b, w);
      if (c.b - c.a == 1 || (c.a == 0 && c.b == n - 1)) continue;
      bool blocked = std::any_of(t.edges().begin(), t.edges().end(), [&](const Chord& e) { return crosses(c, e); });
      if (!blocked) diagonals.push_back(c);
    }
  }
  return Dissection(n, diagonals);
}

Triangulation associated_triangulation_p4(const Dissection& d) {
  auto tree = quad_to_tree(d);
  std::vector<Chord> all = d.diagonals();
  all.insert(all.end(), tree.edges().begin(), tree.edges().end());
  return Triangulation(Dissection(d.n(), all));
}

Triangulation associated_triangulation_p6(const Dissection& d) {
  if (d.n() % 2 != 0 || !is_p_angulation(d, 6)) throw std::invalid_argument("associated_triangulation_p6 needs a 6-angulation");
  std::vector<Chord> all = d.diagonals();
  for (const Face& f : faces(d)) {
    std::vector<int> black;
    for (int v : f.vertices) {
      if (is_black(v)) black.push_back(v);
    }
    if (black.size() != 3) throw InternalError("hexagon without exactly three black vertices");
    all.emplace_back(black[0], black[1]);
    all.emplace_back(black[1], black[2]);
    all.emplace_back(black[0], black[2]);
  }
  return Triangulation(Dissection(d.n(), all));
}

Triangulation associated_triangulation(const Dissection& d, int p) {
  if (p == 4) return associated_triangulation_p4(d);
  if (p == 6) return associated_triangulation_p6(d);
  throw std::invalid_argument("associated triangulation is defined for p = 4 or 6, got " + std::to_string(p));
}

std::vector<int> triangle_counts(const Triangulation& t) { return quiddity_counts(t.dissection()); }

}  // namespace lf
