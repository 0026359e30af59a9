#include "lf/polygon.hpp"

#include <algorithm>
#include <map>

namespace lf {

bool crosses(const Chord& x, const Chord& y) {
  return (x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b);
}

bool Face::contains(int v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

Dissection::Dissection(int n, const std::vector<Chord>& diagonals) : n_(n), diagonals_(diagonals) {
  if (n < 3) throw DissectionError(DissectionError::Kind::too_few_vertices, "polygon needs at least 3 vertices, got " + std::to_string(n));
  for (const Chord& c : diagonals_) {
    if (c.a < 0 || c.b >= n) {
      throw DissectionError(DissectionError::Kind::vertex_out_of_range,
                            "vertex out of range in {" + std::to_string(c.a) + "," + std::to_string(c.b) + "} for n=" + std::to_string(n));
    }
    if (c.a == c.b || c.b - c.a == 1 || (c.a == 0 && c.b == n - 1)) {
      throw DissectionError(DissectionError::Kind::degenerate_pair,
                            "{" + std::to_string(c.a) + "," + std::to_string(c.b) + "} is a loop or polygon edge, not a diagonal");
    }
  }
  std::sort(diagonals_.begin(), diagonals_.end());
  diagonals_.erase(std::unique(diagonals_.begin(), diagonals_.end()), diagonals_.end());
  for (std::size_t i = 0; i < diagonals_.size(); ++i) {
    for (std::size_t j = i + 1; j < diagonals_.size(); ++j) {
      if (crosses(diagonals_[i], diagonals_[j])) {
        const Chord& x = diagonals_[i];
        const Chord& y = diagonals_[j];
        throw DissectionError(DissectionError::Kind::crossing_pair,
                              "diagonals {" + std::to_string(x.a) + "," + std::to_string(x.b) + "} and {" + std::to_string(y.a) +
                                  "," + std::to_string(y.b) + "} cross");
      }
    }
  }
}

bool Dissection::has_diagonal(const Chord& c) const { return std::binary_search(diagonals_.begin(), diagonals_.end(), c); }

namespace {

bool is_polygon_edge(const Chord& c, int n) { return c.b - c.a == 1 || (c.a == 0 && c.b == n - 1); }

void split_faces(const std::vector<int>& vertices, const std::vector<Chord>& diagonals, std::vector<Face>& out) {
  const int k = static_cast<int>(vertices.size());
  for (const Chord& c : diagonals) {
    auto ia = std::lower_bound(vertices.begin(), vertices.end(), c.a);
    auto ib = std::lower_bound(vertices.begin(), vertices.end(), c.b);
    if (ia == vertices.end() || *ia != c.a || ib == vertices.end() || *ib != c.b) continue;
    int i = static_cast<int>(ia - vertices.begin());
    int j = static_cast<int>(ib - vertices.begin());
    if (j - i == 1 || (i == 0 && j == k - 1)) continue;  // already a side of this face
    std::vector<int> inner(vertices.begin() + i, vertices.begin() + j + 1);
    std::vector<int> outer(vertices.begin(), vertices.begin() + i + 1);
    outer.insert(outer.end(), vertices.begin() + j, vertices.end());
    split_faces(inner, diagonals, out);
    split_faces(outer, diagonals, out);
    return;
  }
  out.push_back(Face{vertices});
}

std::vector<Chord> face_sides(const Face& f) {
  std::vector<Chord> sides;
  const int k = f.size();
  for (int i = 0; i < k; ++i) sides.emplace_back(f.vertices[i], f.vertices[(i + 1) % k]);
  return sides;
}

int diagonal_sides(const Face& f, int n) {
  int count = 0;
  for (const Chord& c : face_sides(f)) count += is_polygon_edge(c, n) ? 0 : 1;
  return count;
}

}  // namespace

std::vector<Face> faces(const Dissection& d) {
  std::vector<int> all(d.n());
  for (int v = 0; v < d.n(); ++v) all[v] = v;
  std::vector<Face> out;
  split_faces(all, d.diagonals(), out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_p_angulation(const Dissection& d, int p) {
  auto fs = faces(d);
  return std::all_of(fs.begin(), fs.end(), [p](const Face& f) { return f.size() == p; });
}

std::vector<int> quiddity_counts(const Dissection& d) {
  std::vector<int> q(d.n(), 0);
  for (const Face& f : faces(d)) {
    for (int v : f.vertices) ++q[v];
  }
  return q;
}

std::vector<Face> ears(const Dissection& d) {
  std::vector<Face> out;
  for (Face& f : faces(d)) {
    if (diagonal_sides(f, d.n()) == 1) out.push_back(std::move(f));
  }
  return out;
}

Dissection cut_ear(const Dissection& d, const Face& ear) {
  auto all_ears = ears(d);
  if (std::find(all_ears.begin(), all_ears.end(), ear) == all_ears.end()) {
    throw DissectionError(DissectionError::Kind::not_an_ear, "face is not an ear of the dissection");
  }
  Chord cut;
  for (const Chord& c : face_sides(ear)) {
    if (!is_polygon_edge(c, d.n())) cut = c;
  }
  std::vector<int> relabel(d.n(), -1);
  int next = 0;
  for (int v = 0; v < d.n(); ++v) {
    bool removed = ear.contains(v) && !cut.touches(v);
    if (!removed) relabel[v] = next++;
  }
  std::vector<Chord> kept;
  for (const Chord& c : d.diagonals()) {
    if (c == cut) continue;
    kept.emplace_back(relabel[c.a], relabel[c.b]);
  }
  return Dissection(next, kept);
}

std::vector<int> DualTree::degrees() const {
  std::vector<int> deg(nodes.size(), 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::vector<Face> DualTree::leaves() const {
  std::vector<Face> out;
  auto deg = degrees();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (deg[i] == 1) out.push_back(nodes[i]);
  }
  return out;
}

DualTree dual_tree(const Dissection& d) {
  DualTree tree;
  tree.nodes = faces(d);
  std::map<Chord, std::vector<int>> owners;
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    for (const Chord& c : face_sides(tree.nodes[i])) {
      if (!is_polygon_edge(c, d.n())) owners[c].push_back(static_cast<int>(i));
    }
  }
  for (const auto& [chord, idx] : owners) {
    if (idx.size() == 2) tree.edges.emplace_back(std::min(idx[0], idx[1]), std::max(idx[0], idx[1]));
  }
  std::sort(tree.edges.begin(), tree.edges.end());
  return tree;
}

int p_angulation_vertices(int s, int p) { return (p - 2) * s + 2; }

namespace {

using DiagonalSets = std::vector<std::vector<Chord>>;

// All p-angulations of the convex subpolygon `vertices` (ascending labels)
// whose outer side {vertices.back(), vertices.front()} is already fixed.
DiagonalSets p_angulations_of(const std::vector<int>& vertices, int p) {
  const int k = static_cast<int>(vertices.size());
  if (k == 2) return {{}};
  DiagonalSets result;
  // The face on the outer side uses p-2 further vertices; every gap between
  // consecutive face vertices must leave a multiple of p-2 interior vertices.
  std::vector<int> picks{0};
  std::function<void()> choose = [&]() {
    const int chosen = static_cast<int>(picks.size());
    if (chosen == p - 1) {
      if ((k - 1 - picks.back() - 1) % (p - 2) != 0) return;
      std::vector<int> corners = picks;
      corners.push_back(k - 1);
      DiagonalSets partial{{}};
      for (std::size_t t = 0; t + 1 < corners.size(); ++t) {
        int lo = corners[t];
        int hi = corners[t + 1];
        if (hi - lo < 2) continue;
        std::vector<int> sub(vertices.begin() + lo, vertices.begin() + hi + 1);
        DiagonalSets inner = p_angulations_of(sub, p);
        Chord side(vertices[lo], vertices[hi]);
        DiagonalSets merged;
        for (const auto& left : partial) {
          for (const auto& right : inner) {
            auto combo = left;
            combo.push_back(side);
            combo.insert(combo.end(), right.begin(), right.end());
            merged.push_back(std::move(combo));
          }
        }
        partial = std::move(merged);
      }
      for (auto& set : partial) result.push_back(std::move(set));
      return;
    }
    for (int next = picks.back() + 1; next < k - 1; next += p - 2) {
      picks.push_back(next);
      choose();
      picks.pop_back();
    }
  };
  choose();
  return result;
}

void check_p(int p) {
  if (p != 3 && p != 4 && p != 6) throw std::invalid_argument("p must be 3, 4 or 6, got " + std::to_string(p));
}

}  // namespace

void for_each_p_angulation(int s, int p, const std::function<void(const Dissection&)>& visit) {
  check_p(p);
  if (s < 1) throw std::invalid_argument("face count must be at least 1");
  const int n = p_angulation_vertices(s, p);
  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  for (const auto& set : p_angulations_of(all, p)) visit(Dissection(n, set));
}

std::vector<Dissection> enumerate_p_angulations(int s, int p) {
  std::vector<Dissection> out;
  for_each_p_angulation(s, p, [&](const Dissection& d) { out.push_back(d); });
  std::sort(out.begin(), out.end());
  return out;
}

long long fuss_catalan(int s, int p) {
  // C((p-1)s, s-1) / s, computed with exact intermediate division.
  const long long top = static_cast<long long>(p - 1) * s;
  long long binom = 1;
  for (long long i = 1; i <= s - 1; ++i) binom = binom * (top - (s - 1) + i) / i;
  return binom / s;
}

}  // namespace lf
