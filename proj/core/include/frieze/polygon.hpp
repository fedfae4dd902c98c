#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "frieze/eta.hpp"
#include "frieze/sequence.hpp"

namespace frieze {

// Vertices of the convex n-gon are numbered 0..n-1 counterclockwise. Side s
// joins vertices s and s+1 (mod n).
struct Diagonal {
  int u;
  int v;  // u < v

  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

class Triangulation {
 public:
  // Validates: n >= 3, exactly n-3 distinct, pairwise non-crossing
  // diagonals. Throws InvalidInput otherwise. Diagonals are stored sorted.
  Triangulation(int n, std::vector<Diagonal> diagonals);

  int n() const { return n_; }
  const std::vector<Diagonal>& diagonals() const { return diagonals_; }

  // The n-2 triangles, each as sorted vertex triples, in sorted order.
  std::vector<std::array<int, 3>> triangles() const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  struct Trusted {};
  Triangulation(int n, std::vector<Diagonal> diagonals, Trusted)
      : n_(n), diagonals_(std::move(diagonals)) {}
  friend class TriangulationWalker;
  friend Triangulation from_quiddity(const EtaSeq& q);

  int n_;
  std::vector<Diagonal> diagonals_;
};

// Builds the unique triangulation whose vertex triangle counts are q, by
// repeated ear clipping.
Triangulation from_quiddity(const EtaSeq& q);

// Number of triangles at each vertex.
EtaSeq to_quiddity(const Triangulation& t);

// Full binary tree dual to a triangulation. Internal nodes are triangles;
// leaves are the sides other than the root side. The root node is the
// triangle on the root side; a node's left child lies across the edge that
// comes first counterclockwise after the parent edge.
class DualTree {
 public:
  struct Node {
    int left = -1;   // child indices into nodes(); -1 for leaves
    int right = -1;
    int parent = -1;
    int side = -1;   // polygon side index, leaves only
    std::array<int, 3> triangle{};  // internal nodes only
    bool is_leaf() const { return left < 0; }
  };

  DualTree(int n, int root_side, std::vector<Node> nodes, int root)
      : n_(n), root_side_(root_side), nodes_(std::move(nodes)), root_(root) {}

  int polygon_size() const { return n_; }
  int root_side() const { return root_side_; }
  int root() const { return root_; }
  const std::vector<Node>& nodes() const { return nodes_; }

  std::size_t internal_count() const;
  std::size_t leaf_count() const;

  // Leaves in depth-first, left-first order.
  std::vector<int> leaves_in_order() const;

  // Internal nodes on the path between consecutive leaves of a depth-first
  // traversal, with the root side acting as the leaf both before the first and
  // after the last. Entry t belongs to vertex root_side + 1 + t.
  Sequence vertex_counts() const;

  // "(b,(c,(d,e)))": leaves named by side, a = root side, then b, c, ...
  // counterclockwise. Polygons with more than 26 sides use s<index>.
  std::string to_bracket() const;
  std::string to_dot() const;

 private:
  std::string leaf_label(int side) const;
  int depth(int node) const;

  int n_;
  int root_side_;
  std::vector<Node> nodes_;
  int root_;
};

// Dual tree rooted at polygon side root_side (default: side n-1, joining
// n-1 and 0, so that vertex_counts() reproduces to_quiddity(t) exactly).
DualTree to_dual_tree(const Triangulation& t, int root_side);
DualTree to_dual_tree(const Triangulation& t);

// Undirected DOT graph of the polygon with its diagonals.
std::string to_dot(const Triangulation& t);

inline constexpr int kDefaultEnumerationCap = 16;

// Streams every triangulation of the n-gon exactly once. The order is
// deterministic: the triangle on side (0, n-1) is chosen first, by apex
// ascending, then the remaining sub-polygons are split the same way, last
// pending sub-polygon first. Throws CapExceeded for n > cap and
// InvalidInput for n < 3.
void for_each_triangulation(int n, const std::function<void(const Triangulation&)>& visit,
                            int cap = kDefaultEnumerationCap);

// Same traversal order, but only the vertex triangle counts are produced;
// the callback receives a view valid for the duration of the call.
void for_each_quiddity(int n, const std::function<void(std::span<const std::int64_t>)>& visit,
                       int cap = kDefaultEnumerationCap);

// Restricts the traversal to triangulations whose triangle on side (0, n-1)
// has the given apex (1..n-2); used to shard enumeration across workers.
void for_each_quiddity_with_apex(int n, int apex,
                                 const std::function<void(std::span<const std::int64_t>)>& visit);

std::vector<Triangulation> enumerate_triangulations(int n, int cap = kDefaultEnumerationCap);

// Catalan number C_k.
BigInt catalan(int k);

}  // namespace frieze
