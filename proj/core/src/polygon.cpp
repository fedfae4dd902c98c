#include "frieze/polygon.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "frieze/error.hpp"

namespace frieze {

namespace {

bool crosses(const Diagonal& x, const Diagonal& y) {
  return (x.u < y.u && y.u < x.v && x.v < y.v) || (y.u < x.u && x.u < y.v && y.v < x.v);
}

// Edge set (sides and diagonals) as an adjacency matrix.
std::vector<std::vector<bool>> adjacency(int n, const std::vector<Diagonal>& diagonals) {
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n),
                                     std::vector<bool>(static_cast<std::size_t>(n), false));
  auto link = [&](int a, int b) {
    adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
  };
  for (int v = 0; v < n; ++v) link(v, (v + 1) % n);
  for (const Diagonal& d : diagonals) link(d.u, d.v);
  return adj;
}

}  // namespace

Triangulation::Triangulation(int n, std::vector<Diagonal> diagonals) : n_(n) {
  if (n < 3) throw InvalidInput("a polygon needs at least 3 vertices");
  for (Diagonal& d : diagonals) {
    if (d.u > d.v) std::swap(d.u, d.v);
    if (d.u < 0 || d.v >= n) throw InvalidInput("diagonal endpoint out of range");
    if (d.v - d.u < 2 || (d.u == 0 && d.v == n - 1)) {
      throw InvalidInput("{" + std::to_string(d.u) + "," + std::to_string(d.v) +
                         "} is a side, not a diagonal");
    }
  }
  std::sort(diagonals.begin(), diagonals.end());
  if (std::adjacent_find(diagonals.begin(), diagonals.end()) != diagonals.end()) {
    throw InvalidInput("repeated diagonal");
  }
  if (static_cast<int>(diagonals.size()) != n - 3) {
    throw InvalidInput("a triangulation of a " + std::to_string(n) + "-gon has " +
                       std::to_string(n - 3) + " diagonals, got " +
                       std::to_string(diagonals.size()));
  }
  for (std::size_t i = 0; i < diagonals.size(); ++i) {
    for (std::size_t j = i + 1; j < diagonals.size(); ++j) {
      if (crosses(diagonals[i], diagonals[j])) throw InvalidInput("diagonals cross");
    }
  }
  diagonals_ = std::move(diagonals);
}

std::vector<std::array<int, 3>> Triangulation::triangles() const {
  const auto adj = adjacency(n_, diagonals_);
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      if (!adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
      for (int c = b + 1; c < n_; ++c) {
        if (adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] &&
            adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)]) {
          out.push_back({a, b, c});
        }
      }
    }
  }
  return out;
}

Triangulation from_quiddity(const EtaSeq& q) {
  const int n = static_cast<int>(q.size());
  std::vector<int> vertices(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) vertices[static_cast<std::size_t>(v)] = v;
  Sequence counts = q.entries();
  std::vector<Diagonal> diagonals;
  while (vertices.size() > 3) {
    const std::size_t m = vertices.size();
    std::size_t ear = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (counts[i] == 1) {
        ear = i;
        break;
      }
    }
    if (ear == m) throw NotAQuiddity("no ear left while clipping");
    const std::size_t prev = (ear + m - 1) % m;
    const std::size_t next = (ear + 1) % m;
    Diagonal d{vertices[prev], vertices[next]};
    if (d.u > d.v) std::swap(d.u, d.v);
    diagonals.push_back(d);
    --counts[prev];
    --counts[next];
    vertices.erase(vertices.begin() + static_cast<std::ptrdiff_t>(ear));
    counts.erase(counts.begin() + static_cast<std::ptrdiff_t>(ear));
  }
  std::sort(diagonals.begin(), diagonals.end());
  return Triangulation(n, std::move(diagonals), Triangulation::Trusted{});
}

EtaSeq to_quiddity(const Triangulation& t) {
  // Triangles at a vertex = incident edges - 1.
  Sequence counts(static_cast<std::size_t>(t.n()), 1);
  for (const Diagonal& d : t.diagonals()) {
    ++counts[static_cast<std::size_t>(d.u)];
    ++counts[static_cast<std::size_t>(d.v)];
  }
  return trusted_eta(std::move(counts));
}

std::size_t DualTree::internal_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const Node& x) { return !x.is_leaf(); }));
}

std::size_t DualTree::leaf_count() const { return nodes_.size() - internal_count(); }

std::vector<int> DualTree::leaves_in_order() const {
  std::vector<int> out;
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    const Node& node = nodes_[static_cast<std::size_t>(v)];
    if (node.is_leaf()) {
      out.push_back(v);
    } else {
      stack.push_back(node.right);
      stack.push_back(node.left);
    }
  }
  return out;
}

int DualTree::depth(int node) const {
  int d = 0;
  while (nodes_[static_cast<std::size_t>(node)].parent >= 0) {
    node = nodes_[static_cast<std::size_t>(node)].parent;
    ++d;
  }
  return d;
}

Sequence DualTree::vertex_counts() const {
  const std::vector<int> leaves = leaves_in_order();
  Sequence out;
  out.reserve(leaves.size() + 1);
  out.push_back(depth(leaves.front()));
  for (std::size_t t = 0; t + 1 < leaves.size(); ++t) {
    int x = leaves[t];
    int y = leaves[t + 1];
    const int dx = depth(x);
    const int dy = depth(y);
    int ax = x, ay = y, da = dx, db = dy;
    while (da > db) {
      ax = nodes_[static_cast<std::size_t>(ax)].parent;
      --da;
    }
    while (db > da) {
      ay = nodes_[static_cast<std::size_t>(ay)].parent;
      --db;
    }
    while (ax != ay) {
      ax = nodes_[static_cast<std::size_t>(ax)].parent;
      ay = nodes_[static_cast<std::size_t>(ay)].parent;
      --da;
    }
    out.push_back(dx + dy - 2 * da - 1);
  }
  out.push_back(depth(leaves.back()));
  return out;
}

std::string DualTree::leaf_label(int side) const {
  const int offset = ((side - root_side_) % n_ + n_) % n_;
  if (n_ <= 26) return std::string(1, static_cast<char>('a' + offset));
  return "s" + std::to_string(side);
}

std::string DualTree::to_bracket() const {
  std::string out;
  auto walk = [&](auto&& self, int v) -> void {
    const Node& node = nodes_[static_cast<std::size_t>(v)];
    if (node.is_leaf()) {
      out += leaf_label(node.side);
      return;
    }
    out += '(';
    self(self, node.left);
    out += ',';
    self(self, node.right);
    out += ')';
  };
  walk(walk, root_);
  return out;
}

std::string DualTree::to_dot() const {
  std::string out = "digraph dual_tree {\n  node [shape=circle];\n";
  out += "  root [shape=plaintext, label=\"" + leaf_label(root_side_) + "\"];\n";
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    const Node& node = nodes_[v];
    const std::string id = "n" + std::to_string(v);
    if (node.is_leaf()) {
      out += "  " + id + " [shape=plaintext, label=\"" + leaf_label(node.side) + "\"];\n";
    } else {
      out += "  " + id + " [label=\"" + std::to_string(node.triangle[0]) + "," +
             std::to_string(node.triangle[1]) + "," + std::to_string(node.triangle[2]) + "\"];\n";
    }
  }
  out += "  root -> n" + std::to_string(root_) + ";\n";
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    const Node& node = nodes_[v];
    if (node.is_leaf()) continue;
    out += "  n" + std::to_string(v) + " -> n" + std::to_string(node.left) + ";\n";
    out += "  n" + std::to_string(v) + " -> n" + std::to_string(node.right) + ";\n";
  }
  out += "}\n";
  return out;
}

DualTree to_dual_tree(const Triangulation& t, int root_side) {
  const int n = t.n();
  if (root_side < 0 || root_side >= n) throw InvalidInput("root side out of range");
  const auto adj = adjacency(n, t.diagonals());
  auto vertex = [&](int offset) { return (root_side + 1 + offset) % n; };
  auto linked = [&](int a, int b) {
    return adj[static_cast<std::size_t>(vertex(a))][static_cast<std::size_t>(vertex(b))];
  };

  std::vector<DualTree::Node> nodes;
  // Sub-polygon on offsets lo..hi, entered across edge (lo, hi).
  auto build = [&](auto&& self, int lo, int hi, int parent) -> int {
    const int id = static_cast<int>(nodes.size());
    nodes.push_back({});
    nodes.back().parent = parent;
    if (hi - lo == 1) {
      nodes[static_cast<std::size_t>(id)].side = vertex(lo);
      return id;
    }
    int apex = -1;
    for (int w = lo + 1; w < hi; ++w) {
      if (linked(lo, w) && linked(w, hi)) {
        apex = w;
        break;
      }
    }
    std::array<int, 3> tri{vertex(lo), vertex(apex), vertex(hi)};
    std::sort(tri.begin(), tri.end());
    nodes[static_cast<std::size_t>(id)].triangle = tri;
    const int left = self(self, lo, apex, id);
    const int right = self(self, apex, hi, id);
    nodes[static_cast<std::size_t>(id)].left = left;
    nodes[static_cast<std::size_t>(id)].right = right;
    return id;
  };
  const int root = build(build, 0, n - 1, -1);
  return DualTree(n, root_side, std::move(nodes), root);
}

DualTree to_dual_tree(const Triangulation& t) { return to_dual_tree(t, t.n() - 1); }

std::string to_dot(const Triangulation& t) {
  std::string out = "graph triangulation {\n  layout=circo;\n  node [shape=circle];\n";
  for (int v = 0; v < t.n(); ++v) {
    out += "  v" + std::to_string(v) + " -- v" + std::to_string((v + 1) % t.n()) + ";\n";
  }
  for (const Diagonal& d : t.diagonals()) {
    out += "  v" + std::to_string(d.u) + " -- v" + std::to_string(d.v) + " [style=dashed];\n";
  }
  out += "}\n";
  return out;
}

class TriangulationWalker {
 public:
  TriangulationWalker(int n, bool track_diagonals)
      : n_(n), counts_(static_cast<std::size_t>(n), 0), track_(track_diagonals) {}

  template <typename Emit>
  void run_from(int lo, int hi, int apex, Emit&& emit) {
    choose(lo, hi, apex, emit);
  }

  template <typename Emit>
  void run(Emit&& emit) {
    pending_.push_back({0, n_ - 1});
    step(emit);
    pending_.pop_back();
  }

  Triangulation triangulation() const {
    std::vector<Diagonal> d = diagonals_;
    std::sort(d.begin(), d.end());
    return Triangulation(n_, std::move(d), Triangulation::Trusted{});
  }
  std::span<const std::int64_t> counts() const { return counts_; }

 private:
  template <typename Emit>
  void step(Emit& emit) {
    if (pending_.empty()) {
      emit(*this);
      return;
    }
    const auto [lo, hi] = pending_.back();
    pending_.pop_back();
    for (int k = lo + 1; k < hi; ++k) choose(lo, hi, k, emit);
    pending_.push_back({lo, hi});
  }

  template <typename Emit>
  void choose(int lo, int hi, int k, Emit& emit) {
    ++counts_[static_cast<std::size_t>(lo)];
    ++counts_[static_cast<std::size_t>(k)];
    ++counts_[static_cast<std::size_t>(hi)];
    std::size_t pushed = 0;
    std::size_t added = 0;
    if (k - lo >= 2) {
      pending_.push_back({lo, k});
      ++pushed;
      if (track_) {
        diagonals_.push_back({lo, k});
        ++added;
      }
    }
    if (hi - k >= 2) {
      pending_.push_back({k, hi});
      ++pushed;
      if (track_) {
        diagonals_.push_back({k, hi});
        ++added;
      }
    }
    step(emit);
    pending_.resize(pending_.size() - pushed);
    diagonals_.resize(diagonals_.size() - added);
    --counts_[static_cast<std::size_t>(lo)];
    --counts_[static_cast<std::size_t>(k)];
    --counts_[static_cast<std::size_t>(hi)];
  }

  int n_;
  Sequence counts_;
  bool track_;
  std::vector<std::pair<int, int>> pending_;
  std::vector<Diagonal> diagonals_;
};

namespace {

void check_range(int n, int cap) {
  if (n < 3) throw InvalidInput("polygon size must be at least 3");
  if (n > cap) {
    throw CapExceeded("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                      std::to_string(cap));
  }
}

}  // namespace

void for_each_triangulation(int n, const std::function<void(const Triangulation&)>& visit,
                            int cap) {
  check_range(n, cap);
  TriangulationWalker walker(n, true);
  walker.run([&](const TriangulationWalker& w) { visit(w.triangulation()); });
}

void for_each_quiddity(int n, const std::function<void(std::span<const std::int64_t>)>& visit,
                       int cap) {
  check_range(n, cap);
  TriangulationWalker walker(n, false);
  walker.run([&](const TriangulationWalker& w) { visit(w.counts()); });
}

void for_each_quiddity_with_apex(int n, int apex,
                                 const std::function<void(std::span<const std::int64_t>)>& visit) {
  if (n < 3) throw InvalidInput("polygon size must be at least 3");
  if (apex < 1 || apex > n - 2) throw InvalidInput("apex out of range");
  TriangulationWalker walker(n, false);
  walker.run_from(0, n - 1, apex, [&](const TriangulationWalker& w) { visit(w.counts()); });
}

std::vector<Triangulation> enumerate_triangulations(int n, int cap) {
  std::vector<Triangulation> out;
  for_each_triangulation(n, [&](const Triangulation& t) { out.push_back(t); }, cap);
  return out;
}

BigInt catalan(int k) {
  if (k < 0) throw InvalidInput("Catalan index must be nonnegative");
  BigInt c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace frieze
