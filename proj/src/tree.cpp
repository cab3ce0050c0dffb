#include <cubedist/tree.hpp>

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace cubedist {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

UnweightedTree::UnweightedTree(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), adjacency_(vertex_count) {
  if (vertex_count < 2) throw InvalidTreeError("a tree needs at least two vertices");
  if (edges_.size() != vertex_count - 1) {
    throw InvalidTreeError("a tree on " + std::to_string(vertex_count) + " vertices has " +
                           std::to_string(vertex_count - 1) + " edges, got " + std::to_string(edges_.size()));
  }
  DisjointSets components(vertex_count);
  for (auto& [a, b] : edges_) {
    if (a >= vertex_count || b >= vertex_count) throw InvalidTreeError("edge endpoint out of range");
    if (a == b) throw InvalidTreeError("self-loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (!components.unite(a, b)) {
      throw InvalidTreeError("edge " + std::to_string(a) + "-" + std::to_string(b) + " closes a cycle");
    }
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool UnweightedTree::adjacent(std::size_t a, std::size_t b) const {
  return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
}

RationalMatrix tree_distance_matrix(const UnweightedTree& t) {
  const std::size_t k = t.vertex_count();
  RationalMatrix d(k, k);
  std::vector<long> dist(k);
  for (std::size_t src = 0; src < k; ++src) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<std::size_t> frontier;
    dist[src] = 0;
    frontier.push(src);
    while (!frontier.empty()) {
      const std::size_t v = frontier.front();
      frontier.pop();
      for (std::size_t w : t.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          frontier.push(w);
        }
      }
    }
    for (std::size_t j = 0; j < k; ++j) d(src, j) = dist[j];
  }
  return d;
}

PointSet embed_tree(const UnweightedTree& t) {
  const std::size_t n = t.edge_count();
  if (n < kMinDimension || n > kMaxDimension) {
    throw InvalidTreeError("embedding needs between 2 and 64 edges, got " + std::to_string(n));
  }
  const auto& edges = t.edges();
  auto edge_index = [&](std::size_t a, std::size_t b) {
    const Edge e{std::min(a, b), std::max(a, b)};
    return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
  };

  // Depth-first from the root; a child's word is its parent's word plus the
  // coordinate of the connecting edge.
  std::vector<std::uint64_t> word(t.vertex_count(), 0);
  std::vector<bool> visited(t.vertex_count(), false);
  std::vector<std::size_t> stack{0};
  visited[0] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : t.neighbors(v)) {
      if (visited[w]) continue;
      visited[w] = true;
      const std::size_t coord = edge_index(v, w);
      word[w] = word[v] | (std::uint64_t{1} << (n - 1 - coord));
      stack.push_back(w);
    }
  }
  return PointSet::from_bits(static_cast<unsigned>(n), word);
}

Rational graham_pollak_det(const UnweightedTree& t) {
  const auto n = static_cast<unsigned>(t.edge_count());
  if (n < kMinDimension) throw InvalidTreeError("needs at least three vertices");
  return alternating_sign(n) * Rational(n) * power_of_two(n - 1);
}

RationalMatrix graham_lovasz_inverse(const UnweightedTree& t) {
  const std::size_t k = t.vertex_count();
  const Rational two_n(2 * static_cast<long>(t.edge_count()));
  RationalMatrix inv(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const long ci = 2 - static_cast<long>(t.degree(i));
    for (std::size_t j = 0; j < k; ++j) {
      const long cj = 2 - static_cast<long>(t.degree(j));
      Rational entry = Rational(ci * cj) / two_n;
      if (i == j) {
        entry -= fraction(static_cast<long>(t.degree(i)), 2);
      } else if (t.adjacent(i, j)) {
        entry += fraction(1, 2);
      }
      inv(i, j) = entry;
    }
  }
  return inv;
}

Rational tree_dinv_ones(const UnweightedTree& t) {
  const RationalMatrix inv = graham_lovasz_inverse(t);
  Rational total = 0;
  for (std::size_t i = 0; i < inv.rows(); ++i) {
    for (std::size_t j = 0; j < inv.cols(); ++j) total += inv(i, j);
  }
  return total;
}

UnweightedTree tree_from_prufer(std::size_t vertex_count, std::span<const std::size_t> sequence) {
  if (vertex_count < 2 || sequence.size() != vertex_count - 2) {
    throw InvalidTreeError("Pruefer sequence length must be vertex_count - 2");
  }
  std::vector<std::size_t> degree(vertex_count, 1);
  for (std::size_t v : sequence) {
    if (v >= vertex_count) throw InvalidTreeError("Pruefer entry out of range");
    ++degree[v];
  }

  std::vector<Edge> edges;
  edges.reserve(vertex_count - 1);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (std::size_t v : sequence) {
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, vertex_count - 1);
  return UnweightedTree(vertex_count, std::move(edges));
}

std::uint64_t labeled_tree_count(std::size_t vertex_count) {
  if (vertex_count < 2) return 0;
  std::uint64_t c = 1;
  for (std::size_t i = 0; i + 2 < vertex_count; ++i) c *= vertex_count;
  return c;
}

void for_each_labeled_tree(std::size_t vertex_count, std::uint64_t first, std::uint64_t count,
                           const std::function<void(const UnweightedTree&)>& visit) {
  const std::uint64_t total = labeled_tree_count(vertex_count);
  if (first >= total) return;
  const std::uint64_t last = std::min(total, first + count);

  // Sequence digits are the base-k expansion of the index, most significant first.
  std::vector<std::size_t> seq(vertex_count - 2);
  std::uint64_t index = first;
  for (std::size_t pos = seq.size(); pos-- > 0;) {
    seq[pos] = static_cast<std::size_t>(index % vertex_count);
    index /= vertex_count;
  }
  for (std::uint64_t i = first; i < last; ++i) {
    visit(tree_from_prufer(vertex_count, seq));
    for (std::size_t pos = seq.size(); pos-- > 0;) {
      if (++seq[pos] < vertex_count) break;
      seq[pos] = 0;
    }
  }
}

}  // namespace cubedist
