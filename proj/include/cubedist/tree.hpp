#pragma once

#include <cubedist/hamming.hpp>

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cubedist {

class InvalidTreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<std::size_t, std::size_t>;

/// Connected acyclic graph on vertices 0..k-1 with k-1 unit-length edges.
class UnweightedTree {
 public:
  /// Validates edge count and acyclicity (union-find), which together imply
  /// connectivity. Edges are stored as (min, max), sorted.
  UnweightedTree(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  /// The tree embeds in H_n with n = edge count.
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  bool adjacent(std::size_t a, std::size_t b) const;
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Path lengths by breadth-first search from every vertex.
RationalMatrix tree_distance_matrix(const UnweightedTree& t);

/// Isometric image in H_n: one coordinate per edge (edges in sorted order);
/// vertex v maps to the indicator of the edges on the path from vertex 0.
/// Needs at least three vertices and at most 64 edges.
PointSet embed_tree(const UnweightedTree& t);

/// (-1)^n n 2^{n-1}, the determinant of the distance matrix of any tree on
/// n+1 vertices.
Rational graham_pollak_det(const UnweightedTree& t);

/// Closed-form entries of D^{-1} in terms of degrees and adjacency:
///   d*_ii = (2 - deg i)^2 / 2n - deg i / 2
///   d*_ij = (2 - deg i)(2 - deg j) / 2n + a_ij / 2
RationalMatrix graham_lovasz_inverse(const UnweightedTree& t);

/// Entry sum of graham_lovasz_inverse, i.e. <D^{-1}1, 1>. Always 2/n.
Rational tree_dinv_ones(const UnweightedTree& t);

/// Decodes a Pruefer sequence (length k-2, entries < k) into the labeled
/// tree on k vertices.
UnweightedTree tree_from_prufer(std::size_t vertex_count, std::span<const std::size_t> sequence);

/// k^{k-2}.
std::uint64_t labeled_tree_count(std::size_t vertex_count);

/// Calls visit on every labeled tree with the given vertex count, in
/// lexicographic order of Pruefer sequences restricted to indices
/// [first, first + count).
void for_each_labeled_tree(std::size_t vertex_count, std::uint64_t first, std::uint64_t count,
                           const std::function<void(const UnweightedTree&)>& visit);

}  // namespace cubedist
