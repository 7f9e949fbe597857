#pragma once

#include <array>
#include <string>
#include <vector>

#include "heegaard/words.hpp"
#include "heegaard/whitehead.hpp"

namespace heegaard {

// Folded labeled graph over rank generators, base vertex 0 after
// canonicalization. adj[v][letter_key] is the endpoint of the edge leaving v
// with that letter, or -1. Edges come in inverse pairs: adj[v][k]=w implies
// adj[w][k^1]=v.
struct FoldedGraph {
  int rank = 2;
  std::vector<std::array<int, 8>> adj;

  int vertex_count() const { return (int)adj.size(); }
  // Does the word label a closed path at the base vertex (subgroup membership).
  bool contains(const Word& w) const;
  // BFS renumbering from the base with letter-ordered neighbor expansion;
  // equal strings mean isomorphic based graphs.
  std::string canonical_string() const;
};

// Wedge the words at a common base vertex and fold to completion.
FoldedGraph fold(const std::vector<Word>& generators, int rank);

// Remove non-base valence-1 vertices repeatedly (hanging trees), keeping the
// core carrying the subgroup.
FoldedGraph trim(const FoldedGraph& g);

// A tuple is a basis iff it has exactly `rank` entries and its trimmed folded
// graph is the one-vertex rose with every letter slot a loop.
bool is_basis_tuple(const std::vector<Word>& tuple, int rank);

}  // namespace heegaard
