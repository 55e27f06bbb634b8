#pragma once

// Level-n graphs of the move action on length-n words: vertices are all k^n
// words, one labeled edge per vertex and peg pair, with a loop where the
// move fixes the word.  Loops contribute exactly 1 to the adjacency
// diagonal.  Graphs are immutable after build; distance queries work on
// implicit neighbors and never materialize matrices.

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hanoi/caps.hpp"
#include "hanoi/word.hpp"

namespace hanoi {

struct LabeledEdge {
    std::uint64_t u;  // u <= v canonical; u == v is a loop
    std::uint64_t v;
    MoveLabel label;
};

class SchreierGraph {
public:
    static SchreierGraph build(int k, int n, const ResourceLimits& caps = {});

    int k() const { return k_; }
    int n() const { return n_; }
    std::uint64_t vertex_count() const { return vertex_count_; }
    const std::vector<LabeledEdge>& edges() const { return edges_; }
    std::uint64_t loop_count() const { return loop_count_; }

    Word word_of(std::uint64_t index) const { return Word::from_index(k_, n_, index); }
    std::uint64_t index_of(const Word& w) const;

    // Image of vertex `index` under the move, as an index.
    std::uint64_t act(std::uint64_t index, MoveLabel m) const;

private:
    SchreierGraph(int k, int n) : k_(k), n_(n) {}

    int k_;
    int n_;
    std::uint64_t vertex_count_ = 0;
    std::uint64_t loop_count_ = 0;
    std::vector<LabeledEdge> edges_;
    std::vector<std::uint64_t> peg_place_value_;  // k^(n-1-pos) per letter position
};

// Adjacency in lexicographic vertex order (first letter most significant).
// For k = 3 the edge-accumulated matrix is cross-checked entrywise against
// the generator block recursion and any disagreement throws.
Eigen::MatrixXi adjacency(const SchreierGraph& g, const ResourceLimits& caps = {});

// Distances from source to every vertex, by breadth-first search.
std::vector<int> bfs_all(const SchreierGraph& g, std::uint64_t source);

int bfs_distance(const SchreierGraph& g, const Word& u, const Word& v);

// Maximum pairwise distance; guarded by caps.max_diameter_vertices.
int diameter(const SchreierGraph& g, const ResourceLimits& caps = {});

bool is_connected(const SchreierGraph& g);

}  // namespace hanoi
