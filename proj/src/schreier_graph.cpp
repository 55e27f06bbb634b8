#include "hanoi/schreier_graph.hpp"

#include <queue>
#include <stdexcept>

#include "hanoi/matrices.hpp"

namespace hanoi {

namespace {

std::uint64_t checked_power(int k, int n, std::uint64_t cap, const char* what) {
    std::uint64_t v = 1;
    for (int i = 0; i < n; ++i) {
        v *= static_cast<std::uint64_t>(k);
        if (v > cap) throw ResourceCapExceeded(what);
    }
    return v;
}

}  // namespace

SchreierGraph SchreierGraph::build(int k, int n, const ResourceLimits& caps) {
    if (k < 3) throw std::invalid_argument("build_graph: k must be >= 3");
    if (n < 0) throw std::invalid_argument("build_graph: n must be >= 0");

    SchreierGraph g(k, n);
    g.vertex_count_ =
        checked_power(k, n, caps.max_graph_vertices, "build_graph: k^n exceeds vertex cap");

    g.peg_place_value_.resize(static_cast<std::size_t>(n));
    {
        std::uint64_t v = 1;
        for (int pos = n - 1; pos >= 0; --pos) {
            g.peg_place_value_[pos] = v;
            v *= static_cast<std::uint64_t>(k);
        }
    }

    const auto moves = all_moves(k);
    g.edges_.reserve(g.vertex_count_ * moves.size() / 2 + moves.size());
    for (std::uint64_t u = 0; u < g.vertex_count_; ++u) {
        for (MoveLabel m : moves) {
            const std::uint64_t v = g.act(u, m);
            if (v == u) {
                g.edges_.push_back({u, u, m});
                ++g.loop_count_;
            } else if (v > u) {
                g.edges_.push_back({u, v, m});
            }
        }
    }
    return g;
}

std::uint64_t SchreierGraph::index_of(const Word& w) const {
    if (w.k() != k_ || w.size() != n_)
        throw std::invalid_argument("word does not belong to this graph (length or alphabet)");
    return w.index();
}

std::uint64_t SchreierGraph::act(std::uint64_t index, MoveLabel m) const {
    if (m.j >= k_) throw std::invalid_argument("move label: peg outside alphabet");
    std::uint64_t rest = index;
    for (int pos = 0; pos < n_; ++pos) {
        const std::uint64_t place = peg_place_value_[pos];
        const int digit = static_cast<int>(rest / place);
        rest %= place;
        if (digit == m.i) return index + place * static_cast<std::uint64_t>(m.j - m.i);
        if (digit == m.j) return index - place * static_cast<std::uint64_t>(m.j - m.i);
    }
    return index;
}

Eigen::MatrixXi adjacency(const SchreierGraph& g, const ResourceLimits& caps) {
    if (g.vertex_count() > caps.max_dense_dim)
        throw ResourceCapExceeded("adjacency: k^n exceeds dense cap");
    const auto dim = static_cast<Eigen::Index>(g.vertex_count());

    Eigen::MatrixXi adj = Eigen::MatrixXi::Zero(dim, dim);
    for (const LabeledEdge& e : g.edges()) {
        if (e.u == e.v) {
            adj(static_cast<Eigen::Index>(e.u), static_cast<Eigen::Index>(e.u)) += 1;
        } else {
            adj(static_cast<Eigen::Index>(e.u), static_cast<Eigen::Index>(e.v)) += 1;
            adj(static_cast<Eigen::Index>(e.v), static_cast<Eigen::Index>(e.u)) += 1;
        }
    }

    if (g.k() == 3) {
        // Independent route: the generator block recursion must give the
        // same matrix entry for entry.
        Eigen::MatrixXi recursed = adjacency_from_generators<int>(g.n(), caps.max_dense_dim);
        if (recursed != adj)
            throw std::logic_error("adjacency: edge accumulation and block recursion disagree");
    }
    return adj;
}

std::vector<int> bfs_all(const SchreierGraph& g, std::uint64_t source) {
    if (source >= g.vertex_count()) throw std::invalid_argument("bfs: source out of range");
    const auto moves = all_moves(g.k());
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<std::uint64_t> frontier;
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        const std::uint64_t u = frontier.front();
        frontier.pop();
        for (MoveLabel m : moves) {
            const std::uint64_t v = g.act(u, m);
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                frontier.push(v);
            }
        }
    }
    return dist;
}

int bfs_distance(const SchreierGraph& g, const Word& u, const Word& v) {
    const std::uint64_t target = g.index_of(v);
    const std::vector<int> dist = bfs_all(g, g.index_of(u));
    return dist[target];
}

int diameter(const SchreierGraph& g, const ResourceLimits& caps) {
    if (g.vertex_count() > caps.max_diameter_vertices)
        throw ResourceCapExceeded("diameter: k^n exceeds diameter cap");
    int best = 0;
    for (std::uint64_t s = 0; s < g.vertex_count(); ++s) {
        const std::vector<int> dist = bfs_all(g, s);
        for (int d : dist) {
            if (d < 0) throw std::logic_error("diameter: graph not connected");
            best = std::max(best, d);
        }
    }
    return best;
}

bool is_connected(const SchreierGraph& g) {
    if (g.vertex_count() == 0) return true;
    const std::vector<int> dist = bfs_all(g, 0);
    for (int d : dist)
        if (d < 0) return false;
    return true;
}

}  // namespace hanoi
