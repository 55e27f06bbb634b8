#include <doctest.h>

#include <map>
#include <set>

#include "hanoi/dense_eig.hpp"
#include "hanoi/io.hpp"
#include "hanoi/matrices.hpp"
#include "hanoi/schreier_graph.hpp"

using namespace hanoi;

TEST_CASE("level-1 graph: three vertices, labeled triangle plus loops") {
    const SchreierGraph g = SchreierGraph::build(3, 1);
    CHECK(g.vertex_count() == 3);
    CHECK(g.loop_count() == 3);

    std::map<std::string, std::pair<std::string, std::string>> by_label;
    std::map<std::string, std::string> loop_at;
    for (const LabeledEdge& e : g.edges()) {
        const std::string lbl = label_string(e.label, 3);
        if (e.u == e.v)
            loop_at[lbl] = g.word_of(e.u).str();
        else
            by_label[lbl] = {g.word_of(e.u).str(), g.word_of(e.v).str()};
    }
    CHECK(by_label["a"] == std::pair<std::string, std::string>{"0", "1"});
    CHECK(by_label["b"] == std::pair<std::string, std::string>{"0", "2"});
    CHECK(by_label["c"] == std::pair<std::string, std::string>{"1", "2"});
    CHECK(loop_at["a"] == "2");
    CHECK(loop_at["b"] == "1");
    CHECK(loop_at["c"] == "0");
}

TEST_CASE("level-0 graph: single vertex with three loops") {
    const SchreierGraph g = SchreierGraph::build(3, 0);
    CHECK(g.vertex_count() == 1);
    CHECK(g.edges().size() == 3);
    CHECK(g.loop_count() == 3);
}

TEST_CASE("level-3 graph has loops exactly at the constant words") {
    const SchreierGraph g = SchreierGraph::build(3, 3);
    CHECK(g.vertex_count() == 27);
    std::set<std::string> loops;
    for (const LabeledEdge& e : g.edges())
        if (e.u == e.v) loops.insert(g.word_of(e.u).str());
    CHECK(loops == std::set<std::string>{"000", "111", "222"});
}

TEST_CASE("adjacency matches the block recursion and the stated examples") {
    CHECK(adjacency(SchreierGraph::build(3, 0))(0, 0) == 3);

    const Eigen::MatrixXi a1 = adjacency(SchreierGraph::build(3, 1));
    CHECK(a1 == Eigen::MatrixXi::Ones(3, 3));

    for (int n = 2; n <= 5; ++n) {
        const Eigen::MatrixXi a = adjacency(SchreierGraph::build(3, n));
        CHECK(a.transpose() == a);
        CHECK((a.rowwise().sum().array() == 3).all());
        CHECK(a.trace() == 3);
    }
}

TEST_CASE("adjacency row sums are k(k-1)/2 for k=4") {
    const Eigen::MatrixXi a = adjacency(SchreierGraph::build(4, 2));
    CHECK(a.rows() == 16);
    CHECK((a.rowwise().sum().array() == 6).all());
    CHECK(a.transpose() == a);
}

TEST_CASE("block identity and loop count at every level up to 7") {
    ResourceLimits caps;
    for (int n = 1; n <= 7; ++n) {
        const SchreierGraph g = SchreierGraph::build(3, n);
        CHECK(g.loop_count() == 3);
        // adjacency() cross-checks edge accumulation against the block
        // recursion internally and throws on any mismatch.
        const Eigen::MatrixXi a = adjacency(g, caps);
        CHECK(a.rows() == pow3(n));
        CHECK(is_connected(g));
    }
}

TEST_CASE("distances") {
    const SchreierGraph g3 = SchreierGraph::build(3, 3);
    CHECK(bfs_distance(g3, Word::from_string(3, "000"), Word::from_string(3, "111")) == 7);
    CHECK(bfs_distance(g3, Word::from_string(3, "012"), Word::from_string(3, "012")) == 0);

    const SchreierGraph g5 = SchreierGraph::build(3, 5);
    CHECK(bfs_distance(g5, Word::from_string(3, "00000"), Word::from_string(3, "11111")) == 31);

    CHECK_THROWS_AS(bfs_distance(g3, Word::from_string(3, "00"), Word::from_string(3, "111")),
                    std::invalid_argument);
}

TEST_CASE("diameters") {
    CHECK(diameter(SchreierGraph::build(3, 1)) == 1);
    CHECK(diameter(SchreierGraph::build(3, 3)) == 7);
    CHECK(diameter(SchreierGraph::build(3, 6)) == 63);
}

TEST_CASE("resource caps reject oversized requests") {
    ResourceLimits caps;
    caps.max_graph_vertices = 100;
    CHECK_THROWS_AS(SchreierGraph::build(3, 5, caps), ResourceCapExceeded);

    ResourceLimits diam_caps;
    diam_caps.max_diameter_vertices = 10;
    CHECK_THROWS_AS(diameter(SchreierGraph::build(3, 3), diam_caps), ResourceCapExceeded);
}

TEST_CASE("spectral radius of the adjacency matrix is 3") {
    for (int n = 1; n <= 4; ++n) {
        const Eigen::MatrixXd a = adjacency(SchreierGraph::build(3, n)).cast<double>();
        const EigenResult eig = dense_sym_eig(a);
        CHECK(eig.eigenvalues.back() == doctest::Approx(3.0).epsilon(1e-10));
    }
}

TEST_CASE("DOT output") {
    const SchreierGraph g1 = SchreierGraph::build(3, 1);
    const std::string dot = emit_dot(g1);
    CHECK(dot.find("graph hanoi_k3_n1 {") == 0);
    CHECK(dot.find("w0 -- w1 [label=\"a\"]") != std::string::npos);
    CHECK(dot.find("w2 -- w2 [label=\"a\"]") != std::string::npos);
    CHECK(dot.back() == '\n');

    const std::string dot0 = emit_dot(SchreierGraph::build(3, 0));
    CHECK(dot0.find("w -- w") != std::string::npos);

    // Minimal well-formedness: one graph block, all inner lines are node or
    // edge statements ending in ';'.
    std::size_t line_start = dot.find('\n') + 1;
    while (line_start < dot.size() - 2) {
        std::size_t line_end = dot.find('\n', line_start);
        const std::string line = dot.substr(line_start, line_end - line_start);
        CHECK(line.back() == ';');
        CHECK(line.rfind("  ", 0) == 0);
        line_start = line_end + 1;
    }
}

TEST_CASE("JSON edge list round trip") {
    const SchreierGraph g = SchreierGraph::build(4, 2);
    const std::string text = edges_json(g);
    const ParsedEdgeList parsed = parse_edges_json(text);
    CHECK(parsed.k == 4);
    CHECK(parsed.n == 2);
    CHECK(parsed.edges.size() == g.edges().size());
    CHECK(parsed.labels.front() == label_string(g.edges().front().label, 4));
    // Words come back as fixed-length digit strings.
    for (const auto& [u, v] : parsed.edges) {
        CHECK(u.size() == 2);
        CHECK(v.size() == 2);
    }
}
