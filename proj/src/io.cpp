#include "hanoi/io.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace hanoi {

namespace {

using nlohmann::json;

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

std::string provenance_string(const AlgebraicEigenvalue& e) {
    if (e.depth == 0 && e.base == 3) return "fixed(3)";
    std::ostringstream os;
    os << "f^-" << e.depth << "(" << e.base << ")";
    return os.str();
}

}  // namespace

std::string label_string(MoveLabel m, int k) {
    if (k == 3) {
        if (m.i == 0 && m.j == 1) return "a";
        if (m.i == 0 && m.j == 2) return "b";
        if (m.i == 1 && m.j == 2) return "c";
    }
    std::ostringstream os;
    os << "(" << m.i << " " << m.j << ")";
    return os.str();
}

std::string emit_dot(const SchreierGraph& g) {
    std::ostringstream os;
    os << "graph hanoi_k" << g.k() << "_n" << g.n() << " {\n";
    os << "  node [shape=circle];\n";
    for (std::uint64_t v = 0; v < g.vertex_count(); ++v)
        os << "  w" << g.word_of(v).str() << " [label=\"" << g.word_of(v).str() << "\"];\n";
    for (const LabeledEdge& e : g.edges()) {
        os << "  w" << g.word_of(e.u).str() << " -- w" << g.word_of(e.v).str() << " [label=\""
           << label_string(e.label, g.k()) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string edges_json(const SchreierGraph& g) {
    json edges = json::array();
    for (const LabeledEdge& e : g.edges()) {
        edges.push_back({{"u", g.word_of(e.u).str()},
                         {"v", g.word_of(e.v).str()},
                         {"label", label_string(e.label, g.k())}});
    }
    json doc{{"schema_version", 1}, {"k", g.k()}, {"n", g.n()}, {"edges", std::move(edges)}};
    return doc.dump(2) + "\n";
}

ParsedEdgeList parse_edges_json(const std::string& text) {
    const json doc = json::parse(text);
    ParsedEdgeList out;
    out.k = doc.at("k").get<int>();
    out.n = doc.at("n").get<int>();
    for (const json& e : doc.at("edges")) {
        out.edges.emplace_back(e.at("u").get<std::string>(), e.at("v").get<std::string>());
        out.labels.push_back(e.at("label").get<std::string>());
    }
    return out;
}

std::string spectrum_json(const SpectrumTable& table, bool hecke_scaled) {
    json entries = json::array();
    for (const SpectrumEntry& e : table.entries) {
        entries.push_back({{"base", e.eigenvalue.base},
                           {"depth", e.eigenvalue.depth},
                           {"path", e.eigenvalue.path_string()},
                           {"value", e.eigenvalue.value},
                           {"enclosure", {e.eigenvalue.enclosure.lo, e.eigenvalue.enclosure.hi}},
                           {"multiplicity", e.multiplicity},
                           {"provenance", provenance_string(e.eigenvalue)}});
    }
    json doc{{"schema_version", 1},
             {"n", table.n},
             {"hecke_scaled", hecke_scaled},
             {"entries", std::move(entries)}};
    return doc.dump(2) + "\n";
}

ParsedSpectrum parse_spectrum_json(const std::string& text) {
    const json doc = json::parse(text);
    ParsedSpectrum out;
    out.n = doc.at("n").get<int>();
    for (const json& e : doc.at("entries")) {
        out.values.push_back(e.at("value").get<double>());
        out.multiplicities.push_back(e.at("multiplicity").get<long long>());
    }
    return out;
}

std::string kns_csv(const std::vector<KNSAtom>& atoms) {
    std::ostringstream os;
    os << "depth,value,mass\n";
    for (const KNSAtom& a : atoms)
        os << a.eigenvalue.depth << "," << fmt(a.eigenvalue.value) << "," << a.mass.str() << "\n";
    return os.str();
}

std::string julia_csv(const JuliaApproximation& julia) {
    std::ostringstream os;
    os << "index,value\n";
    for (std::size_t i = 0; i < julia.points.size(); ++i)
        os << i << "," << fmt(julia.points[i]) << "\n";
    return os.str();
}

std::string hyperbola_csv(const std::vector<HyperbolaSample>& samples) {
    std::ostringstream os;
    os << "theta_depth,theta_index,x,y\n";
    for (const HyperbolaSample& s : samples)
        os << s.theta_depth << "," << s.theta_index << "," << fmt(s.x) << "," << fmt(s.y) << "\n";
    return os.str();
}

std::string histogram_csv(const EigenResult& result) {
    std::ostringstream os;
    os << "eigenvalue,count\n";
    for (const EigenCluster& c : result.clusters) os << fmt(c.value) << "," << c.count << "\n";
    return os.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        rows.push_back(std::move(fields));
    }
    return rows;
}

}  // namespace hanoi
