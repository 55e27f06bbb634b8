#pragma once

// Emission and re-parsing of the external formats: DOT graphs, JSON edge
// lists and spectrum tables (schema_version 1), and the CSV plot data.

#include <string>
#include <vector>

#include "hanoi/decimation.hpp"
#include "hanoi/dense_eig.hpp"
#include "hanoi/schreier_graph.hpp"
#include "hanoi/spectrum.hpp"

namespace hanoi {

// "a"/"b"/"c" for the three k=3 labels, "(i j)" otherwise.
std::string label_string(MoveLabel m, int k);

std::string emit_dot(const SchreierGraph& g);

std::string edges_json(const SchreierGraph& g);

struct ParsedEdgeList {
    int k = 0;
    int n = 0;
    std::vector<std::pair<std::string, std::string>> edges;  // word strings
    std::vector<std::string> labels;
};
ParsedEdgeList parse_edges_json(const std::string& text);

std::string spectrum_json(const SpectrumTable& table, bool hecke_scaled = false);

struct ParsedSpectrum {
    int n = 0;
    std::vector<double> values;
    std::vector<long long> multiplicities;
};
ParsedSpectrum parse_spectrum_json(const std::string& text);

std::string kns_csv(const std::vector<KNSAtom>& atoms);
std::string julia_csv(const JuliaApproximation& julia);
std::string hyperbola_csv(const std::vector<HyperbolaSample>& samples);
std::string histogram_csv(const EigenResult& result);

// Minimal CSV reader used by the round-trip checks: rows of strings, the
// header row included.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

}  // namespace hanoi
