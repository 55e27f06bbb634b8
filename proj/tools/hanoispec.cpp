// Command-line surface: graph emission, closed-form spectra with optional
// numeric cross-checks, the verification suites, and CSV plot data.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
// cap exceeded.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hanoi/decimation.hpp"
#include "hanoi/dense_eig.hpp"
#include "hanoi/io.hpp"
#include "hanoi/schreier_graph.hpp"
#include "hanoi/spectrum.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

hanoi::ResourceLimits caps_from_env() {
    hanoi::ResourceLimits caps;
    auto read = [](const char* name, auto& field) {
        using Field = std::remove_reference_t<decltype(field)>;
        if (const char* v = std::getenv(name)) field = static_cast<Field>(std::strtoull(v, nullptr, 10));
    };
    read("HANOISPEC_MAX_GRAPH_VERTICES", caps.max_graph_vertices);
    read("HANOISPEC_MAX_DIAMETER_VERTICES", caps.max_diameter_vertices);
    read("HANOISPEC_MAX_DENSE_DIM", caps.max_dense_dim);
    read("HANOISPEC_MAX_EXACT_LEVEL", caps.max_exact_pencil_level);
    read("HANOISPEC_MAX_PREIMAGE_DEPTH", caps.max_preimage_depth);
    read("HANOISPEC_MAX_POINTS", caps.max_point_count);
    return caps;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << content;
}

// ---------------------------------------------------------------------------
// graph
// ---------------------------------------------------------------------------

struct GraphOptions {
    int k = 3;
    int n = 1;
    std::string format = "dot";
    std::string describe_word;
    std::string output;
};

int cmd_graph(const GraphOptions& opt, const hanoi::ResourceLimits& caps) {
    if (!opt.describe_word.empty()) {
        const hanoi::Word w = hanoi::Word::from_string(opt.k, opt.describe_word);
        write_output(opt.output, hanoi::configuration_of(w).describe() + "\n");
        return kExitOk;
    }
    const hanoi::SchreierGraph g = hanoi::SchreierGraph::build(opt.k, opt.n, caps);
    if (opt.format == "dot") {
        write_output(opt.output, hanoi::emit_dot(g));
    } else if (opt.format == "json") {
        write_output(opt.output, hanoi::edges_json(g));
    } else {
        throw std::invalid_argument("graph: unknown format " + opt.format);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

struct SpectrumOptions {
    int k = 3;
    int n = 1;
    bool hecke = false;
    bool numeric = false;
    bool pretty = false;
    std::string output;
};

int cmd_spectrum(const SpectrumOptions& opt, const hanoi::ResourceLimits& caps) {
    if (opt.k != 3)
        throw std::invalid_argument(
            "spectrum: the closed form is only known for k = 3 (open problem for k >= 4); "
            "use 'graph' for raw k >= 4 output");

    const hanoi::SpectrumTable table =
        opt.hecke ? hanoi::hecke_spectrum(opt.n, caps) : hanoi::level_spectrum(opt.n, caps);

    bool numeric_pass = true;
    hanoi::SpectrumComparison comparison;
    if (opt.numeric) {
        const double tol = opt.n <= 6 ? 1e-8 : 1e-6;
        comparison = hanoi::compare_with_closed_form(opt.n, tol, caps);
        numeric_pass = comparison.pass;
    }

    if (opt.pretty) {
        std::ostringstream os;
        os.precision(15);
        os << "level " << opt.n << (opt.hecke ? " (hecke, rescaled by 1/3)" : "") << ", "
           << table.entries.size() << " distinct eigenvalues\n";
        for (const hanoi::SpectrumEntry& e : table.entries)
            os << "  " << e.eigenvalue.value << "  x" << e.multiplicity << "  ["
               << e.eigenvalue.describe() << "]\n";
        if (opt.numeric) {
            os << (comparison.pass ? "numeric check: pass" : "numeric check: FAIL")
               << " (max deviation " << comparison.max_deviation << ")\n";
            for (const std::string& m : comparison.mismatches) os << "  " << m << "\n";
        }
        write_output(opt.output, os.str());
    } else {
        json doc = json::parse(hanoi::spectrum_json(table, opt.hecke));
        if (opt.numeric) {
            doc["numeric_check"] = {{"pass", comparison.pass},
                                    {"max_deviation", comparison.max_deviation},
                                    {"tolerance", comparison.tolerance},
                                    {"mismatches", comparison.mismatches}};
        }
        write_output(opt.output, doc.dump(2) + "\n");
    }
    return numeric_pass ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyOptions {
    std::uint64_t seed = 12345;
    int points = 20;
    int numeric_level = 5;
    bool pretty = false;
    std::string mutation;  // test-only fault injection
    std::string output;
};

struct SuiteResult {
    std::string name;
    bool pass;
    std::string detail;
};

int cmd_verify(const VerifyOptions& opt, const hanoi::ResourceLimits& caps) {
    using namespace hanoi;
    std::vector<SuiteResult> suites;
    std::mt19937_64 rng(opt.seed);

    {  // semi-conjugacy as an exact identity
        bool pass;
        if (opt.mutation == "semiconjugacy") {
            const UnivariatePoly x = UnivariatePoly::variable();
            pass = semiconjugacy_identity(x * x - x - UnivariatePoly(2));
        } else {
            pass = semiconjugacy_identity();
        }
        suites.push_back({"semiconjugacy", pass, "Psi o F = f o Psi, cross-multiplied"});
    }

    {  // Psi_theta splitting
        bool pass;
        if (opt.mutation == "psi-split") {
            const Poly1<Rational> e1(Rational(1));
            const Poly1<Rational> bad(std::vector<Rational>{Rational(0), Rational(-1)});
            pass = psi_split_identity(e1, bad);
        } else {
            pass = psi_split_identity();
        }
        suites.push_back({"psi-split", pass, "trivariate splitting identity in (x, y, theta)"});
    }

    {  // determinant recursion at exact points
        bool pass = true;
        std::string detail;
        for (int n = 2; n <= 4 && pass; ++n) {
            int checked = 0;
            while (checked < opt.points) {
                const RationalPoint pt = sample_nondegenerate_point(rng, 1);
                const CheckStatus status = recursion_check(n, pt, caps);
                if (status == CheckStatus::fails) {
                    pass = false;
                    detail = "failed at level " + std::to_string(n) + ", x = " + pt.x.str() +
                             ", y = " + pt.y.str();
                    break;
                }
                if (status == CheckStatus::holds) ++checked;
            }
        }
        if (pass) detail = "levels 2..4, " + std::to_string(opt.points) + " points each";
        suites.push_back({"recursion", pass, detail});
    }

    {  // factorization at exact points
        bool pass = true;
        std::string detail;
        const bool mutate = opt.mutation == "factorization";
        for (int n = 1; n <= 4 && pass; ++n) {
            int checked = 0;
            while (checked < opt.points) {
                const RationalPoint pt = sample_nondegenerate_point(rng, 0);
                CheckStatus status;
                if (mutate) {
                    // Swapped exponent sequences; must disagree with the det.
                    if (n >= 2 && pt.y.is_zero()) {
                        status = CheckStatus::degenerate_point;
                    } else {
                        Rational product =
                            poly_D0().eval(pt.x, pt.y) *
                            pow(eval_A(1, pt), static_cast<unsigned long>(multiplicity_b(n) + 1));
                        for (int m = 2; m <= n; ++m) {
                            product *= pow(eval_A(m, pt),
                                           static_cast<unsigned long>(multiplicity_b(n - m + 2)));
                            product *= pow(eval_B(m, pt),
                                           static_cast<unsigned long>(multiplicity_a(n - m + 1)));
                        }
                        status = det_pencil(n, pt.x, pt.y, caps) == product ? CheckStatus::holds
                                                                            : CheckStatus::fails;
                    }
                } else {
                    status = factorization_check(n, pt, caps);
                }
                if (status == CheckStatus::fails) {
                    pass = false;
                    detail = "failed at level " + std::to_string(n) + ", x = " + pt.x.str() +
                             ", y = " + pt.y.str();
                    break;
                }
                if (status == CheckStatus::holds) ++checked;
            }
        }
        if (pass) detail = "levels 1..4, " + std::to_string(opt.points) + " points each";
        suites.push_back({"factorization", pass, detail});
    }

    {  // multiplicity bookkeeping
        bool pass = true;
        long long p3 = 3;
        for (int n = 1; n <= 20 && pass; ++n) {
            const SpectrumTable t = level_spectrum(n, caps);
            pass = t.entries.size() == (std::size_t{3} << (n - 1)) - 1 &&
                   t.multiplicity_sum() == p3;
            p3 *= 3;
        }
        suites.push_back({"multiplicities", pass, "counts 3*2^(n-1)-1 and sums 3^n, n <= 20"});
    }

    {  // KNS masses
        bool pass = true;
        for (int d = 0; d <= 30 && pass; ++d)
            pass = kns_partial_mass(d) ==
                   Rational(1) - pow(Rational(2, 3), static_cast<unsigned long>(d + 1));
        const KNSLimitReport limit = kns_limit_check(0, 12);
        for (std::size_t t = 0; t + 1 < limit.rows.size() && pass; ++t)
            pass = limit.rows[t + 1].gap == limit.rows[t].gap * Rational(1, 3);
        suites.push_back({"kns-measure", pass, "partial masses and limit gaps, exact"});
    }

    {  // distances and diameters
        bool pass = true;
        long long expected = 1;
        for (int n = 1; n <= 8 && pass; ++n) {
            expected = 2 * expected;  // 2^n
            const SchreierGraph g = SchreierGraph::build(3, n, caps);
            const Word zero = Word::from_index(3, n, 0);
            std::vector<std::uint8_t> ones(static_cast<std::size_t>(n), 1);
            pass = bfs_distance(g, zero, Word(3, ones)) == expected - 1 &&
                   diameter(g, caps) == expected - 1;
        }
        suites.push_back({"distances", pass, "d(0^n,1^n) = diameter = 2^n - 1, n <= 8"});
    }

    {  // structural regularity
        bool pass = true;
        for (int n = 1; n <= 7 && pass; ++n) {
            const SchreierGraph g = SchreierGraph::build(3, n, caps);
            pass = g.loop_count() == 3 && is_connected(g);
        }
        for (int n = 1; n <= 5 && pass; ++n) {
            const SchreierGraph g = SchreierGraph::build(4, n, caps);
            std::vector<int> degree(g.vertex_count(), 0);
            for (const LabeledEdge& e : g.edges()) {
                degree[e.u] += 1;
                if (e.v != e.u) degree[e.v] += 1;
            }
            for (int d : degree) pass = pass && d == 6;
            pass = pass && is_connected(g);
        }
        suites.push_back({"structure", pass, "loops, regularity and connectivity (k=3 n<=7, k=4 n<=5)"});
    }

    {  // conjugation identity
        bool pass = true;
        for (int n = 1; n <= 10 && pass; ++n) pass = conjugation_identity(n);
        suites.push_back({"conjugation", pass, "g^n(x+2) = f^n(x) + 2, n <= 10"});
    }

    {  // numeric oracle
        bool pass = true;
        std::string detail;
        double worst = 0.0;
        for (int n = 1; n <= opt.numeric_level && pass; ++n) {
            const SpectrumComparison cmp = compare_with_closed_form(n, n <= 6 ? 1e-8 : 1e-6, caps);
            pass = cmp.pass;
            worst = std::max(worst, cmp.max_deviation);
            if (!pass && !cmp.mismatches.empty()) detail = cmp.mismatches.front();
        }
        if (pass) {
            std::ostringstream os;
            os << "levels 1.." << opt.numeric_level << ", max deviation " << worst;
            detail = os.str();
        }
        suites.push_back({"numeric-spectrum", pass, detail});
    }

    bool all_pass = true;
    for (const SuiteResult& s : suites) all_pass = all_pass && s.pass;

    if (opt.pretty) {
        std::ostringstream os;
        for (const SuiteResult& s : suites)
            os << (s.pass ? "[PASS] " : "[FAIL] ") << s.name << " - " << s.detail << "\n";
        os << (all_pass ? "all verification suites passed\n" : "verification FAILED\n");
        write_output(opt.output, os.str());
    } else {
        json doc{{"schema_version", 1},
                 {"seed", opt.seed},
                 {"points", opt.points},
                 {"pass", all_pass},
                 {"suites", json::array()}};
        for (const SuiteResult& s : suites)
            doc["suites"].push_back({{"name", s.name}, {"pass", s.pass}, {"detail", s.detail}});
        write_output(opt.output, doc.dump(2) + "\n");
    }
    return all_pass ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------
// plotdata
// ---------------------------------------------------------------------------

struct PlotOptions {
    int aux_level = 0;     // emit hyperbolae for this level's panel (0 = off)
    int theta_depth = -1;  // raw theta depth alternative to aux_level
    int julia_depth = 0;
    int kns_depth = -1;
    int histogram_level = 0;
    double y_min = -3.0;
    double y_max = 3.0;
    int grid_count = 241;
    std::string out_dir = ".";
};

int cmd_plotdata(const PlotOptions& opt, const hanoi::ResourceLimits& caps) {
    using namespace hanoi;
    std::filesystem::create_directories(opt.out_dir);
    std::vector<std::string> written;
    auto emit = [&](const std::string& name, const std::string& content) {
        const std::string path = opt.out_dir + "/" + name;
        write_output(path, content);
        written.push_back(path);
    };

    if (opt.aux_level > 0 || opt.theta_depth >= 0) {
        GridSpec grid{opt.y_min, opt.y_max, opt.grid_count};
        std::vector<HyperbolaSample> samples;
        if (opt.theta_depth >= 0) {
            samples = hyperbola_samples(opt.theta_depth, grid);
        } else {
            // The level-L panel carries theta in f^-i(0) for i <= L-2 and in
            // f^-j(-2) for j <= L-3; drop the deepest minus-two family.
            const int depth = std::max(opt.aux_level - 2, 0);
            samples = hyperbola_samples(opt.aux_level >= 2 ? depth : 0, grid);
            std::erase_if(samples, [&](const HyperbolaSample& s) {
                if (opt.aux_level < 2 && s.theta_depth >= 0) return true;
                return s.theta_depth == depth && opt.aux_level >= 2 &&
                       s.theta_index >= (1 << depth);
            });
        }
        emit("hyperbolae.csv", hyperbola_csv(samples));
    }

    if (opt.kns_depth >= 0) emit("kns_atoms.csv", kns_csv(kns_atoms(opt.kns_depth, caps)));

    if (opt.julia_depth > 0) emit("julia.csv", julia_csv(julia_approx(opt.julia_depth, caps)));

    if (opt.histogram_level > 0) {
        const Eigen::MatrixXd m =
            adjacency(SchreierGraph::build(3, opt.histogram_level, caps), caps).cast<double>();
        emit("spectrum_hist.csv", histogram_csv(dense_sym_eig(m, -1.0, caps)));
    }

    // Round-trip what we wrote.
    for (const std::string& path : written) {
        std::ifstream in(path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        const auto rows = parse_csv(buffer.str());
        if (rows.size() < 1) throw std::runtime_error("emitted CSV failed to re-parse: " + path);
        std::cerr << path << ": " << rows.size() - 1 << " rows\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hanoi Towers Schreier graphs and their spectra"};
    app.require_subcommand(1);

    const hanoi::ResourceLimits caps = caps_from_env();

    GraphOptions graph_opt;
    CLI::App* graph = app.add_subcommand("graph", "emit a level graph as DOT or JSON");
    graph->add_option("-k", graph_opt.k, "number of pegs (>= 3)");
    graph->add_option("-n", graph_opt.n, "level / number of disks");
    graph->add_option("--format", graph_opt.format, "dot|json")->default_val("dot");
    graph->add_option("--describe", graph_opt.describe_word,
                      "print the disk placement a configuration word encodes");
    graph->add_option("-o,--output", graph_opt.output, "output file (default stdout)");

    SpectrumOptions spec_opt;
    CLI::App* spectrum = app.add_subcommand("spectrum", "closed-form level spectrum (k = 3)");
    spectrum->add_option("-n", spec_opt.n, "level")->required();
    spectrum->add_option("-k", spec_opt.k, "number of pegs (closed form needs 3)");
    spectrum->add_flag("--hecke", spec_opt.hecke, "rescale by 1/3");
    spectrum->add_flag("--numeric", spec_opt.numeric, "cross-check against the dense eigensolver");
    spectrum->add_flag("--pretty", spec_opt.pretty, "human-readable text instead of JSON");
    spectrum->add_option("-o,--output", spec_opt.output, "output file (default stdout)");

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("--seed", verify_opt.seed, "sample-point seed");
    verify->add_option("--points", verify_opt.points, "exact sample points per level")
        ->check(CLI::PositiveNumber);
    verify->add_option("--numeric-level", verify_opt.numeric_level, "deepest numeric level")
        ->check(CLI::Range(1, 7));
    verify->add_flag("--pretty", verify_opt.pretty, "human-readable text instead of JSON");
    verify->add_option("-o,--output", verify_opt.output, "output file (default stdout)");
    verify
        ->add_option("--inject-mutation", verify_opt.mutation,
                     "test-only fault injection: semiconjugacy|psi-split|factorization")
        ->group("");

    PlotOptions plot_opt;
    CLI::App* plot = app.add_subcommand("plotdata", "emit CSV plot data");
    plot->add_option("--aux-level", plot_opt.aux_level, "auxiliary-spectrum panel level");
    plot->add_option("--theta-depth", plot_opt.theta_depth,
                     "raw theta depth for hyperbolae (both families)");
    plot->add_option("--julia-depth", plot_opt.julia_depth, "inverse-iteration depth");
    plot->add_option("--kns-depth", plot_opt.kns_depth, "KNS atom depth");
    plot->add_option("--spectrum-histogram", plot_opt.histogram_level,
                     "numeric eigenvalue histogram for this level");
    plot->add_option("--y-min", plot_opt.y_min, "grid lower bound");
    plot->add_option("--y-max", plot_opt.y_max, "grid upper bound");
    plot->add_option("--grid", plot_opt.grid_count, "grid point count");
    plot->add_option("--out-dir", plot_opt.out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (graph->parsed()) {
            if (graph_opt.describe_word.empty() && graph->count("-n") == 0)
                throw std::invalid_argument("graph: -n is required unless --describe is given");
            return cmd_graph(graph_opt, caps);
        }
        if (spectrum->parsed()) return cmd_spectrum(spec_opt, caps);
        if (verify->parsed()) return cmd_verify(verify_opt, caps);
        if (plot->parsed()) return cmd_plotdata(plot_opt, caps);
    } catch (const hanoi::ResourceCapExceeded& e) {
        std::cerr << "resource cap exceeded: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
