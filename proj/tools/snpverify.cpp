// Command-line driver: inspect instances, run verification suites, hunt for
// counterexamples, and emit dependency-cycle gadgets.
//
// Exit codes: 0 = all checks passed, 1 = a finding was produced, 2 = usage or
// input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "snp/snp.hpp"

namespace {

int env_threads() {
    const char* raw = std::getenv("SNPVERIFY_THREADS");
    if (raw == nullptr) return 1;
    const int v = std::atoi(raw);
    return v >= 1 ? v : 1;
}

std::string join_vertices(snp::VertexSet s) {
    std::ostringstream out;
    bool first = true;
    snp::vs_for_each(s, [&](snp::Vertex v) {
        out << (first ? "" : " ") << v;
        first = false;
    });
    return first ? std::string("(none)") : out.str();
}

std::string join_order(const snp::Ordering& order) {
    std::ostringstream out;
    for (std::size_t i = 0; i < order.size(); ++i) out << (i ? " " : "") << order[i];
    return out.str();
}

void print_dependency(const snp::Digraph& d) {
    const snp::DependencyDigraph delta = snp::dependency_digraph(d);
    std::cout << "dependency digraph: " << delta.node_count() << " node(s), "
              << delta.arc_count() << " arc(s)\n";
    for (const snp::DeltaArc& a : delta.arcs) {
        const snp::MissingEdge& e = delta.nodes[static_cast<std::size_t>(a.from)];
        const snp::MissingEdge& f = delta.nodes[static_cast<std::size_t>(a.to)];
        std::cout << "  {" << e.u << "," << e.v << "} -> {" << f.u << "," << f.v
                  << "}  (image " << a.u_image << "," << a.v_image << ")\n";
    }
    for (const snp::DeltaComponent& comp : snp::delta_components(delta)) {
        const char* kind = comp.kind == snp::ComponentKind::path
                               ? "path"
                               : comp.kind == snp::ComponentKind::cycle ? "cycle" : "other";
        std::cout << "  component (" << kind << ", length " << comp.walk.size() << "):";
        for (int idx : comp.walk) {
            const snp::MissingEdge& e = delta.nodes[static_cast<std::size_t>(idx)];
            std::cout << " {" << e.u << "," << e.v << "}";
        }
        std::cout << "\n";
    }
    for (std::size_t i = 0; i < delta.nodes.size(); ++i) {
        const snp::MissingEdge& e = delta.nodes[i];
        const snp::ConvenientOrientations conv = snp::convenient_orientations(d, e);
        std::cout << "  {" << e.u << "," << e.v << "}: in-degree "
                  << delta.in_degree(static_cast<int>(i)) << ", convenient ";
        if (!conv.any())
            std::cout << "none";
        else {
            if (conv.u_to_v) std::cout << e.u << "->" << e.v << " ";
            if (conv.v_to_u) std::cout << e.v << "->" << e.u;
        }
        std::cout << "\n";
    }
}

int run_analyze(const std::string& path, const std::string& dot_path, int limit) {
    const snp::Instance inst = snp::load_instance_file(path);
    const snp::Digraph& d = inst.d;
    const snp::WeightAssignment w = inst.weights_or_unit();
    const int n = d.vertex_count();

    std::cout << "instance: " << (inst.name.empty() ? path : inst.name) << "\n";
    std::cout << "vertices: " << n << (d.oriented() ? "" : " (digons allowed)") << "\n";
    std::cout << "arcs (" << d.arc_count() << "):";
    for (const auto& [u, v] : d.arcs()) std::cout << " " << u << "->" << v;
    std::cout << "\n";
    const snp::MissingGraph mg = snp::missing_graph(d);
    std::cout << "missing edges (" << mg.edges.size() << ","
              << (mg.is_matching ? " matching" : " not a matching") << "):";
    for (const snp::MissingEdge& e : mg.edges) std::cout << " {" << e.u << "," << e.v << "}";
    std::cout << "\n";
    if (w.all_unit())
        std::cout << "weights: unit\n";
    else {
        std::cout << "weights:";
        for (int v = 0; v < n; ++v) std::cout << " " << w.of(v).to_string();
        std::cout << "\n";
    }

    if (!mg.edges.empty()) print_dependency(d);
    const bool good = snp::is_good_digraph(d);
    std::cout << "good digraph: " << (good ? "yes" : "no") << "\n";
    if (good && !mg.edges.empty()) {
        const snp::IntervalStructure is = snp::interval_structure(d);
        for (const snp::ComponentGroup& g : is.groups)
            std::cout << "  component-group block: {" << join_vertices(g.K) << "}\n";
    }

    if (n > 0 && n <= limit) {
        const snp::Ordering order = good ? snp::good_median_order(d, w, limit)
                                         : snp::exact_median_order(d, w, limit);
        std::cout << "maximum-weight ordering: " << join_order(order) << "  (weight "
                  << snp::order_weight(d, w, order).to_string() << ")\n";
        const snp::OrderClassification cls = snp::classify_order(d, order);
        std::cout << "feed: " << cls.feed << " (out-degree " << d.out_degree(cls.feed)
                  << ", second out-degree " << d.second_out_degree(cls.feed) << ")\n";
        std::cout << "good vertices: " << join_vertices(cls.good) << "\n";
        std::cout << "bad vertices: " << join_vertices(cls.bad) << "\n";
        std::cout << "out-of-feed vertices: " << join_vertices(cls.out_of_feed) << "\n";
        if (good) {
            const snp::MainInequalityReport rep = snp::check_main_inequality(d, w, order);
            std::cout << "feed block J: {" << join_vertices(rep.j_of_feed) << "}\n";
            for (const snp::MainInequalityEntry& e : rep.entries)
                std::cout << "  member " << e.x << ": w(N+ \\ J) = " << e.lhs.to_string()
                          << (e.holds ? " <= " : " > ") << e.rhs.to_string()
                          << " = w(good \\ J)" << (e.holds ? "" : "  [VIOLATION]") << "\n";
            const snp::SedOutcome outcome = snp::sed_classify(d, w, order, limit);
            if (outcome.kind == snp::SedKind::stable)
                std::cout << "sedimentation: stable at rank " << outcome.rank << "\n";
            else
                std::cout << "sedimentation: periodic from rank " << outcome.rank
                          << " with period " << outcome.cycle.size() << "\n";
        }
    } else if (n > limit) {
        snp::Ordering start(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) start[static_cast<std::size_t>(i)] = i;
        const snp::Ordering order = snp::local_median_order(d, w, start);
        std::cout << "locally maximal ordering: " << join_order(order) << "  (weight "
                  << snp::order_weight(d, w, order).to_string() << ")\n";
        std::cout << "(exact analysis skipped: " << n << " vertices exceeds the exact limit "
                  << limit << ")\n";
    }

    std::cout << "vertices meeting the second-neighborhood bound: "
              << join_vertices(snp::snp_oracle(d, w)) << "\n";

    if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out) throw std::runtime_error("cannot open \"" + dot_path + "\" for writing");
        const snp::DependencyDigraph delta = snp::dependency_digraph(d);
        out << snp::export_dot(d, &delta);
        std::cout << "wrote " << dot_path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for second-neighborhood theorems"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "inspect one instance file");
    std::string analyze_path;
    std::string analyze_dot;
    int analyze_limit = snp::kDefaultExactLimit;
    analyze->add_option("file", analyze_path, "instance JSON file")->required();
    analyze->add_option("--dot", analyze_dot, "write a Graphviz rendering to this file");
    analyze->add_option("--limit", analyze_limit, "largest size solved exactly");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    int verify_n = -1;
    std::int64_t verify_trials = -1;
    std::uint64_t verify_seed = 20260815;
    std::string verify_dump;
    std::string verify_log;
    int verify_limit = snp::kDefaultExactLimit;
    {
        std::ostringstream names;
        names << "suite name: all, snc";
        for (const snp::CampaignEntry& e : snp::campaign_registry()) names << ", " << e.name;
        verify->add_option("--suite", suite, names.str())->required();
    }
    verify->add_option("--n", verify_n, "restrict exhaustive sweeps to exactly this size");
    verify->add_option("--trials", verify_trials, "override the random-trial count");
    verify->add_option("--seed", verify_seed, "stream seed");
    verify->add_option("--dump", verify_dump, "directory for failing-instance files");
    verify->add_option("--log", verify_log, "append one JSONL run record per instance");
    verify->add_option("--limit", verify_limit, "largest size solved exactly");

    // hunt
    auto* hunt_cmd = app.add_subcommand("hunt", "sweep seeded random instances for findings");
    std::string hunt_class = "missing-matching";
    std::string n_range = "4..12";
    std::uint64_t hunt_trials = 1000;
    std::uint64_t hunt_seed = 20260815;
    int hunt_parallel = env_threads();
    int hunt_weight_range = 1;
    std::string hunt_dump = "findings";
    std::string hunt_log;
    int hunt_limit = snp::kDefaultExactLimit;
    hunt_cmd->add_option("--class", hunt_class,
                         "instance class: tournament, oriented, missing-matching");
    hunt_cmd->add_option("--n-range", n_range, "vertex-count range, e.g. 6..14");
    hunt_cmd->add_option("--trials", hunt_trials, "number of instances");
    hunt_cmd->add_option("--seed", hunt_seed, "stream seed");
    hunt_cmd->add_option("--parallel", hunt_parallel,
                         "worker threads (default: SNPVERIFY_THREADS or 1)");
    hunt_cmd->add_option("--weight-range", hunt_weight_range,
                         "weights drawn from [1..R]/[1..R]; 1 keeps unit weights");
    hunt_cmd->add_option("--dump", hunt_dump, "directory for failing-instance files");
    hunt_cmd->add_option("--log", hunt_log, "append one JSONL run record per instance");
    hunt_cmd->add_option("--limit", hunt_limit, "largest size solved exactly");

    // gadget
    auto* gadget = app.add_subcommand("gadget", "emit a dependency-cycle gadget");
    int gadget_k = 0;
    std::string gadget_out;
    std::string gadget_dot;
    gadget->add_option("--k", gadget_k, "cycle length (>= 2)")->required();
    gadget->add_option("--out", gadget_out, "write the instance here instead of stdout");
    gadget->add_option("--dot", gadget_dot, "write a Graphviz rendering to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze) return run_analyze(analyze_path, analyze_dot, analyze_limit);

        if (*verify) {
            snp::CampaignOptions opt;
            opt.seed = verify_seed;
            opt.exhaustive_n = verify_n;
            opt.trials = verify_trials;
            opt.dump_dir = verify_dump;
            opt.exact_limit = verify_limit;
            {
                std::ostringstream cmd;
                for (int i = 0; i < argc; ++i) cmd << (i ? " " : "") << argv[i];
                opt.command = cmd.str();
            }
            std::ofstream log_stream;
            if (!verify_log.empty()) {
                log_stream.open(verify_log, std::ios::app);
                if (!log_stream)
                    throw std::runtime_error("cannot open \"" + verify_log + "\" for writing");
                opt.log = &log_stream;
            }
            if (suite == "all" || suite == "snc")
                return snp::run_acceptance(opt, std::cout) ? 0 : 1;
            for (const snp::CampaignEntry& entry : snp::campaign_registry()) {
                if (suite != entry.name) continue;
                const snp::CampaignResult r = entry.fn(opt);
                snp::print_campaign_line(std::cout, entry.criterion, r);
                return r.pass() && r.oracle_empty == 0 ? 0 : 1;
            }
            std::cerr << "error: unknown suite \"" << suite << "\"\n";
            return 2;
        }

        if (*hunt_cmd) {
            snp::HuntOptions opt;
            opt.klass = hunt_class;
            const std::size_t dots = n_range.find("..");
            if (dots == std::string::npos) {
                opt.n_min = opt.n_max = std::stoi(n_range);
            } else {
                opt.n_min = std::stoi(n_range.substr(0, dots));
                opt.n_max = std::stoi(n_range.substr(dots + 2));
            }
            if (opt.n_min < 1 || opt.n_max < opt.n_min)
                throw std::invalid_argument("bad --n-range \"" + n_range + "\"");
            opt.trials = hunt_trials;
            opt.seed = hunt_seed;
            opt.threads = hunt_parallel;
            opt.weight_range = hunt_weight_range;
            opt.dump_dir = hunt_dump;
            opt.exact_limit = hunt_limit;
            {
                std::ostringstream cmd;
                for (int i = 0; i < argc; ++i) cmd << (i ? " " : "") << argv[i];
                opt.command = cmd.str();
            }
            std::ofstream log_stream;
            if (!hunt_log.empty()) {
                log_stream.open(hunt_log, std::ios::app);
                if (!log_stream)
                    throw std::runtime_error("cannot open \"" + hunt_log + "\" for writing");
                opt.log = &log_stream;
            }
            const snp::CampaignResult r = snp::hunt(opt);
            std::cout << (r.pass() && r.oracle_empty == 0 ? "[PASS] " : "[FAIL] ") << r.name
                      << ": instances=" << r.instances << " violations=" << r.violations
                      << " (" << r.seconds << "s)\n";
            for (const snp::Finding& f : r.findings)
                for (const std::string& msg : f.failures)
                    std::cout << "  instance " << f.index << ": " << msg << "\n";
            if (!r.findings.empty() && !opt.dump_dir.empty())
                std::cout << "failing instances written to " << opt.dump_dir << "/\n";
            return r.pass() && r.oracle_empty == 0 ? 0 : 1;
        }

        if (*gadget) {
            const snp::Digraph g = snp::cycle_gadget(gadget_k);
            snp::Instance inst;
            inst.d = g;
            inst.name = "gadget-k" + std::to_string(gadget_k);
            inst.klass = "gadget";
            if (gadget_out.empty())
                snp::save_instance(inst, std::cout);
            else {
                snp::save_instance_file(inst, gadget_out);
                std::cout << "wrote " << gadget_out << "\n";
            }
            if (!gadget_dot.empty()) {
                std::ofstream out(gadget_dot);
                if (!out)
                    throw std::runtime_error("cannot open \"" + gadget_dot + "\" for writing");
                const snp::DependencyDigraph delta = snp::dependency_digraph(g);
                out << snp::export_dot(g, &delta);
                std::cout << "wrote " << gadget_dot << "\n";
            }
            return 0;
        }
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::out_of_range& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::logic_error& ex) {
        // An invariant the theorems guarantee has been violated: a finding.
        std::cerr << "finding: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
