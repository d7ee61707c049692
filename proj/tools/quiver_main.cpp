// Command-line front end: bipartitize / verify / mutate / stats / enumerate.
//
// Exit codes: 0 success or certificate accepted; 1 verification rejected;
// 2 usage or schema error; 3 invariant violation (with a trace dump on
// stderr).

#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "quiver/bipartitize.hpp"
#include "quiver/generate.hpp"
#include "quiver/io.hpp"
#include "quiver/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw quiver::UsageError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw quiver::UsageError("cannot write file: " + path);
    out << text;
}

std::string show_profile(const quiver::PathProfile& profile) {
    std::string lengths;
    for (const int len : profile.maximal_lengths) {
        if (!lengths.empty())
            lengths += ",";
        lengths += std::to_string(len);
    }
    return "ell=" + std::to_string(profile.ell) + " maximal_lengths={" + lengths + "}";
}

struct BipartitizeArgs {
    std::string input;
    std::string trace_out;
    std::string dot_out;
    bool report = false;
    std::optional<std::uint64_t> step1_cap;
    std::optional<std::uint64_t> random_alpha;
};

int run_bipartitize(const BipartitizeArgs& args) {
    const quiver::Quiver input = quiver::parse_quiver(read_file(args.input));
    quiver::ConstructionOptions options;
    options.step1_cap = args.step1_cap;
    options.arrow_choice_seed = args.random_alpha;

    const auto [trace, report] = quiver::bipartitize(input, options);

    std::cout << "step1_iterations=" << report.step1_iterations
              << " step2_iterations=" << report.step2_iterations
              << " inserted_vertices=" << report.inserted_vertices
              << " ell=" << trace.ell << " j=" << trace.j
              << " final_vertices=" << trace.final_quiver.vertex_count()
              << " final_bipartite=" << (quiver::is_bipartite(trace.final_quiver) ? "true" : "false")
              << "\n";
    if (args.report) {
        std::cout << "input: " << show_profile(report.input_profile) << "\n";
        for (std::size_t i = 0; i < report.step1_profiles.size(); ++i)
            std::cout << "step1[" << i + 1 << "]: " << show_profile(report.step1_profiles[i])
                      << "\n";
        for (std::size_t i = 0; i < report.step2_profiles.size(); ++i)
            std::cout << "step2[" << i + 1 << "]: " << show_profile(report.step2_profiles[i])
                      << "\n";
    }

    if (!args.trace_out.empty())
        write_file(args.trace_out, quiver::serialize_trace(trace));
    if (!args.dot_out.empty())
        write_file(args.dot_out, quiver::emit_dot(trace.final_quiver));
    return kExitOk;
}

int run_verify(const std::string& input_path, const std::string& trace_path) {
    const quiver::Quiver input = quiver::parse_quiver(read_file(input_path));
    const quiver::Trace trace = quiver::parse_trace(read_file(trace_path));
    const quiver::EmbeddingCertificate cert = quiver::certify(input, trace);

    const auto show = [](bool b) { return b ? "true" : "false"; };
    std::cout << "bipartite_ok=" << show(cert.bipartite_ok)
              << " full_subquiver_ok=" << show(cert.full_subquiver_ok)
              << " mutation_equivalent_ok=" << show(cert.mutation_equivalent_ok)
              << " accepted=" << show(cert.accepted()) << "\n";
    return cert.accepted() ? kExitOk : kExitRejected;
}

int run_mutate(const std::string& input_path, const std::string& vertex_label) {
    const quiver::Quiver input = quiver::parse_quiver(read_file(input_path));
    const auto vertex = input.index_of(vertex_label);
    if (!vertex)
        throw quiver::UsageError("unknown vertex label \"" + vertex_label + "\"");
    std::cout << quiver::serialize_quiver(quiver::mutate(input, *vertex));
    return kExitOk;
}

struct StatsArgs {
    int n = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double edge_prob = 0.4;
    std::int64_t max_mult = 3;
    unsigned jobs = 1;
    std::optional<std::uint64_t> step1_cap;
};

struct StatsRow {
    std::uint64_t seed = 0;
    int n = 0;
    quiver::Entry arrows = 0;
    int ell = 0;
    std::uint64_t step1_iterations = 0;
    std::uint64_t step2_iterations = 0;
    std::uint64_t inserted_vertices = 0;
};

StatsRow run_sample(const StatsArgs& args, std::uint64_t index) {
    quiver::GenSpec spec{args.n, args.edge_prob, args.max_mult, args.seed + index};
    const quiver::Quiver q = quiver::random_acyclic(spec);
    quiver::ConstructionOptions options;
    options.step1_cap = args.step1_cap;
    const auto [trace, report] = quiver::bipartitize(q, options);
    return {spec.seed,
            args.n,
            q.arrow_multiplicity(),
            trace.ell,
            report.step1_iterations,
            report.step2_iterations,
            report.inserted_vertices};
}

// Samples are independent; rows are emitted in sample-index order no matter
// how many workers ran them, so the CSV is bit-identical for a fixed seed.
int run_stats(const StatsArgs& args) {
    std::vector<StatsRow> rows(args.samples);
    const unsigned jobs = std::max(1u, args.jobs);
    if (jobs == 1) {
        for (std::uint64_t i = 0; i < args.samples; ++i)
            rows[i] = run_sample(args, i);
    } else {
        std::atomic<std::uint64_t> cursor{0};
        std::vector<std::thread> workers;
        std::mutex error_mutex;
        std::exception_ptr error;
        for (unsigned w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                try {
                    for (;;) {
                        const std::uint64_t i = cursor.fetch_add(1);
                        if (i >= args.samples)
                            return;
                        rows[i] = run_sample(args, i);
                    }
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    cursor.store(args.samples);
                }
            });
        for (std::thread& worker : workers)
            worker.join();
        if (error)
            std::rethrow_exception(error);
    }

    std::ostringstream csv;
    csv << "seed,n,arrows,ell,step1_iterations,step2_iterations,inserted_vertices\n";
    for (const StatsRow& row : rows)
        csv << row.seed << ',' << row.n << ',' << row.arrows << ',' << row.ell << ','
            << row.step1_iterations << ',' << row.step2_iterations << ','
            << row.inserted_vertices << '\n';
    std::cout << csv.str();
    return kExitOk;
}

struct EnumerateArgs {
    int max_n = 0;
    std::int64_t max_mult = 1;
};

int run_enumerate(const EnumerateArgs& args) {
    std::cout << "n,index,arrows,ell,step1_iterations,step2_iterations,accepted\n";
    bool all_accepted = true;
    for (int n = 1; n <= args.max_n; ++n) {
        quiver::SmallQuiverEnumerator corpus(n, args.max_mult);
        std::uint64_t index = 0;
        while (auto q = corpus.next()) {
            const auto [trace, report] = quiver::bipartitize(*q);
            const bool accepted = quiver::certify(*q, trace).accepted();
            all_accepted = all_accepted && accepted;
            std::cout << n << ',' << index << ',' << q->arrow_multiplicity() << ','
                      << trace.ell << ',' << report.step1_iterations << ','
                      << report.step2_iterations << ',' << (accepted ? "true" : "false")
                      << "\n";
            ++index;
        }
    }
    return all_accepted ? kExitOk : kExitRejected;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bipartitize acyclic quivers by vertex insertion and mutation, "
                 "and certify the resulting embeddings"};
    app.require_subcommand(1);

    BipartitizeArgs bip_args;
    std::uint64_t cap_value = 0;
    std::uint64_t alpha_seed = 0;
    auto* bip = app.add_subcommand(
        "bipartitize", "Run the construction on a quiver document and print its report");
    bip->add_option("input", bip_args.input, "Quiver JSON document")
        ->required()
        ->check(CLI::ExistingFile);
    bip->add_option("--trace", bip_args.trace_out, "Write the mutation trace JSON here");
    bip->add_option("--dot", bip_args.dot_out, "Write the final quiver as Graphviz DOT here");
    bip->add_flag("--report", bip_args.report, "Print per-iteration path profiles");
    auto* cap_opt = bip->add_option("--step1-cap", cap_value,
                                    "Step-1 iteration cap (default 10 * ell * arrow count)")
                        ->envname("QUIVER_STEP1_CAP");
    auto* alpha_opt =
        bip->add_option("--random-alpha", alpha_seed,
                        "Pick subdivided arrows at random with this seed (for fuzzing)");

    std::string verify_input, verify_trace;
    auto* ver = app.add_subcommand("verify",
                                   "Check a trace's embedding certificate (exit 0 iff accepted)");
    ver->add_option("input", verify_input, "Quiver JSON document")
        ->required()
        ->check(CLI::ExistingFile);
    ver->add_option("trace", verify_trace, "Trace JSON document")
        ->required()
        ->check(CLI::ExistingFile);

    std::string mutate_input, mutate_vertex;
    auto* mut = app.add_subcommand("mutate", "Mutate at one vertex and print the result");
    mut->add_option("input", mutate_input, "Quiver JSON document")
        ->required()
        ->check(CLI::ExistingFile);
    mut->add_option("-k,--vertex", mutate_vertex, "Vertex label to mutate at")->required();

    StatsArgs stats_args;
    std::uint64_t stats_cap_value = 0;
    auto* stats = app.add_subcommand(
        "stats", "Bipartitize seeded random quivers and emit one CSV row per sample");
    stats->add_option("--n", stats_args.n, "Vertex count per sample")->required();
    stats->add_option("--samples", stats_args.samples, "Number of samples")->required();
    stats->add_option("--seed", stats_args.seed, "Base seed; sample i uses seed + i")
        ->required();
    stats->add_option("--edge-prob", stats_args.edge_prob, "Forward-pair probability")
        ->capture_default_str();
    stats->add_option("--max-mult", stats_args.max_mult, "Maximum arrow multiplicity")
        ->capture_default_str();
    stats->add_option("--jobs", stats_args.jobs, "Worker threads (rows stay in order)")
        ->capture_default_str();
    auto* stats_cap_opt = stats->add_option("--step1-cap", stats_cap_value,
                                            "Step-1 iteration cap")
                              ->envname("QUIVER_STEP1_CAP");

    EnumerateArgs enum_args;
    auto* enm = app.add_subcommand(
        "enumerate", "Stream certificate verdicts for every small quiver up to --max-n");
    enm->add_option("--max-n", enum_args.max_n, "Largest vertex count (corpus is n = 1..max-n)")
        ->required();
    enm->add_option("--max-mult", enum_args.max_mult, "Largest arrow multiplicity")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*bip) {
            if (*cap_opt)
                bip_args.step1_cap = cap_value;
            if (*alpha_opt)
                bip_args.random_alpha = alpha_seed;
            return run_bipartitize(bip_args);
        }
        if (*ver)
            return run_verify(verify_input, verify_trace);
        if (*mut)
            return run_mutate(mutate_input, mutate_vertex);
        if (*stats) {
            if (*stats_cap_opt)
                stats_args.step1_cap = stats_cap_value;
            return run_stats(stats_args);
        }
        if (*enm)
            return run_enumerate(enum_args);
    } catch (const quiver::ConstructionError& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        std::cerr << quiver::serialize_trace(e.partial_trace());
        return kExitInvariant;
    } catch (const quiver::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
