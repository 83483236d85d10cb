// Command-line front end: DBN documents in, edge strengths, dynamic Bayesian
// graphs, formigrams, zigzag barcodes and stability reports out. All output
// is deterministic: collections are sorted and reals printed with nine
// fractional digits.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "dbgp/dbn.hpp"
#include "dbgp/divergence.hpp"
#include "dbgp/dynamic_graph.hpp"
#include "dbgp/edge_strength.hpp"
#include "dbgp/format.hpp"
#include "dbgp/formigram.hpp"
#include "dbgp/metrics.hpp"
#include "dbgp/oracle_zz.hpp"
#include "dbgp/zigzag.hpp"

namespace {

using namespace dbgp;

bool g_verbose = false;

void log_step(const std::string& msg) {
    if (g_verbose) std::cerr << "[dbg_persist] " << msg << "\n";
}

double parse_extended_real(const std::string& s, const char* what) {
    if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw CLI::ValidationError(std::string(what) + ": expected a real number, got '" + s + "'");
    }
    if (pos != s.size())
        throw CLI::ValidationError(std::string(what) + ": expected a real number, got '" + s + "'");
    return v;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::vector<std::string>> named_blocks(const Partition& p,
                                                   const std::vector<std::string>& labels) {
    std::vector<std::vector<std::string>> out;
    for (const auto& blk : p.blocks()) {
        std::vector<std::string> names;
        for (int x : blk) names.push_back(labels[x]);
        std::sort(names.begin(), names.end());
        out.push_back(std::move(names));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string blocks_json(const std::vector<std::vector<std::string>>& blocks) {
    std::string s = "[";
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (b) s += ", ";
        s += "[";
        for (size_t x = 0; x < blocks[b].size(); ++x) {
            if (x) s += ", ";
            s += json_quote(blocks[b][x]);
        }
        s += "]";
    }
    return s + "]";
}

std::string block_text(const std::vector<std::string>& names) {
    return "{" + join(names, ",") + "}";
}

std::vector<std::vector<std::string>> event_side(const std::vector<std::vector<int>>& blocks,
                                                 const std::vector<std::string>& labels) {
    std::vector<std::vector<std::string>> out;
    for (const auto& blk : blocks) {
        std::vector<std::string> names;
        for (int x : blk) names.push_back(labels[x]);
        std::sort(names.begin(), names.end());
        out.push_back(std::move(names));
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct Pipeline {
    Dbn dbn;
    StrengthTable table;
    DynamicBayesianGraph dbg;
    Formigram fg;
};

Pipeline run_pipeline(const std::string& path, DivergenceKind kind, double eta) {
    Pipeline p;
    log_step("loading " + path);
    p.dbn = load_dbn(path);
    log_step("computing edge strengths");
    p.table = strength_table(p.dbn, kind);
    std::vector<std::string> labels;
    for (const auto& v : p.dbn.variables) labels.push_back(v.name);
    p.dbg = build_dbg(labels, p.table, eta, p.dbn.delta_t);
    p.fg = formigram_of(p.dbg);
    log_step("formigram has " + std::to_string(p.fg.crit_times.size()) + " critical times");
    return p;
}

int cmd_validate(const std::string& path) {
    Dbn dbn = parse_dbn_unvalidated(read_file(path));
    auto violations = validate_dbn(dbn);
    if (violations.empty()) {
        std::cout << "OK\n";
        return 0;
    }
    for (const auto& v : violations) std::cout << v << "\n";
    return 1;
}

int cmd_strengths(const std::string& path, DivergenceKind kind, const std::string& format) {
    Dbn dbn = load_dbn(path);
    StrengthTable table = strength_table(dbn, kind);
    if (format == "text")
        std::cout << strength_table_text(dbn, table);
    else
        std::cout << strength_table_json(dbn, table);
    return 0;
}

int cmd_barcode(const std::string& path, DivergenceKind kind, double eta, double eps,
                bool has_eps, bool use_oracle, const std::string& format) {
    Pipeline p = run_pipeline(path, kind, eta);
    Formigram fg = has_eps ? smooth_formigram(p.fg, eps) : p.fg;
    Barcode bc = use_oracle ? oracle_barcode(fg) : zigzag_barcode(fg);
    if (format == "svg")
        std::cout << barcode_svg(bc, fg.t_end);
    else if (format == "text")
        std::cout << barcode_text(bc);
    else
        std::cout << serialize_barcode(bc);
    return 0;
}

int cmd_events(const std::string& path, DivergenceKind kind, double eta, const std::string& format) {
    Pipeline p = run_pipeline(path, kind, eta);
    auto events = detect_events(p.fg);
    const auto& labels = p.fg.labels;
    if (format == "text") {
        for (const auto& ev : events) {
            auto before = event_side(ev.blocks_before, labels);
            auto after = event_side(ev.blocks_after, labels);
            std::vector<std::string> bt, at;
            for (const auto& blk : before) bt.push_back(block_text(blk));
            for (const auto& blk : after) at.push_back(block_text(blk));
            std::cout << fmt_real(ev.time) << " "
                      << (ev.kind == Event::Kind::merge ? "merge " : "disband ")
                      << join(bt, "+") << " -> " << join(at, "+") << "\n";
        }
    } else {
        std::string out = "{\"events\": [";
        for (size_t i = 0; i < events.size(); ++i) {
            const auto& ev = events[i];
            if (i) out += ", ";
            out += "{\"time\": " + json_real(ev.time) + ", \"kind\": " +
                   json_quote(ev.kind == Event::Kind::merge ? "merge" : "disband") +
                   ", \"before\": " + blocks_json(event_side(ev.blocks_before, labels)) +
                   ", \"after\": " + blocks_json(event_side(ev.blocks_after, labels)) + "}";
        }
        out += "]}\n";
        std::cout << out;
    }
    return 0;
}

int cmd_clusters(const std::string& path, DivergenceKind kind, double eta, int k,
                 const std::string& format) {
    Pipeline p = run_pipeline(path, kind, eta);
    if (k < 0 || k > p.dbn.horizon())
        throw std::runtime_error("slice out of range: k must lie in 0.." +
                                 std::to_string(p.dbn.horizon()));
    const double t_star = (2 * k + 1) * p.dbn.delta_t / 2.0;
    auto families = named_blocks(p.fg.value_at(t_star), p.fg.labels);
    if (format == "text") {
        for (size_t i = 0; i < families.size(); ++i)
            std::cout << (i + 1) << ": " << join(families[i], " ") << "\n";
    } else {
        std::cout << "{\"k\": " << k << ", \"t\": " << json_real(t_star)
                  << ", \"families\": " << blocks_json(families) << "}\n";
    }
    return 0;
}

int cmd_compare(const std::string& path_a, double eta_a, const std::string& path_b, double eta_b,
                DivergenceKind kind, const std::string& format) {
    Pipeline pa = run_pipeline(path_a, kind, eta_a);
    Pipeline pb = run_pipeline(path_b, kind, eta_b);
    Barcode a = zigzag_barcode(pa.fg);
    Barcode b = zigzag_barcode(pb.fg);
    Matching m = bottleneck_matching(a, b);
    double lower = 0.5 * m.cost;
    if (format == "text") {
        std::cout << "bottleneck\t" << fmt_real(m.cost) << "\n";
        std::cout << "interleaving_lower_bound\t" << fmt_real(lower) << "\n";
        for (auto [x, y] : m.pairs)
            std::cout << "pair\t" << x << "\t" << y << "\t"
                      << fmt_real(bar_distance(a.bars[x], b.bars[y])) << "\n";
        for (int x : m.unmatched_a) std::cout << "unmatched_a\t" << x << "\n";
        for (int y : m.unmatched_b) std::cout << "unmatched_b\t" << y << "\n";
    } else {
        std::cout << "{\"bottleneck\": " << json_real(m.cost)
                  << ", \"interleaving_lower_bound\": " << json_real(lower)
                  << ", \"matching\": " << serialize_matching(m, a, b) << "}\n";
    }
    return 0;
}

int cmd_stability(const std::string& path, DivergenceKind kind, double eta,
                  std::vector<double> eps_list, const std::string& format) {
    Pipeline p = run_pipeline(path, kind, eta);
    if (eps_list.empty())
        eps_list = {0.0, p.dbn.delta_t / 2.0, p.dbn.delta_t, 2.0 * p.dbn.delta_t};
    bool all_pass = true;
    std::vector<StabilityReport> reports;
    for (double eps : eps_list) {
        reports.push_back(stability_check(p.fg, eps));
        all_pass = all_pass && reports.back().pass;
    }
    if (format == "text") {
        for (const auto& r : reports)
            std::cout << "eps=" << fmt_real(r.eps) << "\tlhs=" << fmt_real(r.lhs)
                      << "\tbound=" << fmt_real(r.bound) << "\t" << (r.pass ? "PASS" : "FAIL")
                      << "\n";
    } else {
        std::string out = "{\"results\": [";
        for (size_t i = 0; i < reports.size(); ++i) {
            const auto& r = reports[i];
            if (i) out += ", ";
            out += "{\"eps\": " + json_real(r.eps) + ", \"lhs\": " + json_real(r.lhs) +
                   ", \"bound\": " + json_real(r.bound) +
                   ", \"pass\": " + (r.pass ? "true" : "false") + "}";
        }
        out += "], \"all_pass\": " + std::string(all_pass ? "true" : "false") + "}\n";
        std::cout << out;
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    const char* env = std::getenv("DBG_PERSIST_LOG");
    g_verbose = env != nullptr && *env != '\0';

    CLI::App app{"dynamic Bayesian network clustering barcodes"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string divergence_opt = "tv";
    std::string format = "json";
    std::string eta_str, eta_a_str, eta_b_str, eps_str;
    std::vector<std::string> eps_list_str;
    long seed = 0;
    bool use_oracle = false;

    app.add_option("--divergence", divergence_opt, "tv | kl | hellinger | bhattacharyya")
        ->capture_default_str();
    app.add_option("--format", format, "json | text | svg")->capture_default_str();
    app.add_option("--seed", seed, "seed for randomized subcommands");

    auto* validate = app.add_subcommand("validate", "check a DBN document");
    std::string path, path_b;
    validate->add_option("file", path)->required();

    auto* strengths = app.add_subcommand("strengths", "edge strength table");
    strengths->add_option("file", path)->required();

    auto* barcode = app.add_subcommand("barcode", "zigzag clustering barcode");
    barcode->add_option("file", path)->required();
    barcode->add_option("--eta", eta_str, "edge inclusion threshold")->required();
    barcode->add_option("--eps", eps_str, "smoothing radius");
    barcode->add_flag("--oracle", use_oracle, "force the GF(2) oracle (desk-scale only)");

    auto* events = app.add_subcommand("events", "merging and disbanding events");
    events->add_option("file", path)->required();
    events->add_option("--eta", eta_str)->required();

    auto* clusters = app.add_subcommand("clusters", "cluster families at a slice");
    int slice_k = 0;
    clusters->add_option("file", path)->required();
    clusters->add_option("--eta", eta_str)->required();
    clusters->add_option("--slice", slice_k, "slice index k")->required();

    auto* compare = app.add_subcommand("compare", "bottleneck comparison of two networks");
    compare->add_option("file_a", path)->required();
    compare->add_option("file_b", path_b)->required();
    compare->add_option("--eta", eta_str, "threshold for both networks");
    compare->add_option("--eta-a", eta_a_str, "threshold for the first network");
    compare->add_option("--eta-b", eta_b_str, "threshold for the second network");

    auto* stability = app.add_subcommand("stability", "smoothing bound checks");
    stability->add_option("file", path)->required();
    stability->add_option("--eta", eta_str)->required();
    stability->add_option("--eps", eps_list_str, "smoothing radii (default 0, dt/2, dt, 2dt)");

    try {
        app.parse(argc, argv);

        DivergenceKind kind = divergence_from_name(divergence_opt);
        if (format != "json" && format != "text" && format != "svg")
            throw CLI::ValidationError("--format must be json, text or svg");
        if (format == "svg" && !barcode->parsed())
            throw CLI::ValidationError("--format svg is only available for barcode");

        if (validate->parsed()) return cmd_validate(path);
        if (strengths->parsed()) return cmd_strengths(path, kind, format);
        if (barcode->parsed()) {
            double eta = parse_extended_real(eta_str, "--eta");
            bool has_eps = !eps_str.empty();
            double eps = has_eps ? parse_extended_real(eps_str, "--eps") : 0.0;
            if (has_eps && eps < 0.0) throw CLI::ValidationError("--eps must be nonnegative");
            return cmd_barcode(path, kind, eta, eps, has_eps, use_oracle, format);
        }
        if (events->parsed())
            return cmd_events(path, kind, parse_extended_real(eta_str, "--eta"), format);
        if (clusters->parsed())
            return cmd_clusters(path, kind, parse_extended_real(eta_str, "--eta"), slice_k, format);
        if (compare->parsed()) {
            if (eta_str.empty() && (eta_a_str.empty() || eta_b_str.empty()))
                throw CLI::ValidationError("compare needs --eta or both --eta-a and --eta-b");
            double eta_a = parse_extended_real(eta_a_str.empty() ? eta_str : eta_a_str, "--eta-a");
            double eta_b = parse_extended_real(eta_b_str.empty() ? eta_str : eta_b_str, "--eta-b");
            return cmd_compare(path, eta_a, path_b, eta_b, kind, format);
        }
        if (stability->parsed()) {
            std::vector<double> eps_list;
            for (const auto& s : eps_list_str) {
                double eps = parse_extended_real(s, "--eps");
                if (eps < 0.0) throw CLI::ValidationError("--eps must be nonnegative");
                eps_list.push_back(eps);
            }
            return cmd_stability(path, kind, parse_extended_real(eta_str, "--eta"), eps_list, format);
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
