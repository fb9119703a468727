// Command-line front end: graph ingestion, invariant queries, product
// construction, and verification campaigns. Exit codes: 0 = success,
// 1 = a verification suite found a violation, 2 = usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tollcvx/convexity.hpp"
#include "tollcvx/invariants.hpp"
#include "tollcvx/io.hpp"
#include "tollcvx/product.hpp"
#include "tollcvx/product_theorems.hpp"
#include "tollcvx/suites.hpp"

namespace {

using namespace tollcvx;

enum class OutputMode { text, csv, records };

struct GraphSource {
    std::string input;
    std::string format = "edgelist";
    std::string name;

    void attach(CLI::App* cmd) {
        cmd->add_option("--input", input, "graph file (\"-\" for stdin)");
        cmd->add_option("--format", format, "input format")
            ->check(CLI::IsMember({"edgelist", "graph6"}));
        cmd->add_option("--name", name,
                        "named family, e.g. cycle:5, star:3, fig3-spider");
    }

    Graph load() const {
        if (!name.empty()) return named_graph(name);
        if (input.empty())
            throw std::invalid_argument("no graph given: use --input or --name");
        std::string text;
        if (input == "-") {
            std::ostringstream ss;
            ss << std::cin.rdbuf();
            text = ss.str();
        } else {
            std::ifstream in(input);
            if (!in) throw std::invalid_argument("cannot open " + input);
            std::ostringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }
        return format == "graph6" ? parse_graph6(text) : parse_edgelist(text);
    }
};

Graph load_file(const std::string& path, const std::string& format) {
    GraphSource src;
    src.input = path;
    src.format = format;
    return src.load();
}

VertexSet parse_set(const std::string& text, int n) {
    VertexSet s(n);
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        int v = std::stoi(item);
        if (v < 0 || v >= n)
            throw std::invalid_argument("vertex " + item + " out of range for n=" +
                                        std::to_string(n));
        s.set(v);
    }
    return s;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void print_kv(OutputMode mode, const std::vector<std::pair<std::string, std::string>>& rows) {
    switch (mode) {
        case OutputMode::text:
            for (const auto& [k, v] : rows) std::cout << k << " = " << v << "\n";
            break;
        case OutputMode::csv:
            std::cout << "key,value\n";
            for (const auto& [k, v] : rows)
                std::cout << csv_quote(k) << ',' << csv_quote(v) << "\n";
            break;
        case OutputMode::records:
            for (const auto& [k, v] : rows) std::cout << k << '=' << v << '\n';
            break;
    }
}

const char* record_status(const ReportRecord& r, bool note) {
    return r.violation ? "violation" : note ? "note" : "ok";
}

void print_record_line(const std::string& suite, const ReportRecord& r, bool note) {
    std::cout << "suite=" << suite << "\tinstance=" << r.instance << "\texpected="
              << r.expected << "\tactual=" << r.actual << "\twitness=" << r.witness
              << "\tstatus=" << record_status(r, note) << "\n";
}

void print_record_csv(const std::string& suite, const ReportRecord& r, bool note) {
    std::cout << record_status(r, note) << ',' << csv_quote(suite) << ','
              << csv_quote(r.instance) << ',' << csv_quote(r.expected) << ','
              << csv_quote(r.actual) << ',' << csv_quote(r.witness) << "\n";
}

class StreamSink : public RecordSink {
public:
    explicit StreamSink(OutputMode mode) : mode_(mode) {}
    void record(const std::string& suite, const ReportRecord& rec) override {
        if (mode_ == OutputMode::records)
            print_record_line(suite, rec, /*note=*/false);
        else
            print_record_csv(suite, rec, /*note=*/false);
    }

private:
    OutputMode mode_;
};

// Summary stays free of timings so reports are byte-stable across runs;
// elapsed time goes to stderr.
int print_report(const VerificationReport& report, OutputMode mode, bool streamed) {
    switch (mode) {
        case OutputMode::text:
            for (const auto& r : report.violations) print_record_line(report.suite, r, false);
            for (const auto& r : report.notes) print_record_line(report.suite, r, true);
            std::cout << "suite " << report.suite << ": " << report.instances
                      << " instances, " << report.violations.size() << " violations, "
                      << report.notes.size() << " notes, "
                      << (report.passed() ? "PASS" : "FAIL") << "\n";
            break;
        case OutputMode::csv:
            if (!streamed) {
                std::cout << "type,suite,instance,expected,actual,witness\n";
                for (const auto& r : report.violations) print_record_csv(report.suite, r, false);
                for (const auto& r : report.notes) print_record_csv(report.suite, r, true);
            }
            std::cout << "summary," << csv_quote(report.suite) << ','
                      << report.instances << ",violations=" << report.violations.size()
                      << ",exhaustive=" << (report.exhaustive ? "true" : "false") << ",\n";
            break;
        case OutputMode::records:
            if (!streamed) {
                for (const auto& r : report.violations) print_record_line(report.suite, r, false);
                for (const auto& r : report.notes) print_record_line(report.suite, r, true);
            }
            std::cout << "summary\tsuite=" << report.suite << "\tinstances="
                      << report.instances << "\tviolations=" << report.violations.size()
                      << "\tnotes=" << report.notes.size() << "\texhaustive="
                      << (report.exhaustive ? "true" : "false") << "\n";
            break;
    }
    std::cerr << "suite " << report.suite << " elapsed " << report.elapsed.count() << " ms\n";
    return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toll-convexity toolkit"};
    app.require_subcommand(1);

    std::string output = "text";
    app.add_option("--output", output, "output style")
        ->check(CLI::IsMember({"text", "csv", "records"}))
        ->capture_default_str();

    GraphSource src;

    // single-graph queries
    auto* cmd_interval = app.add_subcommand("interval", "toll interval between two vertices");
    int iu = 0, iv = 0;
    std::string interval_kind = "toll";
    cmd_interval->add_option("u", iu)->required();
    cmd_interval->add_option("v", iv)->required();
    cmd_interval->add_option("--kind", interval_kind)
        ->check(CLI::IsMember({"toll", "geodesic"}));
    src.attach(cmd_interval);

    auto* cmd_closure = app.add_subcommand("closure", "toll closure of a vertex set");
    std::string set_arg;
    cmd_closure->add_option("set", set_arg, "comma-separated vertices")->required();
    src.attach(cmd_closure);

    auto* cmd_hull = app.add_subcommand("hull", "t-convex hull with its stages");
    cmd_hull->add_option("set", set_arg, "comma-separated vertices")->required();
    src.attach(cmd_hull);

    auto* cmd_convex = app.add_subcommand("convex", "t-convexity test");
    std::string method = "closure";
    cmd_convex->add_option("set", set_arg, "comma-separated vertices")->required();
    cmd_convex->add_option("--method", method)
        ->check(CLI::IsMember({"closure", "separator"}));
    src.attach(cmd_convex);

    int ceiling = 12;
    std::size_t max_witnesses = 0;  // 0 = all
    auto add_invariant_cmd = [&](const char* name, const char* desc) {
        auto* cmd = app.add_subcommand(name, desc);
        cmd->add_option("--ceiling", ceiling, "exact-search vertex ceiling");
        cmd->add_option("--max-witnesses", max_witnesses, "cap on reported minimum sets");
        src.attach(cmd);
        return cmd;
    };
    auto* cmd_tn = add_invariant_cmd("toll-number", "minimum toll set size and witnesses");
    auto* cmd_th = add_invariant_cmd("t-hull-number", "minimum t-hull set size and witnesses");
    auto* cmd_gn = add_invariant_cmd("geodetic-number", "minimum geodetic set size and witnesses");

    auto* cmd_ext = app.add_subcommand("extreme", "extreme vertices");
    src.attach(cmd_ext);

    // two-graph commands
    auto* cmd_product = app.add_subcommand("product", "build a graph product");
    std::string prod_kind, g_file, h_file, to_format = "edgelist";
    cmd_product->add_option("kind", prod_kind)->required()
        ->check(CLI::IsMember({"cartesian", "lex"}));
    cmd_product->add_option("g-file", g_file)->required();
    cmd_product->add_option("h-file", h_file)->required();
    cmd_product->add_option("--format", src.format, "input format")
        ->check(CLI::IsMember({"edgelist", "graph6"}));
    cmd_product->add_option("--to", to_format, "output format")
        ->check(CLI::IsMember({"edgelist", "graph6"}));

    auto* cmd_lextn = app.add_subcommand("lex-tn", "toll number of G∘H");
    cmd_lextn->add_option("g-file", g_file)->required();
    cmd_lextn->add_option("h-file", h_file)->required();
    cmd_lextn->add_option("--format", src.format, "input format")
        ->check(CLI::IsMember({"edgelist", "graph6"}));

    auto* cmd_triple = app.add_subcommand("triple", "minimum toll-dominating triple");
    int tnh = 0;
    cmd_triple->add_option("g-file", g_file)->required();
    cmd_triple->add_option("--tnh", tnh, "toll number of the H factor")->required();
    cmd_triple->add_option("--format", src.format, "input format")
        ->check(CLI::IsMember({"edgelist", "graph6"}));

    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite_arg;
    int max_n = -1, jobs = 1;
    cmd_verify->add_option("suite", suite_arg)->required();
    cmd_verify->add_option("--max-n", max_n, "factor size limit");
    cmd_verify->add_option("--jobs", jobs, "worker count (default 1, reproducible)");

    // let --output (and other app-level flags) appear after the subcommand
    for (CLI::App* sub : {cmd_interval, cmd_closure, cmd_hull, cmd_convex, cmd_tn, cmd_th,
                          cmd_gn, cmd_ext, cmd_product, cmd_lextn, cmd_triple, cmd_verify})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    OutputMode mode = output == "csv"       ? OutputMode::csv
                      : output == "records" ? OutputMode::records
                                            : OutputMode::text;

    try {
        if (cmd_interval->parsed()) {
            Graph g = src.load();
            VertexSet s = interval_kind == "toll" ? toll_interval(g, iu, iv)
                                                  : geodesic_interval(g, iu, iv);
            print_kv(mode, {{"interval", s.to_string()}});
            return 0;
        }
        if (cmd_closure->parsed()) {
            Graph g = src.load();
            print_kv(mode, {{"closure", toll_closure(g, parse_set(set_arg, g.vertex_count())).to_string()}});
            return 0;
        }
        if (cmd_hull->parsed()) {
            Graph g = src.load();
            HullTrace trace = t_convex_hull(g, parse_set(set_arg, g.vertex_count()));
            std::vector<std::pair<std::string, std::string>> rows;
            for (std::size_t i = 0; i < trace.stages.size(); ++i)
                rows.emplace_back("stage" + std::to_string(i), trace.stages[i].to_string());
            rows.emplace_back("fixed", trace.fixed().to_string());
            print_kv(mode, rows);
            return 0;
        }
        if (cmd_convex->parsed()) {
            Graph g = src.load();
            bool convex = is_t_convex(g, parse_set(set_arg, g.vertex_count()),
                                      method == "closure" ? ConvexityMethod::closure
                                                          : ConvexityMethod::separator);
            print_kv(mode, {{"t-convex", convex ? "true" : "false"}});
            return 0;
        }
        if (cmd_tn->parsed() || cmd_th->parsed() || cmd_gn->parsed()) {
            Graph g = src.load();
            SearchOptions opt;
            opt.exact_ceiling = ceiling;
            if (max_witnesses > 0) opt.max_witnesses = max_witnesses;
            InvariantResult r = cmd_tn->parsed()   ? toll_number(g, opt)
                                : cmd_th->parsed() ? t_hull_number(g, opt)
                                                   : geodetic_number(g, opt);
            std::vector<std::pair<std::string, std::string>> rows;
            rows.emplace_back("value", std::to_string(r.value));
            rows.emplace_back("exhaustive", r.exhaustive ? "true" : "false");
            for (std::size_t i = 0; i < r.witnesses.size(); ++i)
                rows.emplace_back("witness" + std::to_string(i), r.witnesses[i].to_string());
            print_kv(mode, rows);
            return 0;
        }
        if (cmd_ext->parsed()) {
            Graph g = src.load();
            print_kv(mode, {{"extreme", extreme_vertices(g).to_string()}});
            return 0;
        }
        if (cmd_product->parsed()) {
            Graph g = load_file(g_file, src.format);
            Graph h = load_file(h_file, src.format);
            ProductGraph p = product(g, h, prod_kind == "cartesian"
                                               ? ProductKind::cartesian
                                               : ProductKind::lexicographic);
            std::cout << (to_format == "graph6" ? serialize_graph6(p.graph) + "\n"
                                                : serialize_edgelist(p.graph));
            return 0;
        }
        if (cmd_lextn->parsed()) {
            Graph g = load_file(g_file, src.format);
            Graph h = load_file(h_file, src.format);
            LexTollNumber r = lex_toll_number(g, h);
            std::vector<std::pair<std::string, std::string>> rows;
            if (r.exact) {
                rows.emplace_back("tn", std::to_string(r.value()));
            } else {
                rows.emplace_back("tn-lower", std::to_string(r.lower));
                rows.emplace_back("tn-upper", std::to_string(r.upper));
            }
            rows.emplace_back("exact", r.exact ? "true" : "false");
            if (r.triple) {
                rows.emplace_back("A", r.triple->a.to_string());
                rows.emplace_back("B", r.triple->b.to_string());
                rows.emplace_back("C", r.triple->c.to_string());
            }
            print_kv(mode, rows);
            return 0;
        }
        if (cmd_triple->parsed()) {
            Graph g = load_file(g_file, src.format);
            TripleSearchResult r = min_toll_dominating_cost(g, tnh);
            print_kv(mode, {{"cost", std::to_string(r.cost)},
                            {"A", r.triple.a.to_string()},
                            {"B", r.triple.b.to_string()},
                            {"C", r.triple.c.to_string()}});
            return 0;
        }
        if (cmd_verify->parsed()) {
            auto id = suite_from_name(suite_arg);
            if (!id) {
                std::string all;
                for (auto name : suite_names()) all += " " + std::string(name);
                throw std::invalid_argument("unknown suite \"" + suite_arg +
                                            "\"; available:" + all);
            }
            SuiteLimits limits;
            if (max_n > 0) limits.max_n = max_n;
            limits.jobs = jobs;
            bool stream = mode != OutputMode::text;
            StreamSink sink(mode);
            if (stream && mode == OutputMode::csv)
                std::cout << "type,suite,instance,expected,actual,witness\n";
            VerificationReport report =
                run_suite(*id, limits, stream ? &sink : nullptr);
            return print_report(report, mode, stream);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
