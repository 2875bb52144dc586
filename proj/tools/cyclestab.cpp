// Command-line workbench over the cyclestab library: constructions,
// saturation, the stability pipeline, brute-force oracles, and grid
// verification. Exit codes: 0 ok, 2 property failure, 3 budget exceeded,
// 4 I/O failure, 5 bad parameters.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cyclestab/json_io.hpp"
#include "cyclestab/parallel.hpp"

using namespace cyclestab;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitProperty = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIo = 4;
constexpr int kExitParam = 5;

bool g_no_meta = false;

std::string now_iso8601() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

std::string render(json j) {
    if (!g_no_meta) j["meta"] = {{"tool", "cyclestab"}, {"generated_at", now_iso8601()}};
    return j.dump(2) + "\n";
}

void write_text(const std::string& path, const std::string& content) {
    if (path == "-" || path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << content;
    if (!f) throw IoError("write failed: " + path);
}

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Graph read_graph6(const std::string& path) {
    std::istringstream in(read_all(path));
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) {
            try {
                return graph6_decode(line);
            } catch (const FormatError& e) {
                throw IoError("bad graph6 in " + path + ": " + e.what());
            }
        }
    }
    throw IoError("no graph6 line found in " + path);
}

json read_json(const std::string& path) {
    try {
        return json::parse(read_all(path));
    } catch (const json::exception& e) {
        throw IoError("bad JSON in " + path + ": " + e.what());
    }
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    if (out.empty()) throw ParamError("empty list: '" + s + "'");
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(parse_rational(item));
    }
    if (out.empty()) throw ParamError("empty list: '" + s + "'");
    return out;
}

// ---- construct ----

struct ConstructOpts {
    std::string family;
    int k = 2;
    std::string alpha = "1/4";
    int n = 0;
    std::string sizes;
    std::string out = "-";
    std::string layout_out;
};

int cmd_construct(const ConstructOpts& o) {
    Graph g;
    std::string layout_doc;
    if (o.family == "gka") {
        GkaParams p{o.k, parse_rational(o.alpha), o.n};
        auto [graph, layout] = gka_minimal(p);
        g = std::move(graph);
        layout_doc = render(layout_to_json(layout, p));
    } else if (o.family == "turan") {
        g = turan_bipartite(o.n);
    } else if (o.family == "blowup") {
        auto sizes = parse_int_list(o.sizes);
        g = blowup_cycle(static_cast<int>(sizes.size()), sizes);
    } else {
        throw ParamError("unknown family: " + o.family + " (gka|turan|blowup)");
    }
    write_text(o.out, graph6_encode(g) + "\n");
    if (!o.layout_out.empty()) {
        if (layout_doc.empty()) throw ParamError("--layout-out only applies to --family gka");
        write_text(o.layout_out, layout_doc);
    }
    return kExitOk;
}

// ---- saturate ----

struct SaturateOpts {
    std::string in;
    int len = 5;
    std::string policy = "lex";
    std::uint64_t seed = 0;
    std::string out = "-";
    std::string trace_out;
};

int cmd_saturate(const SaturateOpts& o) {
    Graph g = read_graph6(o.in);
    SaturationPolicy policy;
    if (o.policy == "lex") {
        policy = SaturationPolicy::Lex;
    } else if (o.policy == "random") {
        policy = SaturationPolicy::Random;
    } else {
        throw ParamError("unknown policy: " + o.policy);
    }
    try {
        auto [sat, trace] = saturate(g, o.len, policy, o.seed);
        write_text(o.out, graph6_encode(sat) + "\n");
        if (!o.trace_out.empty()) write_text(o.trace_out, render(trace_to_json(trace, o.len)));
        return kExitOk;
    } catch (const NotFreeError& e) {
        std::cerr << e.what() << "; witness cycle:";
        for (int v : e.witness.vertices) std::cerr << ' ' << v;
        std::cerr << "\n";
        return kExitProperty;
    }
}

// ---- decompose ----

struct DecomposeOpts {
    std::string in;
    int k = 2;
    std::string report_out = "-";
    std::string csv_out;
};

int cmd_decompose(const DecomposeOpts& o) {
    Graph g = read_graph6(o.in);
    StabilityReport r;
    try {
        r = decompose(g, o.k);
    } catch (const NotFreeError& e) {
        std::cerr << e.what() << "; witness cycle:";
        for (int v : e.witness.vertices) std::cerr << ' ' << v;
        std::cerr << "\n";
        return kExitProperty;
    }
    write_text(o.report_out, render(report_to_json(r)));
    if (!o.csv_out.empty()) {
        write_text(o.csv_out, stability_csv_header() + "\n" + stability_csv_row(r) + "\n");
    }
    return r.status == DecomposeStatus::Verified ? kExitOk : kExitProperty;
}

// ---- oracle ----

struct OracleExOpts {
    int n = 8;
    int len = 5;
    int budget = kDefaultExtremalBudget;
    std::string out = "-";
};

int cmd_oracle_ex(const OracleExOpts& o) {
    ExtremalResult r = max_edges_cycle_free(o.n, o.len, o.budget);
    write_text(o.out, render(extremal_to_json(r)));
    return kExitOk;
}

struct OracleMaxbipOpts {
    std::string in;
    int budget = kDefaultInducedBudget;
    std::string out = "-";
};

int cmd_oracle_maxbip(const OracleMaxbipOpts& o) {
    Graph g = read_graph6(o.in);
    InducedBipResult r = max_induced_complete_bipartite(g, o.budget);
    json j;
    j["report_version"] = kReportVersion;
    j["kind"] = "max_induced_complete_bipartite";
    j["n"] = g.order();
    j["total"] = r.total;
    j["left"] = r.parts.left.to_vector();
    j["right"] = r.parts.right.to_vector();
    write_text(o.out, render(j));
    return kExitOk;
}

struct OracleClasswiseOpts {
    std::string in;
    std::string layout;
    std::string out = "-";
};

int cmd_oracle_classwise(const OracleClasswiseOpts& o) {
    Graph g = read_graph6(o.in);
    GkaParams p;
    GkaLayout layout = layout_from_json(read_json(o.layout), &p);
    ClasswiseSelection r = max_classwise_complete_bipartite(g, layout);
    json j;
    j["report_version"] = kReportVersion;
    j["kind"] = "max_classwise_complete_bipartite";
    j["n"] = g.order();
    j["total"] = r.total;
    j["class_side"] = r.class_side;
    j["z_selected"] = r.z_selected;
    write_text(o.out, render(j));
    return kExitOk;
}

struct OracleConjectureOpts {
    int k = 2;
    int n = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    bool positive_parts = false;
    bool exhaustive = false;
    std::string out = "-";
    std::string csv_out;
};

int cmd_oracle_conjecture(const OracleConjectureOpts& o) {
    ConjectureScanConfig cfg;
    cfg.k = o.k;
    cfg.n = o.n;
    cfg.samples = o.samples;
    cfg.seed = o.seed;
    cfg.allow_empty_classes = !o.positive_parts;
    cfg.exhaustive = o.exhaustive;
    ConjectureScanResult r = conjecture_scan(cfg);
    write_text(o.out, render(scan_to_json(r)));
    if (!o.csv_out.empty()) {
        std::string csv = conjecture_csv_header() + "\n";
        for (const auto& rec : r.records) csv += conjecture_csv_row(rec) + "\n";
        write_text(o.csv_out, csv);
    }
    bool flagged = false;
    for (const auto& rec : r.records) {
        if (rec.status == "not_dominated") {
            std::cerr << "conjecture counterexample candidate: seed " << rec.seed << " graph "
                      << rec.graph6 << "\n";
            flagged = true;
        }
    }
    return flagged ? kExitProperty : kExitOk;
}

// ---- verify ----

struct VerifyOpts {
    std::string ks = "2";
    std::string alphas = "1/4,1/2";
    std::string ns = "144,200";
    std::string csv_out = "-";
};

struct VerifyRow {
    int k;
    Rational alpha;
    int n;
    bool feasible = true;
    int t = 0;
    long long e_min = 0;
    bool min_free = false;
    long long e_sat = 0;
    bool sat_free = false;
    bool maximal = false;
    long long edge_threshold = 0;
    bool edge_applicable = false;
    bool edge_ok = false;
    int classwise = 0;
    long long classwise_threshold = 0;
    bool classwise_ok = false;
    std::string post_sat_clauses;
    bool pass = false;
};

VerifyRow verify_point(int k, const Rational& alpha, int n) {
    VerifyRow row;
    row.k = k;
    row.alpha = alpha;
    row.n = n;
    GkaParams p{k, alpha, n};
    GkaLayout layout;
    Graph g;
    try {
        auto built = gka_minimal(p);
        g = std::move(built.first);
        layout = std::move(built.second);
    } catch (const ParamError&) {
        row.feasible = false;
        return row;
    }
    row.t = layout.t;
    row.e_min = g.edge_count();
    int len = 2 * k + 1;
    row.min_free = is_cycle_free(g, len);

    auto [sat, trace] = saturate(g, len);
    row.e_sat = sat.edge_count();
    row.sat_free = is_cycle_free(sat, len);
    row.maximal = true;
    for (int u = 0; u < n && row.maximal; ++u) {
        for (int v = u + 1; v < n && row.maximal; ++v) {
            if (!sat.adjacent(u, v) && !creates_cycle_on_addition(sat, u, v, len)) {
                row.maximal = false;
            }
        }
    }

    // Family edge lower bound with the irrational term over-approximated:
    // e >= n^2/4 - ceil(sqrt(4 k alpha n^3)).
    long long xbar = ceil_sqrt_ratio(4LL * k * alpha.num * n * n * n, alpha.den);
    row.edge_threshold = (static_cast<long long>(n) * n - 4 * xbar) / 4;
    row.edge_applicable = static_cast<long long>(n) * alpha.num >= 36LL * k * alpha.den;
    row.edge_ok = 4 * row.e_sat >= static_cast<long long>(n) * n - 4 * xbar;

    // Class-structure size bound on the minimal member (twins intact):
    // classwise <= (1 - alpha/4) n.
    ClasswiseSelection cw = max_classwise_complete_bipartite(g, layout);
    row.classwise = cw.total;
    long long q4 = 4 * alpha.den;
    row.classwise_threshold = (q4 - alpha.num) * n / q4;
    row.classwise_ok = static_cast<long long>(cw.total) * q4 <= (q4 - alpha.num) * n;

    MembershipReport mem = verify_membership(sat, layout, p);
    std::string clauses;
    const char* names[5] = {"i", "ii", "iii", "iv", "v"};
    for (int i = 0; i < 5; ++i) {
        if (mem.clause_ok[i]) {
            if (!clauses.empty()) clauses += ' ';
            clauses += names[i];
        }
    }
    row.post_sat_clauses = clauses;

    row.pass = row.min_free && row.sat_free && row.maximal && row.classwise_ok &&
               (row.edge_ok || !row.edge_applicable);
    return row;
}

int cmd_verify(const VerifyOpts& o) {
    std::vector<std::tuple<int, Rational, int>> grid;
    for (int k : parse_int_list(o.ks)) {
        for (const Rational& a : parse_rational_list(o.alphas)) {
            for (int n : parse_int_list(o.ns)) grid.emplace_back(k, a, n);
        }
    }
    auto rows = parallel_map(grid, [](const std::tuple<int, Rational, int>& pt) {
        return verify_point(std::get<0>(pt), std::get<1>(pt), std::get<2>(pt));
    });

    std::ostringstream csv;
    csv << "k,alpha,n,feasible,t,e_minimal,minimal_free,e_saturated,saturated_free,maximal,"
           "edge_bound_threshold,edge_bound_applicable,edge_bound_ok,classwise_size,"
           "classwise_threshold,classwise_ok,post_sat_clauses,pass\n";
    bool all_pass = true;
    for (const auto& r : rows) {
        csv << r.k << ',' << r.alpha.str() << ',' << r.n << ',' << (r.feasible ? 1 : 0) << ','
            << r.t << ',' << r.e_min << ',' << (r.min_free ? 1 : 0) << ',' << r.e_sat << ','
            << (r.sat_free ? 1 : 0) << ',' << (r.maximal ? 1 : 0) << ',' << r.edge_threshold
            << ',' << (r.edge_applicable ? 1 : 0) << ',' << (r.edge_ok ? 1 : 0) << ','
            << r.classwise << ',' << r.classwise_threshold << ',' << (r.classwise_ok ? 1 : 0)
            << ',' << '"' << r.post_sat_clauses << '"' << ',' << (r.pass ? 1 : 0) << '\n';
        if (r.feasible && !r.pass) all_pass = false;
    }
    write_text(o.csv_out, csv.str());
    return all_pass ? kExitOk : kExitProperty;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for maximal odd-cycle-free graph stability experiments"};
    app.require_subcommand(1);
    app.add_flag("--no-meta", g_no_meta, "omit the meta object from JSON outputs");

    ConstructOpts c;
    auto* construct = app.add_subcommand("construct", "emit a graph family member as graph6");
    construct->add_option("--family", c.family, "gka | turan | blowup")->required();
    construct->add_option("--k", c.k, "cycle parameter k (C_{2k+1})");
    construct->add_option("--alpha", c.alpha, "rational alpha, e.g. 1/4");
    construct->add_option("--n", c.n, "vertex count");
    construct->add_option("--sizes", c.sizes, "blowup class sizes, e.g. 2,1,1,1,1");
    construct->add_option("--out", c.out, "graph6 output path or -");
    construct->add_option("--layout-out", c.layout_out, "JSON layout sidecar path (gka)");

    SaturateOpts s;
    auto* sat = app.add_subcommand("saturate", "add edges until maximal C_len-free");
    sat->add_option("--in", s.in, "input graph6 path or -")->required();
    sat->add_option("--len", s.len, "forbidden cycle length")->required();
    sat->add_option("--policy", s.policy, "lex | random");
    sat->add_option("--seed", s.seed, "seed for the random policy");
    sat->add_option("--out", s.out, "graph6 output path or -");
    sat->add_option("--trace-out", s.trace_out, "JSON trace path");

    DecomposeOpts d;
    auto* dec = app.add_subcommand("decompose", "run the stability pipeline");
    dec->add_option("--in", d.in, "input graph6 path or -")->required();
    dec->add_option("--k", d.k, "cycle parameter k")->required();
    dec->add_option("--report-out", d.report_out, "JSON report path or -");
    dec->add_option("--csv-out", d.csv_out, "CSV row path");

    auto* oracle = app.add_subcommand("oracle", "brute-force reference computations");
    oracle->require_subcommand(1);

    OracleExOpts oe;
    auto* ex = oracle->add_subcommand("ex", "exact ex(n, C_len) with witnesses");
    ex->add_option("--n", oe.n, "vertex count")->required();
    ex->add_option("--len", oe.len, "forbidden cycle length")->required();
    ex->add_option("--budget", oe.budget, "exhaustive budget");
    ex->add_option("--out", oe.out, "JSON output path or -");

    OracleMaxbipOpts om;
    auto* maxbip = oracle->add_subcommand("maxbip", "exact max induced complete bipartite");
    maxbip->add_option("--in", om.in, "input graph6 path or -")->required();
    maxbip->add_option("--budget", om.budget, "exhaustive budget");
    maxbip->add_option("--out", om.out, "JSON output path or -");

    OracleClasswiseOpts oc;
    auto* cw = oracle->add_subcommand("classwise", "classwise max over a gka layout");
    cw->add_option("--in", oc.in, "input graph6 path or -")->required();
    cw->add_option("--layout", oc.layout, "layout JSON path")->required();
    cw->add_option("--out", oc.out, "JSON output path or -");

    OracleConjectureOpts oj;
    auto* conj = oracle->add_subcommand("conjecture", "blowup-domination scanner");
    conj->add_option("--k", oj.k, "cycle parameter k")->required();
    conj->add_option("--n", oj.n, "vertex count")->required();
    conj->add_option("--samples", oj.samples, "number of sampled maximal graphs");
    conj->add_option("--seed", oj.seed, "base seed");
    conj->add_flag("--positive-parts", oj.positive_parts,
                   "require every blowup class nonempty");
    conj->add_flag("--exhaustive", oj.exhaustive, "enumerate all maximal graphs (n <= 8)");
    conj->add_option("--out", oj.out, "JSON output path or -");
    conj->add_option("--csv-out", oj.csv_out, "CSV path");

    VerifyOpts v;
    auto* ver = app.add_subcommand("verify", "construct/saturate/bound grid verification");
    ver->add_option("--k", v.ks, "comma list of k values");
    ver->add_option("--alpha", v.alphas, "comma list of rationals");
    ver->add_option("--n", v.ns, "comma list of vertex counts");
    ver->add_option("--csv-out", v.csv_out, "CSV output path or -");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParam;
    }

    try {
        if (*construct) return cmd_construct(c);
        if (*sat) return cmd_saturate(s);
        if (*dec) return cmd_decompose(d);
        if (*oracle) {
            if (*ex) return cmd_oracle_ex(oe);
            if (*maxbip) return cmd_oracle_maxbip(om);
            if (*cw) return cmd_oracle_classwise(oc);
            if (*conj) return cmd_oracle_conjecture(oj);
        }
        if (*ver) return cmd_verify(v);
        throw ParamError("no subcommand");
    } catch (const BudgetError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitBudget;
    } catch (const IoError& e) {
        std::cerr << "io: " << e.what() << "\n";
        return kExitIo;
    } catch (const NotFreeError& e) {
        std::cerr << "property: " << e.what() << "\n";
        return kExitProperty;
    } catch (const PropertyError& e) {
        std::cerr << "property: " << e.what() << "\n";
        return kExitProperty;
    } catch (const ParamError& e) {
        std::cerr << "parameter: " << e.what() << "\n";
        return kExitParam;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParam;
    }
}
