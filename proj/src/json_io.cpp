#include "cyclestab/json_io.hpp"

#include <sstream>

namespace cyclestab {

using nlohmann::json;

namespace {

json bitset_to_json(const Bitset& b) { return json(b.to_vector()); }

json edge_to_json(const std::pair<int, int>& e) { return json::array({e.first, e.second}); }

}  // namespace

json layout_to_json(const GkaLayout& layout, const GkaParams& p) {
    json j;
    j["report_version"] = kReportVersion;
    j["kind"] = "gka_layout";
    j["k"] = p.k;
    j["alpha"] = p.alpha.str();
    j["n"] = layout.n;
    j["t"] = layout.t;
    j["block_size"] = layout.block_size;
    json xs = json::array(), ys = json::array(), zs = json::array();
    for (const auto& c : layout.x_classes) xs.push_back(bitset_to_json(c));
    for (const auto& c : layout.y_classes) ys.push_back(bitset_to_json(c));
    for (const auto& z : layout.z_paths) zs.push_back(json(z));
    j["x_classes"] = std::move(xs);
    j["y_classes"] = std::move(ys);
    j["z_paths"] = std::move(zs);
    return j;
}

GkaLayout layout_from_json(const json& j, GkaParams* params_out) {
    if (!j.contains("kind") || j["kind"] != "gka_layout") {
        throw FormatError("layout_from_json: not a gka_layout document", 0);
    }
    GkaLayout layout;
    layout.n = j.at("n").get<int>();
    layout.k = j.at("k").get<int>();
    layout.t = j.at("t").get<int>();
    layout.block_size = j.at("block_size").get<int>();
    for (const auto& arr : j.at("x_classes")) {
        layout.x_classes.push_back(Bitset::of(layout.n, arr.get<std::vector<int>>()));
    }
    for (const auto& arr : j.at("y_classes")) {
        layout.y_classes.push_back(Bitset::of(layout.n, arr.get<std::vector<int>>()));
    }
    for (const auto& arr : j.at("z_paths")) {
        layout.z_paths.push_back(arr.get<std::vector<int>>());
    }
    if (params_out) {
        params_out->k = layout.k;
        params_out->alpha = parse_rational(j.at("alpha").get<std::string>());
        params_out->n = layout.n;
    }
    return layout;
}

json trace_to_json(const SaturationTrace& trace, int len) {
    json j;
    j["report_version"] = kReportVersion;
    j["kind"] = "saturation_trace";
    j["len"] = len;
    j["policy"] = trace.policy == SaturationPolicy::Lex ? "lex" : "random";
    if (trace.policy == SaturationPolicy::Random) j["seed"] = trace.seed;
    j["passes"] = trace.passes;
    json added = json::array();
    for (const auto& e : trace.added) added.push_back(edge_to_json(e));
    j["added"] = std::move(added);
    j["added_count"] = trace.added.size();
    json rejected = json::array();
    for (const auto& [e, w] : trace.rejected) {
        rejected.push_back(json{{"edge", edge_to_json(e)}, {"witness", w.vertices}});
    }
    j["rejected"] = std::move(rejected);
    j["rejected_count"] = trace.rejected.size();
    return j;
}

json report_to_json(const StabilityReport& r) {
    json j;
    j["report_version"] = kReportVersion;
    j["kind"] = "stability_report";
    j["status"] = to_string(r.status);
    j["n"] = r.n;
    j["k"] = r.k;
    j["edges"] = r.edges;
    j["epsilon"] = {{"per_n32", r.eps_n32}, {"per_n2", r.eps_n2}};

    json peel;
    json removed = json::array();
    for (const auto& s : r.peel.trace.removed) {
        removed.push_back(json::array({s.vertex, s.degree, s.order}));
    }
    peel["removed"] = std::move(removed);
    peel["removed_count"] = r.peel.trace.removed.size();
    peel["thresholds"] = r.peel.trace.thresholds;
    peel["survivor_order"] = r.peel.survivor.order();
    peel["survivor_edges"] = r.peel.survivor.edge_count();
    peel["survivor_min_degree"] = r.peel.survivor_min_degree;
    j["peel"] = std::move(peel);

    j["bipartition"] = {{"source", r.bipartition_source},
                        {"c2k_status", r.c2k_status},
                        {"c2k_agrees_with_bfs", r.c2k_agrees}};
    if (r.odd_walk) j["odd_walk"] = r.odd_walk->vertices;

    json ext;
    json steps = json::array();
    for (const auto& s : r.extraction.steps) {
        long long si = s.deleted_x_side ? s.x_i.count() : s.y_i.count();
        steps.push_back(json{{"non_edge", edge_to_json(s.non_edge)},
                             {"path", s.path.vertices},
                             {"x_i", bitset_to_json(s.x_i)},
                             {"y_i", bitset_to_json(s.y_i)},
                             {"deleted_side", s.deleted_x_side ? "x" : "y"},
                             {"s_i_size", si},
                             {"non_edges_between", s.non_edges_between_xi_yi},
                             {"si_sq_over_16k2",
                              static_cast<double>(si) * si / (16.0 * r.k * r.k)}});
    }
    ext["steps"] = std::move(steps);
    ext["step_count"] = r.extraction.steps.size();
    ext["sum_s_i"] = r.extraction.sum_si;
    if (r.extraction.stuck) {
        ext["stuck_non_edge"] = edge_to_json(r.extraction.stuck->non_edge);
    } else {
        ext["stuck_non_edge"] = nullptr;
    }
    j["extraction"] = std::move(ext);

    j["final"] = {{"order", r.final_order},
                  {"left", bitset_to_json(r.final_parts.left)},
                  {"right", bitset_to_json(r.final_parts.right)},
                  {"verified", r.final_verified}};

    json bounds = json::array();
    for (const auto& b : r.bounds) {
        bounds.push_back(json{{"name", b.name},
                              {"measured", b.measured},
                              {"bound", b.bound},
                              {"satisfied", b.satisfied}});
    }
    j["bounds"] = std::move(bounds);
    return j;
}

json extremal_to_json(const ExtremalResult& r) {
    json j;
    j["report_version"] = kReportVersion;
    j["kind"] = "extremal_result";
    j["n"] = r.n;
    j["len"] = r.len;
    j["max_edges"] = r.max_edges;
    j["witnesses"] = r.witnesses_g6;
    j["witness_count"] = r.witnesses_g6.size();
    j["maximal_graphs_seen"] = r.maximal_graphs_seen;
    return j;
}

json scan_to_json(const ConjectureScanResult& r) {
    json j;
    j["report_version"] = kReportVersion;
    j["kind"] = "conjecture_scan";
    j["k"] = r.cfg.k;
    j["n"] = r.cfg.n;
    j["samples"] = r.cfg.samples;
    j["seed"] = r.cfg.seed;
    j["mode"] = r.cfg.exhaustive ? "exhaustive" : "random";
    // The conjecture says "some blowup"; this records which composition
    // reading produced the table.
    j["composition_mode"] = r.cfg.allow_empty_classes ? "allow_empty_classes" : "positive_parts";
    j["blowup_count"] = r.blowups.size();
    json recs = json::array();
    for (const auto& rec : r.records) {
        json e;
        e["graph6"] = rec.graph6;
        e["seed"] = rec.seed;
        e["n"] = rec.n;
        e["edges"] = rec.edges;
        e["d2"] = rec.d2;
        e["bipartite"] = rec.bipartite;
        e["status"] = rec.status;
        if (rec.best_blowup) {
            e["best_blowup"] = {{"sizes", rec.best_blowup->sizes},
                                {"edges", rec.best_blowup->edges},
                                {"d2", rec.best_blowup->d2}};
        } else {
            e["best_blowup"] = nullptr;
        }
        recs.push_back(std::move(e));
    }
    j["records"] = std::move(recs);
    return j;
}

std::string stability_csv_header() {
    return "n,k,edges,eps_per_n32,eps_per_n2,status,removed,survivor_order,survivor_edges,"
           "survivor_min_degree,c2k_status,c2k_agrees,steps,sum_s_i,final_order,"
           "final_verified";
}

std::string stability_csv_row(const StabilityReport& r) {
    std::ostringstream os;
    os << r.n << ',' << r.k << ',' << r.edges << ',' << r.eps_n32 << ',' << r.eps_n2 << ','
       << to_string(r.status) << ',' << r.peel.trace.removed.size() << ','
       << r.peel.survivor.order() << ',' << r.peel.survivor.edge_count() << ','
       << r.peel.survivor_min_degree << ',' << r.c2k_status << ','
       << (r.c2k_agrees ? 1 : 0) << ',' << r.extraction.steps.size() << ','
       << r.extraction.sum_si << ',' << r.final_order << ',' << (r.final_verified ? 1 : 0);
    return os.str();
}

std::string conjecture_csv_header() {
    return "seed,n,edges,d2,bipartite,status,best_sizes,best_edges,best_d2";
}

std::string conjecture_csv_row(const ConjectureRecord& r) {
    std::ostringstream os;
    os << r.seed << ',' << r.n << ',' << r.edges << ',' << r.d2 << ',' << (r.bipartite ? 1 : 0)
       << ',' << r.status << ',';
    if (r.best_blowup) {
        os << '"';
        for (std::size_t i = 0; i < r.best_blowup->sizes.size(); ++i) {
            if (i) os << ' ';
            os << r.best_blowup->sizes[i];
        }
        os << '"' << ',' << r.best_blowup->edges << ',' << r.best_blowup->d2;
    } else {
        os << ",,";
    }
    return os.str();
}

}  // namespace cyclestab
