// pinnacle: command-line front end for the pinnacle-set library.
//
// Vertices are 1-based on the command line and in graph files. Labelings are
// comma-separated label lists in vertex order.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <iostream>

#include "CLI11.hpp"
#include "pinnacle/pinnacle.hpp"

using namespace pinnacle;
using nlohmann::json;

namespace {

/// Bad flag combination (exit code 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json to_json(const PinnacleSet& s) { return s.labels(); }

json to_json(const std::vector<PinnacleSet>& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(to_json(s));
    return out;
}

json vertices_json(const VertexSet& s) {
    json out = json::array();
    for (Vertex v : s) out.push_back(v + 1);
    return out;
}

std::string big(const BigInt& x) { return x.str(); }

struct Common {
    bool as_json = false;
    bool no_timing = false;
    int max_n = 0;
};

struct GraphArgs {
    std::string file;
    std::string family;
    int n = 0;
    int m = 0;
};

void add_graph_options(CLI::App* sub, GraphArgs& g) {
    sub->add_option("-g,--graph", g.file, "graph file (\"n m\" header, 1-based edges)");
    sub->add_option("-f,--family", g.family, "named family instead of a file")
        ->check(CLI::IsMember({"cycle", "path", "complete", "bipartite", "petersen", "empty"}));
    sub->add_option("-n,--n", g.n, "family order (bipartite: smaller side)");
    sub->add_option("-m,--m", g.m, "bipartite larger side");
}

std::optional<Family> family_of(const GraphArgs& a) {
    if (a.family == "cycle") return CycleFamily{a.n};
    if (a.family == "path") return PathFamily{a.n};
    if (a.family == "complete") return CompleteFamily{a.n};
    if (a.family == "bipartite") return CompleteBipartiteFamily{a.m, a.n};
    return std::nullopt;
}

Graph load_graph(const GraphArgs& a) {
    if (a.file.empty() == a.family.empty()) throw UsageError("give exactly one of --graph or --family");
    if (!a.file.empty()) return parse_graph_file(a.file);
    if (a.family == "petersen") return petersen_graph();
    if (a.family == "empty") return empty_graph(a.n);
    return family_graph(*family_of(a));
}

json graph_inputs(const GraphArgs& a) {
    json j;
    if (!a.file.empty()) j["graph"] = a.file;
    if (!a.family.empty()) {
        j["family"] = a.family;
        j["n"] = a.n;
        if (a.family == "bipartite") j["m"] = a.m;
    }
    return j;
}

json otp_json(const OrderedTreePartition& t, const Labeling& lam) {
    json trees = json::array();
    const auto sizes = t.tree_sizes();
    for (std::size_t i = 0; i < t.roots.size(); ++i)
        trees.push_back({{"root", t.roots[i] + 1}, {"root_label", lam[t.roots[i]]}, {"size", sizes[i]}});
    json parents = json::array();
    for (Vertex p : t.parent) parents.push_back(p < 0 ? 0 : p + 1);
    return {{"trees", trees}, {"parent", parents}, {"prefix_sums", t.prefix_sums()}};
}

void emit(const Common& c, RunReport& r) {
    if (c.no_timing) r.elapsed_ms = 0.0;
    if (c.as_json) {
        json j = r.to_json();
        if (c.no_timing) j.erase("elapsed_ms");
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << r.to_text();
        if (!c.no_timing) std::cout << "elapsed_ms: " << r.elapsed_ms << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pinnacle sets of graphs: enumerate, realize, transform, count."};
    app.require_subcommand(1);
    Common common;
    try {
        common.max_n = default_max_n();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    app.add_flag("--json", common.as_json, "machine-readable JSON output");
    app.add_flag("--no-timing", common.no_timing, "omit elapsed time for reproducible output");
    app.add_option("--max-n", common.max_n, "brute-force guard (default PINNACLE_MAX_N or 10)")
        ->check(CLI::PositiveNumber);

    // pinnacles
    GraphArgs pg;
    std::string p_lab;
    auto* pin = app.add_subcommand("pinnacles", "pinnacle set of a labeled graph");
    add_graph_options(pin, pg);
    pin->add_option("-l,--labeling", p_lab, "labels in vertex order")->required();

    // enumerate
    GraphArgs eg;
    std::optional<int> e_k;
    bool e_counts = false;
    auto* en = app.add_subcommand("enumerate", "all pinnacle sets by brute force");
    add_graph_options(en, eg);
    en->add_option("-k,--k", e_k, "only sets of this size");
    en->add_flag("--counts", e_counts, "also count labelings per set");

    // realize
    GraphArgs rg;
    std::string r_set, r_shape;
    std::optional<int> r_top, r_kstart;
    auto* re = app.add_subcommand("realize", "labeling with a prescribed pinnacle set");
    add_graph_options(re, rg);
    re->add_option("-s,--set", r_set, "target pinnacle set, e.g. 4,7,10");
    re->add_option("--shape", r_shape, "build a graph for --set: forest or tree")
        ->check(CLI::IsMember({"forest", "tree"}));
    re->add_option("--top", r_top, "realize M_{n,k} for this k via a basic labeling");
    re->add_option("--k-start", r_kstart, "complete bipartite: smallest pinnacle");

    // transform
    GraphArgs tg;
    std::string t_lab, t_op, t_target;
    int t_p = 0;
    auto* tr = app.add_subcommand("transform", "rewrite a labeling's pinnacle set");
    add_graph_options(tr, tg);
    tr->add_option("-l,--labeling", t_lab, "labels in vertex order")->required();
    tr->add_option("--op", t_op, "operation")
        ->required()
        ->check(CLI::IsMember({"swap-up", "swap-down", "dominance", "drop-min", "otp"}));
    tr->add_option("-p,--p", t_p, "pinnacle label for swaps");
    tr->add_option("-t,--target", t_target, "dominating target set");

    // poset
    GraphArgs og;
    int o_k = 0;
    bool o_dot = false, o_oracle = false;
    auto* po = app.add_subcommand("poset", "dominance poset of size-k pinnacle sets");
    add_graph_options(po, og);
    po->add_option("-k,--k", o_k, "set size")->required();
    po->add_flag("--dot", o_dot, "print the Hasse diagram in DOT and nothing else");
    po->add_flag("--oracle", o_oracle, "use brute force even for a named family");

    // count
    std::string c_what, c_bottom;
    int c_n = 0, c_m = 0;
    std::optional<int> c_k;
    bool c_csv = false;
    int c_max = 0;
    auto* co = app.add_subcommand("count", "closed-form counts and tables");
    co->add_option("what", c_what, "cycle | path | bipartite | cycle-labelings | bottom | table-cycle | table-path")
        ->required()
        ->check(CLI::IsMember({"cycle", "path", "bipartite", "cycle-labelings", "bottom", "table-cycle", "table-path"}));
    co->add_option("-n,--n", c_n, "order (bipartite: smaller side)");
    co->add_option("-m,--m", c_m, "bipartite larger side");
    co->add_option("-k,--k", c_k, "set size (omit for totals)");
    co->add_option("-b,--bottom", c_bottom, "bottom pinnacle set");
    co->add_option("--max", c_max, "last table row");
    co->add_flag("--csv", c_csv, "tables as CSV");

    // reduce
    GraphArgs dg;
    int d_k = 0;
    std::string d_to;
    bool d_solve = false;
    auto* rd = app.add_subcommand("reduce", "independent set -> pinnacle decision instance");
    add_graph_options(rd, dg);
    rd->add_option("-k,--k", d_k, "independent set size")->required();
    rd->add_option("--to", d_to, "size or existence")->required()->check(CLI::IsMember({"size", "existence"}));
    rd->add_flag("--solve", d_solve, "answer the reduced instance by brute force");

    // verify
    GraphArgs vg;
    std::string v_set, v_lab, v_witness;
    std::optional<int> v_k;
    auto* ve = app.add_subcommand("verify", "check a pinnacle certificate");
    add_graph_options(ve, vg);
    ve->add_option("-s,--set", v_set, "claimed pinnacle set (with --labeling)");
    ve->add_option("-l,--labeling", v_lab, "labeling certificate");
    ve->add_option("-k,--k", v_k, "size bound (with --witness)");
    ve->add_option("-w,--witness", v_witness, "1-based independent seed set");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    const auto t0 = std::chrono::steady_clock::now();
    RunReport rep;
    try {
        if (*pin) {
            rep.command = "pinnacles";
            const Graph g = load_graph(pg);
            const Labeling lam = parse_labeling(p_lab);
            rep.inputs = graph_inputs(pg);
            rep.inputs["labeling"] = lam.labels();
            const PinnacleSet s = pinnacles(g, lam);
            rep.result = {{"pinnacles", to_json(s)}, {"vertices", vertices_json(vertices_with_labels(lam, s))}};
        } else if (*en) {
            rep.command = "enumerate";
            const Graph g = load_graph(eg);
            rep.inputs = graph_inputs(eg);
            rep.inputs["max_n"] = common.max_n;
            const auto cat = enumerate_pinnacle_sets(g, common.max_n);
            json sizes = json::object();
            for (const auto& [k, sets] : cat.by_size)
                if (!e_k || *e_k == k) sizes[std::to_string(k)] = to_json(sets);
            rep.result = {{"total", cat.total}, {"by_size", sizes}};
            if (e_counts) {
                json counts = json::array();
                for (const auto& [s, c] : labeling_histogram(g, common.max_n))
                    if (!e_k || static_cast<int>(s.size()) == *e_k) counts.push_back({{"set", to_json(s)}, {"labelings", c}});
                rep.result["labelings"] = counts;
            }
        } else if (*re) {
            rep.command = "realize";
            if (!r_shape.empty()) {
                if (r_set.empty()) throw UsageError("--shape needs --set");
                const PinnacleSet s = parse_pinnacle_set(r_set);
                rep.inputs = {{"set", to_json(s)}, {"shape", r_shape}};
                const auto inst = realize_any_set(s, r_shape == "tree" ? Shape::tree : Shape::forest);
                rep.result = {{"graph", serialize_graph(inst.graph)},
                              {"labeling", inst.labeling.labels()},
                              {"pinnacles", to_json(pinnacles(inst.graph, inst.labeling))}};
            } else {
                const Graph g = load_graph(rg);
                rep.inputs = graph_inputs(rg);
                std::optional<Labeling> lam;
                if (r_top) {
                    rep.inputs["top"] = *r_top;
                    lam = realize_max_set(g, *r_top);
                } else if (r_kstart) {
                    if (rg.family != "bipartite") throw UsageError("--k-start needs --family bipartite");
                    rep.inputs["k_start"] = *r_kstart;
                    lam = complete_bipartite_labeling(rg.m, rg.n, *r_kstart);
                } else {
                    if (r_set.empty()) throw UsageError("realize needs --set, --top, --k-start or --shape");
                    const PinnacleSet s = parse_pinnacle_set(r_set);
                    rep.inputs["set"] = to_json(s);
                    if (rg.family == "cycle") lam = cycle_labeling(rg.n, s);
                    else if (rg.family == "path") lam = path_labeling(rg.n, s);
                    else {
                        rep.inputs["max_n"] = common.max_n;
                        lam = find_labeling(g, s, common.max_n);
                    }
                }
                rep.result["realizable"] = lam.has_value();
                if (lam) {
                    rep.result["labeling"] = lam->labels();
                    rep.result["pinnacles"] = to_json(pinnacles(g, *lam));
                }
            }
        } else if (*tr) {
            rep.command = "transform";
            const Graph g = load_graph(tg);
            const Labeling lam = parse_labeling(t_lab);
            rep.inputs = graph_inputs(tg);
            rep.inputs["labeling"] = lam.labels();
            rep.inputs["op"] = t_op;
            rep.result["before"] = to_json(pinnacles(g, lam));
            if (t_op == "swap-up" || t_op == "swap-down") {
                if (t_p == 0) throw UsageError("--op " + t_op + " needs --p");
                rep.inputs["p"] = t_p;
                std::optional<SwapResult> r;
                if (t_op == "swap-up") r = swap_up(g, lam, t_p);
                else r = swap_down(g, lam, t_p);
                rep.result["applied"] = r.has_value();
                if (r) {
                    rep.result["labeling"] = r->labeling.labels();
                    rep.result["after"] = to_json(r->pinnacles);
                }
            } else if (t_op == "dominance") {
                if (t_target.empty()) throw UsageError("--op dominance needs --target");
                const PinnacleSet target = parse_pinnacle_set(t_target);
                rep.inputs["target"] = to_json(target);
                const auto path = dominance_path(g, lam, target);
                rep.result["labeling"] = path.labeling.labels();
                rep.result["after"] = to_json(pinnacles(g, path.labeling));
                rep.result["steps"] = to_json(path.steps);
                rep.result["swaps"] = path.steps.size();
            } else if (t_op == "drop-min") {
                const auto d = drop_min_pinnacle_trace(g, lam);
                rep.result["labeling"] = d.labeling.labels();
                rep.result["after"] = to_json(pinnacles(g, d.labeling));
                rep.result["new_root"] = d.new_root + 1;
                rep.result["otp"] = otp_json(d.otp, lam);
            } else {
                rep.result["otp"] = otp_json(otp_from_labeling(g, lam), lam);
            }
        } else if (*po) {
            rep.command = "poset";
            const Graph g = load_graph(og);
            rep.inputs = graph_inputs(og);
            rep.inputs["k"] = o_k;
            const auto fam = family_of(og);
            PosetSource src = OracleSource{common.max_n};
            if (fam && !o_oracle) src = FamilySource{*fam};
            else rep.inputs["max_n"] = common.max_n;
            const auto P = build_poset(g, o_k, src);
            if (o_dot) {
                std::cout << emit_hasse_dot(P);
                return 0;
            }
            const auto lr = lattice_report(P);
            json covers = json::array();
            for (auto [lo, up] : P.covers) covers.push_back({to_json(P.elements[lo]), to_json(P.elements[up])});
            rep.result = {{"elements", to_json(P.elements)},
                          {"covers", covers},
                          {"bottoms", to_json(bottom_elements(P))},
                          {"is_join_semilattice", lr.is_join_semilattice},
                          {"has_minimum", lr.has_minimum},
                          {"is_lattice", lr.is_lattice},
                          {"is_distributive", lr.is_distributive}};
        } else if (*co) {
            rep.command = "count";
            rep.inputs["what"] = c_what;
            if (c_what == "table-cycle" || c_what == "table-path") {
                const auto fam = c_what == "table-cycle" ? CountFamily::cycle : CountFamily::path;
                const int last = c_max ? c_max : (fam == CountFamily::cycle ? 11 : 10);
                const auto t = count_table(fam, last);
                std::cout << (c_csv ? table_csv(t) : table_text(t));
                return 0;
            }
            rep.inputs["n"] = c_n;
            if (c_k) rep.inputs["k"] = *c_k;
            BigInt value;
            if (c_what == "cycle") value = pinn_closed_form(CountFamily::cycle, c_n, c_k);
            else if (c_what == "path") value = pinn_closed_form(CountFamily::path, c_n, c_k);
            else if (c_what == "bipartite") {
                rep.inputs["m"] = c_m;
                value = pinn_complete_bipartite(c_m, c_n);
            } else if (c_what == "cycle-labelings") {
                if (!c_k) throw UsageError("cycle-labelings needs --k");
                value = count_labelings_cycle_max_set(c_n, *c_k);
            } else {
                if (c_bottom.empty()) throw UsageError("bottom needs --bottom");
                rep.inputs = {{"what", c_what}, {"bottom", to_json(parse_pinnacle_set(c_bottom))}};
                value = count_from_bottom(parse_pinnacle_set(c_bottom));
            }
            rep.result["count"] = big(value);
        } else if (*rd) {
            rep.command = "reduce";
            const Graph g = load_graph(dg);
            rep.inputs = graph_inputs(dg);
            rep.inputs["k"] = d_k;
            rep.inputs["to"] = d_to;
            const auto in = DecisionInstance::independent_set(g, d_k);
            const auto out = d_to == "size" ? reduce_to_pinnacle_size(in) : reduce_to_pinnacle_existence(in);
            rep.result["graph"] = serialize_graph(out.graph);
            rep.result["gadget"] = out.graph.order() != g.order();
            if (out.k) rep.result["k"] = *out.k;
            if (out.target_set) rep.result["target"] = to_json(*out.target_set);
            if (d_solve) {
                rep.inputs["max_n"] = common.max_n;
                const auto cat = enumerate_pinnacle_sets(out.graph, common.max_n);
                bool yes = false;
                if (out.target_set) yes = cat.contains(*out.target_set);
                else
                    for (const auto& [k, sets] : cat.by_size) yes = yes || k >= *out.k;
                rep.result["answer"] = yes;
            }
        } else if (*ve) {
            rep.command = "verify";
            const Graph g = load_graph(vg);
            rep.inputs = graph_inputs(vg);
            if (!v_lab.empty()) {
                if (v_set.empty()) throw UsageError("--labeling needs --set");
                const PinnacleSet s = parse_pinnacle_set(v_set);
                const Labeling lam = parse_labeling(v_lab);
                rep.inputs["set"] = to_json(s);
                rep.inputs["labeling"] = lam.labels();
                rep.result["valid"] = verify_existence_certificate(g, s, lam);
            } else if (!v_witness.empty()) {
                if (!v_k) throw UsageError("--witness needs --k");
                std::vector<Vertex> w;
                for (int v : parse_int_list(v_witness)) w.push_back(v - 1);
                const VertexSet ws(w);
                rep.inputs["k"] = *v_k;
                rep.inputs["witness"] = vertices_json(ws);
                rep.result["valid"] = verify_size_certificate(g, *v_k, ws);
            } else {
                throw UsageError("verify needs --set with --labeling, or --k with --witness");
            }
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    emit(common, rep);
    return 0;
}
