#include "sodlab/cli_app.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "sodlab/errors.hpp"
#include "sodlab/mutation_graph.hpp"
#include "sodlab/tokens.hpp"

namespace sodlab {

namespace {

using nlohmann::json;

QuiverSpec parse_quiver(const std::string& text) {
    try {
        json j = json::parse(text);
        require(j.is_object() && j.contains("kind"), "quiver needs a \"kind\" field");
        auto kind = j.at("kind").get<std::string>();
        if (kind == "typeA") {
            require(j.contains("n"), "type A quiver needs \"n\"");
            return QuiverSpec::type_a(j.at("n").get<int>());
        }
        if (kind == "wpl2") return QuiverSpec::wpl2();
        throw invalid_input("unknown quiver kind: '" + kind + "'");
    } catch (const json::exception& e) {
        throw invalid_input(std::string("quiver is not valid JSON: ") + e.what());
    }
}

TypeACategory type_a_category(const QuiverSpec& q) {
    require(q.kind == QuiverSpec::Kind::type_a, "this command needs a type A quiver");
    return TypeACategory(q.n);
}

Side parse_side(const std::string& s) {
    if (s == "left") return Side::left;
    if (s == "right") return Side::right;
    throw invalid_input("side must be left or right, got '" + s + "'");
}

// Nonzero graded Hom dimensions as [[degree, dim], ...], degrees ascending.
json dims_json(const std::set<int>& candidates, const std::function<int(int)>& dim) {
    json arr = json::array();
    for (int k : candidates)
        if (int d = dim(k); d != 0) arr.push_back(json::array({k, d}));
    return arr;
}

json edges_json(const std::vector<GraphEdge>& edges) {
    json arr = json::array();
    for (const auto& e : edges)
        arr.push_back(json::array({e.from, e.to, "rho_" + std::to_string(e.label)}));
    return arr;
}

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

void check_thread_env() {
    const char* tv = std::getenv("SODLAB_THREADS");
    if (tv == nullptr) return;
    // Accepted for interface stability; every code path is deterministic and
    // single-threaded, so the value changes nothing observable.
    try {
        require(std::stoi(tv) >= 1, "");
    } catch (...) {
        throw invalid_input("SODLAB_THREADS must be a positive integer");
    }
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"sodlab: semi-orthogonal decompositions via finite t-stabilities"};
    app.require_subcommand(1);

    std::string quiver, from, to, object, tstab, sod, seq, factors, local, a, b, seed;
    int degree = 0, index = 0, piece = 0, radius = 0, window = 8;
    bool finest = false, want_dot = false, want_json = false, tstabs = false;

    auto add_quiver = [&](CLI::App* c) {
        c->add_option("--quiver", quiver, "quiver JSON, e.g. {\"kind\":\"typeA\",\"n\":3}")
            ->required();
    };

    auto* c_hom = app.add_subcommand("hom", "graded Hom dimensions between objects");
    add_quiver(c_hom);
    c_hom->add_option("--from", from)->required();
    c_hom->add_option("--to", to)->required();
    auto* hom_degree = c_hom->add_option("--degree", degree, "single degree to evaluate");

    auto* c_seqs = app.add_subcommand("exc-seqs", "all full exceptional sequences");
    add_quiver(c_seqs);

    auto* c_mut = app.add_subcommand("mutate", "mutate a decomposition or a sequence");
    add_quiver(c_mut);
    auto* mut_sod = c_mut->add_option("--sod", sod, "decomposition to mutate");
    auto* mut_seq = c_mut->add_option("--seq", seq, "exceptional sequence to mutate");
    mut_sod->excludes(mut_seq);
    c_mut->add_option("--index", index)->required();
    std::string side_text;
    c_mut->add_option("--side", side_text, "left or right")->required();

    auto* c_sods = app.add_subcommand("sods", "enumerate semi-orthogonal decompositions");
    add_quiver(c_sods);
    c_sods->add_flag("--finest", finest, "keep only the finest decompositions");

    auto* c_hn = app.add_subcommand("hn", "Harder-Narasimhan factors of an object");
    add_quiver(c_hn);
    c_hn->add_option("--tstab", tstab)->required();
    c_hn->add_option("--object", object)->required();

    auto* c_norm = app.add_subcommand("normalize-tower", "canonicalize a claimed factor list");
    add_quiver(c_norm);
    c_norm->add_option("--tstab", tstab)->required();
    c_norm->add_option("--object", object)->required();
    c_norm->add_option("--factors", factors, "e.g. '[I2[-1]@3, P1@1]'")->required();

    auto* c_xi = app.add_subcommand("xi", "admissible filtration of a decomposition");
    add_quiver(c_xi);
    c_xi->add_option("--sod", sod)->required();

    auto* c_eta = app.add_subcommand("eta", "decomposition attached to a t-stability");
    add_quiver(c_eta);
    c_eta->add_option("--tstab", tstab)->required();

    auto* c_chi = app.add_subcommand("chi", "finest decomposition of a full sequence");
    add_quiver(c_chi);
    c_chi->add_option("--seq", seq)->required();

    auto* c_finer = app.add_subcommand("finer", "refinement comparison");
    add_quiver(c_finer);
    c_finer->add_option("--a", a)->required();
    c_finer->add_option("--b", b)->required();
    c_finer->add_flag("--tstabs", tstabs, "compare as t-stabilities");

    auto* c_refine = app.add_subcommand("refine", "refine to finest, or splice locally");
    add_quiver(c_refine);
    auto* ref_sod = c_refine->add_option("--sod", sod, "decomposition to refine to finest");
    auto* ref_tstab = c_refine->add_option("--tstab", tstab, "ambient t-stability");
    c_refine->add_option("--piece", piece, "1-based piece to replace");
    c_refine->add_option("--local", local, "t-stability of that piece");
    ref_sod->excludes(ref_tstab);

    auto* c_graph = app.add_subcommand("graph", "mutation graph of the finest decompositions");
    add_quiver(c_graph);
    auto* g_dot = c_graph->add_flag("--dot", want_dot, "emit DOT");
    auto* g_json = c_graph->add_flag("--json", want_json, "emit JSON (default)");
    g_dot->excludes(g_json);

    auto* c_red = app.add_subcommand("reduce", "reduction decomposition of the graph");
    add_quiver(c_red);

    auto* c_comp = app.add_subcommand("component-graph", "contracted reduction groups");
    add_quiver(c_comp);

    auto* c_braid = app.add_subcommand("check-braid", "braid and commutation laws");
    add_quiver(c_braid);

    auto* c_crit = app.add_subcommand("check-criterion", "pairwise-chain connectedness test");
    add_quiver(c_crit);

    auto* c_w = app.add_subcommand("wpl2", "weighted projective line of weight type (2)");
    c_w->require_subcommand(1);
    auto* w_hom = c_w->add_subcommand("hom", "graded Hom dimensions");
    w_hom->add_option("--from", from)->required();
    w_hom->add_option("--to", to)->required();
    auto* w_hom_degree = w_hom->add_option("--degree", degree);
    auto* w_seqs = c_w->add_subcommand("seqs", "full exceptional sequence test");
    w_seqs->add_option("--seq", seq)->required();
    auto* w_graph = c_w->add_subcommand("graph", "windowed mutation graph");
    w_graph->add_option("--seed", seed)->required();
    w_graph->add_option("--radius", radius)->required();
    w_graph->add_option("--window", window, "line bundle degree bound");
    auto* wg_dot = w_graph->add_flag("--dot", want_dot, "emit DOT");
    auto* wg_json = w_graph->add_flag("--json", want_json, "emit JSON (default)");
    wg_dot->excludes(wg_json);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        check_thread_env();

        if (app.got_subcommand(c_hom)) {
            auto cat = type_a_category(parse_quiver(quiver));
            auto x = parse_object(cat, from);
            auto y = parse_object(cat, to);
            if (hom_degree->count()) {
                emit(out, json{{"degree", degree}, {"dim", cat.hom_dim(x, y, degree)}});
                return 0;
            }
            std::set<int> candidates;
            for (const auto& [tx, mx] : x.terms())
                for (const auto& [ty, my] : y.terms()) {
                    candidates.insert(tx.shift - ty.shift);
                    candidates.insert(tx.shift - ty.shift + 1);
                }
            emit(out, json{{"dims", dims_json(candidates, [&](int k) {
                                return cat.hom_dim(x, y, k);
                            })}});
        } else if (app.got_subcommand(c_seqs)) {
            auto cat = type_a_category(parse_quiver(quiver));
            json arr = json::array();
            for (const auto& s : enumerate_full_exceptional_sequences(cat)) {
                json items = json::array();
                for (const auto& iv : s.items) items.push_back(cat.interval_name(iv));
                arr.push_back(items);
            }
            emit(out, arr);
        } else if (app.got_subcommand(c_mut)) {
            auto cat = type_a_category(parse_quiver(quiver));
            Side dir = parse_side(side_text);
            if (mut_sod->count()) {
                emit(out, json{{"sod", sod_token(cat, rho(cat, parse_sod(cat, sod),
                                                          index, dir))}});
            } else if (mut_seq->count()) {
                auto s = parse_sequence(cat, seq);
                auto m = dir == Side::left ? left_mutate(cat, s, index)
                                           : right_mutate(cat, s, index);
                emit(out, json{{"seq", sequence_token(cat, m)}});
            } else {
                throw invalid_input("mutate needs --sod or --seq");
            }
        } else if (app.got_subcommand(c_sods)) {
            auto cat = type_a_category(parse_quiver(quiver));
            json arr = json::array();
            for (const auto& s : enumerate_all_sods(cat)) {
                // Finest exactly when every block has K-theory rank one.
                if (finest && s.blocks.size() != static_cast<std::size_t>(cat.n()))
                    continue;
                json blocks = json::array();
                for (const auto& bl : s.blocks) {
                    json names = json::array();
                    for (const auto& iv : bl) names.push_back(cat.interval_name(iv));
                    blocks.push_back(names);
                }
                arr.push_back(json{{"blocks", blocks}});
            }
            emit(out, arr);
        } else if (app.got_subcommand(c_hn)) {
            auto cat = type_a_category(parse_quiver(quiver));
            auto r = hn_filtration(cat, parse_tstab(cat, tstab), parse_object(cat, object));
            out << factors_token(cat, r.factors) << "\n";
        } else if (app.got_subcommand(c_norm)) {
            auto cat = type_a_category(parse_quiver(quiver));
            auto r = normalize_tower(cat, parse_tstab(cat, tstab), parse_object(cat, object),
                                     parse_factors(cat, factors));
            out << factors_token(cat, r.factors) << "\n";
        } else if (app.got_subcommand(c_xi)) {
            auto cat = type_a_category(parse_quiver(quiver));
            auto f = xi(cat, parse_sod(cat, sod));
            json chain = json::array();
            for (const auto& t : f.chain) {
                json names = json::array();
                for (const auto& iv : t) names.push_back(cat.interval_name(iv));
                chain.push_back(names);
            }
            emit(out, json{{"chain", chain},
                           {"side", f.side == Side::right ? "right" : "left"}});
        } else if (app.got_subcommand(c_eta)) {
            auto cat = type_a_category(parse_quiver(quiver));
            emit(out, json{{"sod", sod_token(cat, eta(cat, parse_tstab(cat, tstab)))}});
        } else if (app.got_subcommand(c_chi)) {
            auto cat = type_a_category(parse_quiver(quiver));
            emit(out, json{{"sod", sod_token(cat, chi(cat, parse_sequence(cat, seq)))}});
        } else if (app.got_subcommand(c_finer)) {
            auto cat = type_a_category(parse_quiver(quiver));
            bool res = tstabs ? is_finer(cat, parse_tstab(cat, a), parse_tstab(cat, b))
                              : is_finer(cat, parse_sod(cat, a), parse_sod(cat, b));
            emit(out, json{{"finer", res}});
        } else if (app.got_subcommand(c_refine)) {
            auto cat = type_a_category(parse_quiver(quiver));
            if (ref_sod->count()) {
                emit(out, json{{"sod", sod_token(cat, refine_to_finest(
                                                          cat, parse_sod(cat, sod)))}});
            } else if (ref_tstab->count()) {
                require(piece >= 1 && !local.empty(),
                        "refine with --tstab needs --piece and --local");
                auto ambient = parse_tstab(cat, tstab);
                auto loc = parse_tstab_local(cat, local);
                emit(out, json{{"tstab", tstab_token(cat, refine_locally(cat, ambient,
                                                                         piece, loc))}});
            } else {
                throw invalid_input("refine needs --sod or --tstab");
            }
        } else if (app.got_subcommand(c_graph)) {
            auto g = build_graph(parse_quiver(quiver));
            if (want_dot) {
                out << export_dot(g);
                return 0;
            }
            TypeACategory cat(g.n);
            json verts = json::array();
            for (const auto& v : g.vertices) verts.push_back(sod_token(cat, v));
            emit(out, json{{"edges", edges_json(g.edges)}, {"vertices", verts}});
        } else if (app.got_subcommand(c_red)) {
            auto g = build_graph(parse_quiver(quiver));
            auto rd = reduction_decomposition(g);
            TypeACategory cat(g.n);
            json verts = json::array();
            for (const auto& v : g.vertices) verts.push_back(sod_token(cat, v));
            json groups = json::object();
            for (const auto& [iv, ids] : rd.groups) groups[cat.interval_name(iv)] = ids;
            emit(out, json{{"groups", groups}, {"vertices", verts}});
        } else if (app.got_subcommand(c_comp)) {
            auto cg = component_graph(build_graph(parse_quiver(quiver)));
            TypeACategory cat(cg.n);
            json verts = json::array();
            for (const auto& iv : cg.vertices) verts.push_back(cat.interval_name(iv));
            emit(out, json{{"connected", is_connected(cg)},
                           {"edges", edges_json(cg.edges)},
                           {"vertices", verts}});
        } else if (app.got_subcommand(c_braid)) {
            auto cat = type_a_category(parse_quiver(quiver));
            bool holds = true;
            int checked = 0;
            for (const auto& s : enumerate_all_sods(cat)) {
                if (s.blocks.size() != static_cast<std::size_t>(cat.n())) continue;
                ++checked;
                int m = static_cast<int>(s.blocks.size());
                for (int i = 1; i + 1 <= m - 1; ++i) {
                    auto lhs = rho(cat, rho(cat, rho(cat, s, i, Side::right), i + 1,
                                            Side::right), i, Side::right);
                    auto rhs = rho(cat, rho(cat, rho(cat, s, i + 1, Side::right), i,
                                            Side::right), i + 1, Side::right);
                    if (!(lhs == rhs)) holds = false;
                }
                for (int i = 1; i <= m - 1; ++i)
                    for (int j = i + 2; j <= m - 1; ++j) {
                        auto lhs = rho(cat, rho(cat, s, i, Side::right), j, Side::right);
                        auto rhs = rho(cat, rho(cat, s, j, Side::right), i, Side::right);
                        if (!(lhs == rhs)) holds = false;
                    }
            }
            emit(out, json{{"holds", holds}, {"sods", checked}});
        } else if (app.got_subcommand(c_crit)) {
            auto spec = parse_quiver(quiver);
            auto res = check_connectedness_criterion(spec);
            TypeACategory cat(spec.n);
            json wit = json::object();
            for (const auto& [pair, chain] : res.witness_chains) {
                json names = json::array();
                for (const auto& iv : chain) names.push_back(cat.interval_name(iv));
                wit[cat.interval_name(pair.first) + "->" +
                    cat.interval_name(pair.second)] = names;
            }
            emit(out, json{{"holds", res.holds}, {"witnesses", wit}});
        } else if (app.got_subcommand(c_w)) {
            if (c_w->got_subcommand(w_hom)) {
                auto x = parse_wpl2_object(from);
                auto y = parse_wpl2_object(to);
                if (w_hom_degree->count()) {
                    emit(out, json{{"degree", degree}, {"dim", wpl2_hom_dim(x, y, degree)}});
                    return 0;
                }
                std::set<int> candidates = {x.shift - y.shift, x.shift - y.shift + 1};
                emit(out, json{{"dims", dims_json(candidates, [&](int k) {
                                    return wpl2_hom_dim(x, y, k);
                                })}});
            } else if (c_w->got_subcommand(w_seqs)) {
                auto t = parse_wpl2_triple(seq);
                emit(out, json{{"full", wpl2_is_full_exceptional(t)},
                               {"seq", wpl2_triple_token(t)}});
            } else if (c_w->got_subcommand(w_graph)) {
                auto g = wpl2_windowed_graph(parse_wpl2_triple(seed), radius, window);
                if (want_dot) {
                    out << export_dot(g);
                    return 0;
                }
                json verts = json::array();
                for (const auto& v : g.vertices) verts.push_back(wpl2_triple_token(v));
                emit(out, json{{"edges", edges_json(g.edges)}, {"vertices", verts}});
            }
        }
        return 0;
    } catch (const capacity_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const invalid_input& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace sodlab
