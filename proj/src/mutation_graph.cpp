#include "sodlab/mutation_graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "sodlab/exceptional.hpp"

namespace sodlab {

namespace {

constexpr int max_graph_n = 5;
constexpr int max_criterion_n = 4;

bool undirected_connected(int nv, const std::vector<GraphEdge>& edges) {
    if (nv <= 1) return true;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nv));
    for (const GraphEdge& e : edges) {
        adj[static_cast<std::size_t>(e.from)].push_back(e.to);
        adj[static_cast<std::size_t>(e.to)].push_back(e.from);
    }
    std::vector<char> seen(static_cast<std::size_t>(nv), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached == nv;
}

// Relative full exceptional sequences of a thick subcategory: orderings of
// its objects with one-way graded vanishing that generate the whole of it.
void extend_relative(const TypeACategory& cat, const ThickSet& w, int len,
                     std::vector<Interval>& prefix, std::vector<std::vector<Interval>>& out) {
    if (static_cast<int>(prefix.size()) == len) {
        if (cat.thick_closure(ThickSet(prefix.begin(), prefix.end())) == w)
            out.push_back(prefix);
        return;
    }
    for (Interval cand : w) {
        bool ok = true;
        for (Interval p : prefix)
            for (int k = 0; ok && k <= 1; ++k)
                if (cat.hom_interval(cand, p, k) != 0) ok = false;
        if (!ok) continue;
        prefix.push_back(cand);
        extend_relative(cat, w, len, prefix, out);
        prefix.pop_back();
    }
}

std::string block_label(const TypeACategory& cat, const ThickSet& block) {
    std::string s;
    for (Interval e : block) {
        if (!s.empty()) s += ",";
        s += cat.interval_name(e);
    }
    return s;
}

std::string sod_label(const TypeACategory& cat, const Sod& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.blocks.size(); ++i) {
        if (i > 0) out += "|";
        out += block_label(cat, s.blocks[i]);
    }
    return out + ")";
}

}  // namespace

// -------------------------------------------------------------- operations

MutationGraph build_graph(const QuiverSpec& q) {
    require(q.kind == QuiverSpec::Kind::type_a, "mutation graphs are built over linear quivers");
    if (q.n > max_graph_n)
        throw capacity_error("mutation graph capacity is n <= " + std::to_string(max_graph_n));
    MutationGraph g;
    g.n = q.n;
    if (q.n == 1) return g;  // no decomposition has fewer than two blocks
    TypeACategory cat(q.n);
    for (const ExceptionalSequence& seq : enumerate_full_exceptional_sequences(cat))
        g.vertices.push_back(chi(cat, seq));
    std::sort(g.vertices.begin(), g.vertices.end());
    std::map<std::vector<ThickSet>, int> index;
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        index.emplace(g.vertices[i].blocks, static_cast<int>(i));
    ensure(index.size() == g.vertices.size(), "finest decompositions collide");
    for (std::size_t u = 0; u < g.vertices.size(); ++u)
        for (int i = 1; i < q.n; ++i) {
            Sod image = rho(cat, g.vertices[u], i, Side::right);
            auto it = index.find(image.blocks);
            ensure(it != index.end(), "mutation left the set of finest decompositions");
            g.edges.push_back(GraphEdge{static_cast<int>(u), it->second, i});
        }
    return g;
}

bool is_connected(const MutationGraph& g) {
    return undirected_connected(static_cast<int>(g.vertices.size()), g.edges);
}

bool is_connected(const ComponentGraph& g) {
    return undirected_connected(static_cast<int>(g.vertices.size()), g.edges);
}

ReductionDecomposition reduction_decomposition(const MutationGraph& g) {
    TypeACategory cat(g.n);
    ReductionDecomposition r;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const auto& blocks = g.vertices[i].blocks;
        ensure(!blocks.empty() && blocks.back().size() == 1, "graph vertex is not finest");
        r.groups[*blocks.back().begin()].push_back(static_cast<int>(i));
    }
    // each group, with its last block dropped, must match the finest
    // decompositions of the quotient model: the right perp of the key
    for (const auto& [u, ids] : r.groups) {
        ThickSet w = cat.perp(ThickSet{u}, Side::right);
        std::vector<std::vector<Interval>> rel;
        std::vector<Interval> prefix;
        extend_relative(cat, w, cat.k0_rank(w), prefix, rel);
        std::set<std::vector<ThickSet>> expect;
        for (const auto& seq : rel) {
            std::vector<ThickSet> bl;
            for (Interval e : seq) bl.push_back(ThickSet{e});
            expect.insert(std::move(bl));
        }
        std::set<std::vector<ThickSet>> got;
        for (int id : ids) {
            auto bl = g.vertices[static_cast<std::size_t>(id)].blocks;
            bl.pop_back();
            got.insert(std::move(bl));
        }
        ensure(got.size() == ids.size(), "reduction group repeats a truncation");
        ensure(got == expect, "reduction group disagrees with its quotient model");
    }
    return r;
}

ComponentGraph component_graph(const MutationGraph& g) {
    ReductionDecomposition r = reduction_decomposition(g);
    ComponentGraph c;
    c.n = g.n;
    std::map<int, int> vertex_group;
    for (const auto& [u, ids] : r.groups) {
        int gid = static_cast<int>(c.vertices.size());
        c.vertices.push_back(u);
        for (int id : ids) vertex_group[id] = gid;
    }
    std::set<GraphEdge> crossing;
    for (const GraphEdge& e : g.edges) {
        int a = vertex_group.at(e.from);
        int b = vertex_group.at(e.to);
        if (a != b) crossing.insert(GraphEdge{a, b, e.label});
    }
    c.edges.assign(crossing.begin(), crossing.end());
    return c;
}

CriterionResult check_connectedness_criterion(const QuiverSpec& q) {
    require(q.kind == QuiverSpec::Kind::type_a, "the chain criterion covers linear quivers");
    if (q.n > max_criterion_n)
        throw capacity_error("chain criterion capacity is n <= " +
                             std::to_string(max_criterion_n));
    TypeACategory cat(q.n);
    const std::vector<Interval>& objs = cat.intervals();
    std::size_t m = objs.size();
    std::vector<ThickSet> right(m), left(m);
    for (std::size_t i = 0; i < m; ++i) {
        right[i] = cat.perp(ThickSet{objs[i]}, Side::right);
        left[i] = cat.perp(ThickSet{objs[i]}, Side::left);
    }
    auto meets = [](const ThickSet& a, const ThickSet& b) {
        return std::any_of(a.begin(), a.end(), [&](Interval x) { return b.count(x) == 1; });
    };
    std::vector<std::vector<int>> adj(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && (meets(right[i], left[j]) || meets(left[i], right[j])))
                adj[i].push_back(static_cast<int>(j));

    CriterionResult res;
    res.holds = true;
    for (std::size_t s = 0; s < m; ++s) {
        std::vector<int> parent(m, -1);
        std::vector<char> seen(m, 0);
        std::queue<int> bfs;
        bfs.push(static_cast<int>(s));
        seen[s] = 1;
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            for (int w : adj[static_cast<std::size_t>(v)])
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    parent[static_cast<std::size_t>(w)] = v;
                    bfs.push(w);
                }
        }
        for (std::size_t t = 0; t < m; ++t) {
            if (!seen[t]) {
                res.holds = false;
                continue;
            }
            std::vector<Interval> chain;
            for (int v = static_cast<int>(t); v != -1; v = parent[static_cast<std::size_t>(v)])
                chain.push_back(objs[static_cast<std::size_t>(v)]);
            std::reverse(chain.begin(), chain.end());
            res.witness_chains[{objs[s], objs[t]}] = std::move(chain);
        }
    }
    return res;
}

std::string export_dot(const MutationGraph& g) {
    TypeACategory cat(g.n);
    std::ostringstream os;
    os << "digraph mutation_graph {\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        os << "  v" << i << " [label=\"" << sod_label(cat, g.vertices[i]) << "\"];\n";
    for (const GraphEdge& e : g.edges)
        os << "  v" << e.from << " -> v" << e.to << " [label=\"rho_" << e.label << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string export_dot(const ComponentGraph& g) {
    TypeACategory cat(g.n);
    std::ostringstream os;
    os << "digraph component_graph {\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        os << "  v" << i << " [label=\"" << cat.interval_name(g.vertices[i]) << "\"];\n";
    for (const GraphEdge& e : g.edges)
        os << "  v" << e.from << " -> v" << e.to << " [label=\"rho_" << e.label << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace sodlab
