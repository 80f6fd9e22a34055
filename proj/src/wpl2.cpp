#include "sodlab/wpl2.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace sodlab {

namespace {

constexpr int max_radius = 32;
constexpr int max_window = 64;

int positive_mod2(int m) { return ((m % 2) + 2) % 2; }

int ceil_half(int m) { return m >= 0 ? (m + 1) / 2 : -((-m) / 2); }

Wpl2Object strip(const Wpl2Object& x) {
    Wpl2Object r = x;
    r.shift = 0;
    return r;
}

Wpl2Triple strip(const Wpl2Triple& s) { return {strip(s[0]), strip(s[1]), strip(s[2])}; }

void check_exceptional_kind(const Wpl2Object& x) {
    require(x.kind != Wpl2Kind::rank_one_simple,
            "rank-one tube simples live in K-theory only");
}

// Graded-Hom dimensions at shift zero; nonzero only in degrees 0 and 1.
// Sections of O(d) count monomials x1^a u^b v^c with a + 2b + 2c = d and
// a < 2; degree 1 follows by Serre duality with omega = -3. The tube
// simples follow the parity gauge: O(m) surjects onto S_{1, m mod 2}.
int hom_line(int a, int b) { return b >= a ? (b - a) / 2 + 1 : 0; }

int hom_base(const Wpl2Object& x, const Wpl2Object& y, int k) {
    if (k != 0 && k != 1) return 0;
    bool xl = x.kind == Wpl2Kind::line_bundle;
    bool yl = y.kind == Wpl2Kind::line_bundle;
    if (xl && yl)
        return k == 0 ? hom_line(x.m, y.m) : hom_line(y.m, x.m + L2Element::omega);
    if (xl && !yl) return k == 0 && positive_mod2(y.j - x.m) == 0 ? 1 : 0;
    if (!xl && yl) return k == 1 && positive_mod2(x.j - y.m) == 1 ? 1 : 0;
    if (k == 0) return x.j == y.j ? 1 : 0;
    return x.j != y.j ? 1 : 0;  // tau swaps the two tube simples
}

const EulerForm& wpl2_euler() {
    static const EulerForm form(QuiverSpec::wpl2());
    return form;
}

long long det3(const std::array<K0Class, 3>& r) {
    const auto& a = r[0].v;
    const auto& b = r[1].v;
    const auto& c = r[2].v;
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// Unique exceptional object with class +-target: the rank coordinate picks
// the kind, the torsion coordinates pick the twist or the parity class.
Wpl2Object resolve_class(const K0Class& target, int window) {
    for (int sign : {1, -1}) {
        K0Class t = sign > 0 ? target : -target;
        if (t.v[0] == 1) {
            int m = 0;
            if (t.v[1] == 0)
                m = 2 * static_cast<int>(t.v[2]);
            else if (t.v[1] == -1)
                m = 2 * static_cast<int>(t.v[2]) - 1;
            else
                continue;
            if (m < -window || m > window)
                throw capacity_error("window-too-small: mutation lands on O(" +
                                     std::to_string(m) + "); enlarge the window and retry");
            return Wpl2Object::line(m);
        }
        if (t.v[0] == 0) {
            if (t == wpl2_k0(Wpl2Object::simple(0))) return Wpl2Object::simple(0);
            if (t == wpl2_k0(Wpl2Object::simple(1))) return Wpl2Object::simple(1);
        }
    }
    throw internal_error("mutation class does not resolve to an exceptional object");
}

bool inside_window(const Wpl2Triple& s, int window) {
    return std::all_of(s.begin(), s.end(), [&](const Wpl2Object& x) {
        return x.kind != Wpl2Kind::line_bundle || (-window <= x.m && x.m <= window);
    });
}

std::string triple_label(const Wpl2Triple& s) {
    return "(" + wpl2_name(s[0]) + "|" + wpl2_name(s[1]) + "|" + wpl2_name(s[2]) + ")";
}

}  // namespace

// -------------------------------------------------------------- operations

std::string wpl2_name(const Wpl2Object& x) {
    std::string s;
    switch (x.kind) {
        case Wpl2Kind::line_bundle:
            s = x.m == 0 ? "O" : "O(" + std::to_string(x.m) + ")";
            break;
        case Wpl2Kind::simple:
            s = "S1" + std::to_string(x.j);
            break;
        case Wpl2Kind::rank_one_simple:
            s = "Sx";
            break;
    }
    if (x.shift != 0) s += "[" + std::to_string(x.shift) + "]";
    return s;
}

K0Class wpl2_k0(const Wpl2Object& x) {
    K0Class r(3);
    switch (x.kind) {
        case Wpl2Kind::line_bundle:
            r.v = {1, -positive_mod2(x.m), ceil_half(x.m)};
            break;
        case Wpl2Kind::simple:
            r.v = x.j == 0 ? std::vector<long long>{0, 1, 0} : std::vector<long long>{0, -1, 1};
            break;
        case Wpl2Kind::rank_one_simple:
            r.v = {0, 0, 1};
            break;
    }
    return positive_mod2(x.shift) == 0 ? r : -r;
}

Wpl2Object wpl2_twist(const Wpl2Object& x, int d) {
    Wpl2Object r = x;
    if (x.kind == Wpl2Kind::line_bundle) r.m += d;
    if (x.kind == Wpl2Kind::simple) r.j = positive_mod2(x.j + d);
    return r;
}

int wpl2_hom_dim(const Wpl2Object& x, const Wpl2Object& y, int k) {
    check_exceptional_kind(x);
    check_exceptional_kind(y);
    return hom_base(strip(x), strip(y), k + y.shift - x.shift);
}

bool wpl2_is_full_exceptional(const Wpl2Triple& seq) {
    for (const Wpl2Object& x : seq) {
        if (x.kind == Wpl2Kind::rank_one_simple) return false;
        if (wpl2_hom_dim(x, x, 0) != 1 || wpl2_hom_dim(x, x, 1) != 0) return false;
    }
    // one-way vanishing is shift-independent, so test the stripped pairs
    Wpl2Triple s = strip(seq);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (int k = 0; k <= 1; ++k)
                if (hom_base(s[static_cast<std::size_t>(j)], s[static_cast<std::size_t>(i)],
                             k) != 0)
                    return false;
    std::array<K0Class, 3> rows = {wpl2_k0(s[0]), wpl2_k0(s[1]), wpl2_k0(s[2])};
    long long d = det3(rows);
    return d == 1 || d == -1;
}

Wpl2Triple wpl2_mutate(const Wpl2Triple& seq, int i, Side dir, int window) {
    require(i == 1 || i == 2, "mutation index out of range");
    require(window >= 1, "window must be positive");
    require(wpl2_is_full_exceptional(seq), "not a full exceptional triple");
    Wpl2Triple out = strip(seq);
    Wpl2Object e = out[static_cast<std::size_t>(i - 1)];
    Wpl2Object f = out[static_cast<std::size_t>(i)];
    long long pair = wpl2_euler().pairing(wpl2_k0(e), wpl2_k0(f));
    if (dir == Side::left) {
        // L_e f -> Hom(e,f) x e -> f, so [L] = <e,f>[e] - [f]
        K0Class target = pair * wpl2_k0(e) - wpl2_k0(f);
        out[static_cast<std::size_t>(i - 1)] = resolve_class(target, window);
        out[static_cast<std::size_t>(i)] = e;
    } else {
        // e -> Hom(e,f)* x f -> R_f e, so [R] = <e,f>[f] - [e]
        K0Class target = pair * wpl2_k0(f) - wpl2_k0(e);
        out[static_cast<std::size_t>(i - 1)] = f;
        out[static_cast<std::size_t>(i)] = resolve_class(target, window);
    }
    ensure(wpl2_is_full_exceptional(out), "mutation produced a non-exceptional triple");
    return out;
}

Wpl2Graph wpl2_windowed_graph(const Wpl2Triple& seed, int radius, int window) {
    require(radius >= 0, "radius must be nonnegative");
    require(window >= 1, "window must be positive");
    if (radius > max_radius)
        throw capacity_error("graph radius capacity is " + std::to_string(max_radius));
    if (window > max_window)
        throw capacity_error("graph window capacity is " + std::to_string(max_window));
    Wpl2Triple root = strip(seed);
    require(wpl2_is_full_exceptional(root), "seed is not a full exceptional triple");
    if (!inside_window(root, window))
        throw capacity_error("window-too-small: the seed leaves the window");

    std::set<Wpl2Triple> visited{root};
    std::vector<Wpl2Triple> frontier{root};
    for (int depth = 0; depth < radius && !frontier.empty(); ++depth) {
        std::vector<Wpl2Triple> next;
        for (const Wpl2Triple& v : frontier)
            for (int i = 1; i <= 2; ++i)
                for (Side dir : {Side::left, Side::right}) {
                    Wpl2Triple w;
                    try {
                        w = wpl2_mutate(v, i, dir, window);
                    } catch (const capacity_error&) {
                        continue;  // neighbor leaves the window
                    }
                    if (visited.insert(w).second) next.push_back(w);
                }
        frontier = std::move(next);
    }

    Wpl2Graph g;
    g.vertices.assign(visited.begin(), visited.end());
    std::map<Wpl2Triple, int> index;
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        index.emplace(g.vertices[i], static_cast<int>(i));
    for (std::size_t u = 0; u < g.vertices.size(); ++u)
        for (int i = 1; i <= 2; ++i) {
            Wpl2Triple w;
            try {
                w = wpl2_mutate(g.vertices[u], i, Side::left, window);
            } catch (const capacity_error&) {
                continue;
            }
            auto it = index.find(w);
            if (it != index.end())
                g.edges.push_back(GraphEdge{static_cast<int>(u), it->second, i});
        }
    return g;
}

std::string export_dot(const Wpl2Graph& g) {
    std::ostringstream os;
    os << "digraph wpl2_graph {\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        os << "  v" << i << " [label=\"" << triple_label(g.vertices[i]) << "\"];\n";
    for (const GraphEdge& e : g.edges)
        os << "  v" << e.from << " -> v" << e.to << " [label=\"rho_" << e.label << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace sodlab
