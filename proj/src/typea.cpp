#include "sodlab/typea.hpp"

#include <algorithm>
#include <sstream>

namespace sodlab {

// ------------------------------------------------------------------ objects

std::string to_string(Interval iv) {
    std::ostringstream os;
    os << "[" << iv.a << "," << iv.b << "]";
    return os.str();
}

DerivedObject DerivedObject::of(Interval iv, int shift, int mult) {
    DerivedObject x;
    x.add(iv, shift, mult);
    return x;
}

void DerivedObject::add(Interval iv, int shift, int mult) {
    require(mult >= 0, "summand multiplicity must be nonnegative");
    if (mult == 0) return;
    terms_[Term{shift, iv}] += mult;
}

int DerivedObject::summand_count() const {
    int c = 0;
    for (const auto& [t, m] : terms_) c += m;
    return c;
}

DerivedObject DerivedObject::shifted(int s) const {
    DerivedObject r;
    for (const auto& [t, m] : terms_) r.add(t.iv, t.shift + s, m);
    return r;
}

DerivedObject DerivedObject::plus(const DerivedObject& o) const {
    DerivedObject r = *this;
    for (const auto& [t, m] : o.terms_) r.add(t.iv, t.shift, m);
    return r;
}

std::string to_string(const DerivedObject& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, m] : x.terms()) {
        if (!first) os << "+";
        first = false;
        if (m != 1) os << m << "*";
        os << to_string(t.iv);
        if (t.shift != 0) os << "[" << t.shift << "]";
    }
    return os.str();
}

// ------------------------------------------------------------ complex access

namespace {

const std::vector<int>& gens_at(const PresentedComplex& c, int d) {
    static const std::vector<int> empty;
    auto it = c.gens.find(d);
    return it == c.gens.end() ? empty : it->second;
}

int gen_count(const PresentedComplex& c, int d) { return static_cast<int>(gens_at(c, d).size()); }

Mat diff_at(const PresentedComplex& c, int d) {
    auto it = c.diff.find(d);
    if (it != c.diff.end()) return it->second;
    return Mat(gen_count(c, d + 1), gen_count(c, d));
}

// Drops empty degrees and zero-sized differentials; checks shapes and the
// coefficient rules (entries only where row label <= col label, d^2 = 0).
PresentedComplex tidy(PresentedComplex c) {
    for (auto it = c.gens.begin(); it != c.gens.end();) {
        if (it->second.empty())
            it = c.gens.erase(it);
        else
            ++it;
    }
    std::map<int, Mat> diff;
    for (const auto& [d, g] : c.gens) {
        int rows = gen_count(c, d + 1);
        if (rows == 0) continue;
        Mat m = diff_at(c, d);
        ensure(m.rows() == rows && m.cols() == static_cast<int>(g.size()), "differential shape mismatch");
        if (!m.is_zero()) diff[d] = std::move(m);
    }
    c.diff = std::move(diff);
    for (const auto& [d, m] : c.diff) {
        const auto& cols = gens_at(c, d);
        const auto& rows = gens_at(c, d + 1);
        for (int r = 0; r < m.rows(); ++r)
            for (int cc = 0; cc < m.cols(); ++cc)
                ensure(m.at(r, cc) == Rat(0) || rows[r] <= cols[cc],
                       "differential entry at a position with no map P_i -> P_j");
        Mat next = diff_at(c, d + 1);
        if (next.rows() > 0) ensure((next * m).is_zero(), "d^2 != 0");
    }
    return c;
}

std::vector<int> labels_leq(const std::vector<int>& labels, int v) {
    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
        if (labels[i] <= v) idx.push_back(i);
    return idx;
}

Mat submatrix(const Mat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    Mat r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) r.at(i, j) = m.at(rows[i], cols[j]);
    return r;
}

}  // namespace

// ---------------------------------------------------------------- category

TypeACategory::TypeACategory(int n) : n_(n), euler_(QuiverSpec::type_a(std::max(1, std::min(n, max_n)))) {
    require(n >= 1, "type A category needs n >= 1");
    if (n > max_n) throw capacity_error("type A category capped at n <= 12");
    for (int a = 1; a <= n_; ++a)
        for (int b = a; b <= n_; ++b) intervals_.push_back(Interval{a, b});

    int count = static_cast<int>(intervals_.size());
    hom0_.assign(count, std::vector<int>(count, 0));
    ext1_.assign(count, std::vector<int>(count, 0));
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j) {
            hom0_[i][j] = hom_by_commutation(intervals_[i], intervals_[j]);
            ext1_[i][j] = ext_by_resolution(intervals_[i], intervals_[j]);
        }
    build_cone_summands();
}

int TypeACategory::interval_index(Interval x) const {
    check_interval(x);
    // intervals_ is ordered lexicographically in (a, b)
    int before = 0;
    for (int a = 1; a < x.a; ++a) before += n_ - a + 1;
    return before + (x.b - x.a);
}

void TypeACategory::check_interval(Interval x) const {
    require(1 <= x.a && x.a <= x.b && x.b <= n_, "interval out of range: " + to_string(x));
}

void TypeACategory::check_object(const DerivedObject& x) const {
    for (const auto& [t, m] : x.terms()) check_interval(t.iv);
}

std::string TypeACategory::interval_name(Interval x) const {
    check_interval(x);
    if (x.a == x.b) return "S" + std::to_string(x.a);
    if (x.b == n_) return "P" + std::to_string(x.a);
    if (x.a == 1) return "I" + std::to_string(x.b);
    return to_string(x);
}

// Morphisms of representations computed from the commutation equations
// f_{v+1} X(v -> v+1) = Y(v -> v+1) f_v; all spaces here are 0 or 1 dim.
int TypeACategory::hom_by_commutation(Interval x, Interval y) const {
    auto in = [](Interval iv, int v) { return iv.a <= v && v <= iv.b; };
    std::vector<int> unknown_at(n_ + 2, -1);
    int unknowns = 0;
    for (int v = 1; v <= n_; ++v)
        if (in(x, v) && in(y, v)) unknown_at[v] = unknowns++;
    if (unknowns == 0) return 0;

    std::vector<std::vector<Rat>> rows;
    for (int v = 1; v < n_; ++v) {
        if (!(in(x, v) && in(y, v + 1))) continue;  // the equation lives in Hom(X_v, Y_{v+1})
        std::vector<Rat> row(unknowns, Rat(0));
        if (in(x, v) && in(x, v + 1) && unknown_at[v + 1] >= 0) row[unknown_at[v + 1]] += Rat(1);
        if (in(y, v) && in(y, v + 1) && unknown_at[v] >= 0) row[unknown_at[v]] -= Rat(1);
        bool nonzero = false;
        for (const auto& e : row) nonzero = nonzero || e != Rat(0);
        if (nonzero) rows.push_back(std::move(row));
    }
    Mat k(static_cast<int>(rows.size()), unknowns);
    for (int i = 0; i < k.rows(); ++i)
        for (int j = 0; j < unknowns; ++j) k.at(i, j) = rows[i][j];
    return unknowns - rank_of(k);
}

// Ext^1(M[a,b], N) = coker(Hom(P_a, N) -> Hom(P_{b+1}, N)) via the projective
// resolution 0 -> P_{b+1} -> P_a -> M[a,b] -> 0; the middle map is evaluation
// of N along the path a -> b+1.
int TypeACategory::ext_by_resolution(Interval x, Interval y) const {
    if (x.b == n_) return 0;
    auto dim = [&](int v) { return (y.a <= v && v <= y.b) ? 1 : 0; };
    Mat path = Mat::identity(dim(x.a));
    for (int v = x.a; v <= x.b; ++v) {
        Mat step(dim(v + 1), dim(v));
        if (dim(v) == 1 && dim(v + 1) == 1) step.at(0, 0) = Rat(1);
        path = step * path;
    }
    return dim(x.b + 1) - rank_of(path);
}

int TypeACategory::hom_interval(Interval x, Interval y, int k) const {
    if (k != 0 && k != 1) {
        check_interval(x);
        check_interval(y);
        return 0;
    }
    int i = interval_index(x), j = interval_index(y);
    return k == 0 ? hom0_[i][j] : ext1_[i][j];
}

int TypeACategory::hom_dim(const DerivedObject& x, const DerivedObject& y, int k) const {
    int total = 0;
    for (const auto& [tx, mx] : x.terms())
        for (const auto& [ty, my] : y.terms())
            total += mx * my * hom_interval(tx.iv, ty.iv, ty.shift - tx.shift + k);
    return total;
}

std::optional<Interval> TypeACategory::tau(Interval x) const {
    check_interval(x);
    if (x.b == n_) return std::nullopt;
    return Interval{x.a + 1, x.b + 1};
}

K0Class TypeACategory::k0(Interval x) const {
    check_interval(x);
    K0Class c(n_);
    for (int v = x.a; v <= x.b; ++v) c.v[v - 1] = 1;
    return c;
}

K0Class TypeACategory::k0(const DerivedObject& x) const {
    K0Class c(n_);
    for (const auto& [t, m] : x.terms()) {
        long long sign = (((t.shift % 2) + 2) % 2 == 0) ? 1 : -1;
        c += (sign * m) * k0(t.iv);
    }
    return c;
}

// ----------------------------------------------------------- presentations

PresentedComplex TypeACategory::present(const DerivedObject& x) const {
    check_object(x);
    PresentedComplex c;
    // (degree, row index) of every generator, in insertion order per degree
    struct Edge {
        int deg;  // degree of the source generator P_{b+1}
        int src;
        int dst;
    };
    std::vector<Edge> edges;
    for (const auto& [t, m] : x.terms()) {
        for (int copy = 0; copy < m; ++copy) {
            int d0 = -t.shift;
            if (t.iv.b < n_) {
                c.gens[d0 - 1].push_back(t.iv.b + 1);
                c.gens[d0].push_back(t.iv.a);
                edges.push_back(Edge{d0 - 1, static_cast<int>(c.gens[d0 - 1].size()) - 1,
                                     static_cast<int>(c.gens[d0].size()) - 1});
            } else {
                c.gens[d0].push_back(t.iv.a);
            }
        }
    }
    for (const auto& [d, g] : c.gens) {
        int rows = gen_count(c, d + 1);
        if (rows > 0) c.diff[d] = Mat(rows, static_cast<int>(g.size()));
    }
    for (const Edge& e : edges) c.diff[e.deg].at(e.dst, e.src) = Rat(1);
    return tidy(std::move(c));
}

PresentedComplex TypeACategory::shift_complex(const PresentedComplex& c, int s) const {
    PresentedComplex r;
    for (const auto& [d, g] : c.gens) r.gens[d - s] = g;
    Rat sign = (((s % 2) + 2) % 2 == 0) ? Rat(1) : Rat(-1);
    for (const auto& [d, m] : c.diff) r.diff[d - s] = m.scaled(sign);
    return tidy(std::move(r));
}

// ------------------------------------------------------------ hom complexes

std::vector<GradedMap> TypeACategory::hom_basis(const PresentedComplex& x,
                                                const PresentedComplex& y, int k) const {
    // Unknowns: allowed entries f^d[r][c], r over gens of Y^{d+k}, c over X^d.
    std::map<int, std::vector<std::vector<int>>> slot;
    int unknowns = 0;
    for (const auto& [d, gx] : x.gens) {
        const auto& gy = gens_at(y, d + k);
        if (gy.empty()) continue;
        auto& tbl = slot[d];
        tbl.assign(gy.size(), std::vector<int>(gx.size(), -1));
        for (int r = 0; r < static_cast<int>(gy.size()); ++r)
            for (int c = 0; c < static_cast<int>(gx.size()); ++c)
                if (gy[r] <= gx[c]) tbl[r][c] = unknowns++;
    }
    if (unknowns == 0) return {};

    Rat sign = (((k % 2) + 2) % 2 == 0) ? Rat(1) : Rat(-1);

    // Chain map condition d_Y f - (-1)^k f d_X = 0, one row per target entry.
    std::vector<std::vector<Rat>> rows;
    for (const auto& [d, gx] : x.gens) {
        const auto& gy1 = gens_at(y, d + k + 1);
        if (gy1.empty()) continue;
        Mat dy = diff_at(y, d + k);
        Mat dx = diff_at(x, d);
        for (int r = 0; r < static_cast<int>(gy1.size()); ++r)
            for (int c = 0; c < static_cast<int>(gx.size()); ++c) {
                std::vector<Rat> row(unknowns, Rat(0));
                bool nonzero = false;
                if (auto it = slot.find(d); it != slot.end())
                    for (int m = 0; m < dy.cols(); ++m) {
                        int u = it->second[m][c];
                        if (u >= 0 && dy.at(r, m) != Rat(0)) {
                            row[u] += dy.at(r, m);
                            nonzero = true;
                        }
                    }
                if (auto it = slot.find(d + 1); it != slot.end())
                    for (int m = 0; m < dx.rows(); ++m) {
                        int u = it->second[r][m];
                        if (u >= 0 && dx.at(m, c) != Rat(0)) {
                            row[u] -= sign * dx.at(m, c);
                            nonzero = true;
                        }
                    }
                if (nonzero) rows.push_back(std::move(row));
            }
    }
    Mat constraint(static_cast<int>(rows.size()), unknowns);
    for (int i = 0; i < constraint.rows(); ++i)
        for (int j = 0; j < unknowns; ++j) constraint.at(i, j) = rows[i][j];
    std::vector<std::vector<Rat>> kernel = nullspace_of(constraint);

    // Null-homotopic maps: images of d_Y h + (-1)^k h d_X over allowed h.
    SpanTracker tracker;
    for (const auto& [d, gx] : x.gens) {
        const auto& gh = gens_at(y, d + k - 1);
        if (gh.empty()) continue;
        Mat dy = diff_at(y, d + k - 1);
        Mat dxprev = diff_at(x, d - 1);
        for (int p = 0; p < static_cast<int>(gh.size()); ++p)
            for (int c = 0; c < static_cast<int>(gx.size()); ++c) {
                if (gh[p] > gx[c]) continue;
                std::vector<Rat> img(unknowns, Rat(0));
                if (auto it = slot.find(d); it != slot.end())
                    for (int r = 0; r < dy.rows(); ++r)
                        if (dy.at(r, p) != Rat(0) && it->second[r][c] >= 0)
                            img[it->second[r][c]] += dy.at(r, p);
                if (auto it = slot.find(d - 1); it != slot.end())
                    for (int q = 0; q < dxprev.cols(); ++q)
                        if (dxprev.at(c, q) != Rat(0) && it->second[p][q] >= 0)
                            img[it->second[p][q]] += sign * dxprev.at(c, q);
                tracker.add(std::move(img));
            }
    }

    std::vector<GradedMap> basis;
    for (const auto& vec : kernel) {
        if (!tracker.add(vec)) continue;
        GradedMap f;
        f.k = k;
        for (const auto& [d, tbl] : slot) {
            Mat m(static_cast<int>(tbl.size()), static_cast<int>(tbl.empty() ? 0 : tbl[0].size()));
            bool nonzero = false;
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c)
                    if (tbl[r][c] >= 0) {
                        m.at(r, c) = vec[tbl[r][c]];
                        nonzero = nonzero || m.at(r, c) != Rat(0);
                    }
            if (nonzero) f.comp[d] = std::move(m);
        }
        basis.push_back(std::move(f));
    }
    return basis;
}

PresentedComplex TypeACategory::cone(const PresentedComplex& x, const PresentedComplex& y,
                                     const GradedMap& f) const {
    PresentedComplex ys = shift_complex(y, f.k);
    // f reads as a degree 0 chain map into the realized shift
    std::map<int, Mat> comp;
    for (const auto& [d, m] : f.comp) comp[d] = m;

    PresentedComplex c;
    std::set<int> degs;
    for (const auto& [d, g] : x.gens) {
        degs.insert(d - 1);
    }
    for (const auto& [d, g] : ys.gens) degs.insert(d);
    for (int d : degs) {
        std::vector<int> g = gens_at(x, d + 1);
        const auto& gy = gens_at(ys, d);
        g.insert(g.end(), gy.begin(), gy.end());
        if (!g.empty()) c.gens[d] = std::move(g);
    }
    for (int d : degs) {
        int nx1 = gen_count(x, d + 1), nx2 = gen_count(x, d + 2);
        int ny0 = gen_count(ys, d), ny1 = gen_count(ys, d + 1);
        int rows = nx2 + ny1, cols = nx1 + ny0;
        if (rows == 0 || cols == 0) continue;
        Mat m(rows, cols);
        Mat dx = diff_at(x, d + 1);
        for (int r = 0; r < nx2; ++r)
            for (int cc = 0; cc < nx1; ++cc) m.at(r, cc) = -dx.at(r, cc);
        Mat dy = diff_at(ys, d);
        for (int r = 0; r < ny1; ++r)
            for (int cc = 0; cc < ny0; ++cc) m.at(nx2 + r, nx1 + cc) = dy.at(r, cc);
        auto it = comp.find(d + 1);
        if (it != comp.end())
            for (int r = 0; r < ny1; ++r)
                for (int cc = 0; cc < nx1; ++cc) m.at(nx2 + r, cc) = it->second.at(r, cc);
        c.diff[d] = std::move(m);
    }
    return tidy(std::move(c));
}

TypeACategory::FiberResult TypeACategory::fiber(const PresentedComplex& x,
                                                const PresentedComplex& y,
                                                const GradedMap& f) const {
    FiberResult r;
    r.fib = shift_complex(cone(x, y, f), -1);
    r.to_source.k = 0;
    for (const auto& [d, g] : r.fib.gens) {
        int nx = gen_count(x, d);
        if (nx == 0) continue;
        Mat m(nx, static_cast<int>(g.size()));
        for (int i = 0; i < nx; ++i) m.at(i, i) = Rat(1);  // X block sits first
        r.to_source.comp[d] = std::move(m);
    }
    return r;
}

TypeACategory::SumPieces TypeACategory::direct_sum(const std::vector<PresentedComplex>& parts) const {
    SumPieces s;
    s.offsets.resize(parts.size());
    std::set<int> degs;
    for (const auto& p : parts)
        for (const auto& [d, g] : p.gens) degs.insert(d);
    for (int d : degs) {
        std::vector<int> g;
        for (std::size_t p = 0; p < parts.size(); ++p) {
            s.offsets[p][d] = static_cast<int>(g.size());
            const auto& gp = gens_at(parts[p], d);
            g.insert(g.end(), gp.begin(), gp.end());
        }
        if (!g.empty()) s.total.gens[d] = std::move(g);
    }
    for (int d : degs) {
        int rows = gen_count(s.total, d + 1), cols = gen_count(s.total, d);
        if (rows == 0 || cols == 0) continue;
        Mat m(rows, cols);
        for (std::size_t p = 0; p < parts.size(); ++p) {
            Mat dp = diff_at(parts[p], d);
            int ro = s.offsets[p].count(d + 1) ? s.offsets[p][d + 1] : 0;
            int co = s.offsets[p][d];
            for (int r = 0; r < dp.rows(); ++r)
                for (int c = 0; c < dp.cols(); ++c) m.at(ro + r, co + c) = dp.at(r, c);
        }
        s.total.diff[d] = std::move(m);
    }
    s.total = tidy(std::move(s.total));
    return s;
}

GradedMap TypeACategory::stack_into(const SumPieces& sum, const std::vector<GradedMap>& fs,
                                    const PresentedComplex& x) const {
    GradedMap g;
    g.k = 0;
    for (const auto& [d, gx] : x.gens) {
        int rows = gen_count(sum.total, d);
        if (rows == 0) continue;
        Mat m(rows, static_cast<int>(gx.size()));
        bool nonzero = false;
        for (std::size_t p = 0; p < fs.size(); ++p) {
            ensure(fs[p].k == 0, "stack_into needs degree 0 maps");
            auto it = fs[p].comp.find(d);
            if (it == fs[p].comp.end()) continue;
            int ro = sum.offsets[p].at(d);
            for (int r = 0; r < it->second.rows(); ++r)
                for (int c = 0; c < it->second.cols(); ++c) {
                    m.at(ro + r, c) = it->second.at(r, c);
                    nonzero = nonzero || m.at(ro + r, c) != Rat(0);
                }
        }
        if (nonzero) g.comp[d] = std::move(m);
    }
    return g;
}

GradedMap TypeACategory::stack_from(const SumPieces& sum, const std::vector<GradedMap>& fs,
                                    const PresentedComplex& x) const {
    GradedMap g;
    g.k = 0;
    for (const auto& [d, gt] : sum.total.gens) {
        int rows = gen_count(x, d);
        if (rows == 0) continue;
        Mat m(rows, static_cast<int>(gt.size()));
        bool nonzero = false;
        for (std::size_t p = 0; p < fs.size(); ++p) {
            ensure(fs[p].k == 0, "stack_from needs degree 0 maps");
            auto it = fs[p].comp.find(d);
            if (it == fs[p].comp.end()) continue;
            int co = sum.offsets[p].at(d);
            for (int r = 0; r < it->second.rows(); ++r)
                for (int c = 0; c < it->second.cols(); ++c) {
                    m.at(r, co + c) = it->second.at(r, c);
                    nonzero = nonzero || m.at(r, co + c) != Rat(0);
                }
        }
        if (nonzero) g.comp[d] = std::move(m);
    }
    return g;
}

GradedMap TypeACategory::compose0(const GradedMap& g, const GradedMap& f) const {
    ensure(g.k == 0 && f.k == 0, "compose0 needs degree 0 maps");
    GradedMap r;
    r.k = 0;
    for (const auto& [d, mf] : f.comp) {
        auto it = g.comp.find(d);
        if (it == g.comp.end()) continue;
        Mat prod = it->second * mf;
        if (!prod.is_zero()) r.comp[d] = std::move(prod);
    }
    return r;
}

// --------------------------------------------------------------- cohomology

DerivedObject TypeACategory::decompose(const PresentedComplex& raw) const {
    PresentedComplex c = tidy(raw);
    DerivedObject result;
    std::set<int> degs;
    for (const auto& [d, g] : c.gens) degs.insert(d);
    for (int kdeg : degs) {
        const auto& labels = gens_at(c, kdeg);
        Mat dk = diff_at(c, kdeg);
        Mat dprev = diff_at(c, kdeg - 1);
        const auto& labels_up = gens_at(c, kdeg + 1);
        const auto& labels_dn = gens_at(c, kdeg - 1);

        // kernel bases and boundary matrices at every vertex truncation
        std::vector<std::vector<std::vector<Rat>>> z(n_ + 1);
        std::vector<Mat> bnd(n_ + 1);
        std::vector<std::vector<int>> keep(n_ + 1);
        for (int v = 1; v <= n_; ++v) {
            keep[v] = labels_leq(labels, v);
            Mat dv = submatrix(dk, labels_leq(labels_up, v), keep[v]);
            z[v] = nullspace_of(dv);
            bnd[v] = submatrix(dprev, keep[v], labels_leq(labels_dn, v));
        }

        // r(v,w) = rank of the induced map H_v -> H_w for v <= w
        std::vector<std::vector<int>> r(n_ + 2, std::vector<int>(n_ + 2, 0));
        for (int v = 1; v <= n_; ++v) {
            // positions of the <=v columns inside the <=w column list
            for (int w = v; w <= n_; ++w) {
                std::vector<int> pos;
                {
                    int j = 0;
                    for (int i = 0; i < static_cast<int>(keep[w].size()); ++i) {
                        if (j < static_cast<int>(keep[v].size()) && keep[w][i] == keep[v][j]) {
                            pos.push_back(i);
                            ++j;
                        }
                    }
                    ensure(j == static_cast<int>(keep[v].size()), "vertex truncations not nested");
                }
                Mat padded(static_cast<int>(keep[w].size()), static_cast<int>(z[v].size()));
                for (int col = 0; col < static_cast<int>(z[v].size()); ++col)
                    for (int i = 0; i < static_cast<int>(pos.size()); ++i)
                        padded.at(pos[i], col) = z[v][col][i];
                r[v][w] = rank_of(padded.hcat(bnd[w])) - rank_of(bnd[w]);
            }
        }
        for (int a = 1; a <= n_; ++a)
            for (int b = a; b <= n_; ++b) {
                int m = r[a][b] - r[a - 1][b] - (b + 1 <= n_ ? r[a][b + 1] : 0) +
                        (a - 1 >= 1 && b + 1 <= n_ ? r[a - 1][b + 1] : 0);
                ensure(m >= 0, "negative multiplicity in decomposition");
                if (m > 0) result.add(Interval{a, b}, -kdeg, m);
            }
    }

    // K0 sanity: the class of the complex equals the class of its cohomology.
    K0Class expected(n_);
    for (const auto& [d, g] : c.gens) {
        long long sign = (((d % 2) + 2) % 2 == 0) ? 1 : -1;
        for (int label : g) expected += sign * k0(Interval{label, n_});
    }
    ensure(expected == k0(result), "decomposition does not match the K0 class");
    return result;
}

// -------------------------------------------------------------- thick sets

void TypeACategory::build_cone_summands() {
    for (Interval x : intervals_)
        for (Interval y : intervals_)
            for (int k = 0; k <= 1; ++k) {
                int h = hom_interval(x, y, k);
                if (h == 0) continue;
                ensure(h == 1, "interval hom spaces are at most one dimensional");
                PresentedComplex cx = present(DerivedObject::of(x));
                PresentedComplex cy = present(DerivedObject::of(y));
                auto basis = hom_basis(cx, cy, k);
                ensure(basis.size() == 1, "chain model disagrees with hom table");
                DerivedObject summands = decompose(cone(cx, cy, basis[0]));
                ThickSet s;
                for (const auto& [t, m] : summands.terms()) s.insert(t.iv);
                cone_summands_[interval_index(x)][interval_index(y)][k] = std::move(s);
            }
}

ThickSet TypeACategory::thick_closure(const ThickSet& gens) const {
    ThickSet cur = gens;
    for (Interval iv : cur) check_interval(iv);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Interval> members(cur.begin(), cur.end());
        for (Interval x : members)
            for (Interval y : members)
                for (int k = 0; k <= 1; ++k) {
                    if (hom_interval(x, y, k) == 0) continue;
                    const ThickSet& add =
                        cone_summands_.at(interval_index(x)).at(interval_index(y)).at(k);
                    for (Interval iv : add) grew = cur.insert(iv).second || grew;
                }
    }
    return cur;
}

bool TypeACategory::is_thick(const ThickSet& s) const { return thick_closure(s) == s; }

ThickSet TypeACategory::perp(const ThickSet& s, Side side) const {
    for (Interval iv : s) check_interval(iv);
    ThickSet out;
    for (Interval x : intervals_) {
        bool ok = true;
        for (Interval m : s)
            for (int k = 0; k <= 1 && ok; ++k)
                ok = (side == Side::left ? hom_interval(x, m, k) : hom_interval(m, x, k)) == 0;
        if (ok) out.insert(x);
    }
    ensure(is_thick(out), "perpendicular category is not thick");
    return out;
}

bool TypeACategory::in_thick(const ThickSet& s, const DerivedObject& x) const {
    check_object(x);
    for (const auto& [t, m] : x.terms())
        if (!s.count(t.iv)) return false;
    return true;
}

int TypeACategory::k0_rank(const ThickSet& s) const {
    if (s.empty()) return 0;
    Mat m(static_cast<int>(s.size()), n_);
    int row = 0;
    for (Interval iv : s) {
        K0Class c = k0(iv);
        for (int j = 0; j < n_; ++j) m.at(row, j) = Rat(c.v[j]);
        ++row;
    }
    return rank_of(m);
}

std::optional<std::vector<Interval>> TypeACategory::generating_sequence(const ThickSet& s) const {
    if (s.empty()) return std::vector<Interval>{};
    int r = k0_rank(s);
    std::vector<Interval> members(s.begin(), s.end());
    std::vector<Interval> seq;
    std::vector<bool> used(members.size(), false);

    auto orthogonal_after = [&](Interval e) {
        for (Interval prev : seq)
            for (int k = 0; k <= 1; ++k)
                if (hom_interval(e, prev, k) != 0) return false;
        return true;
    };

    std::optional<std::vector<Interval>> found;
    auto dfs = [&](auto&& self) -> bool {
        if (static_cast<int>(seq.size()) == r) {
            ThickSet gen(seq.begin(), seq.end());
            if (thick_closure(gen) == s) {
                found = seq;
                return true;
            }
            return false;
        }
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (used[i] || !orthogonal_after(members[i])) continue;
            used[i] = true;
            seq.push_back(members[i]);
            if (self(self)) return true;
            seq.pop_back();
            used[i] = false;
        }
        return false;
    };
    dfs(dfs);
    return found;
}

DerivedObject TypeACategory::project_quotient(const ThickSet& u, const DerivedObject& x) const {
    require(is_thick(u), "projection needs a thick subcategory");
    check_object(x);
    auto seq = generating_sequence(u);
    ensure(seq.has_value(), "thick subcategory without a generating sequence");

    DerivedObject cur = x;
    for (auto it = seq->rbegin(); it != seq->rend(); ++it) {
        Interval e = *it;
        if (cur.is_zero()) break;
        PresentedComplex xc = present(cur);
        // Hom(E[k], X) can only be nonzero for k within one step of X's shifts.
        int lo = cur.terms().begin()->first.shift - 1;
        int hi = cur.terms().rbegin()->first.shift;
        std::vector<PresentedComplex> parts;
        std::vector<GradedMap> maps;
        for (int k = lo; k <= hi; ++k) {
            PresentedComplex ek = present(DerivedObject::of(e, k));
            for (GradedMap& f : hom_basis(ek, xc, 0)) {
                parts.push_back(ek);
                maps.push_back(std::move(f));
            }
        }
        if (parts.empty()) continue;
        SumPieces sum = direct_sum(parts);
        GradedMap ev = stack_from(sum, maps, xc);
        cur = decompose(cone(sum.total, xc, ev));
        // the cofiber of the evaluation lands in the right perpendicular of e
        if (!cur.is_zero()) {
            DerivedObject eobj = DerivedObject::of(e);
            int shift_lo = cur.terms().begin()->first.shift;
            int shift_hi = cur.terms().rbegin()->first.shift;
            for (int k = -shift_hi; k <= -shift_lo + 1; ++k)
                ensure(hom_dim(eobj, cur, k) == 0,
                       "evaluation cofiber still sees the stripped object");
        }
    }
    return cur;
}

}  // namespace sodlab
