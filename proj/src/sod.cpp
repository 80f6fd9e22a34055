#include "sodlab/sod.hpp"

#include <algorithm>
#include <string>

namespace sodlab {

namespace {

// ------------------------------------------------------------- set algebra

ThickSet set_union(const ThickSet& a, const ThickSet& b) {
    ThickSet r = a;
    r.insert(b.begin(), b.end());
    return r;
}

ThickSet set_intersection(const ThickSet& a, const ThickSet& b) {
    ThickSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(r, r.begin()));
    return r;
}

bool is_subset(const ThickSet& a, const ThickSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

ThickSet whole_category(const TypeACategory& cat) {
    return ThickSet(cat.intervals().begin(), cat.intervals().end());
}

// --------------------------------------------------------------- validation

// First violated axiom of a semi-orthogonal family generating `ambient`, or
// empty when the family is valid. Blocks are reported 1-based.
std::string family_violation(const TypeACategory& cat, const std::vector<ThickSet>& blocks,
                             const ThickSet& ambient, std::size_t min_blocks) {
    if (blocks.size() < min_blocks)
        return "needs at least " + std::to_string(min_blocks) + " blocks";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        std::string tag = "block " + std::to_string(i + 1);
        if (blocks[i].empty()) return tag + " is zero";
        for (Interval x : blocks[i]) cat.check_interval(x);
        if (!cat.is_thick(blocks[i])) return tag + " is not a thick subcategory";
        if (!is_subset(blocks[i], ambient)) return tag + " leaves the ambient subcategory";
    }
    for (std::size_t j = 1; j < blocks.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            for (Interval x : blocks[j])
                for (Interval y : blocks[i])
                    for (int k = 0; k <= 1; ++k)
                        if (cat.hom_interval(x, y, k) != 0)
                            return "semi-orthogonality fails from block " + std::to_string(j + 1) +
                                   " into block " + std::to_string(i + 1);
    ThickSet all;
    for (const ThickSet& b : blocks) all = set_union(all, b);
    if (cat.thick_closure(all) != ambient) return "blocks do not generate";
    return "";
}

// Relative exceptional sequence check: items inside `ambient`, semiorthogonal
// in sequence order, generating `ambient`.
std::string chunk_violation(const TypeACategory& cat, const std::vector<Interval>& items,
                            const ThickSet& ambient) {
    for (Interval e : items) {
        cat.check_interval(e);
        if (!ambient.count(e)) return "witness item " + to_string(e) + " is outside its piece";
    }
    for (std::size_t j = 1; j < items.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            for (int k = 0; k <= 1; ++k)
                if (cat.hom_interval(items[j], items[i], k) != 0)
                    return "witness items are not semi-orthogonal";
    if (cat.thick_closure(ThickSet(items.begin(), items.end())) != ambient)
        return "witness does not generate its piece";
    return "";
}

void validate_sod(const TypeACategory& cat, const Sod& s) {
    std::string msg = family_violation(cat, s.blocks, whole_category(cat), 2);
    require(msg.empty(), msg);
}

void validate_tstability(const TypeACategory& cat, const TStability& t) {
    std::string msg = family_violation(cat, t.pieces, whole_category(cat), 1);
    require(msg.empty(), msg);
}

std::string filtration_violation(const TypeACategory& cat, const std::vector<ThickSet>& chain,
                                 Side side) {
    if (chain.size() < 3) return "chain needs at least two proper steps";
    if (!chain.front().empty()) return "chain must start at zero";
    if (chain.back() != whole_category(cat)) return "chain must end at the whole category";
    for (std::size_t i = 1; i < chain.size(); ++i) {
        std::string tag = "term " + std::to_string(i);
        for (Interval x : chain[i]) cat.check_interval(x);
        if (!cat.is_thick(chain[i])) return tag + " is not a thick subcategory";
        if (!is_subset(chain[i - 1], chain[i]) || chain[i - 1] == chain[i])
            return tag + " does not strictly contain its predecessor";
    }
    // admissibility: each proper step carries an internal two-block
    // decomposition on the recorded side
    for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
        ThickSet comp = set_intersection(cat.perp(chain[i], side == Side::right ? Side::right
                                                                                : Side::left),
                                         chain[i + 1]);
        if (cat.thick_closure(set_union(comp, chain[i])) != chain[i + 1])
            return "term " + std::to_string(i) + " is not admissible in its successor";
    }
    return "";
}

void validate_filtration(const TypeACategory& cat, const Filtration& f) {
    std::string msg = filtration_violation(cat, f.chain, f.side);
    require(msg.empty(), msg);
}

std::optional<std::vector<std::vector<Interval>>> checked_witness(
    const TypeACategory& cat, const std::vector<ThickSet>& blocks,
    std::optional<std::vector<std::vector<Interval>>> witness) {
    if (!witness) return witness;
    require(witness->size() == blocks.size(), "witness chunk count differs from block count");
    std::vector<Interval> flat;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        std::string msg = chunk_violation(cat, (*witness)[i], blocks[i]);
        require(msg.empty(), msg);
        flat.insert(flat.end(), (*witness)[i].begin(), (*witness)[i].end());
    }
    require(is_full_sequence(cat, flat), "witness is not a full exceptional sequence");
    return witness;
}

}  // namespace

// --------------------------------------------------------------- validation

Sod make_sod(const TypeACategory& cat, std::vector<ThickSet> blocks,
             std::optional<std::vector<std::vector<Interval>>> witness) {
    Sod s;
    s.blocks = std::move(blocks);
    validate_sod(cat, s);
    s.generator_witness = checked_witness(cat, s.blocks, std::move(witness));
    return s;
}

TStability make_tstability(const TypeACategory& cat, std::vector<ThickSet> pieces) {
    TStability t;
    t.pieces = std::move(pieces);
    validate_tstability(cat, t);
    return t;
}

Filtration make_filtration(const TypeACategory& cat, std::vector<ThickSet> chain, Side side) {
    Filtration f;
    f.chain = std::move(chain);
    f.side = side;
    validate_filtration(cat, f);
    return f;
}

// -------------------------------------------------------------- bijections

Sod eta(const TypeACategory& cat, const TStability& t) {
    validate_tstability(cat, t);
    require(t.pieces.size() >= 2, "one piece gives only the trivial decomposition");
    Sod s;
    s.blocks = t.pieces;
    return s;
}

TStability eta_inv(const TypeACategory& cat, const Sod& s) {
    validate_sod(cat, s);
    TStability t;
    t.pieces = s.blocks;
    return t;
}

Filtration xi(const TypeACategory& cat, const Sod& s) {
    validate_sod(cat, s);
    std::size_t m = s.blocks.size();
    std::vector<ThickSet> chain(m + 1);
    for (std::size_t i = 1; i <= m; ++i)
        chain[i] = cat.thick_closure(set_union(chain[i - 1], s.blocks[m - i]));
    std::string msg = filtration_violation(cat, chain, Side::right);
    ensure(msg.empty(), "derived chain is invalid: " + msg);
    Filtration f;
    f.chain = std::move(chain);
    f.side = Side::right;
    return f;
}

Sod xi_inv(const TypeACategory& cat, const Filtration& f) {
    require(f.side == Side::right, "inverse expects a right admissible chain");
    validate_filtration(cat, f);
    std::size_t m = f.chain.size() - 1;
    std::vector<ThickSet> blocks(m);
    for (std::size_t i = 1; i <= m; ++i)
        blocks[i - 1] =
            set_intersection(cat.perp(f.chain[m - i], Side::right), f.chain[m - i + 1]);
    Sod s;
    s.blocks = std::move(blocks);
    validate_sod(cat, s);
    return s;
}

Sod chi(const TypeACategory& cat, const ExceptionalSequence& seq) {
    require(is_full_sequence(cat, seq.items), "sequence is not full");
    std::vector<ThickSet> blocks;
    std::vector<std::vector<Interval>> witness;
    for (Interval e : seq.items) {
        blocks.push_back({e});
        witness.push_back({e});
    }
    return make_sod(cat, std::move(blocks), std::move(witness));
}

ChiInvResult chi_inv(const TypeACategory& cat, const Sod& s) {
    validate_sod(cat, s);
    ChiInvResult r;
    std::vector<Interval> items;
    for (std::size_t i = 0; i < s.blocks.size(); ++i) {
        if (s.blocks[i].size() != 1) {
            r.offending_block = static_cast<int>(i + 1);
            return r;
        }
        items.push_back(*s.blocks[i].begin());
    }
    ExceptionalSequence seq = make_sequence(cat, std::move(items));
    ensure(seq.full, "singleton blocks of a decomposition must form a full sequence");
    r.seq = std::move(seq);
    return r;
}

// ------------------------------------------------------- order and finests

namespace {

bool finer_families(const TypeACategory& cat, const std::vector<ThickSet>& a,
                    const std::vector<ThickSet>& b) {
    std::size_t la = a.size(), lb = b.size();
    if (la > 12) throw capacity_error("refinement search supports at most 12 blocks");
    if (la < lb) return false;
    // split masks: bit i set = cut between positions i and i+1 of a
    for (unsigned mask = 0; mask < (1u << (la - 1)); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != lb - 1) continue;
        bool ok = true;
        std::size_t start = 0, chunk = 0;
        for (std::size_t i = 0; i < la && ok; ++i) {
            bool cut = i + 1 == la || (mask >> i) & 1u;
            if (!cut) continue;
            ThickSet u;
            for (std::size_t p = start; p <= i; ++p) u = set_union(u, a[p]);
            ok = cat.thick_closure(u) == b[chunk];
            start = i + 1;
            ++chunk;
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace

bool is_finer(const TypeACategory& cat, const Sod& a, const Sod& b) {
    validate_sod(cat, a);
    validate_sod(cat, b);
    return finer_families(cat, a.blocks, b.blocks);
}

bool is_finer(const TypeACategory& cat, const TStability& a, const TStability& b) {
    validate_tstability(cat, a);
    validate_tstability(cat, b);
    return finer_families(cat, a.pieces, b.pieces);
}

FinestCheck is_finest_sufficient(const TypeACategory& cat, const Sod& s) {
    validate_sod(cat, s);
    FinestCheck r;
    for (std::size_t i = 0; i < s.blocks.size(); ++i)
        for (Interval x : s.blocks[i])
            for (Interval y : s.blocks[i]) {
                if (x == y) continue;
                bool linked = false;
                for (int k = 0; k <= 1 && !linked; ++k)
                    linked = cat.hom_interval(x, y, k) != 0;
                if (!linked) {
                    r.finest = false;
                    r.block = static_cast<int>(i + 1);
                    r.x = x;
                    r.y = y;
                    return r;
                }
            }
    r.finest = true;
    return r;
}

bool is_finest_exhaustive(const TypeACategory& cat, const Sod& s) {
    validate_sod(cat, s);
    for (const Sod& other : enumerate_all_sods(cat)) {
        if (other == s) continue;
        if (finer_families(cat, other.blocks, s.blocks)) return false;
    }
    return true;
}

TStability refine_locally(const TypeACategory& cat, const TStability& t, int i,
                          const TStability& local) {
    validate_tstability(cat, t);
    require(1 <= i && i <= static_cast<int>(t.pieces.size()), "piece index out of range");
    const ThickSet& ambient = t.pieces[i - 1];
    std::string msg = family_violation(cat, local.pieces, ambient, 1);
    require(msg.empty(), "local refinement: " + msg);
    std::vector<ThickSet> pieces(t.pieces.begin(), t.pieces.begin() + (i - 1));
    pieces.insert(pieces.end(), local.pieces.begin(), local.pieces.end());
    pieces.insert(pieces.end(), t.pieces.begin() + i, t.pieces.end());
    TStability out;
    out.pieces = std::move(pieces);
    std::string global = family_violation(cat, out.pieces, whole_category(cat), 1);
    ensure(global.empty(), "spliced refinement is invalid: " + global);
    ensure(finer_families(cat, out.pieces, t.pieces), "refinement is not finer than the input");
    return out;
}

Sod refine_to_finest(const TypeACategory& cat, const Sod& s) {
    validate_sod(cat, s);
    std::vector<ThickSet> blocks;
    std::vector<std::vector<Interval>> witness;
    for (const ThickSet& b : s.blocks) {
        auto gen = cat.generating_sequence(b);
        ensure(gen.has_value(), "block admits no exceptional generating sequence");
        for (Interval e : *gen) {
            blocks.push_back({e});
            witness.push_back({e});
        }
    }
    Sod out = make_sod(cat, std::move(blocks), std::move(witness));
    ensure(finer_families(cat, out.blocks, s.blocks), "refinement is not finer than the input");
    ensure(is_finest_sufficient(cat, out).finest, "refinement is not finest");
    return out;
}

std::vector<Sod> enumerate_all_sods(const TypeACategory& cat) {
    std::map<std::vector<ThickSet>, std::vector<std::vector<Interval>>> seen;
    int n = cat.n();
    for (const ExceptionalSequence& seq : enumerate_full_exceptional_sequences(cat)) {
        // mask bit i cuts between positions i and i+1; mask 0 (one block) is
        // the trivial decomposition and stays excluded
        for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
            std::vector<ThickSet> blocks;
            std::vector<std::vector<Interval>> witness;
            std::size_t start = 0;
            for (int i = 0; i < n; ++i) {
                bool cut = i + 1 == n || (mask >> i) & 1u;
                if (!cut) continue;
                std::vector<Interval> chunk(seq.items.begin() + start, seq.items.begin() + i + 1);
                blocks.push_back(cat.thick_closure(ThickSet(chunk.begin(), chunk.end())));
                witness.push_back(std::move(chunk));
                start = i + 1;
            }
            seen.try_emplace(std::move(blocks), std::move(witness));
        }
    }
    std::vector<Sod> out;
    for (auto& [blocks, witness] : seen) {
        Sod s;
        s.blocks = blocks;
        s.generator_witness = witness;
        out.push_back(std::move(s));
    }
    return out;
}

// ---------------------------------------------------------------- HN towers

namespace {

// Degree span of the nonzero part of a presented complex.
std::optional<std::pair<int, int>> degree_span(const PresentedComplex& c) {
    std::optional<std::pair<int, int>> span;
    for (const auto& [d, g] : c.gens) {
        if (g.empty()) continue;
        if (!span)
            span = {d, d};
        else
            span = {std::min(span->first, d), std::max(span->second, d)};
    }
    return span;
}

}  // namespace

HNResult hn_filtration(const TypeACategory& cat, const TStability& t, const DerivedObject& x,
                       const std::vector<std::vector<Interval>>& witness) {
    validate_tstability(cat, t);
    require(!x.is_zero(), "the zero object has no filtration");
    cat.check_object(x);
    require(witness.size() == t.pieces.size(), "one witness chunk per piece required");
    for (std::size_t p = 0; p < witness.size(); ++p) {
        std::string msg = chunk_violation(cat, witness[p], t.pieces[p]);
        require(msg.empty(), msg);
    }

    PresentedComplex cur = cat.present(x);
    std::vector<HNFactor> ascending;
    for (std::size_t p = 0; p < witness.size(); ++p) {
        PresentedComplex before = cur;
        std::optional<GradedMap> into_before;  // composite cur -> before
        for (Interval e : witness[p]) {
            auto span = degree_span(cur);
            if (!span) break;
            // graded coevaluation cur -> sum of copies of e across all shifts
            std::vector<PresentedComplex> parts;
            std::vector<GradedMap> maps;
            for (int k = -span->second - 1; k <= -span->first + 1; ++k) {
                PresentedComplex ek = cat.present(DerivedObject::of(e, k));
                for (GradedMap& g : cat.hom_basis(cur, ek, 0)) {
                    parts.push_back(ek);
                    maps.push_back(std::move(g));
                }
            }
            if (parts.empty()) continue;
            auto sum = cat.direct_sum(parts);
            GradedMap coev = cat.stack_into(sum, maps, cur);
            auto fib = cat.fiber(cur, sum.total, coev);
            into_before = into_before ? cat.compose0(*into_before, fib.to_source) : fib.to_source;
            cur = std::move(fib.fib);
        }
        if (!into_before) continue;
        DerivedObject factor = cat.decompose(cat.cone(cur, before, *into_before));
        if (factor.is_zero()) continue;
        for (const auto& [term, mult] : factor.terms())
            ensure(t.pieces[p].count(term.iv) != 0, "tower factor escapes its piece");
        ascending.push_back({std::move(factor), static_cast<int>(p + 1)});
    }
    ensure(cat.decompose(cur).is_zero(), "tower peel left a remainder");

    HNResult r;
    r.factors.assign(ascending.rbegin(), ascending.rend());
    ensure(!r.factors.empty(), "a nonzero object has a nonempty tower");
    K0Class total(cat.n());
    for (const HNFactor& f : r.factors) total = total + cat.k0(f.object);
    ensure(total == cat.k0(x), "tower factors fail to recompose the class");
    r.phi_plus = r.factors.front().phase;
    r.phi_minus = r.factors.back().phase;
    return r;
}

HNResult hn_filtration(const TypeACategory& cat, const TStability& t, const DerivedObject& x) {
    validate_tstability(cat, t);
    std::vector<std::vector<Interval>> witness;
    for (const ThickSet& piece : t.pieces) {
        auto gen = cat.generating_sequence(piece);
        ensure(gen.has_value(), "piece admits no exceptional generating sequence");
        witness.push_back(std::move(*gen));
    }
    return hn_filtration(cat, t, x, witness);
}

HNResult normalize_tower(const TypeACategory& cat, const TStability& t, const DerivedObject& x,
                         std::vector<HNFactor> factors) {
    validate_tstability(cat, t);
    require(!x.is_zero(), "the zero object has no filtration");
    cat.check_object(x);
    require(!factors.empty(), "at least one factor required");
    K0Class total(cat.n());
    for (const HNFactor& f : factors) {
        require(!f.object.is_zero(), "zero factors are not allowed");
        cat.check_object(f.object);
        require(1 <= f.phase && f.phase <= static_cast<int>(t.pieces.size()),
                "factor phase out of range");
        for (const auto& [term, mult] : f.object.terms())
            require(t.pieces[f.phase - 1].count(term.iv) != 0, "factor lies outside its piece");
        total = total + cat.k0(f.object);
    }
    require(total == cat.k0(x), "factors do not recompose the object in K-theory");

    // bubble into decreasing phase order: equal neighbours merge (their
    // extension is forced split), misordered neighbours commute because the
    // higher phase has no graded maps into the lower one
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
            if (factors[i].phase == factors[i + 1].phase) {
                factors[i].object = factors[i].object.plus(factors[i + 1].object);
                factors.erase(factors.begin() + i + 1);
                changed = true;
                break;
            }
            if (factors[i].phase < factors[i + 1].phase) {
                const DerivedObject& hi = factors[i + 1].object;
                const DerivedObject& lo = factors[i].object;
                int hs0 = hi.terms().begin()->first.shift;
                int hs1 = hi.terms().rbegin()->first.shift;
                int ls0 = lo.terms().begin()->first.shift;
                int ls1 = lo.terms().rbegin()->first.shift;
                for (int k = hs0 - ls1; k <= hs1 - ls0 + 1; ++k)
                    ensure(cat.hom_dim(hi, lo, k) == 0, "semi-orthogonality lost while sorting");
                std::swap(factors[i], factors[i + 1]);
                changed = true;
                break;
            }
        }
    }

    HNResult truth = hn_filtration(cat, t, x);
    require(truth.factors == factors, "factors do not assemble to the object");
    return truth;
}

// ---------------------------------------------------------------- mutations

Sod rho(const TypeACategory& cat, const Sod& s, int i, Side dir) {
    validate_sod(cat, s);
    int m = static_cast<int>(s.blocks.size());
    require(1 <= i && i <= m - 1, "mutation index out of range");
    const ThickSet& a = s.blocks[i - 1];
    const ThickSet& b = s.blocks[i];
    ThickSet span = cat.thick_closure(set_union(a, b));
    std::vector<ThickSet> blocks = s.blocks;
    if (dir == Side::right) {
        blocks[i - 1] = set_intersection(cat.perp(a, Side::right), span);
        blocks[i] = a;
    } else {
        blocks[i - 1] = b;
        blocks[i] = set_intersection(cat.perp(b, Side::left), span);
    }
    Sod out;
    out.blocks = std::move(blocks);
    std::string msg = family_violation(cat, out.blocks, whole_category(cat), 2);
    ensure(msg.empty(), "mutation produced an invalid decomposition: " + msg);
    return out;
}

Filtration sigma(const TypeACategory& cat, const Filtration& f, int i, Side dir) {
    require(f.side == Side::right, "mutations act on right admissible chains");
    validate_filtration(cat, f);
    int m = static_cast<int>(f.chain.size()) - 1;
    require(1 <= i && i <= m - 1, "mutation index out of range");
    std::vector<ThickSet> chain = f.chain;
    if (dir == Side::right) {
        ThickSet comp = set_intersection(cat.perp(chain[i], Side::right), chain[i + 1]);
        chain[i] = cat.thick_closure(set_union(comp, chain[i - 1]));
    } else {
        ThickSet prev = set_intersection(cat.perp(chain[i - 1], Side::right), chain[i]);
        chain[i] = set_intersection(cat.perp(prev, Side::left), chain[i + 1]);
    }
    std::string msg = filtration_violation(cat, chain, Side::right);
    ensure(msg.empty(), "mutation produced an invalid chain: " + msg);
    Filtration out;
    out.chain = std::move(chain);
    out.side = Side::right;
    return out;
}

}  // namespace sodlab
