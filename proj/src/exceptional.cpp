#include "sodlab/exceptional.hpp"

#include <string>

namespace sodlab {

bool is_exceptional(const TypeACategory& cat, const DerivedObject& x) {
    cat.check_object(x);
    if (x.terms().size() != 1 || x.terms().begin()->second != 1) return false;
    if (cat.hom_dim(x, x, 0) != 1) return false;
    for (int k = -2; k <= 2; ++k)
        if (k != 0 && cat.hom_dim(x, x, k) != 0) return false;
    return true;
}

bool is_exceptional_sequence(const TypeACategory& cat, const std::vector<Interval>& items) {
    for (Interval e : items) {
        cat.check_interval(e);
        if (!is_exceptional(cat, DerivedObject::of(e))) return false;
    }
    for (std::size_t j = 1; j < items.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            for (int k = 0; k <= 1; ++k)
                if (cat.hom_interval(items[j], items[i], k) != 0) return false;
    return true;
}

bool is_full_sequence(const TypeACategory& cat, const std::vector<Interval>& items) {
    if (static_cast<int>(items.size()) != cat.n()) return false;
    if (!is_exceptional_sequence(cat, items)) return false;
    ThickSet all(cat.intervals().begin(), cat.intervals().end());
    return cat.thick_closure(ThickSet(items.begin(), items.end())) == all;
}

ExceptionalSequence make_sequence(const TypeACategory& cat, std::vector<Interval> items) {
    require(is_exceptional_sequence(cat, items), "not an exceptional sequence");
    ExceptionalSequence s;
    s.full = is_full_sequence(cat, items);
    s.items = std::move(items);
    return s;
}

std::vector<ExceptionalSequence> enumerate_full_exceptional_sequences(const TypeACategory& cat) {
    std::vector<ExceptionalSequence> out;
    std::vector<Interval> seq;
    ThickSet all(cat.intervals().begin(), cat.intervals().end());

    auto extends = [&](Interval e) {
        for (Interval prev : seq)
            for (int k = 0; k <= 1; ++k)
                if (cat.hom_interval(e, prev, k) != 0) return false;
        return true;
    };
    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(seq.size()) == cat.n()) {
            if (cat.thick_closure(ThickSet(seq.begin(), seq.end())) == all) {
                ExceptionalSequence s;
                s.items = seq;
                s.full = true;
                out.push_back(std::move(s));
            }
            return;
        }
        for (Interval e : cat.intervals()) {
            bool used = false;
            for (Interval p : seq) used = used || p == e;
            if (used || !extends(e)) continue;
            seq.push_back(e);
            self(self);
            seq.pop_back();
        }
    };
    dfs(dfs);
    return out;
}

namespace {

// Realizes the triangle object (fiber of ev for left, cone of coev for right)
// and strips the shift; the result must be a single exceptional summand.
Interval normalize_single(const TypeACategory& cat, const DerivedObject& x, const char* what) {
    ensure(x.terms().size() == 1 && x.terms().begin()->second == 1,
           std::string(what) + " is not indecomposable");
    return x.terms().begin()->first.iv;
}

}  // namespace

ExceptionalSequence left_mutate(const TypeACategory& cat, const ExceptionalSequence& s, int i) {
    require(1 <= i && i + 1 <= static_cast<int>(s.items.size()), "mutation index out of range");
    Interval e = s.items[i - 1], f = s.items[i];

    PresentedComplex fc = cat.present(DerivedObject::of(f));
    std::vector<PresentedComplex> parts;
    std::vector<GradedMap> maps;
    for (int k = 0; k <= 1; ++k) {
        // component Hom(E, F[k]) contributes copies of E[-k]
        PresentedComplex ek = cat.present(DerivedObject::of(e, -k));
        for (GradedMap& g : cat.hom_basis(ek, fc, 0)) {
            parts.push_back(ek);
            maps.push_back(std::move(g));
        }
    }
    std::vector<Interval> items = s.items;
    if (parts.empty()) {
        items[i - 1] = f;  // graded Hom vanishes: pure transposition
        items[i] = e;
    } else {
        auto sum = cat.direct_sum(parts);
        GradedMap ev = cat.stack_from(sum, maps, fc);
        DerivedObject l = cat.decompose(cat.fiber(sum.total, fc, ev).fib);
        items[i - 1] = normalize_single(cat, l, "left mutation fiber");
        items[i] = e;
    }
    ExceptionalSequence r = make_sequence(cat, std::move(items));
    ensure(!s.full || r.full, "mutation of a full sequence lost fullness");
    return r;
}

ExceptionalSequence right_mutate(const TypeACategory& cat, const ExceptionalSequence& s, int i) {
    require(1 <= i && i + 1 <= static_cast<int>(s.items.size()), "mutation index out of range");
    Interval e = s.items[i - 1], f = s.items[i];

    PresentedComplex ec = cat.present(DerivedObject::of(e));
    std::vector<PresentedComplex> parts;
    std::vector<GradedMap> maps;
    for (int k = 0; k <= 1; ++k) {
        // component Hom(E, F[k])^* contributes copies of F[k]
        PresentedComplex fk = cat.present(DerivedObject::of(f, k));
        for (GradedMap& g : cat.hom_basis(ec, fk, 0)) {
            parts.push_back(fk);
            maps.push_back(std::move(g));
        }
    }
    std::vector<Interval> items = s.items;
    if (parts.empty()) {
        items[i - 1] = f;
        items[i] = e;
    } else {
        auto sum = cat.direct_sum(parts);
        GradedMap coev = cat.stack_into(sum, maps, ec);
        DerivedObject r = cat.decompose(cat.cone(ec, sum.total, coev));
        items[i - 1] = f;
        items[i] = normalize_single(cat, r, "right mutation cone");
    }
    ExceptionalSequence out = make_sequence(cat, std::move(items));
    ensure(!s.full || out.full, "mutation of a full sequence lost fullness");
    return out;
}

}  // namespace sodlab
