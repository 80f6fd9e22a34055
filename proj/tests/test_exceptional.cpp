#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "goldens.hpp"
#include "oracles.hpp"
#include "sodlab/exceptional.hpp"

using namespace sodlab;

namespace {

Interval iv(int a, int b) { return Interval{a, b}; }

ExceptionalSequence seq_of(const TypeACategory& cat, std::vector<Interval> items) {
    return make_sequence(cat, std::move(items));
}

}  // namespace

TEST_CASE("exceptional objects") {
    TypeACategory cat(3);
    CHECK(is_exceptional(cat, DerivedObject::of(iv(1, 1))));
    CHECK(is_exceptional(cat, DerivedObject::of(iv(1, 3))));
    CHECK(is_exceptional(cat, DerivedObject::of(iv(2, 2), 4)));
    CHECK_FALSE(is_exceptional(cat, DerivedObject::of(iv(1, 1)).plus(DerivedObject::of(iv(2, 2)))));
    CHECK_FALSE(is_exceptional(cat, DerivedObject::of(iv(1, 1), 0, 2)));
    CHECK_FALSE(is_exceptional(cat, DerivedObject{}));
    // a summand split across shifts is still decomposable
    CHECK_FALSE(is_exceptional(cat, DerivedObject::of(iv(1, 1)).plus(DerivedObject::of(iv(1, 1), 2))));
}

TEST_CASE("sequence validation") {
    TypeACategory cat(2);
    CHECK(is_exceptional_sequence(cat, {iv(1, 1), iv(2, 2)}));
    CHECK_FALSE(is_exceptional_sequence(cat, {iv(2, 2), iv(1, 1)}));  // Ext^1(S1,S2) back-map
    CHECK(is_full_sequence(cat, {iv(1, 1), iv(2, 2)}));
    CHECK_FALSE(is_full_sequence(cat, {iv(1, 1)}));
    CHECK(seq_of(cat, {iv(2, 2), iv(1, 2)}).full);
    CHECK_THROWS_AS(make_sequence(cat, {iv(1, 1), iv(1, 2)}), invalid_input);
}

TEST_CASE("enumeration counts follow the exceptional sequence formula") {
    for (int n = 1; n <= 4; ++n) {
        TypeACategory cat(n);
        auto seqs = enumerate_full_exceptional_sequences(cat);
        CHECK(static_cast<long long>(seqs.size()) == oracle::full_sequence_count(n));
        // deterministic lexicographic order, no duplicates
        CHECK(std::is_sorted(seqs.begin(), seqs.end()));
        std::set<std::vector<Interval>> dedup;
        for (const auto& s : seqs) {
            CHECK(s.full);
            dedup.insert(s.items);
        }
        CHECK(dedup.size() == seqs.size());
    }
}

TEST_CASE("A2 and A3 enumerations match the frozen lists") {
    TypeACategory a2(2);
    auto pairs = enumerate_full_exceptional_sequences(a2);
    std::set<std::vector<Interval>> got;
    for (const auto& s : pairs) got.insert(s.items);
    std::set<std::vector<Interval>> want;
    for (const auto& row : golden::a2_pairs()) want.insert({row[0], row[1]});
    CHECK(got == want);

    TypeACategory a3(3);
    auto triples = enumerate_full_exceptional_sequences(a3);
    std::set<std::vector<Interval>> got3;
    for (const auto& s : triples) got3.insert(s.items);
    std::set<std::vector<Interval>> want3;
    for (const auto& row : golden::a3_triples()) want3.insert({row[0], row[1], row[2]});
    CHECK(got3 == want3);
}

TEST_CASE("full sequences induce a Z-basis of K0") {
    for (int n = 2; n <= 4; ++n) {
        TypeACategory cat(n);
        for (const auto& s : enumerate_full_exceptional_sequences(cat)) {
            Mat m(n, n);
            for (int i = 0; i < n; ++i) {
                K0Class c = cat.k0(s.items[i]);
                for (int j = 0; j < n; ++j) m.at(i, j) = Rat(c.v[j]);
            }
            Rat d = det_of(m);
            CHECK((d == Rat(1) || d == Rat(-1)));
        }
    }
}

TEST_CASE("named mutations") {
    TypeACategory a2(2);
    CHECK(left_mutate(a2, seq_of(a2, {iv(1, 1), iv(2, 2)}), 1).items ==
          std::vector<Interval>{iv(1, 2), iv(1, 1)});
    CHECK(right_mutate(a2, seq_of(a2, {iv(1, 2), iv(1, 1)}), 1).items ==
          std::vector<Interval>{iv(1, 1), iv(2, 2)});

    TypeACategory a3(3);
    CHECK(left_mutate(a3, seq_of(a3, {iv(1, 1), iv(2, 2), iv(3, 3)}), 1).items ==
          std::vector<Interval>{iv(1, 2), iv(1, 1), iv(3, 3)});
    CHECK(right_mutate(a3, seq_of(a3, {iv(1, 1), iv(2, 2), iv(3, 3)}), 2).items ==
          std::vector<Interval>{iv(1, 1), iv(3, 3), iv(2, 3)});
}

TEST_CASE("transposition when the graded hom vanishes") {
    TypeACategory a3(3);
    // Hom(S1, S3) = Ext^1(S1, S3) = 0 and conversely: both mutations swap
    ExceptionalSequence s = seq_of(a3, {iv(1, 1), iv(3, 3), iv(2, 3)});
    CHECK(left_mutate(a3, s, 1).items == std::vector<Interval>{iv(3, 3), iv(1, 1), iv(2, 3)});
    CHECK(right_mutate(a3, s, 1).items == std::vector<Interval>{iv(3, 3), iv(1, 1), iv(2, 3)});
}

TEST_CASE("mutations are inverse at every index") {
    for (int n = 1; n <= 4; ++n) {
        TypeACategory cat(n);
        for (const auto& s : enumerate_full_exceptional_sequences(cat))
            for (int i = 1; i < n; ++i) {
                CHECK(right_mutate(cat, left_mutate(cat, s, i), i) == s);
                CHECK(left_mutate(cat, right_mutate(cat, s, i), i) == s);
            }
    }
}

TEST_CASE("mutations stay inside the enumerated set") {
    TypeACategory cat(3);
    auto seqs = enumerate_full_exceptional_sequences(cat);
    std::set<std::vector<Interval>> all;
    for (const auto& s : seqs) all.insert(s.items);
    for (const auto& s : seqs)
        for (int i = 1; i < 3; ++i) {
            CHECK(all.count(left_mutate(cat, s, i).items));
            CHECK(all.count(right_mutate(cat, s, i).items));
        }
}

TEST_CASE("braid relation on adjacent indices") {
    TypeACategory cat(3);
    for (const auto& s : enumerate_full_exceptional_sequences(cat)) {
        auto lhs = left_mutate(cat, left_mutate(cat, left_mutate(cat, s, 1), 2), 1);
        auto rhs = left_mutate(cat, left_mutate(cat, left_mutate(cat, s, 2), 1), 2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("far commutation") {
    TypeACategory cat(4);
    auto seqs = enumerate_full_exceptional_sequences(cat);
    for (std::size_t idx = 0; idx < seqs.size(); idx += 7) {  // sample
        const auto& s = seqs[idx];
        CHECK(left_mutate(cat, left_mutate(cat, s, 1), 3) ==
              left_mutate(cat, left_mutate(cat, s, 3), 1));
    }
}

TEST_CASE("mutation index bounds") {
    TypeACategory cat(2);
    ExceptionalSequence s = seq_of(cat, {iv(1, 1), iv(2, 2)});
    CHECK_THROWS_AS(left_mutate(cat, s, 0), invalid_input);
    CHECK_THROWS_AS(left_mutate(cat, s, 2), invalid_input);
    CHECK_THROWS_AS(right_mutate(cat, s, 5), invalid_input);
}
