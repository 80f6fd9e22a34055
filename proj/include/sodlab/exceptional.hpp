#pragma once

#include <vector>

#include "sodlab/typea.hpp"

namespace sodlab {

// Ordered exceptional sequence with shift-normalized items. Two sequences are
// the same exactly when their item lists agree.
struct ExceptionalSequence {
    std::vector<Interval> items;
    bool full = false;

    bool operator==(const ExceptionalSequence& o) const { return items == o.items; }
    bool operator<(const ExceptionalSequence& o) const { return items < o.items; }
};

// Single indecomposable up to shift with End = k and no self extensions.
bool is_exceptional(const TypeACategory& cat, const DerivedObject& x);

bool is_exceptional_sequence(const TypeACategory& cat, const std::vector<Interval>& items);
bool is_full_sequence(const TypeACategory& cat, const std::vector<Interval>& items);

// Validates and tags fullness.
ExceptionalSequence make_sequence(const TypeACategory& cat, std::vector<Interval> items);

// All complete exceptional sequences, in lexicographic item order.
std::vector<ExceptionalSequence> enumerate_full_exceptional_sequences(const TypeACategory& cat);

// Braid mutations at 1-based index i (acting on positions i, i+1).
ExceptionalSequence left_mutate(const TypeACategory& cat, const ExceptionalSequence& s, int i);
ExceptionalSequence right_mutate(const TypeACategory& cat, const ExceptionalSequence& s, int i);

}  // namespace sodlab
