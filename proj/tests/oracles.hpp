#pragma once

// Independent closed-form and combinatorial reference values used to check
// the computed engine. Everything here is deliberately derived by a different
// route than the library code (interval combinatorics instead of linear
// algebra, counting instead of enumeration).

#include <map>
#include <set>
#include <vector>

#include "sodlab/typea.hpp"

namespace oracle {

// dim Hom(M[a,b], M[c,d]) = 1 iff c <= a <= d <= b, else 0.
inline int hom0(sodlab::Interval x, sodlab::Interval y) {
    return (y.a <= x.a && x.a <= y.b && y.b <= x.b) ? 1 : 0;
}

// dim Ext^1(M[a,b], M[c,d]) via Auslander-Reiten duality: Hom(y, tau x),
// zero when x is projective (b = n).
inline int ext1(sodlab::Interval x, sodlab::Interval y, int n) {
    if (x.b == n) return 0;
    return hom0(y, sodlab::Interval{x.a + 1, x.b + 1});
}

inline int hom_interval(sodlab::Interval x, sodlab::Interval y, int k, int n) {
    if (k == 0) return hom0(x, y);
    if (k == 1) return ext1(x, y, n);
    return 0;
}

// Number of complete exceptional sequences in D^b(mod kA_n): (n+1)^(n-1).
inline long long full_sequence_count(int n) {
    long long r = 1;
    for (int i = 0; i < n - 1; ++i) r *= n + 1;
    return r;
}

}  // namespace oracle
