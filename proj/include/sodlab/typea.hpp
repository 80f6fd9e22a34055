#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sodlab/lattice.hpp"
#include "sodlab/linalg.hpp"

namespace sodlab {

// Closed interval [a,b] inside [1,n]; names the interval module M[a,b] of the
// equioriented quiver 1 -> 2 -> ... -> n. Simples are [i,i], projectives
// P_i = [i,n], injectives I_j = [1,j].
struct Interval {
    int a = 1;
    int b = 1;
    auto operator<=>(const Interval&) const = default;
};

std::string to_string(Interval iv);

// One indecomposable summand M[a,b][shift].
struct Term {
    int shift = 0;
    Interval iv;
    auto operator<=>(const Term&) const = default;
};

// Formal finite direct sum of shifted interval modules, kept canonical:
// terms sorted by (shift, a, b), all multiplicities >= 1.
class DerivedObject {
public:
    DerivedObject() = default;
    static DerivedObject of(Interval iv, int shift = 0, int mult = 1);

    void add(Interval iv, int shift, int mult = 1);
    const std::map<Term, int>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    int summand_count() const;
    DerivedObject shifted(int s) const;
    DerivedObject plus(const DerivedObject& o) const;

    auto operator<=>(const DerivedObject&) const = default;

private:
    std::map<Term, int> terms_;
};

std::string to_string(const DerivedObject& x);

// Bounded complex of indecomposable projectives. gens[d] lists the vertex
// labels i of the generators P_i sitting in degree d; diff[d] is the scalar
// coefficient matrix of d^d : C^d -> C^{d+1} relative to the canonical maps
// P_i -> P_j, which exist exactly for j <= i. An entry at (row j, col i) is
// therefore only ever nonzero when j <= i, and d^2 = 0 holds on coefficients.
struct PresentedComplex {
    std::map<int, std::vector<int>> gens;
    std::map<int, Mat> diff;
};

// Chain map X -> Y[k], stored as one scalar block per degree:
// comp[d] has shape |Y^{d+k}| x |X^d|. Blocks of zero size are omitted.
struct GradedMap {
    int k = 0;
    std::map<int, Mat> comp;
};

enum class Side { left, right };

// Thick subcategory, identified with its set of indecomposable generators
// up to shift. Every object of the subcategory is a sum of shifts of these.
using ThickSet = std::set<Interval>;

// Exact model of D^b(mod kA_n). All Hom and Ext data is computed by linear
// algebra over Q (commutation systems and projective resolutions) once, in
// the constructor; chain-level operations work on presented complexes.
class TypeACategory {
public:
    static constexpr int max_n = 12;

    explicit TypeACategory(int n);

    int n() const { return n_; }
    const std::vector<Interval>& intervals() const { return intervals_; }
    bool is_projective(Interval x) const { return x.b == n_; }
    void check_interval(Interval x) const;
    void check_object(const DerivedObject& x) const;
    // Canonical display name: S_a for simples, P_a for projectives,
    // I_b for injectives, [a,b] otherwise; S beats P beats I on overlap.
    std::string interval_name(Interval x) const;

    // ------------------------------------------------------------ hom data
    // dim Hom(M[x], M[y][k]); nonzero only for k in {0,1}.
    int hom_interval(Interval x, Interval y, int k) const;
    // dim Hom(X, Y[k]) for arbitrary k, additively over all summands.
    int hom_dim(const DerivedObject& x, const DerivedObject& y, int k) const;
    // Auslander-Reiten translate; empty for projectives.
    std::optional<Interval> tau(Interval x) const;

    K0Class k0(Interval x) const;
    K0Class k0(const DerivedObject& x) const;
    const EulerForm& euler() const { return euler_; }

    // --------------------------------------------------------- chain level
    PresentedComplex present(const DerivedObject& x) const;
    DerivedObject decompose(const PresentedComplex& c) const;
    PresentedComplex shift_complex(const PresentedComplex& c, int s) const;

    // Basis of chain maps X -> Y[k] modulo homotopy.
    std::vector<GradedMap> hom_basis(const PresentedComplex& x, const PresentedComplex& y,
                                     int k) const;

    // Mapping cone of f : X -> Y[k]; in K0, [cone] = [Y[k]] - [X].
    PresentedComplex cone(const PresentedComplex& x, const PresentedComplex& y,
                          const GradedMap& f) const;

    struct FiberResult {
        PresentedComplex fib;  // cone(f)[-1]
        GradedMap to_source;   // the triangle map fib -> X
    };
    FiberResult fiber(const PresentedComplex& x, const PresentedComplex& y,
                      const GradedMap& f) const;

    struct SumPieces {
        PresentedComplex total;
        // offsets[p][d] = column offset of piece p inside degree d of total
        std::vector<std::map<int, int>> offsets;
    };
    SumPieces direct_sum(const std::vector<PresentedComplex>& parts) const;

    // Stack maps f_p : X -> parts[p] into X -> total, or parts[p] -> X into
    // total -> X. All f_p must be degree 0.
    GradedMap stack_into(const SumPieces& sum, const std::vector<GradedMap>& fs,
                         const PresentedComplex& x) const;
    GradedMap stack_from(const SumPieces& sum, const std::vector<GradedMap>& fs,
                         const PresentedComplex& x) const;

    GradedMap compose0(const GradedMap& g, const GradedMap& f) const;

    // --------------------------------------------------- thick subcategories
    ThickSet thick_closure(const ThickSet& gens) const;
    bool is_thick(const ThickSet& s) const;
    ThickSet perp(const ThickSet& s, Side side) const;
    bool in_thick(const ThickSet& s, const DerivedObject& x) const;
    int k0_rank(const ThickSet& s) const;

    // Lex-least exceptional sequence generating s, if one exists.
    std::optional<std::vector<Interval>> generating_sequence(const ThickSet& s) const;

    // Image of x under the projection D -> perp(u, right) induced by the
    // decomposition D = <perp(u, right), u>.
    DerivedObject project_quotient(const ThickSet& u, const DerivedObject& x) const;

private:
    int hom_by_commutation(Interval x, Interval y) const;
    int ext_by_resolution(Interval x, Interval y) const;
    int interval_index(Interval x) const;
    void build_cone_summands();

    int n_ = 1;
    std::vector<Interval> intervals_;
    std::vector<std::vector<int>> hom0_;  // [index(x)][index(y)]
    std::vector<std::vector<int>> ext1_;
    // cone_summands_[x][y][k] = intervals of the summands of cone(basis map
    // M[x] -> M[y][k]), recorded up to shift; only filled where hom dim is 1
    std::map<int, std::map<int, std::map<int, ThickSet>>> cone_summands_;
    EulerForm euler_;
};

}  // namespace sodlab
