#pragma once

#include <optional>
#include <vector>

#include "sodlab/exceptional.hpp"
#include "sodlab/typea.hpp"

namespace sodlab {

// Non-trivial semi-orthogonal decomposition: ordered blocks (Pi_1,...,Pi_m),
// m >= 2, with Hom(Pi_j, Pi_i) = 0 in all degrees for i < j and with the
// blocks generating the whole category. Identity is the ordered block list.
struct Sod {
    std::vector<ThickSet> blocks;
    // full exceptional sequence split into consecutive chunks generating the
    // blocks, when one is known
    std::optional<std::vector<std::vector<Interval>>> generator_witness;

    bool operator==(const Sod& o) const { return blocks == o.blocks; }
    bool operator<(const Sod& o) const { return blocks < o.blocks; }
};

// Finite t-stability on the linearly ordered phase set {1 < ... < m}. The
// phase automorphism is forced to be the identity, so only pieces are kept.
// One piece is allowed (the trivial stability); a Sod needs two blocks.
struct TStability {
    std::vector<ThickSet> pieces;

    bool operator==(const TStability& o) const { return pieces == o.pieces; }
    bool operator<(const TStability& o) const { return pieces < o.pieces; }
};

// Admissible filtration 0 = T_0 < T_1 < ... < T_m = D by thick subcategories,
// m >= 2, each step admissible on the recorded side. Left chains are derived
// from right chains by perpendiculars, never stored separately.
struct Filtration {
    std::vector<ThickSet> chain;
    Side side = Side::right;

    bool operator==(const Filtration& o) const { return chain == o.chain && side == o.side; }
    bool operator<(const Filtration& o) const {
        return chain != o.chain ? chain < o.chain : side < o.side;
    }
};

struct HNFactor {
    DerivedObject object;
    int phase = 0;

    bool operator==(const HNFactor&) const = default;
};

// Harder-Narasimhan data: factors listed by strictly decreasing phase, the
// top (highest phase) factor first; phi_plus/phi_minus are the extremes.
struct HNResult {
    std::vector<HNFactor> factors;
    int phi_plus = 0;
    int phi_minus = 0;
};

// chi_inv either recovers the full exceptional sequence of a finest
// decomposition or reports the first block that is not singly generated.
struct ChiInvResult {
    std::optional<ExceptionalSequence> seq;
    int offending_block = 0;  // 1-based, set only on failure
};

// Pairwise-linkage certificate: finest when every pair inside every block has
// nonvanishing graded Hom in both directions; otherwise (block, x, y) records
// a pair with Hom*(x, y) = 0.
struct FinestCheck {
    bool finest = false;
    int block = 0;  // 1-based
    Interval x{};
    Interval y{};

    explicit operator bool() const { return finest; }
};

// -------------------------------------------------------------- validation

Sod make_sod(const TypeACategory& cat, std::vector<ThickSet> blocks,
             std::optional<std::vector<std::vector<Interval>>> witness = std::nullopt);
TStability make_tstability(const TypeACategory& cat, std::vector<ThickSet> pieces);
Filtration make_filtration(const TypeACategory& cat, std::vector<ThickSet> chain,
                           Side side = Side::right);

// -------------------------------------------------------------- bijections

Sod eta(const TypeACategory& cat, const TStability& t);
TStability eta_inv(const TypeACategory& cat, const Sod& s);

Filtration xi(const TypeACategory& cat, const Sod& s);
Sod xi_inv(const TypeACategory& cat, const Filtration& f);

Sod chi(const TypeACategory& cat, const ExceptionalSequence& seq);
ChiInvResult chi_inv(const TypeACategory& cat, const Sod& s);

// ------------------------------------------------------- order and finests

// True when a refines b via a monotone surjection of index sets whose chunk
// closures reproduce b. Lengths above 12 are rejected as a capacity error.
bool is_finer(const TypeACategory& cat, const Sod& a, const Sod& b);
bool is_finer(const TypeACategory& cat, const TStability& a, const TStability& b);

FinestCheck is_finest_sufficient(const TypeACategory& cat, const Sod& s);
bool is_finest_exhaustive(const TypeACategory& cat, const Sod& s);

// Splices a t-stability of the i-th piece (1-based) in place of that piece.
TStability refine_locally(const TypeACategory& cat, const TStability& t, int i,
                          const TStability& local);
Sod refine_to_finest(const TypeACategory& cat, const Sod& s);

// Every composition of every full exceptional sequence, deduplicated by the
// block lists; sorted, each carrying a generator witness.
std::vector<Sod> enumerate_all_sods(const TypeACategory& cat);

// ---------------------------------------------------------------- HN towers

HNResult hn_filtration(const TypeACategory& cat, const TStability& t, const DerivedObject& x);
// Same, but peeling along a caller-chosen witness: one relative exceptional
// sequence per piece, generating that piece. The result is witness-free.
HNResult hn_filtration(const TypeACategory& cat, const TStability& t, const DerivedObject& x,
                       const std::vector<std::vector<Interval>>& witness);

// Sorts a claimed factor list into HN order by merging equal phases and
// swapping misordered neighbours, then insists the result is the HN tower.
HNResult normalize_tower(const TypeACategory& cat, const TStability& t, const DerivedObject& x,
                         std::vector<HNFactor> factors);

// ---------------------------------------------------------------- mutations

// Block mutation at 1-based i: right replaces (Pi_i, Pi_{i+1}) by
// (Pi_i^perp within their span, Pi_i), left is its inverse.
Sod rho(const TypeACategory& cat, const Sod& s, int i, Side dir);

// Chain mutation at 1-based i (1 <= i <= m-1), fixing all other terms.
Filtration sigma(const TypeACategory& cat, const Filtration& f, int i, Side dir);

}  // namespace sodlab
