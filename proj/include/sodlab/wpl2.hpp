#pragma once

#include <array>
#include <string>
#include <vector>

#include "sodlab/lattice.hpp"
#include "sodlab/mutation_graph.hpp"
#include "sodlab/typea.hpp"

namespace sodlab {

// Formula-driven model of the derived category of the weighted projective
// line of weight type (2). The grading group is generated by x1 with
// 2*x1 = c, so it is Z in units of x1; the dualizing element is -3.

// ------------------------------------------------------------------- types

// Element m*x1 of the grading group.
struct L2Element {
    int m = 0;
    static constexpr int c = 2;       // canonical class, 2*x1
    static constexpr int omega = -3;  // dualizing element, x1 - 2c

    auto operator<=>(const L2Element&) const = default;
};

// Indecomposables used by the workbench: twisted structure sheaves O(m),
// the two simples S_{1,0}, S_{1,1} of the rank-two tube at the weighted
// point, and the non-exceptional rank-one tube simple S_x, which is
// carried in K-theory only.
enum class Wpl2Kind { line_bundle, simple, rank_one_simple };

struct Wpl2Object {
    Wpl2Kind kind = Wpl2Kind::line_bundle;
    int m = 0;      // twist in units of x1; line bundles only
    int j = 0;      // parity class 0 or 1; weighted-point simples only
    int shift = 0;

    static Wpl2Object line(int m, int shift = 0) {
        return Wpl2Object{Wpl2Kind::line_bundle, m, 0, shift};
    }
    static Wpl2Object simple(int j, int shift = 0) {
        require(j == 0 || j == 1, "simple parity class must be 0 or 1");
        return Wpl2Object{Wpl2Kind::simple, 0, j, shift};
    }
    static Wpl2Object rank_one(int shift = 0) {
        return Wpl2Object{Wpl2Kind::rank_one_simple, 0, 0, shift};
    }

    auto operator<=>(const Wpl2Object&) const = default;
};

using Wpl2Triple = std::array<Wpl2Object, 3>;

// Windowed mutation graph: vertices are shift-normalized full exceptional
// triples whose twists stay inside the window; arrows are left mutations.
struct Wpl2Graph {
    std::vector<Wpl2Triple> vertices;
    std::vector<GraphEdge> edges;
};

// -------------------------------------------------------------- operations

std::string wpl2_name(const Wpl2Object& x);

// Class in the basis ([O], [S_{1,0}], [S_x]); defined for every kind.
K0Class wpl2_k0(const Wpl2Object& x);

// Twist by d*x1; swaps the tube simples when d is odd, fixes S_x.
Wpl2Object wpl2_twist(const Wpl2Object& x, int d);

// dim Hom(X, Y[k]); exceptional kinds only.
int wpl2_hom_dim(const Wpl2Object& x, const Wpl2Object& y, int k);

// Exceptionality, pairwise one-way vanishing, and a K0-basis test.
bool wpl2_is_full_exceptional(const Wpl2Triple& seq);

// Left or right mutation at i in {1, 2}. The partner object is resolved
// from its K0 class; a line-bundle target outside |m| <= window reports
// window-too-small. Results are shift-normalized.
Wpl2Triple wpl2_mutate(const Wpl2Triple& seq, int i, Side dir, int window = 32);

Wpl2Graph wpl2_windowed_graph(const Wpl2Triple& seed, int radius, int window = 8);

std::string export_dot(const Wpl2Graph& g);

}  // namespace sodlab
