#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sodlab/lattice.hpp"
#include "sodlab/sod.hpp"

namespace sodlab {

// ------------------------------------------------------------------- types

// Directed edge u -> v carrying the mutation index of rho_label.
struct GraphEdge {
    int from = 0;
    int to = 0;
    int label = 0;
    auto operator<=>(const GraphEdge&) const = default;
};

// All finest decompositions with their right mutation arrows. Vertices are
// sorted canonically; every vertex has one outgoing edge per index.
struct MutationGraph {
    int n = 1;
    std::vector<Sod> vertices;
    std::vector<GraphEdge> edges;
};

// Vertices grouped by the generator of the last block; values index into
// the parent graph's vertex list. The groups partition the vertex set.
struct ReductionDecomposition {
    std::map<Interval, std::vector<int>> groups;
};

// Contraction of a mutation graph along the reduction groups, keeping one
// copy of each crossing arrow label.
struct ComponentGraph {
    int n = 1;
    std::vector<Interval> vertices;
    std::vector<GraphEdge> edges;
};

struct CriterionResult {
    bool holds = false;
    std::map<std::pair<Interval, Interval>, std::vector<Interval>> witness_chains;
};

// -------------------------------------------------------------- operations

MutationGraph build_graph(const QuiverSpec& q);

bool is_connected(const MutationGraph& g);
bool is_connected(const ComponentGraph& g);

ReductionDecomposition reduction_decomposition(const MutationGraph& g);

ComponentGraph component_graph(const MutationGraph& g);

// Chain condition between the atomic admissible subcategories: consecutive
// links must share an exceptional object between the matching perps. Holds
// for every ordered pair exactly when the mutation graph is connected.
CriterionResult check_connectedness_criterion(const QuiverSpec& q);

std::string export_dot(const MutationGraph& g);
std::string export_dot(const ComponentGraph& g);

}  // namespace sodlab
