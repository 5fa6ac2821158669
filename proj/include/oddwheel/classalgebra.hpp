#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "oddwheel/numeric.hpp"

namespace oddwheel {

// True when m1^2 + m2^2 + m3^2 - m1*m2*m3 - 4 == 0 (mod 8).  Arguments are
// reduced mod 8, so any integer representatives are accepted.
bool class_triple_admissible(int m1, int m2, int m3);

// Sorted triple of class values.
struct ClassTriple {
    std::array<int, 3> values;

    bool operator==(const ClassTriple& other) const { return values == other.values; }
    bool operator<(const ClassTriple& other) const { return values < other.values; }
};

// All sorted admissible triples over residues 0..7 that contain at least
// one odd value, in lexicographic order.  (Exactly fifteen exist, and none
// involves residue 0 or 4.)
std::vector<ClassTriple> enumerate_class_triples();

enum class EdgeKind { crossing, internal };

// Undirected edge between class values (u <= v; u == v is a loop).
struct ClassEdge {
    int u;
    int v;
    EdgeKind kind;

    bool operator==(const ClassEdge& other) const {
        return u == other.u && v == other.v && kind == other.kind;
    }
    bool operator<(const ClassEdge& other) const {
        if (u != other.u) return u < other.u;
        if (v != other.v) return v < other.v;
        return kind < other.kind;
    }
};

// Graph describing how consecutive partial-sum classes may evolve: for each
// admissible odd-containing triple, dropping an odd coordinate m leaves the
// edge between the remaining two values; the step crosses sides when
// m == 1 (mod 4) and stays inside a side when m == 3 (mod 4).
struct TransitionGraph {
    std::vector<int> vertices;     // sorted, distinct
    std::vector<ClassEdge> edges;  // sorted, distinct

    std::vector<ClassEdge> crossing_edges() const;
    std::vector<ClassEdge> internal_edges() const;
};

TransitionGraph build_transition_graph();

// Two-sided split of the transition graph's vertices such that every
// crossing edge joins the sides and every internal edge stays within one.
// side_a is the side containing the smallest vertex.  Throws
// NotBipartiteError when no such split exists.
struct Bipartition {
    std::vector<int> side_a;
    std::vector<int> side_b;
};

Bipartition bipartition(const TransitionGraph& graph);

// Parity obstruction for a cycle of spoke lengths s_1, ..., s_n.  The apex
// class of the i-th step is s_i * s_{i+1} mod 8 (cyclically); a step crosses
// the bipartition exactly when that product is 1 mod 4.  A closed angle
// trail must cross an even number of times, while for odd n with all spokes
// odd the crossing count is forced odd (the product of all cyclic products
// is the square of the spoke product, hence 1 mod 4) — the contradiction
// certified here.
enum class ParityConclusion { contradiction, inconclusive };

struct ParityCertificate {
    std::size_t n = 0;
    std::vector<int> spoke_products_mod4;  // s_i * s_{i+1} mod 4, cyclic
    std::size_t crossing_step_count = 0;   // products == 1 (mod 4)
    ParityConclusion conclusion = ParityConclusion::inconclusive;
};

// Requires n >= 3 positive spokes; conclusion is contradiction exactly when
// n is odd, every spoke is odd, and the crossing count is odd (forced by the
// invariant whenever the first two conditions hold).
ParityCertificate parity_certificate(const std::vector<Int>& spokes);

}  // namespace oddwheel
