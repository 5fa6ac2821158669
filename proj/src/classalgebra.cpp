#include "oddwheel/classalgebra.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "oddwheel/errors.hpp"

namespace oddwheel {
namespace {

int mod8(long long v) {
    return static_cast<int>(((v % 8) + 8) % 8);
}

}  // namespace

bool class_triple_admissible(int m1, int m2, int m3) {
    long long a = m1, b = m2, c = m3;
    return mod8(a * a + b * b + c * c - a * b * c - 4) == 0;
}

std::vector<ClassTriple> enumerate_class_triples() {
    std::vector<ClassTriple> out;
    for (int m1 = 0; m1 < 8; ++m1) {
        for (int m2 = m1; m2 < 8; ++m2) {
            for (int m3 = m2; m3 < 8; ++m3) {
                if (!class_triple_admissible(m1, m2, m3)) continue;
                if (m1 % 2 == 0 && m2 % 2 == 0 && m3 % 2 == 0) continue;
                out.push_back(ClassTriple{{m1, m2, m3}});
            }
        }
    }
    return out;
}

std::vector<ClassEdge> TransitionGraph::crossing_edges() const {
    std::vector<ClassEdge> out;
    std::copy_if(edges.begin(), edges.end(), std::back_inserter(out),
                 [](const ClassEdge& e) { return e.kind == EdgeKind::crossing; });
    return out;
}

std::vector<ClassEdge> TransitionGraph::internal_edges() const {
    std::vector<ClassEdge> out;
    std::copy_if(edges.begin(), edges.end(), std::back_inserter(out),
                 [](const ClassEdge& e) { return e.kind == EdgeKind::internal; });
    return out;
}

TransitionGraph build_transition_graph() {
    TransitionGraph graph;
    for (const ClassTriple& triple : enumerate_class_triples()) {
        for (int drop = 0; drop < 3; ++drop) {
            int m = triple.values[static_cast<std::size_t>(drop)];
            if (m % 2 == 0) continue;
            int u = triple.values[drop == 0 ? 1 : 0];
            int v = triple.values[drop == 2 ? 1 : 2];
            if (u > v) std::swap(u, v);
            EdgeKind kind = (m % 4 == 1) ? EdgeKind::crossing : EdgeKind::internal;
            graph.edges.push_back(ClassEdge{u, v, kind});
        }
    }
    std::sort(graph.edges.begin(), graph.edges.end());
    graph.edges.erase(std::unique(graph.edges.begin(), graph.edges.end()), graph.edges.end());
    for (const ClassEdge& e : graph.edges) {
        graph.vertices.push_back(e.u);
        graph.vertices.push_back(e.v);
    }
    std::sort(graph.vertices.begin(), graph.vertices.end());
    graph.vertices.erase(std::unique(graph.vertices.begin(), graph.vertices.end()),
                         graph.vertices.end());
    return graph;
}

Bipartition bipartition(const TransitionGraph& graph) {
    // Two-coloring with signed constraints: crossing edges force different
    // colors, internal edges force equal colors.
    std::map<int, std::vector<std::pair<int, EdgeKind>>> adjacency;
    for (const ClassEdge& e : graph.edges) {
        adjacency[e.u].emplace_back(e.v, e.kind);
        adjacency[e.v].emplace_back(e.u, e.kind);
    }
    std::map<int, int> color;
    for (int start : graph.vertices) {
        if (color.count(start)) continue;
        color[start] = 0;
        std::queue<int> frontier;
        frontier.push(start);
        while (!frontier.empty()) {
            int u = frontier.front();
            frontier.pop();
            for (const auto& [v, kind] : adjacency[u]) {
                int wanted = color[u] ^ (kind == EdgeKind::crossing ? 1 : 0);
                auto it = color.find(v);
                if (it == color.end()) {
                    color[v] = wanted;
                    frontier.push(v);
                } else if (it->second != wanted) {
                    throw NotBipartiteError(
                        "transition graph admits no two-sided split: conflict at edge {" +
                        std::to_string(u) + ", " + std::to_string(v) + "}");
                }
            }
        }
    }
    Bipartition split;
    if (graph.vertices.empty()) return split;
    int side_of_smallest = color[graph.vertices.front()];
    for (int v : graph.vertices) {
        (color[v] == side_of_smallest ? split.side_a : split.side_b).push_back(v);
    }
    return split;
}

ParityCertificate parity_certificate(const std::vector<Int>& spokes) {
    if (spokes.size() < 3) {
        throw ValidationError("parity certificate requires at least 3 spokes, got " +
                              std::to_string(spokes.size()));
    }
    bool all_odd = true;
    std::vector<int> residues;
    residues.reserve(spokes.size());
    for (const Int& s : spokes) {
        if (s < 1) {
            throw ValidationError("parity certificate requires positive spokes, got " +
                                  to_string(s));
        }
        if (mpz_even_p(s.get_mpz_t())) all_odd = false;
        residues.push_back(static_cast<int>(mpz_fdiv_ui(s.get_mpz_t(), 4)));
    }
    ParityCertificate cert;
    cert.n = spokes.size();
    cert.spoke_products_mod4.reserve(cert.n);
    for (std::size_t i = 0; i < cert.n; ++i) {
        int product = (residues[i] * residues[(i + 1) % cert.n]) % 4;
        cert.spoke_products_mod4.push_back(product);
        if (product == 1) ++cert.crossing_step_count;
    }
    if (all_odd) {
        // The product of all cyclic products is the square of the spoke
        // product, hence 1 mod 4; so the count of products == 3 (mod 4) is
        // even and the crossing count has the parity of n.
        if (cert.crossing_step_count % 2 != cert.n % 2) {
            throw InvariantViolation("crossing step count parity differs from n");
        }
    }
    cert.conclusion = (all_odd && cert.n % 2 == 1 && cert.crossing_step_count % 2 == 1)
                          ? ParityConclusion::contradiction
                          : ParityConclusion::inconclusive;
    return cert;
}

}  // namespace oddwheel
