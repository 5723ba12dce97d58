#ifndef KOSZUL_GRAPH_HPP
#define KOSZUL_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "koszul/errors.hpp"

namespace koszul {

// Hard cap on the vertex count.  Adjacency rows are single machine words;
// raising the cap past 64 requires switching the row type to a multi-word
// bitset.
inline constexpr int kMaxVertices = 64;

using Edge = std::pair<int, int>;

// A subset of {0, ..., 63}, relative to some host graph.
class VertexSet {
public:
    class iterator {
    public:
        using value_type = int;
        int operator*() const { return std::countr_zero(bits_); }
        iterator& operator++() {
            bits_ &= bits_ - 1;
            return *this;
        }
        bool operator==(const iterator& o) const = default;

    private:
        friend class VertexSet;
        explicit iterator(std::uint64_t b) : bits_(b) {}
        std::uint64_t bits_;
    };

    VertexSet() = default;
    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) add(v);
    }

    static VertexSet from_bits(std::uint64_t bits) {
        VertexSet s;
        s.bits_ = bits;
        return s;
    }
    static VertexSet full(int n);
    static VertexSet single(int v);

    void add(int v);
    void remove(int v);
    bool contains(int v) const { return v >= 0 && v < kMaxVertices && (bits_ >> v & 1u); }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    std::uint64_t bits() const { return bits_; }

    // Lowest member; the set must be nonempty.
    int min() const;

    std::vector<int> to_vector() const;

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    friend VertexSet operator|(VertexSet a, VertexSet b) { return from_bits(a.bits_ | b.bits_); }
    friend VertexSet operator&(VertexSet a, VertexSet b) { return from_bits(a.bits_ & b.bits_); }
    VertexSet minus(VertexSet o) const { return from_bits(bits_ & ~o.bits_); }
    bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    bool operator==(const VertexSet&) const = default;

private:
    std::uint64_t bits_ = 0;
};

// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
// Invariants: symmetric, irreflexive, all indices < n.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    VertexSet neighbors(int v) const;
    VertexSet vertices() const { return VertexSet::full(n_); }

    // Enforces the loop and range invariants; adding an existing edge is a no-op.
    void add_edge(int u, int v);

    // Edges as (u, v) pairs with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

Graph build_graph(int n, const std::vector<Edge>& edges);

Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertices; // vertices[new index] = old index, ascending
    int index_of(int old_vertex) const;
};

InducedSubgraph induced(const Graph& g, VertexSet w);

// Disjoint union plus all cross edges; vertices of g2 are shifted by
// g1.vertex_count().
Graph join(const Graph& g1, const Graph& g2);

struct IsolatedRemoval {
    Graph graph;           // minimum degree >= 1, or empty
    VertexSet removed;     // the degree-0 vertices of the input
    std::vector<int> kept; // kept[new index] = old index, ascending
};

IsolatedRemoval remove_isolated(const Graph& g);

// Greedy by ascending vertex index.  The result is independent and maximal.
VertexSet maximal_independent_set(const Graph& g);

} // namespace koszul

#endif
