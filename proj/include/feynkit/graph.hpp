#ifndef FEYNKIT_GRAPH_HPP
#define FEYNKIT_GRAPH_HPP

#include "feynkit/linalg.hpp"
#include "feynkit/mpoly.hpp"
#include "feynkit/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace feynkit {

/// Internal edge: endpoints index into the vertex list; mass_symbol is a
/// kinematic symbol ("m1^2", ...) or "0" for a massless line.
struct Edge {
    std::string id;
    int from = 0;
    int to = 0;
    std::string mass_symbol = "0";

    bool massless() const { return mass_symbol == "0" || mass_symbol.empty(); }
};

struct ExternalLeg {
    int vertex = 0;
    std::string momentum;
};

/// Connected Feynman graph with massed internal edges and external legs.
/// The order of `edges` is the total edge order; edge i carries variable
/// a(i+1).
struct FeynmanGraph {
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    std::vector<ExternalLeg> legs;

    int n_edges() const { return static_cast<int>(edges.size()); }
    int n_vertices() const { return static_cast<int>(vertices.size()); }
    int loop_number() const { return n_edges() - n_vertices() + 1; }

    VarId edge_var(int i) const { return alpha_var(i + 1); }

    std::vector<VarId> edge_vars() const
    {
        std::vector<VarId> vs;
        for (int i = 0; i < n_edges(); ++i)
            vs.push_back(edge_var(i));
        return vs;
    }

    void validate() const
    {
        if (vertices.empty())
            throw std::invalid_argument("graph has no vertices");
        for (const Edge& e : edges)
            if (e.from < 0 || e.from >= n_vertices() || e.to < 0 || e.to >= n_vertices())
                throw std::invalid_argument("edge endpoint out of range");
        for (const ExternalLeg& l : legs)
            if (l.vertex < 0 || l.vertex >= n_vertices())
                throw std::invalid_argument("leg vertex out of range");
        std::set<std::string> seen;
        for (const ExternalLeg& l : legs)
            if (!seen.insert(l.momentum).second)
                throw std::invalid_argument("duplicate momentum label " + l.momentum);
        if (!connected())
            throw std::invalid_argument("not connected");
        if (loop_number() < 0)
            throw std::logic_error("negative loop number");
    }

    bool connected() const
    {
        if (vertices.empty())
            return false;
        std::vector<int> parent(n_vertices());
        std::iota(parent.begin(), parent.end(), 0);
        for (const Edge& e : edges)
            unite(parent, e.from, e.to);
        const int root = find(parent, 0);
        for (int v = 1; v < n_vertices(); ++v)
            if (find(parent, v) != root)
                return false;
        return true;
    }

    static int find(std::vector<int>& parent, int v)
    {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    }

    static bool unite(std::vector<int>& parent, int a, int b)
    {
        a = find(parent, a);
        b = find(parent, b);
        if (a == b)
            return false;
        parent[a] = b;
        return true;
    }
};

/// The standard three-edge two-loop sunrise graph with masses m1^2..m3^2
/// and external momentum q1.
inline FeynmanGraph sunrise_graph()
{
    FeynmanGraph g;
    g.vertices = {"v1", "v2"};
    g.edges = {{"e1", 0, 1, "m1^2"}, {"e2", 0, 1, "m2^2"}, {"e3", 0, 1, "m3^2"}};
    g.legs = {{0, "p1"}, {1, "q1"}};
    return g;
}

/// Kinematic parameter symbols keyed by unordered bipartitions of the
/// external-leg label set.  Both sides of a bipartition resolve to the
/// same symbol.
class MandelstamDictionary {
public:
    void set(const std::set<std::string>& side, const std::string& symbol)
    {
        entries_[key(side)] = symbol;
    }

    /// Look up the squared momentum flowing through the given side; the
    /// full label universe is needed to canonicalize.
    std::string lookup(const std::set<std::string>& side, const std::set<std::string>& all) const
    {
        auto it = entries_.find(key(side));
        if (it != entries_.end())
            return it->second;
        std::set<std::string> other;
        std::set_difference(all.begin(), all.end(), side.begin(), side.end(),
                            std::inserter(other, other.begin()));
        it = entries_.find(key(other));
        if (it != entries_.end())
            return it->second;
        throw std::invalid_argument("no Mandelstam entry for bipartition {" + key(side) + "}");
    }

    const std::map<std::string, std::string>& entries() const { return entries_; }

    static std::string key(const std::set<std::string>& side)
    {
        std::string k;
        for (const auto& s : side) {
            if (!k.empty())
                k += ",";
            k += s;
        }
        return k;
    }

private:
    std::map<std::string, std::string> entries_;
};

/// Sunrise Mandelstam data: the only nontrivial momentum class is q1^2.
inline MandelstamDictionary sunrise_mandelstam()
{
    MandelstamDictionary m;
    m.set({"q1"}, "q1^2");
    return m;
}

/// Exact rational values for every kinematic parameter symbol.
struct KinematicPoint {
    std::map<std::string, Rational> values;

    Rational value(const std::string& symbol) const
    {
        auto it = values.find(symbol);
        if (it == values.end())
            throw std::invalid_argument("kinematic point has no value for " + symbol);
        return it->second;
    }

    std::map<VarId, Rational> as_var_map() const
    {
        std::map<VarId, Rational> m;
        for (const auto& [name, val] : values)
            m.emplace(var(name), val);
        return m;
    }
};

inline KinematicPoint sunrise_kinematics(const Rational& m1, const Rational& m2,
                                         const Rational& m3, const Rational& q)
{
    KinematicPoint k;
    k.values = {{"m1^2", m1}, {"m2^2", m2}, {"m3^2", m3}, {"q1^2", q}};
    return k;
}

namespace detail {

template <typename Fn>
void for_each_edge_subset(int n, Fn&& fn)
{
    if (n > 24)
        throw std::invalid_argument("graph too large for subset enumeration");
    for (unsigned long mask = 0; mask < (1UL << n); ++mask)
        fn(mask);
}

/// Number of connected components of the subgraph (all vertices, edges in
/// mask); also reports acyclicity.
inline std::pair<int, bool> subgraph_components(const FeynmanGraph& g, unsigned long mask)
{
    std::vector<int> parent(g.n_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    bool acyclic = true;
    int comps = g.n_vertices();
    for (int i = 0; i < g.n_edges(); ++i) {
        if (!(mask & (1UL << i)))
            continue;
        if (FeynmanGraph::unite(parent, g.edges[i].from, g.edges[i].to))
            --comps;
        else
            acyclic = false;
    }
    return {comps, acyclic};
}

} // namespace detail

/// All spanning trees as sets of edge indices (brute-force subset filter;
/// the Kirchhoff determinant is the independent oracle, not this path).
inline std::vector<std::vector<int>> spanning_trees(const FeynmanGraph& g)
{
    g.validate();
    std::vector<std::vector<int>> trees;
    const int need = g.n_vertices() - 1;
    detail::for_each_edge_subset(g.n_edges(), [&](unsigned long mask) {
        if (__builtin_popcountl(mask) != need)
            return;
        auto [comps, acyclic] = detail::subgraph_components(g, mask);
        if (comps == 1 && acyclic) {
            std::vector<int> t;
            for (int i = 0; i < g.n_edges(); ++i)
                if (mask & (1UL << i))
                    t.push_back(i);
            trees.push_back(std::move(t));
        }
    });
    return trees;
}

/// A spanning 2-forest: edge set plus the induced vertex bipartition.
struct TwoForest {
    std::vector<int> edges;
    std::vector<int> component_of_vertex; // values in {0, 1}
};

/// All spanning 2-forests (two acyclic components covering every vertex).
/// Component 0 is the one containing vertex 0.
inline std::vector<TwoForest> spanning_two_forests(const FeynmanGraph& g)
{
    g.validate();
    std::vector<TwoForest> forests;
    const int need = g.n_vertices() - 2;
    if (need < 0)
        return forests;
    detail::for_each_edge_subset(g.n_edges(), [&](unsigned long mask) {
        if (__builtin_popcountl(mask) != need)
            return;
        auto [comps, acyclic] = detail::subgraph_components(g, mask);
        if (comps != 2 || !acyclic)
            return;
        TwoForest f;
        std::vector<int> parent(g.n_vertices());
        std::iota(parent.begin(), parent.end(), 0);
        for (int i = 0; i < g.n_edges(); ++i)
            if (mask & (1UL << i)) {
                f.edges.push_back(i);
                FeynmanGraph::unite(parent, g.edges[i].from, g.edges[i].to);
            }
        const int root0 = FeynmanGraph::find(parent, 0);
        f.component_of_vertex.resize(g.n_vertices());
        for (int v = 0; v < g.n_vertices(); ++v)
            f.component_of_vertex[v] = (FeynmanGraph::find(parent, v) == root0) ? 0 : 1;
        forests.push_back(std::move(f));
    });
    return forests;
}

/// First Symanzik polynomial: sum over spanning trees of the product of
/// the complementary edge variables.  Homogeneous of degree h_G.
inline MPoly symanzik_first(const FeynmanGraph& g)
{
    MPoly psi;
    for (const auto& tree : spanning_trees(g)) {
        std::set<int> in_tree(tree.begin(), tree.end());
        MPoly term = MPoly::constant(1);
        for (int i = 0; i < g.n_edges(); ++i)
            if (!in_tree.count(i))
                term *= MPoly::variable(g.edge_var(i));
        psi += term;
    }
    return psi;
}

/// Second Symanzik polynomial, with the momentum class of each 2-forest
/// resolved through the Mandelstam dictionary.  Bipartitions with all
/// external legs on one side contribute zero and are skipped.
inline MPoly symanzik_second(const FeynmanGraph& g, const MandelstamDictionary& mandelstam)
{
    std::set<std::string> all_legs;
    for (const auto& l : g.legs)
        all_legs.insert(l.momentum);

    MPoly xi;
    for (const TwoForest& f : spanning_two_forests(g)) {
        std::set<std::string> side;
        for (const auto& l : g.legs)
            if (f.component_of_vertex[l.vertex] == 0)
                side.insert(l.momentum);
        if (side.empty() || side.size() == all_legs.size())
            continue; // no momentum crosses the cut
        const std::string symbol = mandelstam.lookup(side, all_legs);
        std::set<int> kept(f.edges.begin(), f.edges.end());
        MPoly term = MPoly::variable(var(symbol));
        for (int i = 0; i < g.n_edges(); ++i)
            if (!kept.count(i))
                term *= MPoly::variable(g.edge_var(i));
        xi += term;
    }

    MPoly mass_sum;
    for (int i = 0; i < g.n_edges(); ++i)
        if (!g.edges[i].massless())
            mass_sum += MPoly::variable(var(g.edges[i].mass_symbol)) * MPoly::variable(g.edge_var(i));
    xi += mass_sum * symanzik_first(g);
    return xi;
}

/// Per-edge subdivision counts; k[i] extra vertices are inserted into
/// edge i.
struct SubdivisionSpec {
    std::vector<int> counts;

    int total() const
    {
        int k = 0;
        for (int c : counts)
            k += c;
        return k;
    }

    void validate(const FeynmanGraph& g) const
    {
        if (static_cast<int>(counts.size()) != g.n_edges())
            throw std::invalid_argument("subdivision spec size mismatch");
        for (int c : counts)
            if (c < 0)
                throw std::invalid_argument("negative subdivision count");
    }
};

/// Replace edge i by a path of counts[i]+1 edges carrying the same mass
/// symbol.  New edges occupy the subdivided edge's position (pieces
/// adjacent), so the edge order of untouched edges is preserved.
inline FeynmanGraph subdivide(const FeynmanGraph& g, const SubdivisionSpec& spec)
{
    spec.validate(g);
    FeynmanGraph out;
    out.vertices = g.vertices;
    out.legs = g.legs;
    int next_edge_id = 1;
    for (int i = 0; i < g.n_edges(); ++i) {
        const Edge& e = g.edges[i];
        const int k = spec.counts[i];
        int prev = e.from;
        for (int piece = 0; piece <= k; ++piece) {
            int next;
            if (piece == k) {
                next = e.to;
            } else {
                next = out.n_vertices();
                out.vertices.push_back(e.id + "_s" + std::to_string(piece + 1));
            }
            out.edges.push_back({"e" + std::to_string(next_edge_id++), prev, next, e.mass_symbol});
            prev = next;
        }
    }
    return out;
}

/// Matrix-tree evaluation of the first Symanzik polynomial at a rational
/// point: (prod a_e) * det of the reduced Laplacian with weights 1/a_e.
/// Falls back to direct enumeration when some a_e vanishes.
inline Rational kirchhoff_oracle_eval(const FeynmanGraph& g, const std::vector<Rational>& assignment)
{
    g.validate();
    if (assignment.size() != static_cast<std::size_t>(g.n_edges()))
        throw std::invalid_argument("assignment size mismatch");

    bool any_zero = false;
    for (const auto& a : assignment)
        if (a == 0)
            any_zero = true;

    if (any_zero) {
        std::map<VarId, Rational> point;
        for (int i = 0; i < g.n_edges(); ++i)
            point[g.edge_var(i)] = assignment[i];
        return symanzik_first(g).eval(point);
    }

    const int n = g.n_vertices();
    QMatrix lap(n, n);
    for (int i = 0; i < g.n_edges(); ++i) {
        const Edge& e = g.edges[i];
        if (e.from == e.to)
            continue; // self-loops do not affect spanning trees
        const Rational w = 1 / assignment[i];
        lap.at(e.from, e.from) += w;
        lap.at(e.to, e.to) += w;
        lap.at(e.from, e.to) -= w;
        lap.at(e.to, e.from) -= w;
    }
    QMatrix reduced(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            reduced.at(i - 1, j - 1) = lap.at(i, j);
    Rational det = (n == 1) ? Rational(1) : determinant(reduced);
    Rational prod(1);
    for (const auto& a : assignment)
        prod *= a;
    return prod * det;
}

/// Number of spanning trees via the unweighted Kirchhoff determinant.
inline Integer kirchhoff_tree_count(const FeynmanGraph& g)
{
    const int n = g.n_vertices();
    if (n == 1)
        return 1;
    QMatrix lap(n, n);
    for (const Edge& e : g.edges) {
        if (e.from == e.to)
            continue;
        lap.at(e.from, e.from) += 1;
        lap.at(e.to, e.to) += 1;
        lap.at(e.from, e.to) -= 1;
        lap.at(e.to, e.from) -= 1;
    }
    QMatrix reduced(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            reduced.at(i - 1, j - 1) = lap.at(i, j);
    const Rational det = determinant(reduced);
    return numerator(det);
}

} // namespace feynkit

#endif
