#ifndef CMLAT_GRAPHLAT_HPP
#define CMLAT_GRAPHLAT_HPP

#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "cmlat/rational.hpp"

namespace cmlat {

// Connected multigraph without self-loops, the white graph of a link
// diagram.  Vertices are 0..size()-1; edges carry positive multiplicities.
class WhiteGraph {
public:
    explicit WhiteGraph(std::size_t n);
    static WhiteGraph from_edges(std::size_t n,
                                 const std::vector<std::pair<int, int>>& edges);

    void add_edge(std::size_t u, std::size_t v, long long mult = 1);

    std::size_t size() const { return mult_.size(); }
    long long multiplicity(std::size_t u, std::size_t v) const;
    long long degree(std::size_t v) const;
    long long edge_total() const;
    // Edge list with one entry per unordered pair, u < v.
    std::vector<std::tuple<std::size_t, std::size_t, long long>> edge_list() const;

    bool is_connected() const;
    // Connected components of the graph minus the masked vertices.
    std::vector<std::vector<std::size_t>> components(const std::vector<bool>& removed) const;
    bool is_2_connected() const;
    // Single edges whose removal disconnects the graph.  Multiplicity >= 2
    // pairs never qualify.
    std::vector<std::pair<std::size_t, std::size_t>> cut_edges() const;
    // Copy with the (u, v) multiplicity zeroed; for bridge analysis.
    WhiteGraph with_pair_removed(std::size_t u, std::size_t v) const;

    bool operator==(const WhiteGraph& o) const { return mult_ == o.mult_; }

private:
    std::vector<std::vector<long long>> mult_;
};

// Vectors of the graph lattice in vertex coordinates: an integer vector over
// the vertices, read modulo the all-ones vector [V].
using VertexVector = std::vector<long long>;

// Bilinear form of the graph lattice: a.dot(b) with v.v = d(v) and
// v.w = -e(v,w); equals a^T (D - A) b, invariant under shifts by [V].
long long lattice_dot(const WhiteGraph& g, const VertexVector& a, const VertexVector& b);

// True iff a and b name the same class, i.e. differ by a multiple of [V].
bool same_class(const WhiteGraph& g, const VertexVector& a, const VertexVector& b);

// Pairing of a single vertex v with the class [R]: e(v, V\R) if v is in R,
// -e(v, R) otherwise.
long long pairing(const WhiteGraph& g, std::size_t v, const std::vector<bool>& in_R);

// [R] is irreducible iff both R and its complement induce connected
// subgraphs.  R must be a proper nonempty subset.
bool is_irreducible_sum(const WhiteGraph& g, const std::vector<bool>& in_R);

// ([R] - z) . z <= 0 holds for every class z; exposed for property tests.
bool useful_bound_check(const WhiteGraph& g, const std::vector<bool>& in_R,
                        const VertexVector& z);

// Symmetric positive-definite form on the vertices with one vertex deleted:
// diagonal d(v_i), off-diagonal -e(v_i, v_j).
std::vector<std::vector<Integer>> goeritz_matrix(const WhiteGraph& g, std::size_t deleted);

// Determinant of the Goeritz form; independent of the deleted vertex, so the
// default deletes the highest-index one.
Integer goeritz_det(const WhiteGraph& g);

// Witness for a vertex decomposition v = x + y with x.y = -1: the cut edge
// of G\{v}, the two component vertex sets, and the unique vertices pairing
// positively with x and y.
struct CutEdgeStructure {
    std::pair<std::size_t, std::size_t> edge;
    std::vector<std::size_t> R, S;
    std::size_t u1, u2;
};

// Requires g 2-connected without cut edges and v = x + y, x.y = -1 in vertex
// coordinates.  Throws InputError when the decomposition hypotheses fail.
CutEdgeStructure cut_edge_structure(const WhiteGraph& g, std::size_t v,
                                    const VertexVector& x, const VertexVector& y);

}  // namespace cmlat

#endif
