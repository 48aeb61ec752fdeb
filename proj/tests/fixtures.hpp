#ifndef CMLAT_TESTS_FIXTURES_HPP
#define CMLAT_TESTS_FIXTURES_HPP

#include <vector>

#include "cmlat/cm_lattice.hpp"
#include "cmlat/contfrac.hpp"
#include "cmlat/graphlat.hpp"
#include "cmlat/labeling.hpp"

namespace fixtures {

inline cmlat::AmbientVector av(std::vector<long long> f, std::vector<long long> e) {
    cmlat::AmbientVector x;
    x.f = std::move(f);
    x.e = std::move(e);
    return x;
}

// White graph of the 11-crossing alternating knot with determinant 107:
// five white regions, eleven crossings.
inline cmlat::WhiteGraph graph_11a15() {
    cmlat::WhiteGraph g(5);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(0, 3, 2);
    g.add_edge(0, 4);
    g.add_edge(1, 4, 2);
    g.add_edge(3, 4, 3);
    return g;
}

// Its hand-checked labeling in the 107/5 lattice, sigma = (1, 2, 4):
// vertex 2 carries the chain -e2+e3; vertices 0 and 1 are the markers.
inline cmlat::VertexLabeling labeling_11a15() {
    cmlat::VertexLabeling lab;
    lab.spec = cmlat::build_cm_lattice(cmlat::Rational(107, 5), {1, 2, 4});
    lab.labels = {
        av({1, -1, 0}, {1, 1, 1, 0}),
        av({1, 0, 0}, {-1, -1, 0, -1}),
        av({0, 0, 0}, {0, 0, -1, 1}),
        av({0, 2, -1}, {0, 0, 0, 0}),
        av({-2, -1, 1}, {0, 0, 0, 0}),
    };
    return lab;
}

// The graph left after collapsing the fractional tangle: the 9-crossing knot
// with determinant 43.
inline cmlat::WhiteGraph graph_9_22() {
    cmlat::WhiteGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 3, 2);
    g.add_edge(2, 3, 3);
    return g;
}

// Two vertices joined by k parallel edges.
inline cmlat::WhiteGraph banana(long long k) {
    cmlat::WhiteGraph g(2);
    g.add_edge(0, 1, k);
    return g;
}

inline cmlat::WhiteGraph cycle(std::size_t k) {
    cmlat::WhiteGraph g(k);
    for (std::size_t i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
}

// Trefoil white graph labeling in the 3/2 lattice.
inline cmlat::VertexLabeling labeling_trefoil() {
    cmlat::VertexLabeling lab;
    lab.spec = cmlat::build_cm_lattice(cmlat::Rational(3, 2), {1});
    lab.labels = {av({-1}, {1, 1}), av({1}, {-1, -1})};
    return lab;
}

// White graph of the standard 2-bridge diagram for slope p/q: a path whose
// tridiagonal Goeritz form has diagonal the expansion of p/(p-q), closed up
// by an outer vertex absorbing the leftover degree.
inline cmlat::WhiteGraph lens_graph(const cmlat::Rational& pq) {
    using cmlat::Integer;
    cmlat::Rational target(pq.num(), Integer(pq.num() - pq.den()));
    cmlat::NegCF cf = cmlat::neg_cf_expand(target);
    std::size_t k = cf.a.size();
    cmlat::WhiteGraph g(k + 1);
    for (std::size_t i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    for (std::size_t i = 0; i < k; ++i) {
        long long path_neighbors = (k == 1) ? 0 : ((i == 0 || i + 1 == k) ? 1 : 2);
        long long mult = static_cast<long long>(cf.a[i]) - path_neighbors;
        if (mult > 0) g.add_edge(i, k, mult);
    }
    return g;
}

}  // namespace fixtures

#endif
