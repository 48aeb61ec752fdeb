#ifndef CMLAT_TANGLE_HPP
#define CMLAT_TANGLE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "cmlat/flype.hpp"

namespace cmlat {

// Certificate of the fractional tangle and its collapse to a single crossing.
// slope = (q - r)/r; the reduced labeling realizes the (n - 1/2) lattice
// <w0, e1 - e0>^perp in Z^(t+2); marked_crossing holds the reduced indices of
// the two vertices with nonzero e0 coordinate.
struct TangleCertificate {
    std::size_t v_marker = 0;
    std::size_t w_marker = 0;
    std::vector<std::size_t> path;  // vertices labeled v_1 .. v_m, in order
    long long direct_edges = 0;
    Rational slope;
    VertexLabeling reduced;
    std::pair<std::size_t, std::size_t> marked_crossing{0, 0};
};

// Flypes until every fractional basis chain v_1 .. v_m appears as a vertex
// label.  Each step takes the maximal c with v_c missing, finds the vertex
// whose fractional part is the run v_a + ... + v_c, and splits off v_c; the
// maximal bad index strictly decreases.  Returns the result and the trace.
std::pair<VertexLabeling, FlypeTrace> normalize_fractional(const VertexLabeling& lab);

// In a normalized labeling: the unique vertex with positive e0 coordinate
// (fractional part v_0) and the unique one with negative e0 coordinate
// (fractional part -(v_0 + ... + v_m)).  Throws InvariantError otherwise.
std::pair<std::size_t, std::size_t> locate_markers(const VertexLabeling& lab);

// Deletes the path vertices and maps v -> v_I + e_1, w -> w_I - e_1, all
// others to their integer part, giving a labeling of the (n - 1/2) lattice
// in Z^(t+2).  Stores the reduced indices of v, w in *marked when given.
VertexLabeling reduce_to_half_integer(const VertexLabeling& lab, std::size_t v_marker,
                                      std::size_t w_marker,
                                      const std::vector<std::size_t>& path,
                                      std::pair<std::size_t, std::size_t>* marked = nullptr);

// Full tangle extraction on a normalized labeling: markers, chain path,
// direct v-w edge count |v_F . w_F| - 1, slope from the edge-count continued
// fraction, and the half-integer reduction.  The slope is checked against
// (q - r)/r and the marker product against v.w <= v_F.w_F + 1.
TangleCertificate extract_tangle(const VertexLabeling& lab);

}  // namespace cmlat

#endif
