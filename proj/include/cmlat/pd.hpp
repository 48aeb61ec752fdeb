#ifndef CMLAT_PD_HPP
#define CMLAT_PD_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "cmlat/graphlat.hpp"

namespace cmlat {

// Planar diagram code: one 4-tuple of arc labels per crossing, listed
// counterclockwise starting from the incoming under-strand.  Every arc label
// must appear exactly twice.
struct PDCode {
    std::vector<std::array<long long, 4>> crossings;
};

struct IngestResult {
    WhiteGraph graph;
    // Some crossing joins a region to itself through the other colour class:
    // the graph has a cut edge and the diagram is not reduced.
    bool nugatory = false;
    std::size_t regions = 0;  // total face count of the diagram
};

// Traces the faces of the 4-valent planar map, checkerboard-colours them, and
// returns the graph on the colour class consistent with an alternating
// diagram (the regions swept by rotating the over-strand counterclockwise).
// Throws InputError on malformed codes, non-alternating diagrams, and
// crossings bounding the same white region twice.
IngestResult pd_to_white_graph(const PDCode& pd);

}  // namespace cmlat

#endif
