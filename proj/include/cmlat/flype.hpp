#ifndef CMLAT_FLYPE_HPP
#define CMLAT_FLYPE_HPP

#include <cstddef>
#include <vector>

#include "cmlat/labeling.hpp"

namespace cmlat {

// One recorded flype move.  Flype1 splits vertex v into x and y (x.y = -1)
// and merges the two witnesses u1, u2; positions map v -> x, u1 -> y,
// u2 -> u1 + u2.  Flype2 negates a component G1 of the graph minus the cut
// pair {v, w} and shifts v, w by [G1]; positions are unchanged.
struct FlypeMove {
    enum class Kind { flype1, flype2 };
    Kind kind;
    std::size_t v = 0, w = 0;            // flype2 cut pair; flype1 uses v only
    AmbientVector x, y;                  // flype1 decomposition
    std::size_t u1 = 0, u2 = 0;          // flype1 witnesses (recorded)
    std::vector<std::size_t> component;  // flype2 G1 vertex set
};

using FlypeTrace = std::vector<FlypeMove>;

// Splits vertex v = x + y with x.y = -1 and both parts in the lattice.
// Requires the derived graph 2-connected and the unique witnesses u1
// (x.u1 = 1) and u2 (y.u2 = 1) to exist.  Returns the new labeling and
// records the move.
VertexLabeling flype1(const VertexLabeling& lab, std::size_t v, const AmbientVector& x,
                      const AmbientVector& y, FlypeMove* recorded = nullptr);

// Negates the labels of component G1 of the graph minus {v, w} and replaces
// v, w by v + [G1], w + [G1].  Requires an edge between v and w and G1 a
// union-free full component.  An empty G1 is the identity.
VertexLabeling flype2(const VertexLabeling& lab, std::size_t v, std::size_t w,
                      const std::vector<std::size_t>& component,
                      FlypeMove* recorded = nullptr);

// Replays a trace from an initial labeling; validates every step.
VertexLabeling replay_trace(const VertexLabeling& initial, const FlypeTrace& trace);

}  // namespace cmlat

#endif
