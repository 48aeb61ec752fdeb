#include "cmlat/pd.hpp"

#include <map>
#include <queue>

#include "cmlat/errors.hpp"

namespace cmlat {

namespace {

// Darts are (crossing, slot) pairs; slot k holds the k-th arc end.
std::size_t dart(std::size_t crossing, int slot) { return 4 * crossing + slot; }

}  // namespace

IngestResult pd_to_white_graph(const PDCode& pd) {
    std::size_t n = pd.crossings.size();
    if (n == 0) throw InputError("planar code needs at least one crossing");

    // Pair up the two ends of every arc.
    std::map<long long, std::vector<std::size_t>> ends;
    for (std::size_t c = 0; c < n; ++c)
        for (int k = 0; k < 4; ++k) ends[pd.crossings[c][k]].push_back(dart(c, k));
    std::vector<std::size_t> partner(4 * n);
    for (const auto& [label, ds] : ends) {
        if (ds.size() != 2)
            throw InputError("arc label " + std::to_string(label) +
                             " must appear exactly twice");
        partner[ds[0]] = ds[1];
        partner[ds[1]] = ds[0];
    }

    // The diagram must be one connected 4-valent map.
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> bfs;
    bfs.push(0);
    seen[0] = true;
    while (!bfs.empty()) {
        std::size_t c = bfs.front();
        bfs.pop();
        for (int k = 0; k < 4; ++k) {
            std::size_t other = partner[dart(c, k)] / 4;
            if (!seen[other]) {
                seen[other] = true;
                bfs.push(other);
            }
        }
    }
    for (std::size_t c = 0; c < n; ++c)
        if (!seen[c]) throw InputError("planar code is not connected");

    // Faces: follow each arc to its far end, then turn counterclockwise.
    // The face owning dart (c, k) covers the corner between slots k-1 and k.
    std::vector<long long> face(4 * n, -1);
    long long face_count = 0;
    for (std::size_t start = 0; start < 4 * n; ++start) {
        if (face[start] != -1) continue;
        std::size_t d = start;
        while (face[d] == -1) {
            face[d] = face_count;
            std::size_t p = partner[d];
            d = p - p % 4 + (p + 1) % 4;
        }
        if (face[d] != face_count) throw InputError("planar code faces do not close up");
        ++face_count;
    }
    if (face_count != static_cast<long long>(n) + 2)
        throw InputError("planar code is not a planar diagram");

    // Checkerboard colouring: consecutive corners around a crossing flank a
    // shared arc end, so they get opposite colours; this is exactly the
    // across-an-arc rule.
    std::vector<int> colour(face_count, -1);
    colour[face[0]] = 0;
    std::queue<long long> todo;
    todo.push(face[0]);
    while (!todo.empty()) {
        long long f = todo.front();
        todo.pop();
        for (std::size_t d = 0; d < 4 * n; ++d) {
            if (face[d] != f) continue;
            // Neighbouring corners at the same crossing.
            std::size_t c4 = d - d % 4;
            for (std::size_t adj : {c4 + (d + 1) % 4, c4 + (d + 3) % 4}) {
                long long g = face[adj];
                if (colour[g] == -1) {
                    colour[g] = 1 - colour[f];
                    todo.push(g);
                } else if (colour[g] == colour[f]) {
                    throw InputError("planar code admits no checkerboard colouring");
                }
            }
        }
    }

    // Alternation: the corner pair swept by turning the over-strand
    // counterclockwise (darts at slots 0 and 2) must have one colour across
    // every crossing.
    int white = colour[face[dart(0, 0)]];
    for (std::size_t c = 0; c < n; ++c) {
        if (colour[face[dart(c, 0)]] != white || colour[face[dart(c, 2)]] != white)
            throw InputError("diagram is not alternating");
    }

    std::vector<long long> index(face_count, -1);
    long long white_count = 0;
    for (long long f = 0; f < face_count; ++f)
        if (colour[f] == white) index[f] = white_count++;

    WhiteGraph g(static_cast<std::size_t>(white_count));
    for (std::size_t c = 0; c < n; ++c) {
        long long u = index[face[dart(c, 0)]];
        long long v = index[face[dart(c, 2)]];
        if (u == v)
            throw InputError("nugatory crossing: a region meets itself at crossing " +
                             std::to_string(c));
        g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }

    IngestResult out{std::move(g), false, static_cast<std::size_t>(face_count)};
    out.nugatory = !out.graph.cut_edges().empty();
    return out;
}

}  // namespace cmlat
