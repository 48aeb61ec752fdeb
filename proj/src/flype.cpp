#include "cmlat/flype.hpp"

#include <algorithm>

namespace cmlat {

VertexLabeling flype1(const VertexLabeling& lab, std::size_t v, const AmbientVector& x,
                      const AmbientVector& y, FlypeMove* recorded) {
    if (v >= lab.labels.size()) throw InputError("vertex out of range");
    if (x.is_zero() || y.is_zero()) throw InputError("flype needs nonzero parts");
    if (x + y != lab.labels[v]) throw InputError("x + y must equal the vertex label");
    if (x.dot(y) != -1) throw InputError("x . y must be -1");
    for (const AmbientVector& w : lab.spec.w)
        if (y.dot(w) != 0) throw InputError("flype parts must lie in the lattice");
    WhiteGraph g = graph_of(lab);
    if (!g.is_2_connected()) throw InputError("flype needs a 2-connected graph");

    // The unique witnesses pairing positively with each part.
    std::vector<std::size_t> pos_x, pos_y;
    for (std::size_t u = 0; u < lab.labels.size(); ++u) {
        if (u == v) continue;
        long long px = lab.labels[u].dot(x);
        long long py = lab.labels[u].dot(y);
        if (px > 0) {
            if (px != 1) throw InputError("a witness must pair exactly 1 with x");
            pos_x.push_back(u);
        }
        if (py > 0) {
            if (py != 1) throw InputError("a witness must pair exactly 1 with y");
            pos_y.push_back(u);
        }
    }
    if (pos_x.size() != 1 || pos_y.size() != 1)
        throw InputError("flype witnesses are not unique");
    const std::size_t u1 = pos_x[0], u2 = pos_y[0];

    VertexLabeling out = lab;
    out.labels[v] = x;
    out.labels[u1] = y;
    out.labels[u2] = lab.labels[u1] + lab.labels[u2];
    validate_labeling(out);

    if (recorded) {
        recorded->kind = FlypeMove::Kind::flype1;
        recorded->v = v;
        recorded->x = x;
        recorded->y = y;
        recorded->u1 = u1;
        recorded->u2 = u2;
        recorded->w = 0;
        recorded->component.clear();
    }
    return out;
}

VertexLabeling flype2(const VertexLabeling& lab, std::size_t v, std::size_t w,
                      const std::vector<std::size_t>& component, FlypeMove* recorded) {
    const std::size_t n = lab.labels.size();
    if (v >= n || w >= n || v == w) throw InputError("cut pair out of range");
    WhiteGraph g = graph_of(lab);
    if (g.multiplicity(v, w) == 0) throw InputError("cut pair must share an edge");
    for (std::size_t z : component)
        if (z >= n || z == v || z == w) throw InputError("component vertex out of range");

    if (!component.empty()) {
        std::vector<bool> removed(n, false);
        removed[v] = removed[w] = true;
        auto comps = g.components(removed);
        std::vector<std::size_t> sorted = component;
        std::sort(sorted.begin(), sorted.end());
        if (std::find(comps.begin(), comps.end(), sorted) == comps.end())
            throw InputError("subset is not a component of the graph minus the cut pair");
    }

    AmbientVector shift(static_cast<std::size_t>(lab.spec.t()),
                        static_cast<std::size_t>(lab.spec.s) + 1);
    for (std::size_t z : component) shift = shift + lab.labels[z];
    for (std::size_t z : component) {
        AmbientVector vw_sum = lab.labels[v] + lab.labels[w];
        if (vw_sum.dot(lab.labels[z]) != -shift.dot(lab.labels[z]))
            throw InvariantError("component fails the cut pair pairing identity");
    }

    VertexLabeling out = lab;
    for (std::size_t z : component) out.labels[z] = -lab.labels[z];
    out.labels[v] = lab.labels[v] + shift;
    out.labels[w] = lab.labels[w] + shift;
    validate_labeling(out);

    if (recorded) {
        recorded->kind = FlypeMove::Kind::flype2;
        recorded->v = v;
        recorded->w = w;
        recorded->component = component;
        recorded->x = AmbientVector();
        recorded->y = AmbientVector();
        recorded->u1 = recorded->u2 = 0;
    }
    return out;
}

VertexLabeling replay_trace(const VertexLabeling& initial, const FlypeTrace& trace) {
    VertexLabeling cur = initial;
    for (const FlypeMove& mv : trace) {
        if (mv.kind == FlypeMove::Kind::flype1)
            cur = flype1(cur, mv.v, mv.x, mv.y);
        else
            cur = flype2(cur, mv.v, mv.w, mv.component);
    }
    return cur;
}

}  // namespace cmlat
