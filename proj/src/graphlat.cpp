#include "cmlat/graphlat.hpp"

#include <algorithm>
#include <numeric>

#include "cmlat/det.hpp"
#include "cmlat/errors.hpp"

namespace cmlat {

WhiteGraph::WhiteGraph(std::size_t n) : mult_(n, std::vector<long long>(n, 0)) {
    if (n == 0) throw InputError("white graph needs at least one vertex");
}

WhiteGraph WhiteGraph::from_edges(std::size_t n,
                                  const std::vector<std::pair<int, int>>& edges) {
    WhiteGraph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
            static_cast<std::size_t>(v) >= n)
            throw InputError("edge endpoint out of range");
        g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }
    return g;
}

void WhiteGraph::add_edge(std::size_t u, std::size_t v, long long mult) {
    if (u >= size() || v >= size()) throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("self-loop rejected: diagram is not reduced");
    if (mult <= 0) throw InputError("edge multiplicity must be positive");
    mult_[u][v] += mult;
    mult_[v][u] += mult;
}

long long WhiteGraph::multiplicity(std::size_t u, std::size_t v) const {
    if (u >= size() || v >= size()) throw InputError("vertex out of range");
    return mult_[u][v];
}

long long WhiteGraph::degree(std::size_t v) const {
    if (v >= size()) throw InputError("vertex out of range");
    return std::accumulate(mult_[v].begin(), mult_[v].end(), 0LL);
}

long long WhiteGraph::edge_total() const {
    long long total = 0;
    for (std::size_t v = 0; v < size(); ++v) total += degree(v);
    return total / 2;
}

std::vector<std::tuple<std::size_t, std::size_t, long long>> WhiteGraph::edge_list() const {
    std::vector<std::tuple<std::size_t, std::size_t, long long>> out;
    for (std::size_t u = 0; u < size(); ++u)
        for (std::size_t v = u + 1; v < size(); ++v)
            if (mult_[u][v] > 0) out.emplace_back(u, v, mult_[u][v]);
    return out;
}

std::vector<std::vector<std::size_t>> WhiteGraph::components(
    const std::vector<bool>& removed) const {
    std::vector<bool> seen(size(), false);
    std::vector<std::vector<std::size_t>> comps;
    for (std::size_t start = 0; start < size(); ++start) {
        if (seen[start] || (start < removed.size() && removed[start])) continue;
        std::vector<std::size_t> comp, stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (std::size_t w = 0; w < size(); ++w) {
                if (mult_[v][w] == 0 || seen[w]) continue;
                if (w < removed.size() && removed[w]) continue;
                seen[w] = true;
                stack.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool WhiteGraph::is_connected() const { return components({}).size() == 1; }

bool WhiteGraph::is_2_connected() const {
    if (!is_connected()) return false;
    if (size() <= 2) return true;
    for (std::size_t v = 0; v < size(); ++v) {
        std::vector<bool> removed(size(), false);
        removed[v] = true;
        if (components(removed).size() > 1) return false;
    }
    return true;
}

WhiteGraph WhiteGraph::with_pair_removed(std::size_t u, std::size_t v) const {
    if (u >= size() || v >= size() || u == v) throw InputError("bad edge pair");
    WhiteGraph h = *this;
    h.mult_[u][v] = h.mult_[v][u] = 0;
    return h;
}

std::vector<std::pair<std::size_t, std::size_t>> WhiteGraph::cut_edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < size(); ++u)
        for (std::size_t v = u + 1; v < size(); ++v) {
            if (mult_[u][v] != 1) continue;
            if (!with_pair_removed(u, v).is_connected()) out.emplace_back(u, v);
        }
    return out;
}

long long lattice_dot(const WhiteGraph& g, const VertexVector& a, const VertexVector& b) {
    if (a.size() != g.size() || b.size() != g.size())
        throw InputError("vertex vector size mismatch");
    long long total = 0;
    for (std::size_t u = 0; u < g.size(); ++u) {
        if (a[u] == 0) continue;
        long long row = a[u] * g.degree(u) * b[u];
        for (std::size_t v = 0; v < g.size(); ++v)
            if (v != u && b[v] != 0) row -= a[u] * g.multiplicity(u, v) * b[v];
        total += row;
    }
    return total;
}

bool same_class(const WhiteGraph& g, const VertexVector& a, const VertexVector& b) {
    if (a.size() != g.size() || b.size() != g.size())
        throw InputError("vertex vector size mismatch");
    long long shift = a[0] - b[0];
    for (std::size_t v = 0; v < g.size(); ++v)
        if (a[v] - b[v] != shift) return false;
    return true;
}

long long pairing(const WhiteGraph& g, std::size_t v, const std::vector<bool>& in_R) {
    if (v >= g.size() || in_R.size() != g.size())
        throw InputError("vertex or subset out of range");
    long long total = 0;
    if (in_R[v]) {
        for (std::size_t w = 0; w < g.size(); ++w)
            if (!in_R[w]) total += g.multiplicity(v, w);
    } else {
        for (std::size_t w = 0; w < g.size(); ++w)
            if (in_R[w]) total -= g.multiplicity(v, w);
    }
    return total;
}

bool is_irreducible_sum(const WhiteGraph& g, const std::vector<bool>& in_R) {
    if (in_R.size() != g.size()) throw InputError("subset size mismatch");
    std::size_t count = 0;
    for (bool b : in_R) count += b ? 1 : 0;
    if (count == 0 || count == g.size())
        throw InputError("irreducibility needs a proper nonempty subset");
    std::vector<bool> complement(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) complement[v] = !in_R[v];
    return g.components(complement).size() == 1 && g.components(in_R).size() == 1;
}

bool useful_bound_check(const WhiteGraph& g, const std::vector<bool>& in_R,
                        const VertexVector& z) {
    VertexVector r(g.size(), 0);
    for (std::size_t v = 0; v < g.size(); ++v) r[v] = in_R[v] ? 1 : 0;
    VertexVector diff(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) diff[v] = r[v] - z[v];
    return lattice_dot(g, diff, z) <= 0;
}

std::vector<std::vector<Integer>> goeritz_matrix(const WhiteGraph& g, std::size_t deleted) {
    if (deleted >= g.size()) throw InputError("deleted vertex out of range");
    if (!g.is_connected()) throw InputError("Goeritz form needs a connected graph");
    std::vector<std::size_t> keep;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (v != deleted) keep.push_back(v);
    std::vector<std::vector<Integer>> m(keep.size(), std::vector<Integer>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            m[i][j] = (i == j) ? Integer(g.degree(keep[i]))
                               : Integer(-g.multiplicity(keep[i], keep[j]));
    return m;
}

Integer goeritz_det(const WhiteGraph& g) {
    if (g.size() == 1) return 1;
    return bareiss_det(goeritz_matrix(g, g.size() - 1));
}

CutEdgeStructure cut_edge_structure(const WhiteGraph& g, std::size_t v,
                                    const VertexVector& x, const VertexVector& y) {
    if (v >= g.size()) throw InputError("vertex out of range");
    if (!g.is_2_connected() || !g.cut_edges().empty())
        throw InputError("cut edge structure needs a 2-connected graph without cut edges");
    VertexVector unit(g.size(), 0);
    unit[v] = 1;
    VertexVector sum(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) sum[i] = x[i] + y[i];
    if (!same_class(g, sum, unit)) throw InputError("x + y is not the vertex v");
    if (lattice_dot(g, x, y) != -1) throw InputError("x . y must be -1");

    std::vector<bool> without_v(g.size(), false);
    without_v[v] = true;

    for (std::size_t a = 0; a < g.size(); ++a) {
        for (std::size_t b = a + 1; b < g.size(); ++b) {
            if (a == v || b == v || g.multiplicity(a, b) != 1) continue;
            // Drop edge (a, b) inside G \ {v} and look for a split.
            auto comps = g.with_pair_removed(a, b).components(without_v);
            if (comps.size() != 2) continue;

            VertexVector cand_x(g.size(), 0), cand_y(g.size(), 0);
            cand_x[v] = cand_y[v] = 1;
            for (std::size_t w : comps[0]) cand_x[w] = 1;
            for (std::size_t w : comps[1]) cand_y[w] = 1;
            bool direct = same_class(g, x, cand_x) && same_class(g, y, cand_y);
            bool swapped = same_class(g, x, cand_y) && same_class(g, y, cand_x);
            if (!direct && !swapped) continue;

            CutEdgeStructure out;
            out.edge = {a, b};
            out.R = direct ? comps[0] : comps[1];
            out.S = direct ? comps[1] : comps[0];

            // u1, u2: the unique vertices pairing to exactly +1.
            std::vector<std::size_t> pos_x, pos_y;
            for (std::size_t w = 0; w < g.size(); ++w) {
                if (w == v) continue;
                VertexVector uw(g.size(), 0);
                uw[w] = 1;
                long long px = lattice_dot(g, x, uw);
                long long py = lattice_dot(g, y, uw);
                if (px > 0) {
                    if (px != 1) throw InvariantError("positive pairing exceeds 1");
                    pos_x.push_back(w);
                }
                if (py > 0) {
                    if (py != 1) throw InvariantError("positive pairing exceeds 1");
                    pos_y.push_back(w);
                }
            }
            if (pos_x.size() != 1 || pos_y.size() != 1)
                throw InvariantError("cut edge witnesses are not unique");
            out.u1 = pos_x[0];
            out.u2 = pos_y[0];
            return out;
        }
    }
    throw InputError("no cut edge realizes the decomposition");
}

}  // namespace cmlat
