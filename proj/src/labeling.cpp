#include "cmlat/labeling.hpp"

#include <algorithm>

#include "cmlat/det.hpp"

namespace cmlat {

WhiteGraph graph_of(const VertexLabeling& lab) {
    const std::size_t n = lab.labels.size();
    if (n == 0) throw InvariantError("labeling has no vertices");
    WhiteGraph g(n);
    for (std::size_t u = 0; u < n; ++u) {
        if (lab.labels[u].norm() <= 0) throw InvariantError("label with non-positive norm");
        for (std::size_t v = u + 1; v < n; ++v) {
            long long d = lab.labels[u].dot(lab.labels[v]);
            if (d > 0) throw InvariantError("positive off-diagonal product");
            if (d < 0) g.add_edge(u, v, -d);
        }
    }
    return g;
}

void validate_labeling(const VertexLabeling& lab) {
    const std::size_t t = static_cast<std::size_t>(lab.spec.t());
    const std::size_t width = static_cast<std::size_t>(lab.spec.s) + 1;
    for (const AmbientVector& x : lab.labels) {
        if (x.f.size() != t || x.e.size() != width)
            throw InvariantError("label has wrong ambient shape");
        for (const AmbientVector& w : lab.spec.w)
            if (x.dot(w) != 0) throw InvariantError("label not orthogonal to a defining vector");
    }
    AmbientVector sum(t, width);
    for (const AmbientVector& x : lab.labels) sum = sum + x;
    if (!sum.is_zero()) throw InvariantError("labels do not sum to zero");

    WhiteGraph g = graph_of(lab);
    if (!g.is_connected()) throw InvariantError("derived graph is disconnected");
    if (goeritz_det(g) != lab.spec.p())
        throw InvariantError("Gram determinant differs from p");
}

AmbientSymmetry ambient_symmetry(const ChangemakerLatticeSpec& spec) {
    AmbientSymmetry sym;
    const std::size_t t = spec.sigma.size();

    std::size_t i = 0;
    while (i < t) {
        std::size_t j = i;
        while (j < t && spec.sigma[j] == spec.sigma[i]) ++j;
        if (j - i >= 2) {
            std::vector<std::size_t> block;
            for (std::size_t k = i; k < j; ++k) block.push_back(k);
            sym.blocks.push_back(std::move(block));
        }
        i = j;
    }

    // Free e-columns inside w_k's positive tail (flat offset t).  For k < l
    // the last tail index m_k anchors w_{k+1}, so only the interior moves.
    const auto& m = spec.m_indices;
    for (std::size_t k = 1; k < m.size(); ++k) {
        long long lo = m[k - 1] + 1;
        long long hi = (k + 1 < m.size()) ? m[k] - 1 : m[k];
        if (hi - lo + 1 >= 2) {
            std::vector<std::size_t> block;
            for (long long j = lo; j <= hi; ++j)
                block.push_back(t + static_cast<std::size_t>(j));
            sym.blocks.push_back(std::move(block));
        }
    }
    return sym;
}

std::vector<long long> label_matrix(const VertexLabeling& lab) {
    std::vector<long long> out;
    for (const AmbientVector& x : lab.labels) {
        auto flat = x.flat();
        out.insert(out.end(), flat.begin(), flat.end());
    }
    return out;
}

namespace {

// Applies a coordinate permutation given as old-index -> new-index.
std::vector<long long> permute_matrix(const std::vector<long long>& flat_matrix,
                                      std::size_t dim, const std::vector<std::size_t>& to) {
    std::vector<long long> out(flat_matrix.size());
    const std::size_t rows = flat_matrix.size() / dim;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            out[r * dim + to[c]] = flat_matrix[r * dim + c];
    return out;
}

void best_over_group(const std::vector<std::vector<std::size_t>>& blocks, std::size_t bi,
                     std::vector<std::size_t>& to, const std::vector<long long>& matrix,
                     std::size_t dim, std::vector<long long>& best) {
    if (bi == blocks.size()) {
        std::vector<long long> candidate = permute_matrix(matrix, dim, to);
        if (best.empty() || candidate < best) best = std::move(candidate);
        return;
    }
    std::vector<std::size_t> perm = blocks[bi];
    std::sort(perm.begin(), perm.end());
    do {
        for (std::size_t i = 0; i < perm.size(); ++i) to[blocks[bi][i]] = perm[i];
        best_over_group(blocks, bi + 1, to, matrix, dim, best);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (std::size_t idx : blocks[bi]) to[idx] = idx;
}

}  // namespace

VertexLabeling canonicalize(const VertexLabeling& lab) {
    AmbientSymmetry sym = ambient_symmetry(lab.spec);
    const std::size_t dim = static_cast<std::size_t>(lab.spec.ambient_dim());
    std::vector<long long> matrix = label_matrix(lab);

    std::vector<std::size_t> to(dim);
    for (std::size_t i = 0; i < dim; ++i) to[i] = i;
    std::vector<long long> best;
    best_over_group(sym.blocks, 0, to, matrix, dim, best);

    VertexLabeling out;
    out.spec = lab.spec;
    const std::size_t t = static_cast<std::size_t>(lab.spec.t());
    for (std::size_t r = 0; r < lab.labels.size(); ++r) {
        std::vector<long long> row(best.begin() + static_cast<long>(r * dim),
                                   best.begin() + static_cast<long>((r + 1) * dim));
        out.labels.push_back(AmbientVector::from_flat(row, t));
    }
    return out;
}

}  // namespace cmlat
