#include "cmlat/tangle.hpp"

#include <algorithm>

#include "cmlat/contfrac.hpp"
#include "cmlat/errors.hpp"

namespace cmlat {

namespace {

std::vector<std::vector<long long>> all_coeffs(const VertexLabeling& lab) {
    std::vector<std::vector<long long>> out;
    out.reserve(lab.labels.size());
    for (const AmbientVector& x : lab.labels) {
        auto c = frac_coefficients(lab.spec, x);
        if (!c)
            throw InvariantError("vertex fractional part outside the chain span");
        out.push_back(std::move(*c));
    }
    return out;
}

bool is_unit_at(const std::vector<long long>& coeffs, std::size_t c) {
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != (i == c ? 1 : 0)) return false;
    return true;
}

// Largest chain index in 1..m missing from the vertex labels, or 0.
long long max_missing_chain(const std::vector<std::vector<long long>>& coeffs,
                            std::size_t m) {
    for (std::size_t c = m; c >= 1; --c) {
        bool present = false;
        for (const auto& cv : coeffs)
            if (is_unit_at(cv, c)) {
                present = true;
                break;
            }
        if (!present) return static_cast<long long>(c);
    }
    return 0;
}

}  // namespace

std::pair<VertexLabeling, FlypeTrace> normalize_fractional(const VertexLabeling& lab) {
    validate_labeling(lab);
    VertexLabeling cur = lab;
    FlypeTrace trace;
    const std::vector<AmbientVector> basis = fractional_basis(cur.spec);
    const std::size_t m = basis.size() - 1;

    std::vector<std::vector<long long>> coeffs = all_coeffs(cur);
    long long bad = max_missing_chain(coeffs, m);
    while (bad >= 1) {
        std::size_t c = static_cast<std::size_t>(bad);
        // The missing chain sits inside some vertex as a +1 run v_a + .. + v_c.
        std::size_t u = cur.labels.size();
        for (std::size_t i = 0; i < cur.labels.size(); ++i) {
            const auto& cv = coeffs[i];
            if (cv[c] != 1) continue;
            std::size_t lo = c, hi = c;
            bool plus_run = true;
            for (std::size_t j = 0; j < cv.size(); ++j) {
                if (cv[j] == 0) continue;
                if (cv[j] != 1) plus_run = false;
                lo = std::min(lo, j);
                hi = std::max(hi, j);
            }
            long long width = static_cast<long long>(hi - lo);
            long long weight = 0;
            for (std::size_t j = lo; j <= hi && plus_run; ++j) weight += cv[j];
            if (plus_run && hi == c && lo < c && weight == width + 1) {
                u = i;
                break;
            }
        }
        if (u == cur.labels.size())
            throw InvariantError("no vertex carries the required fractional run");

        AmbientVector y(static_cast<std::size_t>(cur.spec.t()),
                        static_cast<std::size_t>(cur.spec.s + 1));
        y.e = basis[c].e;
        AmbientVector x = cur.labels[u] - y;
        FlypeMove mv;
        cur = flype1(cur, u, x, y, &mv);
        trace.push_back(mv);

        coeffs = all_coeffs(cur);
        long long next_bad = max_missing_chain(coeffs, m);
        if (next_bad >= bad)
            throw InvariantError("normalization measure failed to decrease");
        bad = next_bad;
    }
    return {cur, trace};
}

std::pair<std::size_t, std::size_t> locate_markers(const VertexLabeling& lab) {
    const std::vector<std::vector<long long>> coeffs = all_coeffs(lab);
    const std::size_t n = lab.labels.size();
    std::size_t v = n, w = n;
    for (std::size_t i = 0; i < n; ++i) {
        long long e0 = lab.labels[i].e[0];
        if (e0 > 0) {
            if (v != n) throw InvariantError("two vertices with positive e0");
            if (!is_unit_at(coeffs[i], 0))
                throw InvariantError("positive-e0 vertex is not the v0 marker");
            v = i;
        } else if (e0 < 0) {
            if (w != n) throw InvariantError("two vertices with negative e0");
            for (long long ck : coeffs[i])
                if (ck != -1)
                    throw InvariantError("negative-e0 vertex is not the full-chain marker");
            w = i;
        }
    }
    if (v == n || w == n) throw InvariantError("marker vertex missing");
    return {v, w};
}

VertexLabeling reduce_to_half_integer(const VertexLabeling& lab, std::size_t v_marker,
                                      std::size_t w_marker,
                                      const std::vector<std::size_t>& path,
                                      std::pair<std::size_t, std::size_t>* marked) {
    const std::size_t n = lab.labels.size();
    std::vector<bool> drop(n, false);
    for (std::size_t p : path) drop[p] = true;
    if (drop[v_marker] || drop[w_marker])
        throw InputError("marker vertex listed in the tangle path");

    Rational half(Integer(2 * lab.spec.n - 1), Integer(2));
    ChangemakerLatticeSpec reduced_spec = build_cm_lattice(half, lab.spec.sigma);

    VertexLabeling out;
    out.spec = reduced_spec;
    std::size_t t = static_cast<std::size_t>(lab.spec.t());
    for (std::size_t i = 0; i < n; ++i) {
        if (drop[i]) continue;
        AmbientVector y(t, 2);
        y.f = lab.labels[i].f;
        if (i == v_marker) {
            y.e[0] = 1;
            y.e[1] = 1;
        } else if (i == w_marker) {
            y.e[0] = -1;
            y.e[1] = -1;
        } else {
            for (long long c : lab.labels[i].e)
                if (c != 0)
                    throw InvariantError("nonzero fractional part outside the tangle");
        }
        if (marked) {
            if (i == v_marker) marked->first = out.labels.size();
            if (i == w_marker) marked->second = out.labels.size();
        }
        out.labels.push_back(std::move(y));
    }
    validate_labeling(out);
    return out;
}

TangleCertificate extract_tangle(const VertexLabeling& lab) {
    validate_labeling(lab);
    TangleCertificate cert;
    auto [v, w] = locate_markers(lab);
    cert.v_marker = v;
    cert.w_marker = w;

    const std::vector<AmbientVector> basis = fractional_basis(lab.spec);
    const std::size_t m = basis.size() - 1;
    const std::vector<std::vector<long long>> coeffs = all_coeffs(lab);
    for (std::size_t c = 1; c <= m; ++c) {
        std::size_t at = lab.labels.size();
        for (std::size_t i = 0; i < lab.labels.size(); ++i) {
            if (!is_unit_at(coeffs[i], c)) continue;
            if (at != lab.labels.size())
                throw InvariantError("chain vector labels two vertices");
            at = i;
        }
        if (at == lab.labels.size())
            throw InvariantError("labeling is not normalized: chain vertex missing");
        cert.path.push_back(at);
    }

    long long ef = 0;
    for (std::size_t i = 0; i < lab.labels[v].e.size(); ++i)
        ef += lab.labels[v].e[i] * lab.labels[w].e[i];
    if (lab.labels[v].dot(lab.labels[w]) > ef + 1)
        throw InvariantError("marker product exceeds the fractional bound");
    cert.direct_edges = -ef - 1;
    if (cert.direct_edges < 0)
        throw InvariantError("negative direct edge count");

    std::vector<Integer> b;
    b.push_back(Integer(cert.direct_edges + (m >= 1 ? 1 : 0)));
    for (std::size_t c = 1; c <= m; ++c) b.push_back(Integer(basis[c].norm()));

    Rational beta_alpha;
    try {
        beta_alpha = eval_neg_cf_relaxed(b);
    } catch (const InputError&) {
        throw InvariantError("tangle continued fraction degenerate");
    }
    if (beta_alpha == Rational(0))
        throw InvariantError("tangle slope undefined");
    cert.slope = beta_alpha.reciprocal();

    auto [n_big, r_big] = split_n_r(lab.spec.pq);
    (void)n_big;
    Rational expected(Integer(lab.spec.pq.den() - r_big), r_big);
    if (!(cert.slope == expected))
        throw InvariantError("tangle slope mismatch");

    cert.reduced = reduce_to_half_integer(lab, v, w, cert.path, &cert.marked_crossing);
    long long vw = lab.labels[v].dot(lab.labels[w]);
    (void)vw;
    if (cert.reduced.labels[cert.marked_crossing.first].dot(
            cert.reduced.labels[cert.marked_crossing.second]) > -1)
        throw InvariantError("marked crossing has no edge");
    return cert;
}

}  // namespace cmlat
