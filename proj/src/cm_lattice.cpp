#include "cmlat/cm_lattice.hpp"

#include <algorithm>

namespace cmlat {

namespace {

long long to_ll(const Integer& v, const char* what) {
    if (v > 1000000000LL || v < -1000000000LL)
        throw InputError(std::string(what) + " exceeds the coordinate-safe bound 10^9");
    return static_cast<long long>(v);
}

}  // namespace

ChangemakerLatticeSpec build_cm_lattice(const Rational& pq, const SigmaTail& sigma) {
    if (pq.den() < 2) throw InputError("changemaker lattice needs denominator q >= 2");
    if (pq <= Rational(1)) throw InputError("degenerate slope: need p/q > 1");
    if (!is_changemaker(sigma)) throw InputError("sigma is not a changemaker tail");

    ChangemakerLatticeSpec spec;
    spec.pq = pq;
    auto [n_big, r_big] = split_n_r(pq);
    spec.n = to_ll(n_big, "n");
    spec.r = to_ll(r_big, "r");

    long long norm_sq = 1;
    for (long long v : sigma) norm_sq += v * v;
    if (norm_sq != spec.n)
        throw InputError("sigma norm mismatch: 1 + sum sigma_i^2 must equal n");
    spec.sigma = sigma;

    NegCF expansion = neg_cf_expand(pq);
    for (const Integer& ai : expansion.a) spec.a.push_back(to_ll(ai, "expansion entry"));
    if (spec.a[0] != spec.n) throw InvariantError("expansion head differs from ceil(p/q)");

    // The tail of the p/q expansion is the expansion of q/r.
    {
        NegCF tail_cf = neg_cf_expand(Rational(pq.den(), r_big));
        if (tail_cf.a.size() != spec.a.size() - 1)
            throw InvariantError("expansion tail is not the expansion of q/r");
        for (std::size_t i = 0; i + 1 < spec.a.size(); ++i)
            if (tail_cf.a[i] != spec.a[i + 1])
                throw InvariantError("expansion tail is not the expansion of q/r");
    }

    spec.m_indices.push_back(0);
    long long acc = 0;
    for (std::size_t k = 1; k < spec.a.size(); ++k) {
        acc += spec.a[k] - 1;
        spec.m_indices.push_back(acc);
    }
    spec.s = spec.m_indices.back();

    const std::size_t t = sigma.size();
    const std::size_t width = static_cast<std::size_t>(spec.s) + 1;

    AmbientVector w0(t, width);
    w0.e[0] = 1;
    for (std::size_t i = 0; i < t; ++i) w0.f[i] = sigma[i];
    spec.w.push_back(w0);
    for (std::size_t k = 1; k < spec.a.size(); ++k) {
        AmbientVector wk(t, width);
        wk.e[static_cast<std::size_t>(spec.m_indices[k - 1])] = -1;
        for (long long j = spec.m_indices[k - 1] + 1; j <= spec.m_indices[k]; ++j)
            wk.e[static_cast<std::size_t>(j)] = 1;
        spec.w.push_back(wk);
    }

    // Self-check the Gram shape: diagonal a_k, -1 between neighbours, 0 else.
    for (std::size_t i = 0; i < spec.w.size(); ++i) {
        for (std::size_t j = i; j < spec.w.size(); ++j) {
            long long expected = 0;
            if (i == j)
                expected = spec.a[i];
            else if (j == i + 1)
                expected = -1;
            if (spec.w[i].dot(spec.w[j]) != expected)
                throw InvariantError("defining vectors violate the tridiagonal Gram shape");
        }
    }
    return spec;
}

std::vector<AmbientVector> fractional_basis(const ChangemakerLatticeSpec& spec) {
    const std::size_t t = spec.sigma.size();
    const std::size_t width = static_cast<std::size_t>(spec.s) + 1;

    std::vector<bool> is_m(width, false);
    for (long long mk : spec.m_indices) is_m[static_cast<std::size_t>(mk)] = true;
    std::vector<long long> M;
    for (std::size_t j = 0; j < width; ++j)
        if (!is_m[j]) M.push_back(static_cast<long long>(j));

    std::vector<AmbientVector> basis;
    AmbientVector v0(t, width);
    const long long head_end = M.empty() ? spec.s : M.front();
    for (long long j = 0; j <= head_end; ++j) v0.e[static_cast<std::size_t>(j)] = 1;
    basis.push_back(v0);

    for (std::size_t i = 0; i < M.size(); ++i) {
        const long long k = M[i];
        const long long k_next = (i + 1 < M.size()) ? M[i + 1] : spec.s;
        AmbientVector chain(t, width);
        chain.e[static_cast<std::size_t>(k)] = -1;
        for (long long j = k + 1; j <= k_next; ++j) chain.e[static_cast<std::size_t>(j)] = 1;
        basis.push_back(chain);
    }

    if (static_cast<long long>(basis.size()) != spec.frac_top() + 1)
        throw InvariantError("fractional basis size differs from s - l + 1");
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            long long expected = (j == i + 1) ? -1 : 0;
            if (basis[i].dot(basis[j]) != expected)
                throw InvariantError("fractional basis is not a -1-tridiagonal chain");
        }
    return basis;
}

std::vector<AmbientVector> lattice_basis(const ChangemakerLatticeSpec& spec) {
    const std::size_t t = spec.sigma.size();
    const std::size_t width = static_cast<std::size_t>(spec.s) + 1;
    std::vector<AmbientVector> frac = fractional_basis(spec);

    std::vector<AmbientVector> basis;
    long long prefix_sum = 0;
    for (std::size_t k = 0; k < t; ++k) {
        AmbientVector u(t, width);
        u.f[k] = -1;
        const long long sk = spec.sigma[k];
        if (sk == 0) {
            u.f[k] = 1;  // f_k itself lies in the lattice
        } else {
            SigmaTail prefix(spec.sigma.begin(), spec.sigma.begin() + static_cast<long>(k));
            if (sk <= prefix_sum) {
                for (int idx : realize_subset(prefix, sk)) u.f[idx - 1] += 1;
            } else {
                // sk = prefix_sum + 1: realize sk - 1 and absorb the 1 into v_0.
                for (int idx : realize_subset(prefix, sk - 1)) u.f[idx - 1] += 1;
                u = u + frac[0];
            }
        }
        basis.push_back(u);
        prefix_sum += sk;
    }
    for (std::size_t i = 1; i < frac.size(); ++i) basis.push_back(frac[i]);

    if (static_cast<long long>(basis.size()) != spec.rank())
        throw InvariantError("lattice basis size differs from the lattice rank");
    for (const AmbientVector& b : basis)
        for (const AmbientVector& wk : spec.w)
            if (b.dot(wk) != 0) throw InvariantError("lattice basis vector not orthogonal to w");
    return basis;
}

bool is_indecomposable(const ChangemakerLatticeSpec& spec) {
    for (long long v : spec.sigma)
        if (v == 0) return false;
    return true;
}

std::optional<std::vector<long long>> frac_coefficients(const ChangemakerLatticeSpec& spec,
                                                        const AmbientVector& x) {
    std::vector<AmbientVector> basis = fractional_basis(spec);
    AmbientVector res = x;
    for (auto& v : res.f) v = 0;  // only the e-part is decomposed

    std::vector<long long> coeffs;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        // v_0 is the only basis vector supported on e_0; each later chain
        // v_j is the only remaining one supported on its leading -1 slot.
        long long c;
        if (j == 0) {
            c = res.e[0];
        } else {
            std::size_t lead = 0;
            while (basis[j].e[lead] == 0) ++lead;
            c = -res.e[lead];
        }
        coeffs.push_back(c);
        if (c != 0) {
            for (std::size_t i = 0; i < res.e.size(); ++i) res.e[i] -= c * basis[j].e[i];
        }
    }
    if (!res.is_zero()) return std::nullopt;
    return coeffs;
}

bool is_irreducible_LF(const ChangemakerLatticeSpec& spec, const AmbientVector& x) {
    for (long long v : x.f)
        if (v != 0) throw InputError("vector is not supported on the fractional block");
    auto coeffs = frac_coefficients(spec, x);
    if (!coeffs) throw InputError("vector is not in the fractional sublattice");
    if (x.is_zero()) return false;

    // Exactly the vectors +/-(v_a + ... + v_b): one contiguous block of
    // equal signs, all coefficients 0 or +/-1.
    int sign = 0;
    int blocks = 0;
    bool in_block = false;
    for (long long c : *coeffs) {
        if (c != 0 && c != 1 && c != -1) return false;
        if (c == 0) {
            in_block = false;
        } else {
            if (!in_block) {
                ++blocks;
                sign = (c > 0) ? 1 : -1;
                in_block = true;
            } else if ((c > 0 ? 1 : -1) != sign) {
                return false;
            }
        }
    }
    return blocks == 1;
}

namespace {

long long isqrt_ll(long long n) {
    long long r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

struct BruteCtx {
    const AmbientVector* x;
    const std::vector<AmbientVector>* orth;
    std::vector<long long> flat_x;
    std::size_t t;
    std::size_t dim;
    long long bound;
    long long budget;
    std::vector<long long> y;
    bool fixed_f;  // f block pinned to zero
};

bool in_lattice(const BruteCtx& ctx, const AmbientVector& v) {
    for (const AmbientVector& w : *ctx.orth)
        if (v.dot(w) != 0) return false;
    return true;
}

bool search_decomposition(BruteCtx& ctx, std::size_t i, long long norm_so_far) {
    if (i == ctx.dim) {
        AmbientVector y = AmbientVector::from_flat(ctx.y, ctx.t);
        if (y.is_zero()) return false;
        if (!in_lattice(ctx, y)) return false;
        AmbientVector z = *ctx.x - y;
        if (z.is_zero()) return false;
        return y.dot(z) >= 0;
    }
    if (ctx.fixed_f && i < ctx.t) {
        ctx.y[i] = 0;
        return search_decomposition(ctx, i + 1, norm_so_far);
    }
    for (long long c = -ctx.bound; c <= ctx.bound; ++c) {
        long long nn = norm_so_far + c * c;
        if (nn > ctx.budget) continue;
        ctx.y[i] = c;
        if (search_decomposition(ctx, i + 1, nn)) return true;
    }
    ctx.y[i] = 0;
    return false;
}

}  // namespace

bool brute_force_irreducible(const AmbientVector& x,
                             const std::vector<AmbientVector>& orthogonal_to,
                             bool e_support_only, long long max_norm) {
    if (x.is_zero()) return false;
    const long long N = x.norm();
    if (N > max_norm)
        throw InputError("norm exceeds the exhaustive irreducibility oracle bound");
    if (e_support_only)
        for (long long v : x.f)
            if (v != 0) throw InputError("vector leaves the requested support");
    for (const AmbientVector& w : orthogonal_to)
        if (x.dot(w) != 0) throw InputError("vector is not in the lattice");

    BruteCtx ctx;
    ctx.x = &x;
    ctx.orth = &orthogonal_to;
    ctx.t = x.f.size();
    ctx.dim = x.dim();
    ctx.bound = isqrt_ll(N);
    ctx.budget = N;  // norm(y) <= norm(x) for any decomposition with y.z >= 0
    ctx.y.assign(ctx.dim, 0);
    ctx.fixed_f = e_support_only;
    return !search_decomposition(ctx, 0, 0);
}

}  // namespace cmlat
