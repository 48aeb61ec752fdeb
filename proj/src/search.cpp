#include "cmlat/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cmlat/contfrac.hpp"
#include "cmlat/errors.hpp"
#include "cmlat/sigma.hpp"

namespace cmlat {

namespace {

long long isqrt_floor(long long v) {
    if (v <= 0) return 0;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// A signed run of consecutive fractional basis vectors, or zero.  When the
// graph is 2-connected every vertex label has its e-part of this shape.
struct Run {
    std::vector<long long> e;
    long long norm = 0;
};

std::vector<Run> enumerate_runs(const ChangemakerLatticeSpec& spec) {
    const std::vector<AmbientVector> frac = fractional_basis(spec);
    std::vector<Run> runs;
    Run zero;
    zero.e.assign(spec.s + 1, 0);
    runs.push_back(zero);
    for (std::size_t a = 0; a < frac.size(); ++a) {
        std::vector<long long> acc(spec.s + 1, 0);
        for (std::size_t b = a; b < frac.size(); ++b) {
            for (long long i = 0; i <= spec.s; ++i) acc[i] += frac[b].e[i];
            for (int sign : {1, -1}) {
                Run r;
                r.e.resize(spec.s + 1);
                for (long long i = 0; i <= spec.s; ++i) r.e[i] = sign * acc[i];
                for (long long c : r.e) r.norm += c * c;
                runs.push_back(r);
            }
        }
    }
    return runs;
}

void enumerate_f_parts(const SigmaTail& sigma, std::size_t idx, long long budget,
                       long long dot_needed, std::vector<long long>& cur,
                       const std::function<void(const std::vector<long long>&)>& emit) {
    if (idx == sigma.size()) {
        if (budget == 0 && dot_needed == 0) emit(cur);
        return;
    }
    // Remaining sigma.f dot is bounded by sqrt(budget) * remaining sigma mass.
    long long bound = isqrt_floor(budget);
    for (long long v = -bound; v <= bound; ++v) {
        cur[idx] = v;
        enumerate_f_parts(sigma, idx + 1, budget - v * v,
                          dot_needed - sigma[idx] * v, cur, emit);
    }
    cur[idx] = 0;
}

// Vertex-label candidates of the given norm, e-part restricted to runs.
// Complete for 2-connected graphs: vertex classes are irreducible there, so
// their e-parts are runs and their first f-coordinate obeys the unit bound
// whenever the e0 coordinate is hit.
std::vector<AmbientVector> run_candidates(const ChangemakerLatticeSpec& spec,
                                          const std::vector<Run>& runs,
                                          long long d) {
    std::vector<AmbientVector> out;
    std::vector<long long> f(spec.t(), 0);
    for (const Run& run : runs) {
        if (run.norm > d) continue;
        long long c0 = run.e[0];
        if (c0 > 1 || c0 < -1) continue;
        auto emit = [&](const std::vector<long long>& fpart) {
            if (c0 != 0 && (fpart[0] > 1 || fpart[0] < -1)) return;
            if (fpart[0] > 2 || fpart[0] < -2) return;
            AmbientVector x(spec.t(), spec.s + 1);
            x.f = fpart;
            x.e = run.e;
            out.push_back(std::move(x));
        };
        enumerate_f_parts(spec.sigma, 0, d - run.norm, -c0, f, emit);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void enumerate_box(std::size_t idx, std::size_t dim, long long budget,
                   std::vector<long long>& cur,
                   const std::function<void(const std::vector<long long>&)>& emit) {
    if (idx == dim) {
        if (budget == 0) emit(cur);
        return;
    }
    long long bound = isqrt_floor(budget);
    for (long long v = -bound; v <= bound; ++v) {
        cur[idx] = v;
        enumerate_box(idx + 1, dim, budget - v * v, cur, emit);
    }
    cur[idx] = 0;
}

// Every lattice vector of the given norm: the full norm sphere filtered by
// orthogonality to the defining vectors.  Complete with no hypotheses.
std::vector<AmbientVector> sphere_candidates(const ChangemakerLatticeSpec& spec,
                                             long long d, bool unit_f_prune) {
    std::size_t dim = static_cast<std::size_t>(spec.ambient_dim());
    std::vector<AmbientVector> out;
    std::vector<long long> cur(dim, 0);
    auto emit = [&](const std::vector<long long>& flat) {
        AmbientVector x = AmbientVector::from_flat(flat, spec.t());
        for (const AmbientVector& w : spec.w)
            if (x.dot(w) != 0) return;
        if (unit_f_prune && spec.t() >= 1 && (x.f[0] > 2 || x.f[0] < -2)) return;
        out.push_back(std::move(x));
    };
    enumerate_box(0, dim, d, cur, emit);
    std::sort(out.begin(), out.end());
    return out;
}

struct SigmaResult {
    std::vector<VertexLabeling> labelings;  // canonical, sorted, distinct
    long long nodes = 0;
    long long raw_solutions = 0;
};

struct DfsContext {
    const WhiteGraph* g = nullptr;
    const ChangemakerLatticeSpec* spec = nullptr;
    std::vector<std::size_t> order;                  // assignment order
    std::vector<const std::vector<AmbientVector>*> cands;  // per slot
    std::vector<std::vector<long long>> req;         // req[i][j], i < j
    std::vector<long long> suffix_root;              // sum of isqrt(deg) from slot
    bool prune = false;
    std::vector<const AmbientVector*> chosen;
    std::vector<long long> partial;                  // flat coordinates
    SigmaResult* result = nullptr;
    std::set<std::vector<long long>>* seen = nullptr;
};

void record_solution(DfsContext& ctx) {
    std::size_t n = ctx.order.size();
    std::vector<AmbientVector> labels(
        n, AmbientVector(ctx.spec->t(), ctx.spec->s + 1));
    for (std::size_t slot = 0; slot < n; ++slot)
        labels[ctx.order[slot]] = *ctx.chosen[slot];
    VertexLabeling lab;
    lab.spec = *ctx.spec;
    lab.labels = std::move(labels);
    validate_labeling(lab);
    if (!(graph_of(lab) == *ctx.g))
        throw InvariantError("solution does not reproduce the input graph");
    ctx.result->raw_solutions += 1;
    VertexLabeling canon = canonicalize(lab);
    if (ctx.seen->insert(label_matrix(canon)).second)
        ctx.result->labelings.push_back(std::move(canon));
}

void dfs_assign(DfsContext& ctx, std::size_t slot) {
    std::size_t n = ctx.order.size();
    std::size_t dim = ctx.partial.size();
    if (slot == n) {
        for (long long c : ctx.partial)
            if (c != 0) return;
        record_solution(ctx);
        return;
    }
    for (const AmbientVector& cand : *ctx.cands[slot]) {
        bool ok = true;
        for (std::size_t j = 0; j < slot && ok; ++j)
            ok = cand.dot(*ctx.chosen[j]) == ctx.req[j][slot];
        if (!ok) continue;
        ctx.result->nodes += 1;
        std::vector<long long> flat = cand.flat();
        for (std::size_t k = 0; k < dim; ++k) ctx.partial[k] += flat[k];
        bool feasible = true;
        if (ctx.prune) {
            long long slack = ctx.suffix_root[slot + 1];
            for (std::size_t k = 0; k < dim && feasible; ++k)
                feasible = ctx.partial[k] <= slack && -ctx.partial[k] <= slack;
            if (feasible && ctx.spec->t() >= 1)
                feasible = ctx.partial[0] <= 2 && ctx.partial[0] >= -2;
        }
        if (feasible) {
            ctx.chosen[slot] = &cand;
            dfs_assign(ctx, slot + 1);
            ctx.chosen[slot] = nullptr;
        }
        for (std::size_t k = 0; k < dim; ++k) ctx.partial[k] -= flat[k];
    }
}

SigmaResult search_sigma(const WhiteGraph& g, const ChangemakerLatticeSpec& spec,
                         bool reference, bool two_connected) {
    std::size_t n = g.size();
    SigmaResult result;

    DfsContext ctx;
    ctx.g = &g;
    ctx.spec = &spec;
    ctx.prune = !reference;
    ctx.result = &result;

    ctx.order.resize(n);
    std::iota(ctx.order.begin(), ctx.order.end(), std::size_t{0});
    if (!reference) {
        std::stable_sort(ctx.order.begin(), ctx.order.end(),
                         [&](std::size_t a, std::size_t b) {
                             return g.degree(a) > g.degree(b);
                         });
    }

    std::map<long long, std::vector<AmbientVector>> cache;
    std::vector<Run> runs;
    if (!reference && two_connected) runs = enumerate_runs(spec);
    for (std::size_t v = 0; v < n; ++v) {
        long long d = g.degree(v);
        if (cache.count(d)) continue;
        if (reference)
            cache[d] = sphere_candidates(spec, d, false);
        else if (two_connected)
            cache[d] = run_candidates(spec, runs, d);
        else
            cache[d] = sphere_candidates(spec, d, true);
    }

    ctx.cands.resize(n);
    ctx.req.assign(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        ctx.cands[i] = &cache[g.degree(ctx.order[i])];
        for (std::size_t j = i + 1; j < n; ++j)
            ctx.req[i][j] = -g.multiplicity(ctx.order[i], ctx.order[j]);
    }
    ctx.suffix_root.assign(n + 1, 0);
    for (std::size_t i = n; i-- > 0;)
        ctx.suffix_root[i] =
            ctx.suffix_root[i + 1] + isqrt_floor(g.degree(ctx.order[i]));

    ctx.chosen.assign(n, nullptr);
    ctx.partial.assign(static_cast<std::size_t>(spec.ambient_dim()), 0);
    std::set<std::vector<long long>> seen;
    ctx.seen = &seen;

    dfs_assign(ctx, 0);

    std::sort(result.labelings.begin(), result.labelings.end(),
              [](const VertexLabeling& a, const VertexLabeling& b) {
                  return label_matrix(a) < label_matrix(b);
              });
    return result;
}

}  // namespace

RecognitionOutcome find_embedding(const WhiteGraph& g, const Rational& pq,
                                  const SearchOptions& opts) {
    if (pq.den() < 2) throw InputError("slope must have q >= 2");
    if (!(Rational(1) < pq)) throw InputError("slope must exceed 1");
    if (!g.is_connected()) throw InputError("white graph must be connected");
    if (!g.cut_edges().empty())
        throw InputError("white graph has a cut edge: diagram is not reduced");

    RecognitionOutcome out;

    Integer det = goeritz_det(g);
    if (det != pq.num()) {
        out.reject_reason = "determinant mismatch: det(graph) = " + det.str() +
                            ", p = " + pq.num().str();
        return out;
    }

    auto [n_big, r_big] = split_n_r(pq);
    NegCF tail_cf = neg_cf_expand(Rational(pq.den(), r_big));
    long long l = static_cast<long long>(tail_cf.a.size());
    Integer s_big = -l;
    for (const Integer& a : tail_cf.a) s_big += a;

    Integer rank = Integer(g.size()) - 1;
    Integer t_needed_big = rank - (s_big - l);
    if (t_needed_big < 1) {
        out.reject_reason =
            "rank mismatch: sigma would need length " + t_needed_big.str();
        return out;
    }
    long long t_needed = static_cast<long long>(t_needed_big);

    // A changemaker entry can at most double the preceding partial sum, so a
    // length-t vector has norm at most (4^t - 1) / 3.
    Integer cap = (pow(Integer(4), static_cast<unsigned>(t_needed)) - 1) / 3;
    if (n_big - 1 > cap) {
        out.reject_reason = "no changemaker vector: length " +
                            std::to_string(t_needed) + ", norm " +
                            Integer(n_big - 1).str();
        return out;
    }
    long long n = static_cast<long long>(n_big);

    std::vector<SigmaTail> tails;
    for (SigmaTail& tl : enumerate_sigma(n))
        if (static_cast<long long>(tl.size()) == t_needed)
            tails.push_back(std::move(tl));
    if (tails.empty()) {
        out.reject_reason = "no changemaker vector: length " +
                            std::to_string(t_needed) + ", norm " +
                            std::to_string(n - 1);
        return out;
    }

    bool two_connected = g.is_2_connected();
    bool reference = opts.reference;

    std::vector<SigmaResult> results(tails.size());
    std::vector<ChangemakerLatticeSpec> specs;
    specs.reserve(tails.size());
    for (const SigmaTail& tl : tails) specs.push_back(build_cm_lattice(pq, tl));

    std::atomic<long long> found_min{static_cast<long long>(tails.size())};
    long long count = static_cast<long long>(tails.size());

    int nt = 1;
    if (!reference) {
#ifdef _OPENMP
        nt = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
#else
        nt = 1;
#endif
    }

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt) if (nt > 1)
#endif
    for (long long i = 0; i < count; ++i) {
        if (!opts.collect_all &&
            i > found_min.load(std::memory_order_relaxed))
            continue;
        results[i] = search_sigma(g, specs[i], reference, two_connected);
        if (!results[i].labelings.empty()) {
            long long prev = found_min.load(std::memory_order_relaxed);
            while (i < prev &&
                   !found_min.compare_exchange_weak(prev, i,
                                                    std::memory_order_relaxed))
                ;
        }
    }

    out.stats.sigma_count = count;
    for (long long i = 0; i < count; ++i) {
        out.stats.nodes += results[i].nodes;
        out.stats.solutions += results[i].raw_solutions;
    }
    for (long long i = 0; i < count; ++i) {
        if (results[i].labelings.empty()) continue;
        if (!out.found) {
            out.found = true;
            out.labeling = results[i].labelings.front();
        }
        if (opts.collect_all)
            for (VertexLabeling& lab : results[i].labelings)
                out.all.push_back(std::move(lab));
        if (!opts.collect_all) break;
    }
    return out;
}

RecognitionOutcome reference_search(const WhiteGraph& g, const Rational& pq) {
    SearchOptions opts;
    opts.reference = true;
    return find_embedding(g, pq, opts);
}

}  // namespace cmlat
