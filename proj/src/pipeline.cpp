#include "cmlat/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cmlat/contfrac.hpp"
#include "cmlat/errors.hpp"

namespace cmlat {

namespace {

template <typename Fn>
auto staged(const char* stage, Fn&& fn) {
    try {
        return fn();
    } catch (const InputError& e) {
        throw InputError(std::string(stage) + ": " + e.what());
    } catch (const InvariantError& e) {
        throw InvariantError(std::string(stage) + ": " + e.what());
    }
}

}  // namespace

PipelineResult run_pipeline(const WhiteGraph& g, const Rational& pq,
                            const SearchOptions& opts) {
    PipelineResult res;
    res.recognition = staged("find_embedding", [&] { return find_embedding(g, pq, opts); });
    if (!res.recognition.found) {
        res.stage = "find_embedding";
        res.reason = res.recognition.reject_reason.empty() ? "no labeling found"
                                                           : res.recognition.reject_reason;
        return res;
    }

    auto normalized = staged("normalize_fractional",
                             [&] { return normalize_fractional(*res.recognition.labeling); });
    res.normalized = std::move(normalized.first);
    res.trace = std::move(normalized.second);

    res.tangle = staged("extract_tangle", [&] { return extract_tangle(*res.normalized); });

    const auto& spec = res.normalized->spec;
    res.surgery = staged("theorem_slope",
                         [&] { return theorem_slope(spec.n, Integer(spec.r), spec.q()); });
    if (res.surgery->p != pq.num())
        throw InvariantError("theorem_slope: determinant disagrees with the slope");

    res.found = true;
    return res;
}

namespace {

Json trace_to_json(const FlypeTrace& trace) {
    Json out = Json::array();
    for (const FlypeMove& m : trace) {
        Json j;
        if (m.kind == FlypeMove::Kind::flype1) {
            j["kind"] = "flype1";
            j["v"] = m.v;
            j["x"] = ambient_to_json(m.x);
            j["y"] = ambient_to_json(m.y);
            j["u1"] = m.u1;
            j["u2"] = m.u2;
        } else {
            j["kind"] = "flype2";
            j["v"] = m.v;
            j["w"] = m.w;
            j["component"] = m.component;
        }
        out.push_back(j);
    }
    return out;
}

}  // namespace

Json certificate_json(const PipelineResult& res, const Rational& pq, bool mirror,
                      const std::string& signature) {
    Json j{{"schema", 1}, {"found", res.found}, {"slope", pq.str()}};
    if (!signature.empty()) j["signature"] = signature;
    if (!res.found) {
        j["stage"] = res.stage;
        j["reason"] = res.reason;
        return j;
    }
    const VertexLabeling& primary = *res.recognition.labeling;
    j["sigma"] = primary.spec.sigma;
    Json labels = Json::array();
    for (const auto& l : primary.labels) labels.push_back(ambient_to_json(l));
    j["labels"] = labels;
    j["trace"] = trace_to_json(res.trace);

    const TangleCertificate& t = *res.tangle;
    j["tangle"] = Json{{"slope", t.slope.str()},
                       {"direct_edges", t.direct_edges},
                       {"path", t.path},
                       {"v_marker", t.v_marker},
                       {"w_marker", t.w_marker}};
    Json reduced_labels = Json::array();
    for (const auto& l : t.reduced.labels) reduced_labels.push_back(ambient_to_json(l));
    j["reduced"] = Json{{"spec", Json{{"pq", t.reduced.spec.pq.str()},
                                      {"sigma", t.reduced.spec.sigma}}},
                        {"labels", reduced_labels},
                        {"marked_crossing",
                         Json::array({t.marked_crossing.first, t.marked_crossing.second})}};

    Rational slope = res.surgery->slope;
    if (mirror) slope = -slope;
    j["surgery"] = Json{{"p", res.surgery->p.str()}, {"slope", slope.str()}};
    if (!res.recognition.all.empty()) {
        Json all = Json::array();
        for (const auto& lab : res.recognition.all) all.push_back(labeling_to_json(lab));
        j["all"] = all;
    }
    return j;
}

void verify_certificate(const PipelineResult& res, const WhiteGraph& g, const Rational& pq) {
    if (!res.found) throw InputError("nothing to verify: pipeline did not succeed");
    const VertexLabeling& primary = *res.recognition.labeling;

    validate_labeling(primary);
    if (!(graph_of(primary) == g))
        throw InvariantError("certificate labeling does not reproduce the graph");
    if (primary.spec.pq != pq) throw InvariantError("certificate slope mismatch");

    VertexLabeling replayed = replay_trace(primary, res.trace);
    if (label_matrix(replayed) != label_matrix(*res.normalized))
        throw InvariantError("trace does not replay to the normalized labeling");
    validate_labeling(*res.normalized);
    if (!(graph_of(*res.normalized) == g))
        throw InvariantError("normalized labeling does not reproduce the graph");

    TangleCertificate fresh = extract_tangle(*res.normalized);
    const TangleCertificate& t = *res.tangle;
    if (fresh.v_marker != t.v_marker || fresh.w_marker != t.w_marker ||
        fresh.path != t.path || fresh.direct_edges != t.direct_edges ||
        fresh.slope != t.slope ||
        label_matrix(fresh.reduced) != label_matrix(t.reduced) ||
        fresh.marked_crossing != t.marked_crossing)
        throw InvariantError("tangle certificate does not recompute");
    validate_labeling(t.reduced);

    Integer q = pq.den(), r = primary.spec.r;
    if (t.slope != Rational(Integer(q - r), Integer(r)))
        throw InvariantError("tangle slope violates the slope law");

    auto slope = theorem_slope(primary.spec.n, Integer(r), q);
    if (slope.p != pq.num() || res.surgery->slope != slope.slope)
        throw InvariantError("surgery slope does not recompute");
    if (!det_check(goeritz_matrix(g, g.size() - 1), pq.num()))
        throw InvariantError("Goeritz determinant disagrees with p");
}

namespace {

ScanRowResult scan_one(const ScanRow& row, const Integer& pmax, long long qmax) {
    ScanRowResult out;
    out.name = row.name;
    out.signature = row.signature;
    try {
        WhiteGraph g = graph_from_file(row.graph_path);
        Integer det = goeritz_det(g);
        out.det = det;
        if (row.det && *row.det != det) out.det_mismatch = true;
        if (pmax > 0 && det > pmax) return out;
        for (long long q = 2; q <= qmax; ++q) {
            if (gcd(det, Integer(q)) != 1) continue;
            if (det <= q) continue;
            Rational pq(det, Integer(q));
            auto rec = find_embedding(g, pq);
            if (rec.found) out.hits.push_back({pq, rec.labeling->spec.sigma});
        }
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    return out;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<ScanRowResult> scan(const std::vector<ScanRow>& rows, const Integer& pmax,
                                long long qmax, int jobs) {
    if (qmax < 2) throw InputError("qmax must be at least 2");
    std::vector<ScanRowResult> results(rows.size());
#ifdef _OPENMP
    int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#else
    (void)jobs;
#endif
    for (long long i = 0; i < static_cast<long long>(rows.size()); ++i)
        results[static_cast<std::size_t>(i)] =
            scan_one(rows[static_cast<std::size_t>(i)], pmax, qmax);
    return results;
}

std::vector<ScanRow> parse_scan_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::filesystem::path base = std::filesystem::path(path).parent_path();
    std::vector<ScanRow> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(t);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(trim(field));
        if (first && fields.size() >= 2 && fields[0] == "name" && fields[1] == "graph") {
            first = false;
            continue;
        }
        first = false;
        if (fields.size() < 2 || fields[0].empty() || fields[1].empty())
            throw InputError("table row needs at least name,graph: " + t);
        ScanRow row;
        row.name = fields[0];
        std::filesystem::path p(fields[1]);
        row.graph_path = p.is_absolute() ? p.string() : (base / p).string();
        if (fields.size() >= 3 && !fields[2].empty()) {
            try {
                row.det = Integer(fields[2]);
            } catch (...) {
                throw InputError("bad determinant for row " + row.name);
            }
        }
        if (fields.size() >= 4) row.signature = fields[3];
        rows.push_back(std::move(row));
    }
    return rows;
}

Json scan_report_json(const std::vector<ScanRowResult>& rows) {
    Json out{{"schema", 1}};
    Json list = Json::array();
    long long hit_total = 0, error_total = 0;
    for (const auto& r : rows) {
        Json j{{"name", r.name}};
        if (!r.error.empty()) {
            j["error"] = r.error;
            ++error_total;
        } else {
            j["det"] = r.det.str();
            if (r.det_mismatch) j["det_mismatch"] = true;
            if (!r.signature.empty()) j["signature"] = r.signature;
            Json hits = Json::array();
            for (const auto& h : r.hits)
                hits.push_back(Json{{"slope", h.pq.str()}, {"sigma", h.sigma}});
            j["hits"] = hits;
            hit_total += static_cast<long long>(r.hits.size());
        }
        list.push_back(j);
    }
    out["rows"] = list;
    out["totals"] =
        Json{{"rows", rows.size()}, {"hits", hit_total}, {"errors", error_total}};
    return out;
}

}  // namespace cmlat
