#ifndef CMLAT_PIPELINE_HPP
#define CMLAT_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "cmlat/json_io.hpp"
#include "cmlat/search.hpp"
#include "cmlat/surgery.hpp"
#include "cmlat/tangle.hpp"

namespace cmlat {

// One full recognition run: search, chain normalization, tangle extraction,
// half-integer reduction, surgery slope.  A run that stops cleanly reports
// the stage that stopped it; hard errors still throw.
struct PipelineResult {
    bool found = false;
    std::string stage;   // empty on success, else the stage that stopped
    std::string reason;  // human-readable cause when not found
    RecognitionOutcome recognition;
    std::optional<VertexLabeling> normalized;
    FlypeTrace trace;
    std::optional<TangleCertificate> tangle;
    std::optional<SlopeResult> surgery;
};

PipelineResult run_pipeline(const WhiteGraph& g, const Rational& pq,
                            const SearchOptions& opts = {});

// Certificate with a top-level schema tag.  mirror negates the reported
// surgery slope; signature metadata is copied through untouched.
Json certificate_json(const PipelineResult& res, const Rational& pq, bool mirror = false,
                      const std::string& signature = "");

// Recomputes every invariant of a successful result from scratch; throws
// InvariantError naming the first failure.
void verify_certificate(const PipelineResult& res, const WhiteGraph& g, const Rational& pq);

// One knot-table row: a named graph file plus optional expected determinant
// and signature metadata.
struct ScanRow {
    std::string name;
    std::string graph_path;
    std::optional<Integer> det;
    std::string signature;
};

struct ScanHit {
    Rational pq;
    SigmaTail sigma;
};

struct ScanRowResult {
    std::string name;
    std::string error;  // row-level failure; empty when processed
    Integer det = 0;
    bool det_mismatch = false;
    std::string signature;
    std::vector<ScanHit> hits;
};

// Tries every reduced slope det/q with 2 <= q <= qmax on each row; pmax > 0
// skips rows with larger determinant.  Row failures never abort the batch;
// results come back in input order regardless of worker count.
std::vector<ScanRowResult> scan(const std::vector<ScanRow>& rows, const Integer& pmax,
                                long long qmax, int jobs = 0);

// name,graph[,det[,signature]] per line; a leading "name,graph" header line
// and blank lines are skipped; graph paths resolve relative to the file.
std::vector<ScanRow> parse_scan_table(const std::string& path);

Json scan_report_json(const std::vector<ScanRowResult>& rows);

}  // namespace cmlat

#endif
