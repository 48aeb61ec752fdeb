#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "cmlat/pipeline.hpp"
#include "fixtures.hpp"

using namespace cmlat;

namespace {

std::string fix(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("full pipeline on the five-vertex 107/5 graph") {
    WhiteGraph g = fixtures::graph_11a15();
    Rational pq(107, 5);
    PipelineResult res = run_pipeline(g, pq);
    REQUIRE(res.found);
    CHECK(res.stage.empty());
    CHECK(res.reason.empty());
    CHECK(res.recognition.labeling->spec.sigma == SigmaTail{1, 2, 4});
    REQUIRE(res.normalized.has_value());
    REQUIRE(res.tangle.has_value());
    CHECK(res.tangle->slope == Rational(2, 3));
    CHECK(res.tangle->reduced.spec.pq == Rational(43, 2));
    CHECK(goeritz_det(graph_of(res.tangle->reduced)) == 43);
    REQUIRE(res.surgery.has_value());
    CHECK(res.surgery->p == 107);
    CHECK(res.surgery->slope == Rational(-107, 5));
    CHECK_NOTHROW(verify_certificate(res, g, pq));
}

TEST_CASE("pipeline accepts a graph read straight from a planar code") {
    WhiteGraph g = graph_from_file(fix("pd_det107.json"));
    PipelineResult res = run_pipeline(g, Rational(107, 5));
    REQUIRE(res.found);
    CHECK(res.recognition.labeling->spec.sigma == SigmaTail{1, 2, 4});
    CHECK_NOTHROW(verify_certificate(res, g, Rational(107, 5)));
}

TEST_CASE("pipeline on a half-integer slope is already reduced") {
    WhiteGraph g = fixtures::banana(3);
    Rational pq(3, 2);
    PipelineResult res = run_pipeline(g, pq);
    REQUIRE(res.found);
    CHECK(res.tangle->slope == Rational(1));
    CHECK(res.tangle->reduced.spec.pq == pq);
    CHECK(res.surgery->slope == Rational(-3, 2));
    CHECK(g.multiplicity(res.tangle->marked_crossing.first,
                         res.tangle->marked_crossing.second) >= 1);
    CHECK_NOTHROW(verify_certificate(res, g, pq));
}

TEST_CASE("pipeline stops cleanly when the search rejects") {
    PipelineResult det_miss = run_pipeline(fixtures::banana(3), Rational(5, 2));
    CHECK_FALSE(det_miss.found);
    CHECK(det_miss.stage == "find_embedding");
    CHECK(det_miss.reason == "determinant mismatch: det(graph) = 3, p = 5");

    PipelineResult cm_miss = run_pipeline(fixtures::cycle(3), Rational(3, 2));
    CHECK_FALSE(cm_miss.found);
    CHECK(cm_miss.reason == "no changemaker vector: length 2, norm 1");

    WhiteGraph heavy = graph_from_file(fix("c4_heavy.json"));
    PipelineResult miss = run_pipeline(heavy, Rational(43, 2));
    CHECK_FALSE(miss.found);
    CHECK(miss.stage == "find_embedding");
    CHECK(miss.reason == "no labeling found");
}

TEST_CASE("pipeline input errors carry the stage name") {
    try {
        run_pipeline(fixtures::banana(3), Rational(3));
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).rfind("find_embedding: ", 0) == 0);
    }
}

TEST_CASE("certificate JSON for a success") {
    WhiteGraph g = fixtures::graph_11a15();
    Rational pq(107, 5);
    PipelineResult res = run_pipeline(g, pq);
    Json j = certificate_json(res, pq, false, "11a_15");
    CHECK(j["schema"] == 1);
    CHECK(j["found"] == true);
    CHECK(j["slope"] == "107/5");
    CHECK(j["signature"] == "11a_15");
    CHECK(j["sigma"] == Json::array({1, 2, 4}));
    CHECK(j["labels"].size() == 5);
    CHECK(j["trace"].is_array());
    CHECK(j["tangle"]["slope"] == "2/3");
    CHECK(j["reduced"]["spec"]["pq"] == "43/2");
    CHECK(j["reduced"]["labels"].size() == 4);
    CHECK(j["reduced"]["marked_crossing"].size() == 2);
    CHECK(j["surgery"]["p"] == "107");
    CHECK(j["surgery"]["slope"] == "-107/5");
    CHECK_FALSE(j.contains("all"));

    Json m = certificate_json(res, pq, true);
    CHECK(m["surgery"]["slope"] == "107/5");
    CHECK_FALSE(m.contains("signature"));

    SearchOptions opts;
    opts.collect_all = true;
    PipelineResult all = run_pipeline(g, pq, opts);
    Json ja = certificate_json(all, pq);
    CHECK(ja["all"].is_array());
    CHECK(ja["all"].size() >= 1);
}

TEST_CASE("certificate JSON for a miss") {
    Rational pq(5, 2);
    PipelineResult res = run_pipeline(fixtures::banana(3), pq);
    Json j = certificate_json(res, pq);
    CHECK(j["schema"] == 1);
    CHECK(j["found"] == false);
    CHECK(j["slope"] == "5/2");
    CHECK(j["stage"] == "find_embedding");
    CHECK(j["reason"] == "determinant mismatch: det(graph) = 3, p = 5");
    CHECK_FALSE(j.contains("sigma"));
    CHECK_FALSE(j.contains("labels"));
}

TEST_CASE("certificate verification catches tampering") {
    WhiteGraph g = fixtures::graph_11a15();
    Rational pq(107, 5);
    PipelineResult res = run_pipeline(g, pq);

    CHECK_THROWS_AS(verify_certificate(res, fixtures::banana(3), pq), InvariantError);
    CHECK_THROWS_AS(verify_certificate(res, g, Rational(43, 2)), InvariantError);

    PipelineResult bent = res;
    bent.surgery->slope = Rational(-1, 2);
    CHECK_THROWS_WITH_AS(verify_certificate(bent, g, pq),
                         "surgery slope does not recompute", InvariantError);

    PipelineResult twisted = res;
    twisted.tangle->slope = Rational(3, 2);
    CHECK_THROWS_WITH_AS(verify_certificate(twisted, g, pq),
                         "tangle certificate does not recompute", InvariantError);

    PipelineResult broken = res;
    broken.recognition.labeling->labels[0].e[0] += 1;
    CHECK_THROWS_AS(verify_certificate(broken, g, pq), InvariantError);

    PipelineResult missed = run_pipeline(fixtures::banana(3), Rational(5, 2));
    CHECK_THROWS_AS(verify_certificate(missed, fixtures::banana(3), Rational(5, 2)),
                    InputError);
}

TEST_CASE("scan over the bundled table") {
    auto rows = parse_scan_table(fix("scan_table.csv"));
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].name == "trefoil");
    CHECK(rows[0].det == Integer(3));
    CHECK(rows[0].signature == "3_1");
    CHECK(rows[4].name == "missing");
    CHECK_FALSE(rows[4].det.has_value());

    auto results = scan(rows, 0, 5);
    REQUIRE(results.size() == 6);

    CHECK(results[0].error.empty());
    CHECK(results[0].det == 3);
    REQUIRE(results[0].hits.size() == 1);
    CHECK(results[0].hits[0].pq == Rational(3, 2));
    CHECK(results[0].hits[0].sigma == SigmaTail{1});

    // the figure-eight covers L(5,2) = L(5,3), so both slopes hit
    CHECK(results[1].det == 5);
    REQUIRE(results[1].hits.size() == 2);
    CHECK(results[1].hits[0].pq == Rational(5, 2));
    CHECK(results[1].hits[0].sigma == SigmaTail{1, 1});
    CHECK(results[1].hits[1].pq == Rational(5, 3));
    CHECK(results[1].hits[1].sigma == SigmaTail{1});

    CHECK(results[2].det == 107);
    REQUIRE(results[2].hits.size() == 1);
    CHECK(results[2].hits[0].pq == Rational(107, 5));
    CHECK(results[2].hits[0].sigma == SigmaTail{1, 2, 4});

    CHECK(results[3].det == 43);
    CHECK(results[3].hits.empty());
    CHECK(results[3].error.empty());

    CHECK(results[4].error == std::string("cannot read ") + FIXTURES_DIR +
                                  "/no_such_file.json");

    CHECK(results[5].det == 3);
    CHECK(results[5].det_mismatch);
    REQUIRE(results[5].hits.size() == 1);
}

TEST_CASE("scan results do not depend on the worker count") {
    auto rows = parse_scan_table(fix("scan_table.csv"));
    auto one = scan_report_json(scan(rows, 0, 5, 1));
    auto four = scan_report_json(scan(rows, 0, 5, 4));
    CHECK(one == four);
}

TEST_CASE("scan respects the determinant cap") {
    auto rows = parse_scan_table(fix("scan_table.csv"));
    auto results = scan(rows, 10, 5);
    CHECK(results[0].hits.size() == 1);  // det 3 within the cap
    CHECK(results[2].det == 107);
    CHECK(results[2].hits.empty());  // capped out, no error
    CHECK(results[2].error.empty());
}

TEST_CASE("scan argument and table validation") {
    auto rows = parse_scan_table(fix("scan_table.csv"));
    CHECK_THROWS_AS(scan(rows, 0, 1), InputError);

    const char* bad = "/tmp/cmlat_bad_table.csv";
    {
        std::ofstream out(bad);
        out << "name,graph\nonlyname\n";
    }
    CHECK_THROWS_AS(parse_scan_table(bad), InputError);
    std::remove(bad);

    const char* headerless = "/tmp/cmlat_headerless.csv";
    {
        std::ofstream out(headerless);
        out << "trefoil," << fix("banana3.json") << ",3\n";
    }
    auto parsed = parse_scan_table(headerless);
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0].graph_path == fix("banana3.json"));
    CHECK(parsed[0].det == Integer(3));
    std::remove(headerless);

    CHECK_THROWS_AS(parse_scan_table("/tmp/cmlat_no_such_table.csv"), InputError);
}

TEST_CASE("an empty table produces an empty report") {
    const char* empty = "/tmp/cmlat_empty_table.csv";
    {
        std::ofstream out(empty);
        out << "name,graph,det,signature\n";
    }
    auto rows = parse_scan_table(empty);
    std::remove(empty);
    CHECK(rows.empty());
    Json j = scan_report_json(scan(rows, 1000, 5));
    CHECK(j["rows"].is_array());
    CHECK(j["rows"].empty());
    CHECK(j["totals"]["rows"] == 0);
    CHECK(j["totals"]["hits"] == 0);
    CHECK(j["totals"]["errors"] == 0);
}

TEST_CASE("scan report JSON") {
    auto rows = parse_scan_table(fix("scan_table.csv"));
    Json j = scan_report_json(scan(rows, 0, 5));
    CHECK(j["schema"] == 1);
    CHECK(j["totals"]["rows"] == 6);
    CHECK(j["totals"]["hits"] == 5);
    CHECK(j["totals"]["errors"] == 1);
    CHECK(j["rows"][1]["name"] == "fig8");
    CHECK(j["rows"][1]["signature"] == "4_1");
    CHECK(j["rows"][1]["hits"].size() == 2);
    CHECK(j["rows"][5]["det_mismatch"] == true);
    CHECK(j["rows"][4]["error"].is_string());
    CHECK_FALSE(j["rows"][0].contains("det_mismatch"));
}
