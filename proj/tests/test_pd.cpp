#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmlat/json_io.hpp"
#include "cmlat/pd.hpp"
#include "fixtures.hpp"

using namespace cmlat;

namespace {

IngestResult ingest_file(const std::string& name) {
    Json j = parse_json_file(std::string(FIXTURES_DIR) + "/" + name);
    return pd_to_white_graph(pd_from_json(j));
}

}  // namespace

TEST_CASE("trefoil planar code traces to three parallel bands") {
    IngestResult r = ingest_file("trefoil_pd.json");
    CHECK(r.graph == fixtures::banana(3));
    CHECK(r.regions == 5);
    CHECK_FALSE(r.nugatory);
    CHECK(goeritz_det(r.graph) == 3);
}

TEST_CASE("rotating every crossing tuple swaps the checkerboard classes") {
    IngestResult r = ingest_file("trefoil_rot_pd.json");
    CHECK(r.graph == fixtures::cycle(3));
    CHECK(r.regions == 5);
    CHECK_FALSE(r.nugatory);
    CHECK(goeritz_det(r.graph) == 3);
}

TEST_CASE("figure-eight code gives a triangle with one doubled edge") {
    IngestResult r = ingest_file("fig8_pd.json");
    CHECK(r.graph.size() == 3);
    CHECK(r.regions == 6);
    CHECK_FALSE(r.nugatory);
    CHECK(r.graph.multiplicity(0, 1) == 1);
    CHECK(r.graph.multiplicity(0, 2) == 2);
    CHECK(r.graph.multiplicity(1, 2) == 1);
    CHECK(goeritz_det(r.graph) == 5);
}

TEST_CASE("nine and eleven crossing codes reproduce the bundled graphs") {
    IngestResult nine = ingest_file("pd_det43.json");
    CHECK(nine.graph == fixtures::graph_9_22());
    CHECK(nine.regions == 11);
    CHECK_FALSE(nine.nugatory);
    CHECK(goeritz_det(nine.graph) == 43);

    IngestResult eleven = ingest_file("pd_det107.json");
    CHECK(eleven.graph == fixtures::graph_11a15());
    CHECK(eleven.regions == 13);
    CHECK_FALSE(eleven.nugatory);
    CHECK(goeritz_det(eleven.graph) == 107);
}

TEST_CASE("hopf link code gives a doubled edge") {
    PDCode pd{{{1, 3, 2, 4}, {3, 1, 4, 2}}};
    IngestResult r = pd_to_white_graph(pd);
    CHECK(r.graph == fixtures::banana(2));
    CHECK(r.regions == 4);
    CHECK(goeritz_det(r.graph) == 2);
}

TEST_CASE("planar code rejections") {
    CHECK_THROWS_WITH_AS(pd_to_white_graph(PDCode{{{1, 1, 2, 2}}}),
                         "nugatory crossing: a region meets itself at crossing 0",
                         InputError);
    CHECK_THROWS_WITH_AS(
        pd_to_white_graph(PDCode{{{4, 2, 5, 1}, {3, 6, 4, 1}, {5, 2, 6, 3}}}),
        "diagram is not alternating", InputError);
    CHECK_THROWS_WITH_AS(
        pd_to_white_graph(PDCode{{{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 7}}}),
        "arc label 3 must appear exactly twice", InputError);
    CHECK_THROWS_WITH_AS(pd_to_white_graph(PDCode{{{1, 4, 2, 5},
                                                   {3, 6, 4, 1},
                                                   {5, 2, 6, 3},
                                                   {7, 10, 8, 11},
                                                   {9, 12, 10, 7},
                                                   {11, 8, 12, 9}}}),
                         "planar code is not connected", InputError);
    CHECK_THROWS_WITH_AS(pd_to_white_graph(PDCode{}),
                         "planar code needs at least one crossing", InputError);
}

TEST_CASE("white graph JSON round trip") {
    WhiteGraph g = fixtures::graph_11a15();
    CHECK(graph_from_json(graph_to_json(g)) == g);
    WhiteGraph b = fixtures::banana(3);
    Json j = graph_to_json(b);
    CHECK(j["vertices"] == 2);
    CHECK(j["edges"].size() == 3);
    CHECK(graph_from_json(j) == b);
}

TEST_CASE("white graph JSON rejections") {
    CHECK_THROWS_AS(graph_from_json(Json{{"vertices", 2}}), InputError);
    CHECK_THROWS_AS(graph_from_json(Json{{"edges", Json::array()}}), InputError);
    CHECK_THROWS_AS(
        graph_from_json(Json{{"vertices", 0}, {"edges", Json::array()}}),
        InputError);
    CHECK_THROWS_AS(graph_from_json(Json{{"vertices", 2},
                                         {"edges", Json::array({Json::array({0})})}}),
                    InputError);
    CHECK_THROWS_AS(
        graph_from_json(Json{{"vertices", 2},
                             {"edges", Json::array({Json::array({0, 5})})}}),
        InputError);
}

TEST_CASE("planar code JSON shapes") {
    Json bare = Json::array({Json::array({1, 4, 2, 5}), Json::array({3, 6, 4, 1}),
                             Json::array({5, 2, 6, 3})});
    PDCode pd = pd_from_json(bare);
    CHECK(pd.crossings.size() == 3);
    Json wrapped{{"pd", bare}};
    CHECK(pd_from_json(wrapped).crossings == pd.crossings);

    CHECK_THROWS_WITH_AS(pd_from_json(Json{{"knot", "trefoil"}}),
                         "planar code JSON needs a \"pd\" list", InputError);
    CHECK_THROWS_WITH_AS(pd_from_json(Json::array()),
                         "planar code must be a non-empty list of 4-tuples",
                         InputError);
    CHECK_THROWS_WITH_AS(pd_from_json(Json::array({Json::array({1, 2, 3})})),
                         "each crossing must be a 4-tuple of arc labels", InputError);
    CHECK_THROWS_WITH_AS(
        pd_from_json(Json::array({Json::array({1, 2, 3, "x"})})),
        "arc labels must be integers", InputError);
}

TEST_CASE("Goeritz JSON carries the deleted vertex and the matrix") {
    Json j = goeritz_to_json(fixtures::banana(3));
    CHECK(j["deleted"] == 1);
    CHECK(j["matrix"] == Json::array({Json::array({3})}));

    Json big = goeritz_to_json(fixtures::graph_11a15());
    CHECK(big["deleted"] == 4);
    CHECK(big["matrix"][0] == Json::array({5, -1, -1, -2}));
    CHECK(big["matrix"][2] == Json::array({-1, -1, 2, 0}));
}

TEST_CASE("files parse as graphs or planar codes by shape") {
    bool nug = true;
    WhiteGraph g = graph_from_file(std::string(FIXTURES_DIR) + "/graph_11a15.json", &nug);
    CHECK(g == fixtures::graph_11a15());
    CHECK_FALSE(nug);
    WhiteGraph t = graph_from_file(std::string(FIXTURES_DIR) + "/trefoil_pd.json");
    CHECK(t == fixtures::banana(3));
    CHECK_THROWS_WITH_AS(
        graph_from_file(std::string(FIXTURES_DIR) + "/no_such_file.json"),
        (std::string("cannot read ") + FIXTURES_DIR + "/no_such_file.json").c_str(),
        InputError);
}
