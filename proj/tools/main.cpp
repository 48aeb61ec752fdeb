#include <CLI11.hpp>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include "cmlat/cm_lattice.hpp"
#include "cmlat/pipeline.hpp"
#include "cmlat/surgery.hpp"

using namespace cmlat;

namespace {

int json_indent = -1;  // -1 is nlohmann's compact mode

void emit(const Json& j) { std::cout << j.dump(json_indent) << "\n"; }

long long ll(const Integer& x) {
    if (x > std::numeric_limits<long long>::max() ||
        x < std::numeric_limits<long long>::min())
        throw InputError("value out of range for this command");
    return static_cast<long long>(x);
}

SigmaTail parse_sigma(const std::string& text) {
    SigmaTail sigma;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            sigma.push_back(v);
        } catch (const std::exception&) {
            throw InputError("sigma must be a comma-separated integer list");
        }
    }
    if (sigma.empty()) throw InputError("sigma must be a comma-separated integer list");
    return sigma;
}

WhiteGraph load_graph(const std::string& graph_file, const std::string& pd_file) {
    if (graph_file.empty() == pd_file.empty())
        throw InputError("give exactly one of --graph or --pd");
    return graph_from_file(graph_file.empty() ? pd_file : graph_file);
}

int cmd_recognize(const std::string& graph_file, const std::string& pd_file,
                  const std::string& slope, bool all, bool verify, bool mirror,
                  int jobs) {
    WhiteGraph g = load_graph(graph_file, pd_file);
    Rational pq = Rational::parse(slope);
    SearchOptions opts;
    opts.collect_all = all;
    opts.jobs = jobs;
    PipelineResult res = run_pipeline(g, pq, opts);
    Json cert = certificate_json(res, pq, mirror);
    if (verify && res.found) {
        verify_certificate(res, g, pq);
        cert["verified"] = true;
    }
    emit(cert);
    return res.found ? 0 : 1;
}

int cmd_scan(const std::string& table, const std::string& pmax_str, long long qmax,
             int jobs) {
    Integer pmax;
    try {
        pmax = Integer(pmax_str);
    } catch (const std::exception&) {
        throw InputError("--pmax must be an integer");
    }
    auto rows = parse_scan_table(table);
    auto results = scan(rows, pmax, qmax, jobs);
    emit(scan_report_json(results));
    for (const auto& r : results)
        if (!r.hits.empty()) return 0;
    return 1;
}

int cmd_cf(const std::string& slope) {
    Rational x = Rational::parse(slope);
    NegCF cf = neg_cf_expand(x);
    Json expansion = Json::array();
    for (const Integer& a : cf.a) expansion.push_back(ll(a));
    Json out{{"schema", 1}, {"slope", x.str()}, {"expansion", expansion}};
    if (x.den() > 1) {
        auto [n, r] = split_n_r(x);
        out["n"] = ll(n);
        out["r"] = ll(r);
        Json tail = Json::array();
        for (std::size_t i = 1; i < cf.a.size(); ++i) tail.push_back(ll(cf.a[i]));
        out["tail"] = tail;
    }
    emit(out);
    return 0;
}

int cmd_cm(const std::string& slope, const std::string& sigma_str) {
    Rational pq = Rational::parse(slope);
    if (!sigma_str.empty()) {
        SigmaTail sigma = parse_sigma(sigma_str);
        ChangemakerLatticeSpec spec = build_cm_lattice(pq, sigma);
        Json basis = Json::array();
        for (const auto& v : fractional_basis(spec)) basis.push_back(ambient_to_json(v));
        emit(Json{{"schema", 1},
                  {"spec", spec_to_json(spec)},
                  {"fractional_basis", basis}});
        return 0;
    }
    if (pq.den() < 2) throw InputError("slope must have denominator at least 2");
    if (pq <= Rational(1)) throw InputError("slope must exceed 1");
    auto [n_big, r_big] = split_n_r(pq);
    long long n = ll(n_big);
    auto tails = enumerate_sigma(n);
    Json list = Json::array();
    for (const auto& t : tails) list.push_back(t);
    emit(Json{{"schema", 1}, {"slope", pq.str()}, {"n", n}, {"tails", list}});
    return tails.empty() ? 1 : 0;
}

int cmd_zcount(long long p, long long q, long long gtilde) {
    Integer z = z_count(gtilde, Integer(p), Integer(q));
    emit(Json{{"schema", 1},
              {"p", p},
              {"q", q},
              {"gtilde", gtilde},
              {"z_count", ll(z)}});
    return 0;
}

int cmd_slope(const std::string& tangle, long long mu0, bool mirror) {
    Rational t = Rational::parse(tangle);
    Rational s = montesinos_slope(t, mu0);
    if (mirror) s = -s;
    emit(Json{{"schema", 1}, {"tangle", t.str()}, {"mu0", mu0}, {"slope", s.str()}});
    return 0;
}

int cmd_obstruct(long long p, long long q, long long gtilde) {
    Integer P(p), Q(q);
    Json out{{"schema", 1},
             {"p", p},
             {"q", q},
             {"gtilde", gtilde},
             {"z_count", ll(z_count(gtilde, P, Q))},
             {"greene", greene_bound_ok(gtilde, P, Q)},
             {"gibbons", gibbons_hypothesis_ok(gtilde, P, Q)},
             {"slope", Rational(-P, Q).str()}};
    Rational pq(P, Q);
    if (pq < Rational(1)) out["note"] = small_slope_verdict(pq);
    emit(out);
    return 0;
}

int cmd_ingest(const std::string& pd_file) {
    Json j = parse_json_file(pd_file);
    IngestResult r = pd_to_white_graph(pd_from_json(j));
    if (r.nugatory)
        std::cerr << "warning: white graph has a cut edge\n";
    emit(Json{{"schema", 1},
              {"graph", graph_to_json(r.graph)},
              {"goeritz", goeritz_to_json(r.graph)},
              {"det", goeritz_det(r.graph).str()},
              {"regions", r.regions},
              {"nugatory", r.nugatory}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p/q-changemaker recognition for Goeritz lattices of alternating links"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false, compact = false;
    app.add_flag("--pretty", pretty, "indent JSON output");
    app.add_flag("--json", compact, "compact JSON output (the default)");

    std::string graph_file, pd_file, slope_str, sigma_str, table, tangle_str;
    std::string pmax_str = "0";
    bool all = false, verify = false, mirror = false;
    int jobs = 0;
    long long qmax = 4, p = 0, q = 0, gtilde = 0, mu0 = 0;

    CLI::App* rec = app.add_subcommand(
        "recognize", "decide whether a white graph carries a p/q-changemaker labeling");
    rec->add_option("--graph", graph_file, "white graph JSON file");
    rec->add_option("--pd", pd_file, "planar diagram code JSON file");
    rec->add_option("--slope", slope_str, "slope p/q")->required();
    rec->add_flag("--all", all, "collect every labeling up to ambient symmetry");
    rec->add_flag("--verify", verify, "recompute the certificate from scratch");
    rec->add_flag("--mirror", mirror, "negate the reported surgery slope");
    rec->add_option("--jobs", jobs, "worker threads (0 = all)");

    CLI::App* sc = app.add_subcommand("scan", "run every slope det/q over a knot table");
    sc->add_option("--table", table, "CSV with name,graph[,det[,signature]]")->required();
    sc->add_option("--qmax", qmax, "largest denominator to try (default 4)");
    sc->add_option("--pmax", pmax_str, "skip rows with determinant above this (0 = no cap)");
    sc->add_option("--jobs", jobs, "worker threads (0 = all)");

    CLI::App* cf = app.add_subcommand("cf", "minus-convention continued fraction of a slope");
    cf->add_option("--slope", slope_str, "rational number > 1")->required();

    CLI::App* cm = app.add_subcommand(
        "cm", "changemaker lattice data for a slope, or the candidate tails");
    cm->add_option("--slope", slope_str, "slope p/q with q >= 2")->required();
    cm->add_option("--sigma", sigma_str, "comma-separated changemaker tail");

    CLI::App* zc = app.add_subcommand("zcount", "count zero d-invariant corrections");
    zc->add_option("--p", p, "surgery numerator")->required();
    zc->add_option("--q", q, "surgery denominator")->required();
    zc->add_option("--gtilde", gtilde, "first vanishing index")->required();

    CLI::App* sl = app.add_subcommand("slope", "montesinos trick surgery coefficient");
    sl->add_option("--tangle", tangle_str, "fractional tangle slope a/b >= 0")->required();
    sl->add_option("--mu0", mu0, "crossings outside the tangle")->required();
    sl->add_flag("--mirror", mirror, "negate the slope");

    CLI::App* ob = app.add_subcommand("obstruct", "sharp obstruction summary for p/q and gtilde");
    ob->add_option("--p", p, "surgery numerator")->required();
    ob->add_option("--q", q, "surgery denominator")->required();
    ob->add_option("--gtilde", gtilde, "first vanishing index")->required();

    CLI::App* ig = app.add_subcommand("ingest-pd", "trace a planar code to its white graph");
    ig->add_option("--pd", pd_file, "planar diagram code JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    if (pretty) json_indent = 2;

    try {
        if (rec->parsed())
            return cmd_recognize(graph_file, pd_file, slope_str, all, verify, mirror, jobs);
        if (sc->parsed()) return cmd_scan(table, pmax_str, qmax, jobs);
        if (cf->parsed()) return cmd_cf(slope_str);
        if (cm->parsed()) return cmd_cm(slope_str, sigma_str);
        if (zc->parsed()) return cmd_zcount(p, q, gtilde);
        if (sl->parsed()) return cmd_slope(tangle_str, mu0, mirror);
        if (ob->parsed()) return cmd_obstruct(p, q, gtilde);
        if (ig->parsed()) return cmd_ingest(pd_file);
    } catch (const InputError& e) {
        std::cerr << Json{{"schema", 1}, {"error", e.what()}, {"kind", "input"}}.dump()
                  << "\n";
        return 2;
    } catch (const InvariantError& e) {
        std::cerr << Json{{"schema", 1}, {"error", e.what()}, {"kind", "invariant"}}.dump()
                  << "\n";
        return 3;
    }
    return 2;
}
