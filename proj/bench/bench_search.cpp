// Wall-clock comparison of the pruned parallel search against the
// pruning-free serial oracle on the bundled example graphs.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "cmlat/search.hpp"
#include "fixtures.hpp"

using namespace cmlat;
using Clock = std::chrono::steady_clock;

namespace {

struct Case {
    std::string name;
    WhiteGraph g;
    Rational pq;
};

double best_of(int reps, const WhiteGraph& g, const Rational& pq, bool reference,
               RecognitionOutcome& last) {
    double best = 1e100;
    for (int i = 0; i < reps; ++i) {
        SearchOptions opts;
        opts.reference = reference;
        auto t0 = Clock::now();
        last = reference ? reference_search(g, pq) : find_embedding(g, pq, opts);
        double dt = std::chrono::duration<double>(Clock::now() - t0).count();
        if (dt < best) best = dt;
    }
    return best;
}

}  // namespace

int main() {
    std::vector<Case> cases;
    cases.push_back({"11a15 @ 107/5", fixtures::graph_11a15(), Rational(107, 5)});
    cases.push_back({"9_22 @ 43/2", fixtures::graph_9_22(), Rational(43, 2)});
    cases.push_back({"lens 7/2 @ 7/2", fixtures::lens_graph(Rational(7, 2)), Rational(7, 2)});

    WhiteGraph heavy(4);
    heavy.add_edge(0, 1);
    heavy.add_edge(1, 2);
    heavy.add_edge(2, 3);
    heavy.add_edge(0, 3, 14);
    cases.push_back({"C4 one band x14 @ 43/2 (miss)", std::move(heavy), Rational(43, 2)});

    std::printf("%-32s %10s %12s %12s %9s %10s\n", "case", "found", "fast ms",
                "oracle ms", "speedup", "nodes");
    for (const auto& c : cases) {
        RecognitionOutcome fast, ref;
        double tf = best_of(5, c.g, c.pq, false, fast);
        double tr = best_of(3, c.g, c.pq, true, ref);
        if (fast.found != ref.found) {
            std::printf("%-32s DISAGREE\n", c.name.c_str());
            return 1;
        }
        std::printf("%-32s %10s %12.3f %12.3f %8.1fx %10lld\n", c.name.c_str(),
                    fast.found ? "yes" : "no", tf * 1e3, tr * 1e3, tr / tf,
                    ref.stats.nodes);
    }
    return 0;
}
