#ifndef CMLAT_SEARCH_HPP
#define CMLAT_SEARCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "cmlat/labeling.hpp"

namespace cmlat {

struct SearchOptions {
    // Definitional checks only: naive norm-sphere candidates, input vertex
    // order, no pruning, serial.  The oracle the fast path is tested against.
    bool reference = false;
    // Keep searching after the first tail with solutions; fills `all`.
    bool collect_all = false;
    // Worker cap for the tail fan-out; 0 takes the runtime default.
    int jobs = 0;
};

struct SearchStats {
    long long sigma_count = 0;  // changemaker tails searched
    long long nodes = 0;        // assignments attempted
    long long solutions = 0;    // raw solutions before symmetry reduction
};

struct RecognitionOutcome {
    bool found = false;
    // Set when the instance dies before any search: determinant, rank, or
    // tail-existence mismatch.
    std::string reject_reason;
    // Lexicographically minimal certificate of the first admissible tail.
    std::optional<VertexLabeling> labeling;
    // All distinct canonical labelings across all tails (collect_all mode).
    std::vector<VertexLabeling> all;
    SearchStats stats;
};

// Decides whether the graph lattice of g is isomorphic to the p/q-changemaker
// lattice and certifies the isomorphism found.  Requires g connected without
// cut edges and p/q > 1 with q >= 2, p = det(g).
RecognitionOutcome find_embedding(const WhiteGraph& g, const Rational& pq,
                                  const SearchOptions& opts = {});

// The pruning-free serial oracle; same contract, definitional checks only.
RecognitionOutcome reference_search(const WhiteGraph& g, const Rational& pq);

}  // namespace cmlat

#endif
