#ifndef CMLAT_LABELING_HPP
#define CMLAT_LABELING_HPP

#include <vector>

#include "cmlat/cm_lattice.hpp"
#include "cmlat/graphlat.hpp"

namespace cmlat {

// An isomorphism from a graph lattice onto a changemaker lattice, given as
// the image of each vertex.  Invariants: every label orthogonal to all w_k,
// labels sum to zero, off-diagonal products are non-positive (minus the edge
// multiplicity), and the Gram determinant equals p.
struct VertexLabeling {
    ChangemakerLatticeSpec spec;
    std::vector<AmbientVector> labels;
};

// Reads the multigraph off the pairwise products.  Throws InvariantError if
// any off-diagonal product is positive or any norm is non-positive.
WhiteGraph graph_of(const VertexLabeling& lab);

// Full invariant suite; throws InvariantError naming the violated check.
void validate_labeling(const VertexLabeling& lab);

// Coordinate permutations of the ambient space fixing every w_k: f-columns
// within a block of equal sigma values, and e-columns within the free part of
// one w_k tail (its last index is pinned by w_{k+1}, except for k = l).
struct AmbientSymmetry {
    std::vector<std::vector<std::size_t>> blocks;  // flat coordinate indices
};

AmbientSymmetry ambient_symmetry(const ChangemakerLatticeSpec& spec);

// Lexicographically minimal flat label matrix over the symmetry group.
VertexLabeling canonicalize(const VertexLabeling& lab);

// Flat row-major coordinates of all labels; canonical comparison key.
std::vector<long long> label_matrix(const VertexLabeling& lab);

}  // namespace cmlat

#endif
