#ifndef CMLAT_DET_HPP
#define CMLAT_DET_HPP

#include <vector>

#include "cmlat/rational.hpp"

namespace cmlat {

// Exact determinant by fraction-free Bareiss elimination.  Empty matrix
// has determinant 1.
Integer bareiss_det(std::vector<std::vector<Integer>> m);

// All leading principal minors strictly positive.
bool is_positive_definite(const std::vector<std::vector<Integer>>& m);

}  // namespace cmlat

#endif
