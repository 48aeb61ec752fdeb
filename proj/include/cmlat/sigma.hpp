#ifndef CMLAT_SIGMA_HPP
#define CMLAT_SIGMA_HPP

#include <vector>

#include "cmlat/errors.hpp"

namespace cmlat {

// Nondecreasing nonnegative tail (sigma_1, ..., sigma_t).
using SigmaTail = std::vector<long long>;

// Changemaker condition: sigma_1 <= 1 and
// sigma_i <= sigma_1 + ... + sigma_{i-1} + 1 for every i.
// Equivalent to every 0 <= k <= sum(sigma) being a subset sum.
// Throws InputError if the input is not nondecreasing and nonnegative.
bool is_changemaker(const SigmaTail& sigma);

// Indices (1-based, ascending) of a subset of sigma summing to k.
// Requires sigma changemaker and 0 <= k <= sum(sigma).
std::vector<int> realize_subset(const SigmaTail& sigma, long long k);

// All changemaker tails with strictly positive entries and
// 1 + sum(sigma_i^2) = n, in lexicographic order.  n = 1 yields the empty
// tail only.  Entries equal to zero are excluded: zeros pad arbitrarily (the
// set would be infinite) and force a norm-one vector into the lattice, which
// no bridgeless graph lattice contains.
std::vector<SigmaTail> enumerate_sigma(long long n);

}  // namespace cmlat

#endif
