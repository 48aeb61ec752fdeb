#include "cmlat/sigma.hpp"

#include <algorithm>

namespace cmlat {

static void check_sorted_nonneg(const SigmaTail& sigma) {
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i] < 0) throw InputError("changemaker tail entries must be nonnegative");
        if (i > 0 && sigma[i] < sigma[i - 1])
            throw InputError("changemaker tail must be nondecreasing");
    }
}

bool is_changemaker(const SigmaTail& sigma) {
    check_sorted_nonneg(sigma);
    long long sum = 0;
    for (long long v : sigma) {
        if (v > sum + 1) return false;
        sum += v;
    }
    return true;
}

std::vector<int> realize_subset(const SigmaTail& sigma, long long k) {
    if (!is_changemaker(sigma)) throw InputError("realize_subset needs a changemaker tail");
    long long total = 0;
    for (long long v : sigma) total += v;
    if (k < 0 || k > total) throw InputError("subset-sum target out of range");

    // Greedy from the largest entry.  The changemaker condition makes the
    // greedy choice safe: skipping sigma_i when sigma_i <= remainder would
    // leave a remainder above sigma_1 + ... + sigma_{i-1}.
    std::vector<int> picked;
    long long rem = k;
    for (std::size_t i = sigma.size(); i-- > 0;) {
        if (sigma[i] <= rem && sigma[i] > 0) {
            picked.push_back(static_cast<int>(i) + 1);
            rem -= sigma[i];
        }
    }
    if (rem != 0) throw InvariantError("greedy subset realization failed on a changemaker tail");
    std::reverse(picked.begin(), picked.end());
    return picked;
}

static void enumerate_rec(long long remaining, long long minval, long long sum_so_far,
                          SigmaTail& prefix, std::vector<SigmaTail>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (long long v = minval; v * v <= remaining && v <= sum_so_far + 1; ++v) {
        prefix.push_back(v);
        enumerate_rec(remaining - v * v, v, sum_so_far + v, prefix, out);
        prefix.pop_back();
    }
}

std::vector<SigmaTail> enumerate_sigma(long long n) {
    if (n < 1) throw InputError("enumerate_sigma needs n >= 1");
    std::vector<SigmaTail> out;
    SigmaTail prefix;
    enumerate_rec(n - 1, 1, 0, prefix, out);
    // Recursion emits in lexicographic order already; keep that contract explicit.
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cmlat
