#ifndef CMLAT_SURGERY_HPP
#define CMLAT_SURGERY_HPP

#include <string>
#include <vector>

#include "cmlat/rational.hpp"

namespace cmlat {

// Non-increasing sequence of nonnegative integers, zero from some index on.
// Entries beyond the stored tail read as zero.
class VSequence {
public:
    explicit VSequence(std::vector<long long> values);
    // The family V_j = max(0, gtilde - j); only gtilde feeds the formulas, so
    // this is the default test sequence.
    static VSequence canonical(long long gtilde);

    long long at(const Integer& j) const;
    // Minimal index with V_j = 0.
    long long gtilde() const;
    const std::vector<long long>& values() const { return values_; }

private:
    std::vector<long long> values_;
};

// Correction-term value -2 V_{min{floor(i/q), ceil((p-i)/q)}}; defined for
// 0 <= i <= p-1 with p, q coprime positive.  Always <= 0.
long long d_tilde(const VSequence& V, const Integer& p, const Integer& q, const Integer& i);

// Number of indices i in [0, p) with d_tilde = 0: p when gtilde = 0,
// p - (2 gtilde - 1) q when p/q > 2 gtilde - 1 > 0, else 0.  Depends on the
// sequence only through gtilde.
Integer z_count(long long gtilde, const Integer& p, const Integer& q);

// 2 gtilde <= n - sqrt(n) for n = ceil(p/q), decided exactly in integers:
// n - 2 gtilde >= 0 and (n - 2 gtilde)^2 >= n.
bool greene_bound_ok(long long gtilde, const Integer& p, const Integer& q);

// The vanishing count beats min{p - 1, q}, the hypothesis that forces the
// covering knot to be trivial.
bool gibbons_hypothesis_ok(long long gtilde, const Integer& p, const Integer& q);

// Surgery slope of the double branched cover when the diagram splits into a
// vertical half-twist region of mu0 crossings and a tangle of slope a/b:
// -(mu0 + a/(a+b)).  Requires a/b >= 0 and mu0 >= 0.
Rational montesinos_slope(const Rational& tangle, long long mu0);

struct SlopeResult {
    Integer p;
    Rational slope;  // -p/q, the branched-cover surgery coefficient
};

// p = q n - r and slope -p/q for the p/q = n - r/q recognition data; checked
// against the montesinos composition of the (q - r)/r tangle over n - 1
// half-twists.
SlopeResult theorem_slope(long long n, const Integer& r, const Integer& q);

// For a slope strictly between 0 and 1 the cover forces the trivial answer.
std::string small_slope_verdict(const Rational& pq);

// det(gm) = p for a positive definite symmetric matrix.
bool det_check(const std::vector<std::vector<Integer>>& gm, const Integer& p);

}  // namespace cmlat

#endif
