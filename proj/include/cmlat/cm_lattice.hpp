#ifndef CMLAT_CM_LATTICE_HPP
#define CMLAT_CM_LATTICE_HPP

#include <optional>
#include <vector>

#include "cmlat/ambient.hpp"
#include "cmlat/contfrac.hpp"
#include "cmlat/sigma.hpp"

namespace cmlat {

// The defining data of a p/q-changemaker lattice, q >= 2.  Writing
// p/q = n - r/q with 0 < r < q and p/q = [a_0, ..., a_l]^- (so a_0 = n and
// q/r = [a_1, ..., a_l]^-), the lattice is the orthogonal complement of
//   w_0 = e_0 + sigma_1 f_1 + ... + sigma_t f_t,
//   w_k = -e_{m_{k-1}} + e_{m_{k-1}+1} + ... + e_{m_k}   (1 <= k <= l),
// inside Z^(t+s+1), where m_0 = 0, m_k = a_1 + ... + a_k - k and s = m_l.
struct ChangemakerLatticeSpec {
    Rational pq;
    long long n = 0;
    long long r = 0;
    std::vector<long long> a;          // a_0 .. a_l
    std::vector<long long> m_indices;  // m_0 .. m_l
    long long s = 0;
    SigmaTail sigma;
    std::vector<AmbientVector> w;  // w_0 .. w_l

    long long t() const { return static_cast<long long>(sigma.size()); }
    long long l() const { return static_cast<long long>(a.size()) - 1; }
    long long ambient_dim() const { return t() + s + 1; }
    long long rank() const { return t() + s - l(); }
    // Top index of the fractional basis v_0 .. v_m.
    long long frac_top() const { return s - l(); }
    const Integer& p() const { return pq.num(); }
    const Integer& q() const { return pq.den(); }
};

// Builds the spec above.  Requires p/q > 1 non-integral, sigma a changemaker
// tail with 1 + sum(sigma_i^2) = n, and n within the coordinate-safe bound.
ChangemakerLatticeSpec build_cm_lattice(const Rational& pq, const SigmaTail& sigma);

// Basis v_0, ..., v_m of the fractional sublattice (the e-supported vectors
// orthogonal to w_1, ..., w_l), m = s - l.  With M = {0..s} minus the m_k:
// v_0 = e_0 + ... + e_min(M); each k in M contributes the chain vector
// -e_k + ... + e_k' (k' the next element of M, or s for k = max M).  Empty M
// degenerates to the single vector v_0 = e_0 + ... + e_s.  The basis Gram is
// tridiagonal with -1 off the diagonal.
std::vector<AmbientVector> fractional_basis(const ChangemakerLatticeSpec& spec);

// Integer basis of the full lattice (determinant p), assembled from one
// vector per f-coordinate plus the fractional chain vectors v_1 .. v_m.
std::vector<AmbientVector> lattice_basis(const ChangemakerLatticeSpec& spec);

// Equivalent to: no norm-one vector in the lattice.
bool is_indecomposable(const ChangemakerLatticeSpec& spec);

// Coefficients of the e-part of x in the fractional basis, or nullopt if the
// e-part is not an integer combination of it.
std::optional<std::vector<long long>> frac_coefficients(const ChangemakerLatticeSpec& spec,
                                                        const AmbientVector& x);

// Irreducibility inside the fractional sublattice: true exactly for
// +/-(v_a + ... + v_b).  Throws InputError when x is not in that sublattice.
bool is_irreducible_LF(const ChangemakerLatticeSpec& spec, const AmbientVector& x);

// Exhaustive irreducibility oracle: searches for x = y + z with y, z nonzero
// lattice vectors and y.z >= 0.  The box |y_i| <= floor(sqrt(norm x)) is
// exhaustive because y.z >= 0 forces norm(y), norm(z) <= norm(x).  The
// lattice is "vectors orthogonal to every entry of `orthogonal_to`", further
// restricted to the e-block when e_support_only is set.  Throws InputError
// above max_norm.
bool brute_force_irreducible(const AmbientVector& x,
                             const std::vector<AmbientVector>& orthogonal_to,
                             bool e_support_only, long long max_norm = 16);

}  // namespace cmlat

#endif
