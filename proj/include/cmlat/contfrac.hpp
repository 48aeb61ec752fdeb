#ifndef CMLAT_CONTFRAC_HPP
#define CMLAT_CONTFRAC_HPP

#include <utility>
#include <vector>

#include "cmlat/rational.hpp"

namespace cmlat {

// Minus-convention continued fraction [a_0, ..., a_l]^- =
// a_0 - 1/(a_1 - 1/(... - 1/a_l)).  Invariant: a_0 >= 1 and a_i >= 2 for
// i >= 1, which makes expansions unique and every tail evaluate > 1.
struct NegCF {
    std::vector<Integer> a;

    explicit NegCF(std::vector<Integer> coeffs);
    std::size_t length() const { return a.size(); }
};

// Plus-convention continued fraction [c_0, ..., c_k]^+ =
// c_0 + 1/(c_1 + 1/(... + 1/c_k)).  Invariant: c_0 >= 0, c_i >= 1 for i >= 1.
struct PosCF {
    std::vector<Integer> c;

    explicit PosCF(std::vector<Integer> coeffs);
    std::size_t length() const { return c.size(); }
};

// Unique minus-convention expansion of x > 1.  Throws InputError for x <= 1.
NegCF neg_cf_expand(const Rational& x);

Rational eval_neg_cf(const NegCF& cf);
Rational eval_pos_cf(const PosCF& cf);

// Evaluates an arbitrary integer sequence under the minus convention.  Unlike
// NegCF this accepts entries below 2 (tangle edge counts can start at 0 or 1),
// so a tail can evaluate to zero; that raises InputError instead of dividing.
Rational eval_neg_cf_relaxed(const std::vector<Integer>& a);

// Rewrites an even-length plus-convention expansion as a minus-convention
// one; odd-length input is first normalized via [..., c] = [..., c-1, 1].
// All input coefficients must be positive.
NegCF pos_to_neg(const PosCF& cf);

// For non-integral x, the unique (n, r) with x = n - r/den(x), 0 < r < den(x).
std::pair<Integer, Integer> split_n_r(const Rational& x);

}  // namespace cmlat

#endif
