#include "cmlat/contfrac.hpp"

namespace cmlat {

NegCF::NegCF(std::vector<Integer> coeffs) : a(std::move(coeffs)) {
    if (a.empty()) throw InputError("empty minus-convention expansion");
    if (a[0] < 1) throw InputError("minus-convention expansion needs a_0 >= 1");
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] < 2) throw InputError("minus-convention tail entries must be >= 2");
}

PosCF::PosCF(std::vector<Integer> coeffs) : c(std::move(coeffs)) {
    if (c.empty()) throw InputError("empty plus-convention expansion");
    if (c[0] < 0) throw InputError("plus-convention expansion needs c_0 >= 0");
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] < 1) throw InputError("plus-convention tail entries must be >= 1");
}

NegCF neg_cf_expand(const Rational& x) {
    if (x <= Rational(1)) throw InputError("minus-convention expansion needs x > 1");
    std::vector<Integer> a;
    Rational y = x;
    for (;;) {
        Integer k = y.ceil();
        a.push_back(k);
        Rational rem = Rational(k) - y;
        if (rem.is_zero()) break;
        y = rem.reciprocal();
    }
    return NegCF(std::move(a));
}

Rational eval_neg_cf_relaxed(const std::vector<Integer>& a) {
    if (a.empty()) throw InputError("empty expansion");
    Rational val(a.back());
    for (std::size_t i = a.size() - 1; i-- > 0;) {
        if (val.is_zero())
            throw InputError("minus-convention tail evaluates to zero");
        val = Rational(a[i]) - val.reciprocal();
    }
    return val;
}

Rational eval_neg_cf(const NegCF& cf) { return eval_neg_cf_relaxed(cf.a); }

Rational eval_pos_cf(const PosCF& cf) {
    Rational val(cf.c.back());
    for (std::size_t i = cf.c.size() - 1; i-- > 0;) {
        // Tail entries are >= 1, so val > 0 here whenever a reciprocal is taken.
        val = Rational(cf.c[i]) + val.reciprocal();
    }
    return val;
}

NegCF pos_to_neg(const PosCF& cf) {
    for (const Integer& ci : cf.c)
        if (ci < 1) throw InputError("plus-to-minus conversion needs positive coefficients");

    std::vector<Integer> c = cf.c;
    if (c.size() % 2 == 1) {
        if (c.back() >= 2) {
            c.back() -= 1;
            c.push_back(1);
        } else if (c.size() == 1) {
            // [1] = 0 + 1/1
            c = {Integer(0), Integer(1)};
        } else {
            // [..., b, 1] = [..., b+1]
            c.pop_back();
            c.back() += 1;
        }
    }

    std::vector<Integer> out;
    out.push_back(c[0] + 1);
    for (Integer j = 0; j < c[1] - 1; ++j) out.push_back(2);
    for (std::size_t i = 2; i < c.size(); i += 2) {
        out.push_back(c[i] + 2);
        for (Integer j = 0; j < c[i + 1] - 1; ++j) out.push_back(2);
    }
    return NegCF(std::move(out));
}

std::pair<Integer, Integer> split_n_r(const Rational& x) {
    if (x.is_integer()) throw InputError("integral slope has no fractional split");
    Integer n = x.ceil();
    Integer r = n * x.den() - x.num();
    return {n, r};
}

}  // namespace cmlat
