#include "cmlat/surgery.hpp"

#include <utility>

#include "cmlat/det.hpp"
#include "cmlat/errors.hpp"

namespace cmlat {

VSequence::VSequence(std::vector<long long> values) : values_(std::move(values)) {
    for (std::size_t j = 0; j < values_.size(); ++j) {
        if (values_[j] < 0) throw InputError("V sequence entries must be nonnegative");
        if (j > 0 && values_[j] > values_[j - 1])
            throw InputError("V sequence must be non-increasing");
    }
}

VSequence VSequence::canonical(long long gtilde) {
    if (gtilde < 0) throw InputError("gtilde must be nonnegative");
    std::vector<long long> v;
    for (long long j = gtilde; j > 0; --j) v.push_back(j);
    return VSequence(std::move(v));
}

long long VSequence::at(const Integer& j) const {
    if (j < 0) throw InputError("V sequence index must be nonnegative");
    if (j >= values_.size()) return 0;
    return values_[static_cast<std::size_t>(j)];
}

long long VSequence::gtilde() const {
    for (std::size_t j = 0; j < values_.size(); ++j)
        if (values_[j] == 0) return static_cast<long long>(j);
    return static_cast<long long>(values_.size());
}

namespace {

void require_coprime_positive(const Integer& p, const Integer& q) {
    if (p <= 0 || q <= 0) throw InputError("p and q must be positive");
    if (gcd(p, q) != 1) throw InputError("p and q must be coprime");
}

}  // namespace

long long d_tilde(const VSequence& V, const Integer& p, const Integer& q, const Integer& i) {
    require_coprime_positive(p, q);
    if (i < 0 || i >= p) throw InputError("index must lie in [0, p)");
    Integer down = i / q;
    Integer up = (p - i + q - 1) / q;
    return -2 * V.at(down < up ? down : up);
}

Integer z_count(long long gtilde, const Integer& p, const Integer& q) {
    require_coprime_positive(p, q);
    if (gtilde < 0) throw InputError("gtilde must be nonnegative");
    if (gtilde == 0) return p;
    Integer cut = (2 * Integer(gtilde) - 1) * q;
    if (p > cut) return p - cut;
    return 0;
}

bool greene_bound_ok(long long gtilde, const Integer& p, const Integer& q) {
    require_coprime_positive(p, q);
    if (gtilde < 0) throw InputError("gtilde must be nonnegative");
    Integer n = (p + q - 1) / q;
    Integer d = n - 2 * Integer(gtilde);
    return d >= 0 && d * d >= n;
}

bool gibbons_hypothesis_ok(long long gtilde, const Integer& p, const Integer& q) {
    Integer bar = p - 1 < q ? p - 1 : q;
    return z_count(gtilde, p, q) > bar;
}

Rational montesinos_slope(const Rational& tangle, long long mu0) {
    if (tangle.sign() < 0) throw InputError("tangle slope must be nonnegative");
    if (mu0 < 0) throw InputError("twist count must be nonnegative");
    Rational filled(tangle.num(), Integer(tangle.num() + tangle.den()));
    return -(Rational(mu0) + filled);
}

SlopeResult theorem_slope(long long n, const Integer& r, const Integer& q) {
    if (n < 1) throw InputError("n must be at least 1");
    if (r <= 0 || r >= q) throw InputError("r must satisfy 0 < r < q");
    SlopeResult out;
    out.p = q * n - r;
    out.slope = Rational(Integer(-out.p), q);
    Rational composed = montesinos_slope(Rational(Integer(q - r), r), n - 1);
    if (composed != out.slope)
        throw InvariantError("montesinos composition disagrees with the slope");
    return out;
}

std::string small_slope_verdict(const Rational& pq) {
    if (pq.sign() <= 0 || pq >= Rational(1))
        throw InputError("slope must lie strictly between 0 and 1");
    return "knot must be unknot; manifold is a lens space; link is 2-bridge";
}

bool det_check(const std::vector<std::vector<Integer>>& gm, const Integer& p) {
    if (!is_positive_definite(gm)) throw InputError("matrix must be positive definite");
    return bareiss_det(gm) == p;
}

}  // namespace cmlat
