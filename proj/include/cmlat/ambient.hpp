#ifndef CMLAT_AMBIENT_HPP
#define CMLAT_AMBIENT_HPP

#include <cstddef>
#include <vector>

#include "cmlat/errors.hpp"

namespace cmlat {

// Vector in the orthonormal ambient Z^(t+s+1) with basis
// f_1, ..., f_t, e_0, ..., e_s.  Coordinates are kept in two blocks; all
// serialized forms are the flat array f_1..f_t, e_0..e_s.
struct AmbientVector {
    std::vector<long long> f;  // f_1 .. f_t
    std::vector<long long> e;  // e_0 .. e_s

    AmbientVector() = default;
    AmbientVector(std::size_t t, std::size_t s_plus_1) : f(t, 0), e(s_plus_1, 0) {}

    std::size_t dim() const { return f.size() + e.size(); }

    bool is_zero() const;

    long long dot(const AmbientVector& o) const;
    long long norm() const { return dot(*this); }

    AmbientVector operator+(const AmbientVector& o) const;
    AmbientVector operator-(const AmbientVector& o) const;
    AmbientVector operator-() const;

    bool operator==(const AmbientVector& o) const { return f == o.f && e == o.e; }
    bool operator!=(const AmbientVector& o) const { return !(*this == o); }
    // Lexicographic on the flat (f, e) coordinate list.
    bool operator<(const AmbientVector& o) const;

    std::vector<long long> flat() const;
    static AmbientVector from_flat(const std::vector<long long>& coords, std::size_t t);
};

}  // namespace cmlat

#endif
