#include "cmlat/ambient.hpp"

namespace cmlat {

static void check_same_shape(const AmbientVector& a, const AmbientVector& b) {
    if (a.f.size() != b.f.size() || a.e.size() != b.e.size())
        throw InvariantError("ambient vectors from different lattices combined");
}

bool AmbientVector::is_zero() const {
    for (long long v : f)
        if (v != 0) return false;
    for (long long v : e)
        if (v != 0) return false;
    return true;
}

long long AmbientVector::dot(const AmbientVector& o) const {
    check_same_shape(*this, o);
    long long acc = 0;
    for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * o.f[i];
    for (std::size_t i = 0; i < e.size(); ++i) acc += e[i] * o.e[i];
    return acc;
}

AmbientVector AmbientVector::operator+(const AmbientVector& o) const {
    check_same_shape(*this, o);
    AmbientVector r = *this;
    for (std::size_t i = 0; i < f.size(); ++i) r.f[i] += o.f[i];
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
}

AmbientVector AmbientVector::operator-(const AmbientVector& o) const {
    check_same_shape(*this, o);
    AmbientVector r = *this;
    for (std::size_t i = 0; i < f.size(); ++i) r.f[i] -= o.f[i];
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
    return r;
}

AmbientVector AmbientVector::operator-() const {
    AmbientVector r = *this;
    for (auto& v : r.f) v = -v;
    for (auto& v : r.e) v = -v;
    return r;
}

bool AmbientVector::operator<(const AmbientVector& o) const {
    check_same_shape(*this, o);
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] != o.f[i]) return f[i] < o.f[i];
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != o.e[i]) return e[i] < o.e[i];
    return false;
}

std::vector<long long> AmbientVector::flat() const {
    std::vector<long long> out;
    out.reserve(dim());
    out.insert(out.end(), f.begin(), f.end());
    out.insert(out.end(), e.begin(), e.end());
    return out;
}

AmbientVector AmbientVector::from_flat(const std::vector<long long>& coords, std::size_t t) {
    if (coords.size() < t) throw InputError("coordinate array shorter than its f block");
    AmbientVector v;
    v.f.assign(coords.begin(), coords.begin() + static_cast<long>(t));
    v.e.assign(coords.begin() + static_cast<long>(t), coords.end());
    return v;
}

}  // namespace cmlat
