#include "cmlat/det.hpp"

namespace cmlat {

Integer bareiss_det(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw InputError("determinant of a non-square matrix");
    if (n == 0) return 1;

    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

bool is_positive_definite(const std::vector<std::vector<Integer>>& m) {
    const std::size_t n = m.size();
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<Integer>> minor(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor[i][j] = m[i][j];
        if (bareiss_det(std::move(minor)) <= 0) return false;
    }
    return true;
}

}  // namespace cmlat
