#ifndef TESTS_HELPERS_HPP
#define TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "tri/matrix.hpp"

namespace testutil {

inline tri::Matrix mat(const tri::FieldDescriptor& d,
                       const std::vector<std::vector<long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    tri::Matrix m(d, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m.at(i, j) = tri::FieldValue::from_int(rows[static_cast<size_t>(i)][static_cast<size_t>(j)], d);
    return m;
}

inline tri::Matrix qmat(const std::vector<std::vector<long>>& rows) {
    return mat(tri::FieldDescriptor::rational(), rows);
}

inline tri::Matrix random_qmat(std::mt19937_64& rng, int n, long lo = -4, long hi = 4) {
    const tri::FieldDescriptor d = tri::FieldDescriptor::rational();
    std::uniform_int_distribution<long> dist(lo, hi);
    tri::Matrix m(d, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = tri::FieldValue::from_int(dist(rng), d);
    return m;
}

inline tri::FieldValue q(long num, long den = 1) {
    return tri::FieldValue(tri::FieldDescriptor::rational(), mpq_class(num, den));
}

inline std::vector<tri::FieldValue> qvec(const std::vector<long>& xs) {
    std::vector<tri::FieldValue> out;
    for (long x : xs) out.push_back(q(x));
    return out;
}

}  // namespace testutil

#endif
