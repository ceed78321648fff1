#pragma once

#include <cstdint>
#include <vector>

#include "siegel/scalars.hpp"

namespace siegel {

// Matrix-shaped multi-index J = (J_{ka}), 1<=k<=m, 1<=a<=n, stored row-major.
struct MultiIndex {
    int m = 1, n = 1;
    std::vector<std::uint32_t> e; // size m*n

    MultiIndex() : e(1, 0) {}
    MultiIndex(int m_, int n_) : m(m_), n(n_), e(static_cast<size_t>(m_) * n_, 0) {}
    MultiIndex(int m_, int n_, std::vector<std::uint32_t> entries)
        : m(m_), n(n_), e(std::move(entries)) {}

    std::uint32_t& operator()(int k, int a) { return e[static_cast<size_t>(k) * n + a]; }
    std::uint32_t operator()(int k, int a) const { return e[static_cast<size_t>(k) * n + a]; }

    unsigned long total() const {
        unsigned long s = 0;
        for (auto v : e) s += v;
        return s;
    }

    BigInt factorial_prod() const {
        BigInt f(1);
        for (auto v : e) f *= siegel::factorial(v);
        return f;
    }

    MultiIndex bump(int k, int a, int delta) const; // J +- delta*eps_{ka}, throws below zero

    bool operator==(const MultiIndex& o) const { return m == o.m && n == o.n && e == o.e; }
    bool operator<(const MultiIndex& o) const { return e < o.e; } // plain lex on entries
};

// All J with |J| <= radius in graded lexicographic order (grade first, then
// lex within a grade).
std::vector<MultiIndex> multiindex_iter(int m, int n, unsigned radius);

// Stars and bars: number of J with |J| <= radius.
BigInt multiindex_count(int m, int n, unsigned radius);

} // namespace siegel
