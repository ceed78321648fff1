#include "siegel/multiindex.hpp"

#include <stdexcept>

namespace siegel {

MultiIndex MultiIndex::bump(int k, int a, int delta) const {
    MultiIndex j = *this;
    long v = static_cast<long>(j(k, a)) + delta;
    if (v < 0) throw std::domain_error("MultiIndex: entry would go negative");
    j(k, a) = static_cast<std::uint32_t>(v);
    return j;
}

namespace {

void compositions_of(int slots, unsigned total, std::vector<std::uint32_t>& cur,
                     std::vector<std::vector<std::uint32_t>>& out) {
    if (slots == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    // descending first entry gives lex order on vectors within the grade
    for (long v = total; v >= 0; --v) {
        cur.push_back(static_cast<std::uint32_t>(v));
        compositions_of(slots - 1, total - static_cast<unsigned>(v), cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<MultiIndex> multiindex_iter(int m, int n, unsigned radius) {
    if (m < 1 || n < 1) throw std::invalid_argument("multiindex_iter: bad shape");
    std::vector<MultiIndex> out;
    int slots = m * n;
    for (unsigned d = 0; d <= radius; ++d) {
        std::vector<std::vector<std::uint32_t>> grade;
        std::vector<std::uint32_t> cur;
        compositions_of(slots, d, cur, grade);
        for (auto& g : grade) out.emplace_back(m, n, std::move(g));
    }
    return out;
}

BigInt multiindex_count(int m, int n, unsigned radius) {
    // sum_{d<=R} C(d + mn - 1, mn - 1) = C(R + mn, mn)
    return binomial(radius + static_cast<unsigned long>(m) * n, static_cast<unsigned long>(m) * n);
}

} // namespace siegel
