#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace defeasance::bits {

// Calls fn on every n-bit mask with exactly k bits set (Gosper's hack).
template <typename Fn>
void for_each_ksubset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    if (k == 0) {
        fn(std::uint64_t{0});
        return;
    }
    std::uint64_t limit = std::uint64_t{1} << n;
    std::uint64_t m = (std::uint64_t{1} << k) - 1;
    while (m < limit) {
        fn(m);
        std::uint64_t c = m & (~m + 1);
        std::uint64_t r = m + c;
        if (r == 0) break;
        m = (((r ^ m) >> 2) / c) | r;
    }
}

// Subset-maximal masks satisfying pred, scanning cardinalities downward so
// each candidate is only checked against already accepted supersets.
template <typename Pred>
std::vector<std::uint64_t> maximal_masks(std::size_t n, Pred&& pred) {
    std::vector<std::uint64_t> accepted;
    for (std::size_t k = n + 1; k-- > 0;) {
        for_each_ksubset(n, k, [&](std::uint64_t m) {
            for (std::uint64_t a : accepted)
                if ((m & a) == m) return;
            if (pred(m)) accepted.push_back(m);
        });
    }
    std::sort(accepted.begin(), accepted.end());
    return accepted;
}

}  // namespace defeasance::bits
