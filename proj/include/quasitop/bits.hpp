#ifndef QUASITOP_BITS_HPP
#define QUASITOP_BITS_HPP

#include <bit>
#include <cstddef>
#include <cstdint>

namespace quasitop {

/// One bit per element index; bit i set means element i is present.
using Mask = std::uint64_t;

inline constexpr std::size_t max_carrier_size = 64;

/// Mask with the low `n` bits set.
constexpr Mask low_bits(std::size_t n) noexcept
{
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr std::size_t popcount(Mask m) noexcept
{
    return static_cast<std::size_t>(std::popcount(m));
}

/// Scatters the low bits of `compact` onto the set positions of `target`,
/// lowest first. Monotone in `compact`, so ascending inputs give ascending
/// outputs.
constexpr Mask deposit(Mask compact, Mask target) noexcept
{
    Mask out = 0;
    while (compact != 0 && target != 0) {
        const Mask low = target & (~target + 1);
        if (compact & 1) {
            out |= low;
        }
        compact >>= 1;
        target &= target - 1;
    }
    return out;
}

/// Calls `fn(sub)` for every sub-mask of `mask`, ascending by value.
template <typename Fn>
void for_each_submask(Mask mask, Fn&& fn)
{
    const std::size_t k = popcount(mask);
    const Mask count = low_bits(k);
    for (Mask i = 0;; ++i) {
        fn(deposit(i, mask));
        if (i == count) {
            break;
        }
    }
}

/// Calls `fn(sub)` for every sub-mask of `mask` in canonical order:
/// ascending cardinality, then ascending value. Stops early when `fn`
/// returns false.
template <typename Fn>
bool for_each_submask_canonical(Mask mask, Fn&& fn)
{
    const std::size_t m = popcount(mask);
    for (std::size_t k = 0; k <= m; ++k) {
        if (k == 0) {
            if (!fn(Mask{0})) {
                return false;
            }
            continue;
        }
        // Gosper's hack over the compact index space.
        Mask c = low_bits(k);
        const Mask limit = low_bits(m);
        while (true) {
            if (!fn(deposit(c, mask))) {
                return false;
            }
            const Mask low = c & (~c + 1);
            const Mask ripple = c + low;
            if (ripple == 0 || (ripple & ~limit) != 0) {
                break;
            }
            c = ripple | (((c ^ ripple) >> 2) / low);
            if ((c & ~limit) != 0) {
                break;
            }
        }
    }
    return true;
}

} // namespace quasitop

#endif
