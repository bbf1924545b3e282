#pragma once

// Palette arithmetic: the block size k, the modulus K and the edge palette L.
//
//   k = ceil(Δ^{r-4/3} ln²Δ)
//   K = least multiple of k with K >= Δ^{r-1} + 6Δ + k
//   L = Δ+1 integers in blocks of length k starting at K+1 with stride 4k
//
// All arithmetic is carried out in signed 128-bit integers with explicit
// overflow detection.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace distsum {

using Wide = __int128;

class ArithmeticOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

inline std::string to_string(Wide x) {
    if (x == 0) return "0";
    bool neg = x < 0;
    // |INT128_MIN| is not representable; palette values never get there.
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

namespace checked {

inline Wide add(Wide a, Wide b) {
    Wide out;
    if (__builtin_add_overflow(a, b, &out)) throw ArithmeticOverflow("128-bit overflow in addition");
    return out;
}

inline Wide mul(Wide a, Wide b) {
    Wide out;
    if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticOverflow("128-bit overflow in multiplication");
    return out;
}

inline Wide pow(Wide base, unsigned exp) {
    Wide out = 1;
    for (unsigned i = 0; i < exp; ++i) out = mul(out, base);
    return out;
}

inline Wide ceil_div(Wide a, Wide b) {
    // b > 0, a >= 0
    return a / b + (a % b != 0 ? 1 : 0);
}

}  // namespace checked

/// Mathematical remainder in [0, K).
inline Wide residue(Wide x, Wide modulus) {
    Wide m = x % modulus;
    return m < 0 ? m + modulus : m;
}

inline std::int64_t residue(std::int64_t x, std::int64_t modulus) {
    std::int64_t m = x % modulus;
    return m < 0 ? m + modulus : m;
}

/// Closed integer interval.
struct Interval {
    Wide lo;
    Wide hi;

    Wide length() const { return hi - lo + 1; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

struct PaletteParams {
    Wide delta = 0;
    Wide r = 0;
    Wide k = 0;
    Wide K = 0;
    std::vector<Interval> L;  ///< sorted, disjoint
    Wide palette_max = 0;     ///< 2K + k + 4Δ + 1

    Wide L_size() const {
        Wide s = 0;
        for (const auto& iv : L) s += iv.length();
        return s;
    }

    /// j-th smallest element of L, 0-based.
    Wide L_element(Wide j) const {
        for (const auto& iv : L) {
            if (j < iv.length()) return iv.lo + j;
            j -= iv.length();
        }
        throw std::out_of_range("L index out of range");
    }

    friend bool operator==(const PaletteParams&, const PaletteParams&) = default;
};

namespace detail {

using HighFloat = boost::multiprecision::cpp_bin_float_100;

inline Wide parse_wide(const std::string& digits) {
    Wide out = 0;
    for (char c : digits) {
        if (c < '0' || c > '9') throw std::logic_error("unexpected digit string: " + digits);
        out = checked::add(checked::mul(out, 10), c - '0');
    }
    return out;
}

/// ceil(Δ^{r-4/3} · ln²Δ). Long double first; values close to an integer, or too
/// large for the long double mantissa, are recomputed at ~100 digits and the
/// ceiling is taken only if a widened interval around the value stays between
/// two consecutive integers.
inline Wide block_size(std::uint64_t delta, std::uint64_t r) {
    const long double ld_delta = static_cast<long double>(delta);
    const long double ln = std::log(ld_delta);
    const long double value = std::pow(ld_delta, static_cast<long double>(r) - 4.0L / 3.0L) * ln * ln;
    if (!std::isfinite(value) || value > 1e36L) throw ArithmeticOverflow("k exceeds the 128-bit range");
    const long double fl = std::floor(value);
    const bool near_integer = value - fl < 1e-6L || (fl + 1) - value < 1e-6L;
    if (!near_integer && value < 1e15L) return static_cast<Wide>(std::ceil(value));

    HighFloat hd(delta);
    HighFloat hl = boost::multiprecision::log(hd);
    HighFloat hv = boost::multiprecision::pow(hd, HighFloat(r) - HighFloat(4) / 3) * hl * hl;
    HighFloat eps = hv * HighFloat("1e-80");
    HighFloat lo_ceil = boost::multiprecision::ceil(hv - eps);
    HighFloat hi_ceil = boost::multiprecision::ceil(hv + eps);
    if (lo_ceil != hi_ceil)
        throw ArithmeticOverflow("cannot resolve ceiling of Δ^{r-4/3}ln²Δ for Δ=" + std::to_string(delta) +
                                 ", r=" + std::to_string(r));
    return parse_wide(boost::multiprecision::cpp_int(lo_ceil).str());
}

}  // namespace detail

/// Builds k, K, L and the palette bound for maximum degree Δ >= 2 and radius r >= 2.
inline PaletteParams compute_params(std::uint64_t delta, std::uint64_t r) {
    if (delta < 2) throw std::invalid_argument("compute_params requires Δ >= 2");
    if (r < 2) throw std::invalid_argument("compute_params requires r >= 2");
    if (r > 64) throw ArithmeticOverflow("radius too large for 128-bit palette arithmetic");

    PaletteParams p;
    p.delta = static_cast<Wide>(delta);
    p.r = static_cast<Wide>(r);
    p.k = detail::block_size(delta, r);

    const Wide power = checked::pow(p.delta, static_cast<unsigned>(r - 1));
    const Wide floor_value = checked::add(checked::add(power, checked::mul(6, p.delta)), p.k);
    p.K = checked::mul(checked::ceil_div(floor_value, p.k), p.k);

    const Wide count = p.delta + 1;
    const Wide blocks = checked::ceil_div(count, p.k);
    const Wide stride = checked::mul(4, p.k);
    for (Wide l = 1; l < blocks; ++l) {
        Wide start = checked::add(p.K, checked::add(checked::mul(l - 1, stride), 1));
        p.L.push_back({start, start + p.k - 1});
    }
    Wide start = checked::add(p.K, checked::add(checked::mul(blocks - 1, stride), 1));
    p.L.push_back({start, start + count - (blocks - 1) * p.k - 1});

    p.palette_max = checked::add(checked::add(checked::mul(2, p.K), p.k), checked::add(checked::mul(4, p.delta), 1));
    return p;
}

struct LPropertyResult {
    bool holds = true;
    std::optional<std::pair<Wide, Wide>> witness;  ///< distinct i1, i2 whose 4-sets meet mod K
};

/// Checks that for distinct i1, i2 in L the sets {i-k, i, i+k, i+2k} are disjoint mod K.
/// Works interval-by-interval, so it is exact for any L without enumerating it.
inline LPropertyResult check_L_property(const PaletteParams& p) {
    static constexpr int shifts[] = {-1, 0, 1, 2};
    for (std::size_t a = 0; a < p.L.size(); ++a)
        for (std::size_t b = a; b < p.L.size(); ++b) {
            const Interval& A = p.L[a];
            const Interval& B = p.L[b];
            // i1 ∈ A, i2 ∈ B, i1 - i2 = diff ranges over [lo, hi].
            const Wide lo = A.lo - B.hi;
            const Wide hi = A.hi - B.lo;
            for (int s : shifts)
                for (int t : shifts) {
                    // i1 + s·k ≡ i2 + t·k  <=>  diff ≡ (t - s)·k (mod K)
                    const Wide target = residue(static_cast<Wide>(t - s) * p.k, p.K);
                    Wide diff = lo + residue(target - lo, p.K);
                    if (diff == 0 && a == b) diff += p.K;
                    if (diff > hi) continue;
                    const Wide i2 = std::max(B.lo, A.lo - diff);
                    const Wide i1 = i2 + diff;
                    return {false, std::make_pair(std::min(i1, i2), std::max(i1, i2))};
                }
        }
    return {};
}

/// Real-valued upper bound 2Δ^{r-1} + 5Δ^{r-4/3}ln²Δ + 16Δ + 6.
inline double theoretical_bound(double delta, double r) {
    const double ln = std::log(delta);
    return 2.0 * std::pow(delta, r - 1.0) + 5.0 * std::pow(delta, r - 4.0 / 3.0) * ln * ln + 16.0 * delta + 6.0;
}

}  // namespace distsum
