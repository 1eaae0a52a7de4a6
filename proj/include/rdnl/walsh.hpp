// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "boolean_function.hpp"
#include "errors.hpp"
#include "gf2.hpp"

namespace rdnl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Walsh-Hadamard spectrum held as integer numerators over the implicit
/// denominator 2^n: W_a = sums()[a] / 2^n with sums()[a] = sum_x (-1)^(f(x) + a.x).
class WalshSpectrum {
  public:
    WalshSpectrum(unsigned n, std::vector<std::int64_t> sums) : n_(n), sums_(std::move(sums)) {
        require(sums_.size() == (std::size_t{1} << n), ErrorKind::InvalidArgument, "spectrum length must be 2^n");
    }

    unsigned arity() const noexcept { return n_; }
    std::size_t size() const noexcept { return sums_.size(); }
    const std::vector<std::int64_t> &sums() const noexcept { return sums_; }
    std::int64_t sum(std::uint32_t a) const noexcept { return sums_[a]; }
    std::int64_t denominator() const noexcept { return std::int64_t{1} << n_; }

    Rational value(std::uint32_t a) const { return Rational(sums_[a], denominator()); }

    /// max_a |sum(a)|; with `skip_zero` the a = 0 entry is ignored.
    std::int64_t max_abs_sum(bool skip_zero = false) const noexcept {
        std::int64_t best = 0;
        for (std::size_t a = skip_zero ? 1 : 0; a < sums_.size(); ++a)
            best = std::max(best, std::abs(sums_[a]));
        return best;
    }

  private:
    unsigned n_;
    std::vector<std::int64_t> sums_;
};

/// In-place butterfly; n*2^n additions and subtractions.
inline void fast_walsh_hadamard(std::vector<std::int64_t> &v) {
    for (std::size_t half = 1; half < v.size(); half <<= 1)
        for (std::size_t i = 0; i < v.size(); i += half << 1)
            for (std::size_t j = i; j < i + half; ++j) {
                const auto a = v[j];
                const auto b = v[j + half];
                v[j] = a + b;
                v[j + half] = a - b;
            }
}

inline WalshSpectrum walsh_spectrum(const BooleanFunction &f) {
    std::vector<std::int64_t> v(f.size());
    for (std::uint32_t x = 0; x < v.size(); ++x)
        v[x] = f(x) ? -1 : 1;
    fast_walsh_hadamard(v);
    return WalshSpectrum(f.arity(), std::move(v));
}

/// Minimum Hamming distance from f to the affine functions, 2^(n-1)(1 - max_a |W_a|).
inline std::uint64_t classical_nonlinearity(const BooleanFunction &f) {
    const auto spec = walsh_spectrum(f);
    return static_cast<std::uint64_t>((spec.denominator() - spec.max_abs_sum()) / 2);
}

/// Pr_x(a.x = f(x)) as an exact fraction.
inline Rational correlation_probability(const BooleanFunction &f, std::uint32_t a) {
    require(a != 0, ErrorKind::ZeroMask, "linear mask a must be nonzero");
    require(a < f.size(), ErrorKind::InvalidArgument, "mask wider than n");
    require(f.weight() >= 1, ErrorKind::EmptySupport, "function has empty support");
    std::uint64_t agree = 0;
    for (std::uint32_t x = 0; x < f.size(); ++x)
        agree += (gf2::parity(a & x) == static_cast<unsigned>(f(x)));
    return Rational(agree, f.size());
}

inline bool is_bent(const BooleanFunction &f) {
    const unsigned n = f.arity();
    if (n % 2 != 0)
        return false;
    const auto spec = walsh_spectrum(f);
    const std::int64_t flat = std::int64_t{1} << (n / 2); // 2^n * 2^(-n/2)
    return std::all_of(spec.sums().begin(), spec.sums().end(),
                       [flat](std::int64_t s) { return std::abs(s) == flat; });
}

/// Every nonzero component b.F is bent.
inline bool is_perfect_nonlinear(const VectorialFunction &F) {
    if (F.inputs() % 2 != 0)
        return false;
    for (std::uint32_t b = 1; b < (std::uint32_t{1} << F.outputs()); ++b)
        if (!is_bent(component_function(F, b)))
            return false;
    return true;
}

} // namespace rdnl
