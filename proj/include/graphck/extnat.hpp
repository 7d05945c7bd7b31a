#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace graphck {

/// An element of N ∪ {∞}.
///
/// Addition and multiplication saturate at infinity with the usual
/// conventions 0·∞ = 0 and ∞ − 1 = ∞. Finite arithmetic that would leave
/// the 64-bit range throws DomainError instead of wrapping.
class ExtNat {
public:
    constexpr ExtNat() = default;
    constexpr ExtNat(std::uint64_t n) : raw_(n) {} // NOLINT: implicit by design of the literals below

    static constexpr ExtNat inf() {
        ExtNat r;
        r.raw_ = kInf;
        return r;
    }

    constexpr bool is_inf() const { return raw_ == kInf; }
    constexpr bool is_finite() const { return raw_ != kInf; }
    constexpr bool is_zero() const { return raw_ == 0; }
    constexpr bool positive() const { return raw_ != 0; }

    /// Finite value; throws DomainError for infinity.
    std::uint64_t value() const;

    /// Saturating decrement. Throws DomainError on zero.
    ExtNat dec() const;

    /// Subtracts a finite amount; ∞ − k = ∞. Throws DomainError on underflow.
    ExtNat minus(std::uint64_t k) const;

    friend ExtNat operator+(ExtNat a, ExtNat b);
    friend ExtNat operator*(ExtNat a, ExtNat b);
    ExtNat& operator+=(ExtNat b) { return *this = *this + b; }

    friend constexpr bool operator==(ExtNat a, ExtNat b) = default;
    friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) { return a.raw_ <=> b.raw_; }

    std::string to_string() const;

private:
    static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t raw_ = 0;
};

inline constexpr ExtNat kInf = ExtNat::inf();

enum class ArithOp { add, mul, dec };

/// Uniform entry point over the three operations; `b` is ignored for dec.
ExtNat extnat_arith(ExtNat a, ExtNat b, ArithOp op);

} // namespace graphck
