#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace rademacher {

/// Exact element of Q(sqrt(D)): (rational + coeff * sqrt(radicand)) / denom.
///
/// Canonical form: radicand is squarefree and > 1 (or 0 with coeff 0 when the
/// value is rational), denom > 0, and gcd(rational, coeff, denom) == 1. Two
/// values are equal iff their canonical fields are equal. Arithmetic between
/// values with different nonzero radicands is not representable and throws
/// std::domain_error; comparison is exact (cross-squaring, no floating point).
class QuadraticSurd {
public:
    QuadraticSurd() = default;

    static QuadraticSurd integer(std::int64_t v);
    static QuadraticSurd rational(std::int64_t num, std::int64_t den);
    /// sqrt(num / den); num >= 0, den > 0.
    static QuadraticSurd sqrt_of(std::int64_t num, std::int64_t den = 1);
    static QuadraticSurd make(std::int64_t rational, std::int64_t coeff, std::int64_t radicand, std::int64_t denom);

    std::int64_t rational_part() const noexcept { return a_; }
    std::int64_t coeff() const noexcept { return b_; }
    std::int64_t radicand() const noexcept { return d_rad_; }
    std::int64_t denom() const noexcept { return den_; }

    bool is_rational() const noexcept { return b_ == 0; }
    bool is_integer() const noexcept { return b_ == 0 && den_ == 1; }
    std::optional<std::int64_t> as_integer() const noexcept;
    int sign() const;
    double to_double() const noexcept;
    std::string to_string() const;

    QuadraticSurd pow(unsigned e) const;

    friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y);
    friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y);
    friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y);
    friend QuadraticSurd operator/(const QuadraticSurd& x, std::int64_t k);
    QuadraticSurd operator-() const;

    friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
    friend std::strong_ordering operator<=>(const QuadraticSurd& x, const QuadraticSurd& y);

private:
    std::int64_t a_ = 0;
    std::int64_t b_ = 0;
    std::int64_t d_rad_ = 0;
    std::int64_t den_ = 1;
};

/// floor(sqrt(v)) for v >= 0.
std::int64_t isqrt(std::int64_t v);
/// sqrt(v) when v is a perfect square >= 0.
std::optional<std::int64_t> exact_sqrt(std::int64_t v);

}  // namespace rademacher
