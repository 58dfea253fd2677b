#include "rademacher/surd.hpp"

#include <cmath>
#include <numeric>

#include "rademacher/count.hpp"

namespace rademacher {
namespace {

__extension__ typedef __int128 i128;

std::int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw CountOverflow("surd component exceeds 64-bit range");
    return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 x, i128 y) {
    if (x < 0) x = -x;
    if (y < 0) y = -y;
    while (y != 0) {
        const i128 r = x % y;
        x = y;
        y = r;
    }
    return x;
}

int sign_of(i128 v) { return (v > 0) - (v < 0); }

}  // namespace

std::int64_t isqrt(std::int64_t v) {
    if (v < 0) throw std::domain_error("isqrt of negative value");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
    while (r > 0 && static_cast<i128>(r) * r > v) --r;
    while (static_cast<i128>(r + 1) * (r + 1) <= v) ++r;
    return r;
}

std::optional<std::int64_t> exact_sqrt(std::int64_t v) {
    if (v < 0) return std::nullopt;
    const std::int64_t r = isqrt(v);
    if (r * r == v) return r;
    return std::nullopt;
}

QuadraticSurd QuadraticSurd::make(std::int64_t rational, std::int64_t coeff, std::int64_t radicand, std::int64_t denom) {
    if (denom == 0) throw std::domain_error("zero denominator");
    if (radicand < 0) throw std::domain_error("negative radicand");
    i128 a = rational;
    i128 b = coeff;
    i128 d = denom;
    std::int64_t rad = radicand;

    if (b != 0 && rad > 1) {
        // Pull square factors out of the radicand.
        for (std::int64_t p = 2; p * p <= rad; ++p) {
            while (rad % (p * p) == 0) {
                rad /= p * p;
                b *= p;
            }
        }
    }
    if (b == 0 || rad == 0) {
        b = 0;
        rad = 0;
    } else if (rad == 1) {
        a += b;
        b = 0;
        rad = 0;
    }
    if (d < 0) {
        a = -a;
        b = -b;
        d = -d;
    }
    i128 g = gcd128(gcd128(a, b), d);
    if (g > 1) {
        a /= g;
        b /= g;
        d /= g;
    }
    QuadraticSurd s;
    s.a_ = narrow(a);
    s.b_ = narrow(b);
    s.d_rad_ = rad;
    s.den_ = narrow(d);
    return s;
}

QuadraticSurd QuadraticSurd::integer(std::int64_t v) { return make(v, 0, 0, 1); }

QuadraticSurd QuadraticSurd::rational(std::int64_t num, std::int64_t den) { return make(num, 0, 0, den); }

QuadraticSurd QuadraticSurd::sqrt_of(std::int64_t num, std::int64_t den) {
    if (num < 0 || den <= 0) throw std::domain_error("sqrt_of needs num >= 0 and den > 0");
    // sqrt(num/den) = sqrt(num * den) / den
    return make(0, 1, checked_mul(num, den), den);
}

std::optional<std::int64_t> QuadraticSurd::as_integer() const noexcept {
    if (!is_integer()) return std::nullopt;
    return a_;
}

int QuadraticSurd::sign() const {
    if (b_ == 0) return sign_of(a_);
    const int sa = sign_of(a_);
    const int sb = sign_of(b_);
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // a and b*sqrt(D) have opposite signs: compare a^2 with b^2 D.
    const i128 lhs = static_cast<i128>(a_) * a_;
    const i128 rhs = static_cast<i128>(b_) * b_ * d_rad_;
    if (lhs == rhs) return 0;  // impossible for squarefree D > 1, kept for completeness
    return lhs > rhs ? sa : sb;
}

double QuadraticSurd::to_double() const noexcept {
    return (static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(static_cast<double>(d_rad_))) /
           static_cast<double>(den_);
}

std::string QuadraticSurd::to_string() const {
    std::string num;
    if (b_ == 0) {
        num = std::to_string(a_);
    } else {
        const std::string rad = "sqrt(" + std::to_string(d_rad_) + ")";
        const std::string term = (b_ == 1 ? "" : b_ == -1 ? "-" : std::to_string(b_) + "*") + rad;
        if (a_ == 0) {
            num = term;
        } else {
            num = std::to_string(a_) + (b_ > 0 ? " + " : " - ") +
                  (std::abs(b_) == 1 ? "" : std::to_string(std::abs(b_)) + "*") + rad;
        }
    }
    if (den_ == 1) return num;
    const bool compound = b_ != 0 && a_ != 0;
    return (compound ? "(" + num + ")" : num) + "/" + std::to_string(den_);
}

static std::int64_t common_radicand(const QuadraticSurd& x, const QuadraticSurd& y) {
    if (x.radicand() == 0) return y.radicand();
    if (y.radicand() == 0 || y.radicand() == x.radicand()) return x.radicand();
    throw std::domain_error("surds with different radicands (" + std::to_string(x.radicand()) + ", " +
                            std::to_string(y.radicand()) + ") are not combinable");
}

QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
    const std::int64_t rad = common_radicand(x, y);
    const i128 a = static_cast<i128>(x.a_) * y.den_ + static_cast<i128>(y.a_) * x.den_;
    const i128 b = static_cast<i128>(x.b_) * y.den_ + static_cast<i128>(y.b_) * x.den_;
    const i128 d = static_cast<i128>(x.den_) * y.den_;
    const i128 g = gcd128(gcd128(a, b), d);
    return QuadraticSurd::make(narrow(a / g), narrow(b / g), rad, narrow(d / g));
}

QuadraticSurd QuadraticSurd::operator-() const { return make(-a_, -b_, d_rad_, den_); }

QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) { return x + (-y); }

QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
    const std::int64_t rad = common_radicand(x, y);
    const i128 a = static_cast<i128>(x.a_) * y.a_ + static_cast<i128>(x.b_) * y.b_ * rad;
    const i128 b = static_cast<i128>(x.a_) * y.b_ + static_cast<i128>(x.b_) * y.a_;
    const i128 d = static_cast<i128>(x.den_) * y.den_;
    const i128 g = gcd128(gcd128(a, b), d);
    return QuadraticSurd::make(narrow(a / g), narrow(b / g), rad, narrow(d / g));
}

QuadraticSurd operator/(const QuadraticSurd& x, std::int64_t k) {
    if (k == 0) throw std::domain_error("division by zero");
    return QuadraticSurd::make(x.a_, x.b_, x.d_rad_, checked_mul(x.den_, k));
}

QuadraticSurd QuadraticSurd::pow(unsigned e) const {
    QuadraticSurd r = integer(1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::strong_ordering operator<=>(const QuadraticSurd& x, const QuadraticSurd& y) {
    int s = 0;
    if (x.radicand() != 0 && y.radicand() != 0 && x.radicand() != y.radicand()) {
        // (a1 + b1 sqrt(D1))/d1 vs (a2 + b2 sqrt(D2))/d2 with only pure radicals supported.
        if (x.rational_part() != 0 || y.rational_part() != 0)
            throw std::domain_error("comparison of mixed surds with different radicands");
        // b1 sqrt(D1) d2 vs b2 sqrt(D2) d1
        const i128 l = static_cast<i128>(x.coeff()) * y.denom();
        const i128 r = static_cast<i128>(y.coeff()) * x.denom();
        const int sl = sign_of(l);
        const int sr = sign_of(r);
        if (sl != sr) {
            s = sl > sr ? 1 : -1;
        } else {
            const i128 lsq = l * l * x.radicand();
            const i128 rsq = r * r * y.radicand();
            s = lsq == rsq ? 0 : ((lsq > rsq) == (sl > 0) ? 1 : -1);
        }
    } else {
        s = (x - y).sign();
    }
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace rademacher
