#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hypermatch {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Thrown by Rat64 when a reduced value no longer fits; callers rerun the
// affected computation over BigRat.
struct RatOverflow : std::overflow_error {
    RatOverflow() : std::overflow_error("Rat64 overflow") {}
};

namespace detail {
using i128 = __int128;
using u128 = unsigned __int128;

inline u128 abs128(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

inline u128 gcd128(u128 a, u128 b) {
    while (b) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}
}  // namespace detail

// Exact rational with int64 storage and int128 intermediates. Values are kept
// with positive denominator; reduction is lazy (only when components leave the
// 32-bit range), so comparisons cross-multiply.
class Rat64 {
public:
    Rat64() = default;
    Rat64(int64_t v) : num_(v), den_(1) {}  // NOLINT: implicit by design
    Rat64(int64_t n, int64_t d) { *this = make(n, d); }

    static Rat64 make(detail::i128 n, detail::i128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        constexpr detail::i128 kLazy = detail::i128{1} << 31;
        if (n > -kLazy && n < kLazy && d < kLazy) return raw(int64_t(n), int64_t(d));
        detail::u128 g = detail::gcd128(detail::abs128(n), detail::u128(d));
        if (g > 1) {
            n /= detail::i128(g);
            d /= detail::i128(g);
        }
        constexpr detail::i128 kMax = detail::i128{1} << 62;
        if (n <= -kMax || n >= kMax || d >= kMax) throw RatOverflow{};
        return raw(int64_t(n), int64_t(d));
    }

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

    friend Rat64 operator+(const Rat64& a, const Rat64& b) {
        return make(detail::i128(a.num_) * b.den_ + detail::i128(b.num_) * a.den_,
                    detail::i128(a.den_) * b.den_);
    }
    friend Rat64 operator-(const Rat64& a, const Rat64& b) {
        return make(detail::i128(a.num_) * b.den_ - detail::i128(b.num_) * a.den_,
                    detail::i128(a.den_) * b.den_);
    }
    friend Rat64 operator*(const Rat64& a, const Rat64& b) {
        return make(detail::i128(a.num_) * b.num_, detail::i128(a.den_) * b.den_);
    }
    friend Rat64 operator/(const Rat64& a, const Rat64& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return make(detail::i128(a.num_) * b.den_, detail::i128(a.den_) * b.num_);
    }
    Rat64 operator-() const { return raw(-num_, den_); }
    Rat64& operator+=(const Rat64& o) { return *this = *this + o; }
    Rat64& operator-=(const Rat64& o) { return *this = *this - o; }
    Rat64& operator*=(const Rat64& o) { return *this = *this * o; }
    Rat64& operator/=(const Rat64& o) { return *this = *this / o; }

    friend bool operator==(const Rat64& a, const Rat64& b) {
        return detail::i128(a.num_) * b.den_ == detail::i128(b.num_) * a.den_;
    }
    friend bool operator!=(const Rat64& a, const Rat64& b) { return !(a == b); }
    friend bool operator<(const Rat64& a, const Rat64& b) {
        return detail::i128(a.num_) * b.den_ < detail::i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rat64& a, const Rat64& b) { return b < a; }
    friend bool operator<=(const Rat64& a, const Rat64& b) { return !(b < a); }
    friend bool operator>=(const Rat64& a, const Rat64& b) { return !(a < b); }

    BigRat to_bigrat() const { return BigRat(BigInt(num_), BigInt(den_)); }

private:
    static Rat64 raw(int64_t n, int64_t d) {
        Rat64 r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }
    int64_t num_ = 0;
    int64_t den_ = 1;
};

// "p/q" in lowest terms, "p" when the denominator is 1.
std::string rat_to_string(const BigRat& r);
// Accepts "p", "p/q", with optional sign.
BigRat rat_from_string(const std::string& s);

inline double rat_to_double(const BigRat& r) {
    return boost::multiprecision::numerator(r).convert_to<double>() /
           boost::multiprecision::denominator(r).convert_to<double>();
}

}  // namespace hypermatch
