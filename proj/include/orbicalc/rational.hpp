#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace orb {

// Exact rational arithmetic on arbitrary-precision integers. Coefficient
// growth in Gaussian elimination over Q(zeta_N) is unbounded, so nothing in
// the linear-algebra path may truncate.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A requested computation whose hypotheses the model does not satisfy
// ("not applicable", as opposed to a failed check).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An invariant the engine guarantees internally was violated; signals a bug,
// never bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

inline std::string rat_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline BigInt rat_floor(const Rational& r) {
    return floor_div(numerator(r), denominator(r));
}

// Fractional part in [0, 1).
inline Rational rat_frac(const Rational& r) { return r - Rational(rat_floor(r)); }

inline Rational rat_pow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw InternalError("rat_pow: 0 to a negative power");
        return 1 / rat_pow(base, -e);
    }
    Rational acc(1), b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    BigInt num(1), den(1);
    for (long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

// Parses "a" or "a/b" with optional sign, arbitrary precision.
inline Rational parse_rational(const std::string& s) {
    auto bad = [&] { throw InputError("malformed rational '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) bad();
        return Rational(num, den);
    } catch (const std::exception&) {
        bad();
    }
    return Rational(0);  // unreachable
}

/*
 * Fraction on int64 with overflow detection. The constructible-function
 * calculus runs millions of pushforward evaluations in the exhaustive
 * verification sweep; all of its values are bounded by |G| * |S| * max|phi|,
 * far inside 64 bits, and the big-rational type costs two orders of
 * magnitude more per operation. Every product and sum is formed in 128-bit
 * and checked before narrowing, so an overflow throws instead of wrapping:
 * results are exact or the computation aborts.
 */
class Frac64 {
  public:
    Frac64() : num_(0), den_(1) {}
    Frac64(std::int64_t n) : num_(n), den_(1) {}
    Frac64(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
        if (den_ == 0) throw InternalError("Frac64: zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend Frac64 operator+(const Frac64& a, const Frac64& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                    i128(a.den_) * b.den_);
    }
    friend Frac64 operator-(const Frac64& a, const Frac64& b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                    i128(a.den_) * b.den_);
    }
    friend Frac64 operator*(const Frac64& a, const Frac64& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Frac64 operator/(const Frac64& a, const Frac64& b) {
        if (b.num_ == 0) throw InternalError("Frac64: division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Frac64 operator-() const { return Frac64(-num_, den_); }
    Frac64& operator+=(const Frac64& o) { return *this = *this + o; }
    Frac64& operator-=(const Frac64& o) { return *this = *this - o; }
    Frac64& operator*=(const Frac64& o) { return *this = *this * o; }
    Frac64& operator/=(const Frac64& o) { return *this = *this / o; }

    friend bool operator==(const Frac64& a, const Frac64& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Frac64& a, const Frac64& b) { return !(a == b); }
    friend bool operator<(const Frac64& a, const Frac64& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }

    Rational to_rational() const { return Rational(num_, den_); }
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    using i128 = __int128;

    static Frac64 make(i128 n, i128 d) {
        Frac64 f;
        i128 g = gcd128(n < 0 ? -n : n, d < 0 ? -d : d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw InternalError("Frac64 overflow");
        f.num_ = static_cast<std::int64_t>(n);
        f.den_ = static_cast<std::int64_t>(d);
        return f;
    }
    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }
    void normalize() {
        auto r = make(num_, den_);
        num_ = r.num_;
        den_ = r.den_;
    }

    std::int64_t num_;
    std::int64_t den_;
};

inline std::string rat_str(const Frac64& r) { return r.str(); }

inline long gcd_long(long a, long b) { return std::gcd(a, b); }

inline long euler_phi(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

}  // namespace orb
