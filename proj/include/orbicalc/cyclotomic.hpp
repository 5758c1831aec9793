#pragma once

#include "orbicalc/rational.hpp"

#include <cctype>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

namespace orb {

namespace detail {

// x^n - 1 divided exactly by the cyclotomic polynomials of the proper
// divisors of n; integer arithmetic throughout.
inline std::vector<BigInt> cyclotomic_poly(long n) {
    static std::map<long, std::vector<BigInt>> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);

    auto compute = [](auto&& self, long m) -> const std::vector<BigInt>& {
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
        std::vector<BigInt> p(m + 1);
        p[0] = -1;
        p[m] = 1;
        for (long d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            const std::vector<BigInt>& q = self(self, d);
            // exact division p /= q, q monic
            std::vector<BigInt> quot(p.size() - q.size() + 1);
            std::vector<BigInt> rem = p;
            for (long i = static_cast<long>(quot.size()) - 1; i >= 0; --i) {
                BigInt c = rem[i + q.size() - 1];
                quot[i] = c;
                if (c == 0) continue;
                for (std::size_t j = 0; j < q.size(); ++j)
                    rem[i + j] -= c * q[j];
            }
            p = std::move(quot);
        }
        return cache.emplace(m, std::move(p)).first->second;
    };
    return compute(compute, n);
}

}  // namespace detail

/*
 * Precomputed data for Q(zeta_N). Elements are represented canonically in
 * the power basis 1, z, ..., z^{phi(N)-1} modulo Phi_N, so equality is a
 * coefficient-vector compare; that is the hot operation in group closure.
 *
 * The roots of unity contained in Q(zeta_N) form the cyclic group of order
 * torsion_order = lcm(2, N); omega below generates it. Eigenvalues of
 * finite-order matrices are taken from that group.
 */
struct CycField {
    long n = 1;     // conductor
    long phi = 1;   // degree over Q
    std::vector<BigInt> cyclo;                       // Phi_N, monic, length phi+1
    std::vector<std::vector<Rational>> pow_reduce;   // z^{phi+j} reduced, j in [0, phi)
    std::vector<std::vector<Rational>> zeta_pow;     // z^k, k in [0, n)
    long torsion_order = 2;                          // lcm(2, n)
    std::vector<std::vector<Rational>> omega_pow;    // omega^k, k in [0, torsion_order)
};

inline const CycField& cyc_field(long n) {
    if (n < 1) throw InputError("conductor must be positive");
    static std::map<long, std::unique_ptr<CycField>> registry;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto it = registry.find(n);
    if (it != registry.end()) return *it->second;

    auto f = std::make_unique<CycField>();
    f->n = n;
    f->phi = euler_phi(n);
    f->cyclo = detail::cyclotomic_poly(n);

    const long phi = f->phi;
    // x^phi mod Phi = -(lower coefficients); successive powers by shifting.
    std::vector<Rational> cur(phi);
    for (long i = 0; i < phi; ++i) cur[i] = -Rational(f->cyclo[i]);
    f->pow_reduce.push_back(cur);
    for (long j = 1; j < phi; ++j) {
        std::vector<Rational> nxt(phi);
        Rational top = cur[phi - 1];
        for (long i = phi - 1; i >= 1; --i) nxt[i] = cur[i - 1];
        nxt[0] = 0;
        if (top != 0)
            for (long i = 0; i < phi; ++i) nxt[i] += top * f->pow_reduce[0][i];
        f->pow_reduce.push_back(nxt);
        cur = std::move(nxt);
    }

    std::vector<Rational> z(phi);
    z[0] = 1;
    f->zeta_pow.push_back(z);
    for (long k = 1; k < n; ++k) {
        std::vector<Rational> nxt(phi);
        Rational top = z[phi - 1];
        for (long i = phi - 1; i >= 1; --i) nxt[i] = z[i - 1];
        nxt[0] = 0;
        if (phi == 1) {
            // degree-1 field: multiplication by z is multiplication by the
            // rational root of Phi_N (1 for N=1, -1 for N=2)
            nxt[0] = z[0] * f->pow_reduce[0][0];
        } else if (top != 0) {
            for (long i = 0; i < phi; ++i) nxt[i] += top * f->pow_reduce[0][i];
        }
        z = std::move(nxt);
        f->zeta_pow.push_back(z);
    }

    f->torsion_order = (n % 2 == 0) ? n : 2 * n;
    if (n % 2 == 0) {
        f->omega_pow = f->zeta_pow;
    } else {
        // omega = -z^{(n+1)/2} squares to z and has order 2n
        std::vector<Rational> omega = f->zeta_pow[(n + 1) / 2 % n];
        for (auto& c : omega) c = -c;
        std::vector<Rational> acc(phi);
        acc[0] = 1;
        f->omega_pow.push_back(acc);
        for (long k = 1; k < f->torsion_order; ++k) {
            // acc *= omega, sparse convolution then reduction
            std::vector<Rational> prod(2 * phi - 1);
            for (long i = 0; i < phi; ++i) {
                if (acc[i] == 0) continue;
                for (long j = 0; j < phi; ++j) {
                    if (omega[j] == 0) continue;
                    prod[i + j] += acc[i] * omega[j];
                }
            }
            std::vector<Rational> red(prod.begin(), prod.begin() + phi);
            for (long j = phi; j < 2 * phi - 1; ++j) {
                if (prod[j] == 0) continue;
                for (long i = 0; i < phi; ++i)
                    red[i] += prod[j] * f->pow_reduce[j - phi][i];
            }
            f->omega_pow.push_back(red);
            acc = std::move(red);
        }
    }

    const CycField& ref = *f;
    registry.emplace(n, std::move(f));
    return ref;
}

// Exact element of Q(zeta_N) in the canonical power basis.
class Cyclotomic {
  public:
    Cyclotomic() : field_(&cyc_field(1)), c_(1) {}
    explicit Cyclotomic(long conductor)
        : field_(&cyc_field(conductor)), c_(field_->phi) {}
    Cyclotomic(long conductor, const Rational& value)
        : field_(&cyc_field(conductor)), c_(field_->phi) {
        c_[0] = value;
    }

    static Cyclotomic zero(long n) { return Cyclotomic(n); }
    static Cyclotomic one(long n) { return Cyclotomic(n, 1); }

    // zeta_N^k
    static Cyclotomic zeta(long n, long k = 1) {
        Cyclotomic r(n);
        k %= n;
        if (k < 0) k += n;
        r.c_ = r.field_->zeta_pow[k];
        return r;
    }

    // zeta_m^k for any m dividing lcm(2, N); the eigenvalue substrate.
    static Cyclotomic root_of_unity(long n, long m, long k) {
        const CycField& f = cyc_field(n);
        if (m <= 0 || f.torsion_order % m != 0)
            throw InputError("no primitive root of order " + std::to_string(m) +
                             " in Q(zeta_" + std::to_string(n) + ")");
        long step = f.torsion_order / m;
        long e = (k % m + m) % m;
        Cyclotomic r(n);
        r.c_ = f.omega_pow[(e * step) % f.torsion_order];
        return r;
    }

    long conductor() const { return field_->n; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const CycField& field() const { return *field_; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }
    bool is_one() const {
        if (c_[0] != 1) return false;
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    const Rational& rational_part() const { return c_[0]; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.field_->n == b.field_->n && a.c_ == b.c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) {
        return !(a == b);
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        a.check_same_field(b);
        Cyclotomic r = a;
        for (long i = 0; i < a.field_->phi; ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        a.check_same_field(b);
        Cyclotomic r = a;
        for (long i = 0; i < a.field_->phi; ++i) r.c_[i] -= b.c_[i];
        return r;
    }
    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        a.check_same_field(b);
        const long phi = a.field_->phi;
        Cyclotomic r(a.field_->n);
        if (phi == 1) {
            r.c_[0] = a.c_[0] * b.c_[0];
            return r;
        }
        // sparse convolution: matrix entries are usually 0 or single powers
        std::vector<Rational> prod(2 * phi - 1);
        bool any = false;
        for (long i = 0; i < phi; ++i) {
            if (a.c_[i] == 0) continue;
            for (long j = 0; j < phi; ++j) {
                if (b.c_[j] == 0) continue;
                prod[i + j] += a.c_[i] * b.c_[j];
                any = true;
            }
        }
        if (!any) return r;
        for (long i = 0; i < phi; ++i) r.c_[i] = std::move(prod[i]);
        for (long j = phi; j < 2 * phi - 1; ++j) {
            if (prod[j] == 0) continue;
            const auto& row = a.field_->pow_reduce[j - phi];
            for (long i = 0; i < phi; ++i)
                if (row[i] != 0) r.c_[i] += prod[j] * row[i];
        }
        return r;
    }

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    friend Cyclotomic operator*(const Rational& s, const Cyclotomic& a) {
        Cyclotomic r = a;
        for (auto& v : r.c_) v *= s;
        return r;
    }

    // Extended Euclid against Phi_N over Q; Phi_N is irreducible so any
    // nonzero element is a unit.
    Cyclotomic inverse() const {
        if (is_zero()) throw InputError("division by zero in Q(zeta_N)");
        const long phi = field_->phi;
        if (phi == 1) {
            Cyclotomic r(field_->n);
            r.c_[0] = 1 / c_[0];
            return r;
        }
        using Poly = std::vector<Rational>;
        auto deg = [](const Poly& p) {
            for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
                if (p[i] != 0) return i;
            return -1L;
        };
        Poly r0(field_->cyclo.size());
        for (std::size_t i = 0; i < r0.size(); ++i) r0[i] = Rational(field_->cyclo[i]);
        Poly r1(c_.begin(), c_.end());
        Poly t0(1, Rational(0)), t1(1, Rational(1));
        while (deg(r1) > 0) {
            long d0 = deg(r0), d1 = deg(r1);
            Poly q(d0 - d1 + 1);
            Poly rem = r0;
            for (long i = d0 - d1; i >= 0; --i) {
                Rational coef = rem[i + d1] / r1[d1];
                q[i] = coef;
                if (coef == 0) continue;
                for (long j = 0; j <= d1; ++j) rem[i + j] -= coef * r1[j];
            }
            Poly tn(std::max(t0.size(), q.size() + t1.size()));
            for (std::size_t i = 0; i < t0.size(); ++i) tn[i] = t0[i];
            for (std::size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                for (std::size_t j = 0; j < t1.size(); ++j)
                    tn[i + j] -= q[i] * t1[j];
            }
            r0 = std::move(r1);
            r1 = std::move(rem);
            t0 = std::move(t1);
            t1 = std::move(tn);
        }
        long d = deg(r1);
        if (d != 0) throw InternalError("cyclotomic gcd is not a unit");
        Cyclotomic out(field_->n);
        // t1 / r1[0], reduced; deg t1 < phi by the invariant of the loop
        for (std::size_t i = 0; i < t1.size() && i < static_cast<std::size_t>(phi); ++i)
            out.c_[i] = t1[i] / r1[0];
        return out;
    }

    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
        return a * b.inverse();
    }

    // k in [0, N) with *this == zeta_N^k, if such k exists.
    std::optional<long> root_of_unity_log() const {
        for (long k = 0; k < field_->n; ++k)
            if (c_ == field_->zeta_pow[k]) return k;
        return std::nullopt;
    }

    // exponent with respect to the full torsion group (order lcm(2, N))
    std::optional<long> torsion_log() const {
        for (long k = 0; k < field_->torsion_order; ++k)
            if (c_ == field_->omega_pow[k]) return k;
        return std::nullopt;
    }

    // floating-point image under zeta_N -> exp(2 pi i / N); reporting only
    std::complex<double> embed() const {
        std::complex<double> acc(0.0, 0.0);
        const double tau = 6.283185307179586476925286766559;
        for (std::size_t j = 0; j < c_.size(); ++j) {
            if (c_[j] == 0) continue;
            double v = static_cast<double>(numerator(c_[j])) /
                       static_cast<double>(denominator(c_[j]));
            acc += v * std::polar(1.0, tau * static_cast<double>(j) / field_->n);
        }
        return acc;
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t j = 0; j < c_.size(); ++j) {
            if (c_[j] == 0) continue;
            Rational v = c_[j];
            if (first) {
                if (v < 0) { os << "-"; v = -v; }
            } else {
                os << (v < 0 ? " - " : " + ");
                if (v < 0) v = -v;
            }
            first = false;
            if (j == 0) {
                os << rat_str(v);
            } else {
                if (v != 1) os << rat_str(v) << "*";
                os << "z";
                if (j > 1) os << "^" << j;
            }
        }
        if (first) os << "0";
        return os.str();
    }

    // total order on elements of one field; used for deterministic indexing
    friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.field_->n != b.field_->n) return a.field_->n < b.field_->n;
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        }
        return false;
    }

  private:
    void check_same_field(const Cyclotomic& o) const {
        if (field_->n != o.field_->n)
            throw InputError("conductor mismatch: " + std::to_string(field_->n) +
                             " vs " + std::to_string(o.field_->n));
    }

    const CycField* field_;
    std::vector<Rational> c_;
};

/*
 * Literal grammar for model files:
 *   rational ::= "a" | "a/b"
 *   atom     ::= rational | "z" | "z^k"
 *   term     ::= [rational "*"] atom
 *   expr     ::= term (("+"|"-") term)*
 * "z" denotes zeta_N for the declared root_order N. A leading sign is
 * accepted as a convenience.
 */
inline Cyclotomic parse_cyclotomic(const std::string& text, long conductor) {
    struct Scanner {
        const std::string& s;
        std::size_t i = 0;
        void skip_ws() {
            while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        }
        bool eof() {
            skip_ws();
            return i >= s.size();
        }
        char peek() {
            skip_ws();
            return s[i];
        }
    } sc{text};

    auto fail = [&](const std::string& why) {
        throw InputError("malformed cyclotomic literal '" + text + "': " + why);
    };

    auto scan_integer = [&]() -> std::string {
        sc.skip_ws();
        std::size_t start = sc.i;
        while (sc.i < sc.s.size() && std::isdigit(static_cast<unsigned char>(sc.s[sc.i])))
            ++sc.i;
        if (sc.i == start) fail("expected digits");
        return sc.s.substr(start, sc.i - start);
    };
    auto scan_rational = [&]() -> Rational {
        std::string num = scan_integer();
        if (!sc.eof() && sc.peek() == '/') {
            ++sc.i;
            std::string den = scan_integer();
            if (BigInt(den) == 0) fail("zero denominator");
            return Rational(BigInt(num), BigInt(den));
        }
        return Rational(BigInt(num));
    };

    Cyclotomic acc(conductor);
    bool first = true;
    while (true) {
        if (sc.eof()) {
            if (first) fail("empty expression");
            break;
        }
        int sign = 1;
        char c = sc.peek();
        if (c == '+' || c == '-') {
            sign = (c == '-') ? -1 : 1;
            ++sc.i;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        if (sc.eof()) fail("dangling sign");

        Rational coef(1);
        bool have_coef = false;
        c = sc.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coef = scan_rational();
            have_coef = true;
            if (!sc.eof() && sc.peek() == '*') {
                ++sc.i;
                if (sc.eof() || sc.peek() != 'z') fail("expected 'z' after '*'");
            }
        }
        Cyclotomic term(conductor);
        if (!sc.eof() && sc.peek() == 'z') {
            ++sc.i;
            long k = 1;
            if (!sc.eof() && sc.peek() == '^') {
                ++sc.i;
                if (sc.eof() || !std::isdigit(static_cast<unsigned char>(sc.s[sc.i])))
                    fail("expected exponent after '^'");
                try {
                    k = std::stol(scan_integer());
                } catch (const std::out_of_range&) {
                    fail("exponent out of range");
                }
            }
            term = coef * Cyclotomic::zeta(conductor, k);
        } else if (have_coef) {
            term = Cyclotomic(conductor, coef);
        } else {
            fail("expected rational or 'z'");
        }
        if (sign < 0) term = -term;
        acc += term;
        first = false;
    }
    return acc;
}

}  // namespace orb
