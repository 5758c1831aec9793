#pragma once

#include "orbicalc/rational.hpp"

#include <map>
#include <sstream>
#include <utility>
#include <vector>

namespace orb {

/*
 * Polynomial in two formal variables u, v with rational exponents and
 * rational coefficients. E-functions of quotient sectors carry age shifts,
 * so exponents are genuinely rational, not just integral. Zero coefficients
 * are never stored; the term map is the canonical form.
 */
class EPolynomial {
  public:
    using Exp = std::pair<Rational, Rational>;

    EPolynomial() = default;

    static EPolynomial constant(const Rational& c) {
        EPolynomial p;
        if (c != 0) p.terms_[{Rational(0), Rational(0)}] = c;
        return p;
    }
    static EPolynomial one() { return constant(Rational(1)); }

    // (uv)^e
    static EPolynomial uv_pow(const Rational& e) {
        EPolynomial p;
        p.terms_[{e, e}] = 1;
        return p;
    }

    // coarse E-polynomial of projective d-space: 1 + uv + ... + (uv)^d
    static EPolynomial projective_space(long d) {
        EPolynomial p;
        for (long i = 0; i <= d; ++i) p.terms_[{Rational(i), Rational(i)}] = 1;
        return p;
    }

    // coarse E-polynomial of affine d-space
    static EPolynomial affine_space(long d) { return uv_pow(Rational(d)); }

    const std::map<Exp, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Rational& p, const Rational& q) const {
        auto it = terms_.find({p, q});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend EPolynomial operator+(const EPolynomial& a, const EPolynomial& b) {
        EPolynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend EPolynomial operator-(const EPolynomial& a, const EPolynomial& b) {
        EPolynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend EPolynomial operator*(const EPolynomial& a, const EPolynomial& b) {
        EPolynomial r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
        return r;
    }
    friend EPolynomial operator*(const Rational& s, const EPolynomial& a) {
        EPolynomial r;
        if (s == 0) return r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = s * c;
        return r;
    }
    EPolynomial& operator+=(const EPolynomial& o) { return *this = *this + o; }

    friend bool operator==(const EPolynomial& a, const EPolynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const EPolynomial& a, const EPolynomial& b) {
        return !(a == b);
    }

    // evaluation at u = v = 1, the Euler-characteristic specialization
    Rational eval_at_one() const {
        Rational sum(0);
        for (const auto& [e, c] : terms_) sum += c;
        return sum;
    }

    // (uv)^dim * E(1/u, 1/v): exponent map (p, q) -> (dim - p, dim - q)
    EPolynomial reciprocal_shift(const Rational& dim) const {
        EPolynomial r;
        for (const auto& [e, c] : terms_)
            r.terms_[{dim - e.first, dim - e.second}] = c;
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational coef = c;
            if (first) {
                if (coef < 0) { os << "-"; coef = -coef; }
            } else {
                os << (coef < 0 ? " - " : " + ");
                if (coef < 0) coef = -coef;
            }
            first = false;
            bool con = (e.first == 0 && e.second == 0);
            if (con || coef != 1) os << rat_str(coef);
            if (!con) {
                if (coef != 1) os << "*";
                if (e.first == e.second) {
                    os << "(uv)";
                    if (e.first != 1) os << "^" << rat_str(e.first);
                } else {
                    os << "u^" << rat_str(e.first) << "*v^" << rat_str(e.second);
                }
            }
        }
        return os.str();
    }

  private:
    void add_term(const Exp& e, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    std::map<Exp, Rational> terms_;
};

// Chen-Ruan Hodge numbers. Sector ages shift the grading; when a shift is
// fractional the entry is kept apart from the integral table and the model
// cannot be Gorenstein.
struct HodgeTable {
    std::map<EPolynomial::Exp, long> integral;
    std::map<EPolynomial::Exp, long> fractional;

    bool pure_integral() const { return fractional.empty(); }

    long h(long p, long q) const {
        auto it = integral.find({Rational(p), Rational(q)});
        return it == integral.end() ? 0 : it->second;
    }
};

}  // namespace orb
