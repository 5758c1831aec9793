#pragma once

#include "orbicalc/sectors.hpp"

#include <string>
#include <vector>

namespace orb {

// E_orb = sum over inertia sectors of (uv)^age * E(component); the
// age-shifted grading of Chen-Ruan cohomology in generating-function form.
inline EPolynomial orbifold_E(const QuotientModel& model) {
    EPolynomial total;
    for (const Sector& s : inertia_sectors(model))
        total += EPolynomial::uv_pow(s.component.age) * s.e_poly;
    return total;
}

// Chen-Ruan Hodge numbers h^{p,q} with p = q = age + i per sector cell.
// Fractional gradings are tracked separately; their presence is exactly the
// failure of the Gorenstein condition.
inline HodgeTable cr_hodge(const QuotientModel& model) {
    if (model.kind() != ModelKind::Projective)
        throw PreconditionError("cr_hodge requires a projective model");
    HodgeTable t;
    for (const Sector& s : inertia_sectors(model)) {
        for (long i = 0; i <= s.component.dim; ++i) {
            Rational p = s.component.age + Rational(i);
            auto& table = is_integer(p) ? t.integral : t.fractional;
            table[{p, p}] += 1;
        }
    }
    return t;
}

struct StringyEuler {
    Rational sector_route;   // Gauss-Bonnet over double-inertia sectors
    Rational pair_route;     // brute force over all ordered commuting pairs
    Rational epoly_route;    // E_orb at u = v = 1
    Rational value;
};

namespace detail {

// chi of Fix(g) n Fix(h) straight from the component list
inline Rational pair_chi(const QuotientModel& model, int g, int h) {
    Rational chi(0);
    for (const auto& c : model.double_fixed_cached(g, h))
        chi += model.kind() == ModelKind::Affine ? Rational(1) : Rational(c.dim + 1);
    return chi;
}

}  // namespace detail

/*
 * The stringy Euler characteristic by three routes that must agree:
 *   A. sum over double-inertia sectors of chi(component)/stabilizer order,
 *      the sector-wise Gauss-Bonnet evaluation over II[V/G];
 *   B. (1/|G|) * sum over all ordered commuting pairs of chi(Fix(g) n Fix(h)),
 *      which never touches the class machinery;
 *   C. E_orb(1, 1).
 * Disagreement is an engine bug, not a property of the input.
 */
inline StringyEuler stringy_euler(const QuotientModel& model) {
    StringyEuler r;
    r.sector_route = 0;
    for (const Sector& s : double_inertia_sectors(model))
        r.sector_route += s.euler / Rational(s.stabilizer_order);

    const auto& g = model.group();
    Rational pair_sum(0);
    for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b)
            if (g.commutes(a, b)) pair_sum += detail::pair_chi(model, a, b);
    r.pair_route = pair_sum / Rational(g.size());

    r.epoly_route = orbifold_E(model).eval_at_one();

    if (r.sector_route != r.pair_route || r.pair_route != r.epoly_route)
        throw InternalError("stringy Euler routes disagree: sectors=" +
                            rat_str(r.sector_route) + " pairs=" + rat_str(r.pair_route) +
                            " epoly=" + rat_str(r.epoly_route));
    r.value = r.sector_route;
    return r;
}

struct CoarseEuler {
    Rational sector_route;    // sum over inertia sectors of chi/stabilizer
    Rational element_route;   // (1/|G|) * sum over group elements of chi(Fix g)
    Rational value;
};

// chi of the coarse space X, the degree shadow of the CSM comparison.
inline CoarseEuler coarse_euler(const QuotientModel& model) {
    CoarseEuler r;
    r.sector_route = 0;
    for (const Sector& s : inertia_sectors(model))
        r.sector_route += s.euler / Rational(s.stabilizer_order);

    const auto& g = model.group();
    Rational sum(0);
    for (int e = 0; e < g.size(); ++e) {
        if (model.kind() == ModelKind::Affine) {
            sum += 1;  // a linear subspace is contractible
        } else {
            for (const auto& entry : model.eigen(e).entries)
                sum += Rational(entry.multiplicity);  // chi of a disjoint union of P^d
        }
    }
    r.element_route = sum / Rational(g.size());

    if (r.sector_route != r.element_route)
        throw InternalError("coarse Euler routes disagree: sectors=" +
                            rat_str(r.sector_route) +
                            " elements=" + rat_str(r.element_route));
    r.value = r.sector_route;
    return r;
}

// chi(P^d, Omega^p) for a sector whose component is projective d-space with
// trivial cohomology action: (-1)^p inside 0 <= p <= d, zero outside.
inline long chi_p(const Sector& s, long p) {
    if (p < 0 || p > s.component.dim) return 0;
    return (p % 2 == 0) ? 1 : -1;
}

namespace detail {

inline void require_trace_hypotheses(const QuotientModel& model, const char* what) {
    if (model.kind() != ModelKind::Projective)
        throw PreconditionError(std::string(what) +
                                " requires a projective model (affine quotients are "
                                "non-compact, the integrals are undefined)");
    auto gor = model.gorenstein_check();
    if (!gor.ok)
        throw PreconditionError(std::string(what) + " requires a Gorenstein model; " +
                                gor.certificate);
    auto keq = model.k_equivalence_check();
    if (!keq.ok)
        throw PreconditionError(std::string(what) +
                                " requires K-equivalence of stack and coarse space; " +
                                keq.certificate);
}

}  // namespace detail

/*
 * The stringy Chern number c_st^{1,n-1} as the double-inertia integral of
 * q^* c_1 times c_{top-1}. Per sector [P^d/H] with d >= 1 the integrand is
 * (n h) * binom(d+1, d-1) h^{d-1} where h is the hyperplane class of the
 * component and n = dim V; the atlas normalization contributes 1/|H|.
 * Zero-dimensional components carry no degree-(top-1) class and contribute 0.
 */
inline Rational c1_ctop1(const QuotientModel& model) {
    detail::require_trace_hypotheses(model, "c1_ctop1");
    Rational total(0);
    const Rational n(model.ambient_dim());
    for (const Sector& s : double_inertia_sectors(model)) {
        long d = s.component.dim;
        if (d < 1) continue;
        total += n * Rational(binomial(d + 1, d - 1)) / Rational(s.stabilizer_order);
    }
    return total;
}

struct IdentityCheck {
    Rational lhs;
    Rational rhs;
    bool equal = false;
};

/*
 * The trace formula: sum over inertia sectors i and p >= 0 of
 *   (-1)^p (p + age_i - dim X / 2)^2 chi(X_i, Omega^p)
 * against (1/12) * (dim X * e_str + 2 * c_st^{1,n-1}).
 */
inline IdentityCheck trace_check(const QuotientModel& model) {
    detail::require_trace_hypotheses(model, "trace_check");
    IdentityCheck r;
    const Rational half_dim = Rational(model.stack_dim()) / 2;
    r.lhs = 0;
    for (const Sector& s : inertia_sectors(model)) {
        for (long p = 0; p <= s.component.dim; ++p) {
            Rational shift = Rational(p) + s.component.age - half_dim;
            Rational term = shift * shift * Rational(chi_p(s, p));
            r.lhs += (p % 2 == 0) ? term : -term;
        }
    }
    r.rhs = (Rational(model.stack_dim()) * stringy_euler(model).value +
             2 * c1_ctop1(model)) /
            12;
    r.equal = (r.lhs == r.rhs);
    return r;
}

// Same left side against dim X/12 * e_str + 1/6 * c_st^{1,n-1}; identical to
// the trace right side by construction, asserted as an engine invariant.
inline IdentityCheck evidence_check(const QuotientModel& model) {
    detail::require_trace_hypotheses(model, "evidence_check");
    IdentityCheck trace = trace_check(model);
    IdentityCheck r;
    r.lhs = trace.lhs;
    r.rhs = Rational(model.stack_dim()) * stringy_euler(model).value / 12 +
            c1_ctop1(model) / 6;
    if (r.rhs != trace.rhs)
        throw InternalError("evidence right side differs from trace right side");
    r.equal = (r.lhs == r.rhs);
    return r;
}

struct GaussBonnet {
    // integral of c_top over the inertia stack, evaluated sector-wise with
    // atlas weights; equals chi of the coarse space X
    Rational sector_weighted;
    // chi of the coarse space of the inertia stack itself (components
    // quotiented by their stabilizers); equals the stringy Euler number
    Rational inertia_coarse;
};

// Both normalizations of the Gauss-Bonnet degree for I[V/G]; the report
// records which identity each one satisfies.
inline GaussBonnet inertia_gauss_bonnet(const QuotientModel& model) {
    GaussBonnet r;
    r.sector_weighted = coarse_euler(model).value;

    // chi(Fix(g)/C(g)) via the orbit-space formula: average over the
    // centralizer of chi of its fixed sets inside Fix(g)
    const auto& g = model.group();
    Rational total(0);
    for (const auto& cls : g.conjugacy_classes()) {
        Rational sum(0);
        for (int h = 0; h < g.size(); ++h) {
            if (!g.commutes(cls.representative, h)) continue;
            sum += detail::pair_chi(model, cls.representative, h);
        }
        total += sum / Rational(cls.centralizer_order);
    }
    r.inertia_coarse = total;
    return r;
}

}  // namespace orb
