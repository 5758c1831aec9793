#pragma once

#include "orbicalc/confun.hpp"

#include <sstream>

namespace orb {

struct CheckOutcome {
    bool ok = true;
    std::string detail;
};

/*
 * The inertia comparison pi_* p_* 1_I = 1 on the coarse orbit set, checked
 * together with the averaged fixed-point function alpha = (1/|G|) sum_g
 * 1_{S^g}: alpha(x) = |Stab(x)|/|G|, and its pushforward along the atlas
 * composite must also be the constant 1. The two-step route doubles as a
 * functoriality instance.
 */
template <class R>
CheckOutcome verify_prop_3_3(const std::shared_ptr<const GSet>& base) {
    CheckOutcome out;
    const GSet& m = *base;
    auto coarse = std::make_shared<const GSet>(m.coarse());
    GSetMap pi = coarse_projection(base, coarse);

    InertiaModel inertia = inertia_model(base);
    std::vector<R> one_inertia(static_cast<std::size_t>(inertia.model->points()), R(1));
    std::vector<R> on_base = stack_pushforward(inertia.projection, one_inertia);
    std::vector<R> on_coarse = stack_pushforward(pi, on_base);
    for (int o = 0; o < coarse->points(); ++o) {
        if (!(on_coarse[static_cast<std::size_t>(o)] == R(1))) {
            out.ok = false;
            std::ostringstream os;
            os << "pi_* p_* 1 is not 1 at coarse point " << o;
            out.detail = os.str();
            return out;
        }
    }

    // alpha route on the underlying point set (trivial group)
    std::vector<std::vector<int>> plain_action(1);
    plain_action[0].resize(static_cast<std::size_t>(m.points()));
    std::iota(plain_action[0].begin(), plain_action[0].end(), 0);
    auto plain = std::make_shared<const GSet>(
        std::make_shared<FinGroup>(FinGroup::trivial()), std::move(plain_action));

    std::vector<R> alpha(static_cast<std::size_t>(m.points()));
    for (int x = 0; x < m.points(); ++x)
        alpha[static_cast<std::size_t>(x)] =
            R(m.e_weight(x)) / R(m.group().size());

    std::vector<int> triv_hom = {0};
    std::vector<int> rho_hom(1, 0);
    std::vector<int> idp(static_cast<std::size_t>(m.points()));
    std::iota(idp.begin(), idp.end(), 0);
    GSetMap rho(GSetMap::Unchecked{}, plain, base, rho_hom, idp);

    GSetMap composite = compose(pi, rho);
    std::vector<R> direct = stack_pushforward(composite, alpha);
    std::vector<R> two_step = stack_pushforward(pi, stack_pushforward(rho, alpha));
    for (int o = 0; o < coarse->points(); ++o) {
        if (!(direct[static_cast<std::size_t>(o)] == R(1)) ||
            !(two_step[static_cast<std::size_t>(o)] == R(1))) {
            out.ok = false;
            out.detail = "alpha does not push forward to 1 at coarse point " +
                         std::to_string(o);
            return out;
        }
    }
    return out;
}

struct EtaleOutcome {
    bool ok = false;
    long degree = 0;
    std::string detail;
};

/*
 * Finite etale covering check: the fiber cardinality must be one constant d
 * over the image, and then both pushforwards of 1 must equal d on the image
 * and 0 off it.
 */
template <class R>
EtaleOutcome verify_etale_lemma(const GSetMap& f) {
    const GSet& s = f.src();
    const GSet& t = f.dst();
    std::vector<long> fiber(static_cast<std::size_t>(t.points()), 0);
    for (int x = 0; x < s.points(); ++x) ++fiber[static_cast<std::size_t>(f(x))];
    long deg = 0;
    for (int y = 0; y < t.points(); ++y) {
        if (fiber[static_cast<std::size_t>(y)] == 0) continue;
        if (deg == 0) deg = fiber[static_cast<std::size_t>(y)];
        if (fiber[static_cast<std::size_t>(y)] != deg)
            throw InputError("map is not a covering: fiber sizes differ");
    }
    if (deg == 0) throw InputError("map is not a covering: empty source");

    EtaleOutcome out;
    out.degree = deg;
    std::vector<R> one(static_cast<std::size_t>(s.points()), R(1));
    std::vector<R> stack = stack_pushforward(f, one);
    std::vector<R> plain = equivariant_pushforward(f, one);
    for (int y = 0; y < t.points(); ++y) {
        R expect = fiber[static_cast<std::size_t>(y)] > 0 ? R(deg) : R(0);
        if (!(stack[static_cast<std::size_t>(y)] == expect) ||
            !(plain[static_cast<std::size_t>(y)] == expect)) {
            out.ok = false;
            out.detail = "pushforward of 1 is not deg * indicator at point " +
                         std::to_string(y);
            return out;
        }
    }
    out.ok = true;
    return out;
}

// (outer o inner)_* phi = outer_* (inner_* phi), for both pushforwards
template <class R>
bool functoriality_check(const GSetMap& outer, const GSetMap& inner,
                         const std::vector<R>& phi) {
    GSetMap comp = compose(outer, inner);
    std::vector<R> direct = stack_pushforward(comp, phi);
    std::vector<R> stepped = stack_pushforward(outer, stack_pushforward(inner, phi));
    if (!(direct == stepped)) return false;
    std::vector<R> direct_p = equivariant_pushforward(comp, phi);
    std::vector<R> stepped_p =
        equivariant_pushforward(outer, equivariant_pushforward(inner, phi));
    return direct_p == stepped_p;
}

// Phi on the coarse space: push 1 along the coarse-inertia projection
// IX -> X of coarse spaces. Value at an orbit = number of conjugacy classes
// of the stabilizer of any of its points.
template <class R>
std::vector<R> stringy_function(const std::shared_ptr<const GSet>& base) {
    InertiaModel inertia = inertia_model(base);
    auto coarse_inertia = std::make_shared<const GSet>(inertia.model->coarse());
    auto coarse_base = std::make_shared<const GSet>(base->coarse());
    // induced map of coarse spaces
    std::vector<int> pmap(static_cast<std::size_t>(coarse_inertia->points()));
    for (int p = 0; p < inertia.model->points(); ++p)
        pmap[static_cast<std::size_t>(inertia.model->orbit_of(p))] =
            base->orbit_of(inertia.projection(p));
    GSetMap pbar(GSetMap::Unchecked{}, coarse_inertia, coarse_base, std::vector<int>{0},
                 std::move(pmap));
    std::vector<R> one(static_cast<std::size_t>(coarse_inertia->points()), R(1));
    return stack_pushforward(pbar, one);
}

// |{(x, g, h) : gx = x, hx = x, gh = hg}|, the finite shadow of the
// double-inertia point count
inline long commuting_triple_count(const GSet& m) {
    const FinGroup& g = m.group();
    long total = 0;
    for (int x = 0; x < m.points(); ++x) {
        std::vector<int> stab = m.stabilizer(x);
        for (int a : stab)
            for (int b : stab)
                if (g.mul(a, b) == g.mul(b, a)) ++total;
    }
    return total;
}

}  // namespace orb
