#pragma once

#include "orbicalc/epoly.hpp"
#include "orbicalc/model.hpp"

#include <vector>

namespace orb {

/*
 * One connected component of the (double) inertia stack, as a coarse-space
 * record: [component / stabilizer]. The coarse E-polynomial of the sector
 * equals the component's own E-polynomial: stabilizers preserve each
 * projective eigenspace and act trivially on its cohomology, which is
 * generated by the hyperplane class.
 */
struct Sector {
    int class_id = 0;    // index into conjugacy classes / pair classes
    int rep_g = 0;       // representative element
    int rep_h = -1;      // second element of the pair; -1 for single inertia
    FixedComponent component;
    long stabilizer_order = 1;
    EPolynomial e_poly;
    Rational euler;      // chi of the coarse component, E at u = v = 1
};

namespace detail {

inline void fill_epoly(Sector& s, ModelKind kind) {
    s.e_poly = kind == ModelKind::Affine
                   ? EPolynomial::affine_space(s.component.dim)
                   : EPolynomial::projective_space(s.component.dim);
    s.euler = s.e_poly.eval_at_one();
}

}  // namespace detail

// I[V/G] = union over conjugacy classes (g) of [Fix(g)/C_G(g)], one sector
// per fixed component, emitted class by class, eigenvalue exponent ascending.
inline std::vector<Sector> inertia_sectors(const QuotientModel& model) {
    std::vector<Sector> sectors;
    const auto& classes = model.group().conjugacy_classes();
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        int g = classes[ci].representative;
        std::vector<FixedComponent> comps;
        if (model.kind() == ModelKind::Affine)
            comps = {model.affine_component(g)};
        else
            comps = model.projective_components(g);
        for (auto& c : comps) {
            Sector s;
            s.class_id = static_cast<int>(ci);
            s.rep_g = g;
            s.component = std::move(c);
            s.stabilizer_order = classes[ci].centralizer_order;
            detail::fill_epoly(s, model.kind());
            sectors.push_back(std::move(s));
        }
    }
    return sectors;
}

// II[V/G] = union over simultaneous-conjugation classes of commuting pairs
// (g, h) of [Fix(g) n Fix(h) / C_G(g) n C_G(h)].
inline std::vector<Sector> double_inertia_sectors(const QuotientModel& model) {
    std::vector<Sector> sectors;
    const auto& pairs = model.group().commuting_pair_classes();
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
        auto [g, h] = pairs[pi].representative;
        for (auto c : model.double_fixed_cached(g, h)) {
            Sector s;
            s.class_id = static_cast<int>(pi);
            s.rep_g = g;
            s.rep_h = h;
            s.component = std::move(c);
            s.stabilizer_order = pairs[pi].stabilizer_order;
            detail::fill_epoly(s, model.kind());
            sectors.push_back(std::move(s));
        }
    }
    return sectors;
}

}  // namespace orb
