#pragma once

#include "orbicalc/confun_verify.hpp"

#include <sstream>

namespace orb {

namespace detail {

inline CycMatrix perm_matrix(const std::vector<int>& images) {
    long n = static_cast<long>(images.size());
    CycMatrix m(1, n, n);
    for (long i = 0; i < n; ++i)
        m.at(images[static_cast<std::size_t>(i)], i) = Cyclotomic::one(1);
    return m;
}

inline std::shared_ptr<const FinGroup> table_group(
    const std::string& name, long conductor, long dim,
    const std::vector<CycMatrix>& gens) {
    auto g = FiniteMatrixGroup::generate(conductor, dim, gens);
    return std::make_shared<const FinGroup>(FinGroup::from_matrix_group(g, name));
}

}  // namespace detail

// Every group of order up to 8, one per isomorphism class, realized through
// the matrix-group engine (permutation matrices, except the 2-dimensional
// quaternion representation).
inline std::vector<std::shared_ptr<const FinGroup>> catalog_groups(int max_order = 8) {
    using detail::perm_matrix;
    using detail::table_group;
    static const std::vector<std::shared_ptr<const FinGroup>> all = [] {
        std::vector<std::shared_ptr<const FinGroup>> out;
        out.push_back(std::make_shared<const FinGroup>(FinGroup::trivial()));
        auto cycle = [](int n) {
            std::vector<int> im(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = (i + 1) % n;
            return perm_matrix(im);
        };
        for (int n = 2; n <= 8; ++n)
            out.push_back(table_group("Z" + std::to_string(n), 1, n, {cycle(n)}));
        out.push_back(table_group("Z2xZ2", 1, 4,
                                  {perm_matrix({1, 0, 2, 3}), perm_matrix({0, 1, 3, 2})}));
        out.push_back(
            table_group("S3", 1, 3, {perm_matrix({1, 0, 2}), perm_matrix({1, 2, 0})}));
        out.push_back(table_group(
            "Z4xZ2", 1, 6,
            {perm_matrix({1, 2, 3, 0, 4, 5}), perm_matrix({0, 1, 2, 3, 5, 4})}));
        out.push_back(table_group("Z2^3", 1, 6,
                                  {perm_matrix({1, 0, 2, 3, 4, 5}),
                                   perm_matrix({0, 1, 3, 2, 4, 5}),
                                   perm_matrix({0, 1, 2, 3, 5, 4})}));
        out.push_back(table_group(
            "D4", 1, 4, {perm_matrix({1, 2, 3, 0}), perm_matrix({1, 0, 3, 2})}));
        {
            CycMatrix mi(4, 2, 2), mj(4, 2, 2);
            mi.at(0, 0) = Cyclotomic::zeta(4);
            mi.at(1, 1) = -Cyclotomic::zeta(4);
            mj.at(0, 1) = Cyclotomic::one(4);
            mj.at(1, 0) = -Cyclotomic::one(4);
            out.push_back(table_group("Q8", 4, 2, {mi, mj}));
        }
        return out;
    }();
    std::vector<std::shared_ptr<const FinGroup>> filtered;
    for (const auto& g : all)
        if (g->size() <= max_order) filtered.push_back(g);
    return filtered;
}

// the one-point model with full isotropy (BG) and the one-point set (pt)
inline std::shared_ptr<const GSet> classifying_model(
    const std::shared_ptr<const FinGroup>& g) {
    std::vector<std::vector<int>> action(static_cast<std::size_t>(g->size()),
                                         std::vector<int>{0});
    return std::make_shared<const GSet>(g, std::move(action), "B" + g->name());
}

// free translation action of the group on itself
inline std::shared_ptr<const GSet> translation_model(
    const std::shared_ptr<const FinGroup>& g) {
    std::vector<std::vector<int>> action(static_cast<std::size_t>(g->size()));
    for (int a = 0; a < g->size(); ++a) {
        auto& row = action[static_cast<std::size_t>(a)];
        row.resize(static_cast<std::size_t>(g->size()));
        for (int x = 0; x < g->size(); ++x)
            row[static_cast<std::size_t>(x)] = g->mul(a, x);
    }
    return std::make_shared<const GSet>(g, std::move(action), g->name() + "-translation");
}

/*
 * All G-set models on at most max_points points, up to equivariant
 * isomorphism: multisets of coset actions G/K over conjugacy-class
 * representatives K of index <= max_points.
 */
inline std::vector<std::shared_ptr<const GSet>> all_models(
    const std::shared_ptr<const FinGroup>& g, int max_points) {
    std::vector<std::vector<int>> types;  // subgroup reps with small index
    for (const auto& k : g->subgroup_class_reps())
        if (g->size() / static_cast<int>(k.size()) <= max_points) types.push_back(k);

    std::vector<std::shared_ptr<const GSet>> models;
    std::vector<int> chosen;
    auto realize = [&]() {
        std::ostringstream name;
        name << g->name() << "[";
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            if (i > 0) name << "+";
            name << g->size() / types[static_cast<std::size_t>(chosen[i])].size();
        }
        name << "]";
        GSet acc =
            GSet::coset_action(g, types[static_cast<std::size_t>(chosen[0])], name.str());
        for (std::size_t i = 1; i < chosen.size(); ++i)
            acc = GSet::disjoint_union(
                acc, GSet::coset_action(g, types[static_cast<std::size_t>(chosen[i])]),
                name.str());
        models.push_back(std::make_shared<const GSet>(std::move(acc)));
    };
    // multisets: non-decreasing type indices, total point budget respected
    auto rec = [&](auto&& self, std::size_t start, int budget) -> void {
        if (!chosen.empty()) realize();
        for (std::size_t t = start; t < types.size(); ++t) {
            int sz = g->size() / static_cast<int>(types[t].size());
            if (sz > budget) continue;
            chosen.push_back(static_cast<int>(t));
            self(self, t, budget - sz);
            chosen.pop_back();
        }
    };
    rec(rec, 0, max_points);
    return models;
}

/*
 * All equivariant maps A -> B along the identity homomorphism. A map is
 * fixed by choosing, per orbit of A, an image point of B fixed by the
 * orbit's stabilizer; the rest follows by equivariance.
 */
inline std::vector<GSetMap> all_equivariant_maps(const std::shared_ptr<const GSet>& a,
                                                 const std::shared_ptr<const GSet>& b) {
    const GSet& A = *a;
    const GSet& B = *b;
    const FinGroup& g = A.group();
    std::vector<std::vector<int>> candidates(static_cast<std::size_t>(A.orbit_count()));
    for (int o = 0; o < A.orbit_count(); ++o) {
        std::vector<int> stab = A.stabilizer(A.orbit_rep(o));
        for (int t = 0; t < B.points(); ++t) {
            bool fixed = true;
            for (int k : stab)
                if (B.act(k, t) != t) { fixed = false; break; }
            if (fixed) candidates[static_cast<std::size_t>(o)].push_back(t);
        }
        if (candidates[static_cast<std::size_t>(o)].empty()) return {};
    }

    std::vector<int> hom(static_cast<std::size_t>(g.size()));
    std::iota(hom.begin(), hom.end(), 0);

    std::vector<GSetMap> maps;
    std::vector<std::size_t> pick(static_cast<std::size_t>(A.orbit_count()), 0);
    while (true) {
        std::vector<int> pmap(static_cast<std::size_t>(A.points()));
        for (int x = 0; x < A.points(); ++x) {
            int o = A.orbit_of(x);
            int target = candidates[static_cast<std::size_t>(o)]
                                   [pick[static_cast<std::size_t>(o)]];
            pmap[static_cast<std::size_t>(x)] = B.act(A.transporter(x), target);
        }
        maps.emplace_back(GSetMap::Unchecked{}, a, b, hom, std::move(pmap));

        std::size_t pos = 0;
        while (pos < pick.size()) {
            if (++pick[pos] < candidates[pos].size()) break;
            pick[pos] = 0;
            ++pos;
        }
        if (pos == pick.size()) break;
    }
    return maps;
}

struct SuiteConfig {
    int max_points = 6;
    int max_group_order = 8;
};

struct SuiteReport {
    long groups = 0;
    long models = 0;
    long maps = 0;
    long pushforward_checks = 0;   // stack vs equivariant, per (map, function)
    long mass_checks = 0;
    long functoriality_checks = 0;
    long prop33_checks = 0;
    long etale_checks = 0;
    long stringy_checks = 0;
    long hom_checks = 0;
    bool ok = true;
    std::string first_failure;

    void fail(const std::string& what) {
        if (ok) first_failure = what;
        ok = false;
    }
};

/*
 * The exhaustive verification sweep: every theorem-level statement of the
 * constructible-function calculus, quantified over all models on at most
 * max_points points for every catalog group of order at most
 * max_group_order, all equivariant maps between them, and all classifying
 * maps BG -> BH. Runs in checked 64-bit exact rationals.
 */
inline SuiteReport run_pushforward_suite(const SuiteConfig& cfg = {}) {
    using R = Frac64;
    SuiteReport rep;
    auto groups = catalog_groups(cfg.max_group_order);
    rep.groups = static_cast<long>(groups.size());

    for (const auto& g : groups) {
        auto models = all_models(g, cfg.max_points);
        rep.models += static_cast<long>(models.size());

        // per-model theorem checks
        for (const auto& m : models) {
            ++rep.prop33_checks;
            auto p33 = verify_prop_3_3<R>(m);
            if (!p33.ok) rep.fail(m->name() + ": " + p33.detail);

            ++rep.stringy_checks;
            std::vector<R> phi = stringy_function<R>(m);
            R total(0);
            for (const R& v : phi) total += v;
            R shadow = R(commuting_triple_count(*m)) / R(g->size());
            if (!(total == shadow))
                rep.fail(m->name() + ": stringy function total " + total.str() +
                         " != commuting-triple count " + shadow.str());
            // pointwise: number of conjugacy classes of the stabilizer
            for (int o = 0; o < m->orbit_count(); ++o) {
                std::vector<int> stab = m->stabilizer(m->orbit_rep(o));
                std::set<int> classes;
                for (int s : stab) {
                    int canon = s;
                    for (int k : stab) {
                        int c = g->mul(g->mul(k, s), g->inv(k));
                        canon = std::min(canon, c);
                    }
                    classes.insert(canon);
                }
                if (!(phi[static_cast<std::size_t>(o)] ==
                      R(static_cast<long>(classes.size()))))
                    rep.fail(m->name() + ": stringy value mismatch on orbit " +
                             std::to_string(o));
            }
        }

        // every equivariant map between every ordered pair of models
        for (const auto& a : models) {
            std::vector<R> one_a(static_cast<std::size_t>(a->points()), R(1));
            // basis of orbit indicators plus the constant function
            std::vector<std::vector<R>> funcs;
            for (int o = 0; o < a->orbit_count(); ++o) {
                std::vector<R> ind(static_cast<std::size_t>(a->points()), R(0));
                for (int x = 0; x < a->points(); ++x)
                    if (a->orbit_of(x) == o) ind[static_cast<std::size_t>(x)] = R(1);
                funcs.push_back(std::move(ind));
            }
            funcs.push_back(one_a);
            for (const auto& b : models) {
                auto coarse_b = std::make_shared<const GSet>(b->coarse());
                GSetMap pi_b = coarse_projection(b, coarse_b);
                for (const GSetMap& f : all_equivariant_maps(a, b)) {
                    ++rep.maps;
                    for (const auto& phi : funcs) {
                        ++rep.pushforward_checks;
                        std::vector<R> sp = stack_pushforward(f, phi);
                        std::vector<R> ep = equivariant_pushforward(f, phi);
                        if (!(sp == ep))
                            rep.fail(a->name() + " -> " + b->name() +
                                     ": stack and equivariant pushforwards differ");
                        ++rep.mass_checks;
                        if (!(weighted_mass(*b, sp) == weighted_mass(*a, phi)))
                            rep.fail(a->name() + " -> " + b->name() +
                                     ": total mass not preserved");
                    }
                    ++rep.functoriality_checks;
                    if (!functoriality_check(pi_b, f, one_a))
                        rep.fail(a->name() + " -> " + b->name() +
                                 ": functoriality with the coarse projection fails");
                    if (!rep.ok) return rep;
                }
            }
        }

        // coverings G/K -> G/H for all nested subgroup pairs
        auto subgroups = g->subgroups();
        for (const auto& k : subgroups) {
            if (g->size() / static_cast<int>(k.size()) > cfg.max_points) continue;
            for (const auto& h : subgroups) {
                if (h.size() < k.size()) continue;
                bool nested = std::includes(h.begin(), h.end(), k.begin(), k.end());
                if (!nested) continue;
                auto src = std::make_shared<const GSet>(GSet::coset_action(g, k));
                auto dst = std::make_shared<const GSet>(GSet::coset_action(g, h));
                // gK -> gH on the chosen coset representatives
                std::vector<int> hom(static_cast<std::size_t>(g->size()));
                std::iota(hom.begin(), hom.end(), 0);
                std::vector<int> pmap(static_cast<std::size_t>(src->points()));
                for (int c = 0; c < src->points(); ++c)
                    pmap[static_cast<std::size_t>(c)] = dst->act(src->transporter(c), 0);
                GSetMap f(src, dst, hom, pmap);  // validating constructor
                ++rep.etale_checks;
                auto et = verify_etale_lemma<R>(f);
                long expected = static_cast<long>(h.size() / k.size());
                if (!et.ok || et.degree != expected)
                    rep.fail(g->name() + ": covering G/K -> G/H degree " +
                             std::to_string(et.degree) + " != index " +
                             std::to_string(expected));
                if (!rep.ok) return rep;
            }
        }
    }

    // classifying maps BG -> BH for every homomorphism between catalog groups
    for (const auto& g : groups) {
        auto bg = classifying_model(g);
        auto pt = classifying_model(std::make_shared<const FinGroup>(FinGroup::trivial()));
        for (const auto& h : groups) {
            auto bh = classifying_model(h);
            for (const auto& psi : FinGroup::homomorphisms(*g, *h)) {
                ++rep.hom_checks;
                GSetMap f(bg, bh, psi, {0});
                std::vector<R> one = {R(1)};
                // weighted route
                std::vector<R> fstar = stack_pushforward(f, one);
                R expected = R(h->size()) / R(g->size());
                if (!(fstar[0] == expected))
                    rep.fail("B" + g->name() + " -> B" + h->name() +
                             ": stack pushforward of 1 is " + fstar[0].str() +
                             ", expected " + expected.str());

                // atlas chain: pt -> BG -> BH with functoriality
                GSetMap p(pt, bg, std::vector<int>{0}, {0});
                std::vector<R> pstar = stack_pushforward(p, one);
                if (!(pstar[0] == R(g->size())))
                    rep.fail("atlas pushforward to B" + g->name() + " is not |G|");
                GSetMap fp = compose(f, p);
                std::vector<R> fpstar = stack_pushforward(fp, one);
                if (!(fpstar[0] == R(h->size())))
                    rep.fail("pt -> B" + h->name() + " pushforward is not |H|");
                std::vector<R> via = stack_pushforward(f, pstar);
                if (!(via[0] == R(h->size())))
                    rep.fail("functoriality along pt -> B" + g->name() + " -> B" +
                             h->name() + " fails");

                // Ohmoto route through the translation presentations:
                // f_{*'} 1_{BG} = (1/|G|) (f o p)_{*'} 1_pt, computed as the
                // plain pushforward of 1 along H-translation -> point
                auto th = translation_model(h);
                auto pt_h = classifying_model(h);
                std::vector<int> idh(static_cast<std::size_t>(h->size()));
                std::iota(idh.begin(), idh.end(), 0);
                GSetMap collapse(th, pt_h, idh,
                                 std::vector<int>(static_cast<std::size_t>(h->size()), 0));
                std::vector<R> one_th(static_cast<std::size_t>(h->size()), R(1));
                std::vector<R> plain = equivariant_pushforward(collapse, one_th);
                R ohmoto = plain[0] / R(g->size());
                if (!(ohmoto == fstar[0]))
                    rep.fail("B" + g->name() + " -> B" + h->name() +
                             ": Ohmoto route " + ohmoto.str() +
                             " differs from stack route " + fstar[0].str());
                if (!rep.ok) return rep;
            }
        }
    }
    return rep;
}

}  // namespace orb
