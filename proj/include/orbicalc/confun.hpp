#pragma once

#include "orbicalc/group.hpp"
#include "orbicalc/rational.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace orb {

/*
 * Abstract finite group as a multiplication table. The finite-model calculus
 * works with G-sets, not matrices, so the table is all it needs; tables are
 * produced from the matrix-group engine to keep a single source of group
 * structure.
 */
class FinGroup {
  public:
    static FinGroup from_matrix_group(const FiniteMatrixGroup& g, std::string name) {
        FinGroup f;
        f.n_ = static_cast<int>(g.size());
        f.name_ = std::move(name);
        f.mul_.resize(static_cast<std::size_t>(f.n_) * f.n_);
        f.inv_.resize(static_cast<std::size_t>(f.n_));
        for (int a = 0; a < f.n_; ++a) {
            f.inv_[static_cast<std::size_t>(a)] = g.inv(a);
            for (int b = 0; b < f.n_; ++b)
                f.mul_[static_cast<std::size_t>(a) * f.n_ + b] = g.mul(a, b);
        }
        return f;
    }

    static FinGroup trivial() {
        FinGroup f;
        f.n_ = 1;
        f.name_ = "1";
        f.mul_ = {0};
        f.inv_ = {0};
        return f;
    }

    int size() const { return n_; }
    const std::string& name() const { return name_; }
    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }

    bool is_subgroup(const std::vector<int>& elems) const {
        std::set<int> s(elems.begin(), elems.end());
        if (!s.count(0)) return false;
        for (int a : elems)
            for (int b : elems)
                if (!s.count(mul(a, b))) return false;
        return true;
    }

    // all subgroups, each a sorted element list; brute force over subsets,
    // fine at the table sizes this calculus targets
    std::vector<std::vector<int>> subgroups() const {
        if (n_ > 16)
            throw InputError("subgroup enumeration supported only for |G| <= 16");
        std::vector<std::vector<int>> subs;
        for (unsigned mask = 1; mask < (1u << n_); ++mask) {
            if (!(mask & 1u)) continue;  // identity required
            std::vector<int> elems;
            for (int e = 0; e < n_; ++e)
                if (mask >> e & 1u) elems.push_back(e);
            if (n_ % static_cast<int>(elems.size()) != 0) continue;
            if (is_subgroup(elems)) subs.push_back(std::move(elems));
        }
        std::sort(subs.begin(), subs.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) {
                      if (a.size() != b.size()) return a.size() < b.size();
                      return a < b;
                  });
        return subs;
    }

    std::vector<int> conjugate_subgroup(const std::vector<int>& sub, int k) const {
        std::vector<int> out;
        for (int s : sub) out.push_back(mul(mul(k, s), inv(k)));
        std::sort(out.begin(), out.end());
        return out;
    }

    // one representative per conjugacy class of subgroups
    std::vector<std::vector<int>> subgroup_class_reps() const {
        std::vector<std::vector<int>> reps;
        std::set<std::vector<int>> seen;
        for (const auto& sub : subgroups()) {
            if (seen.count(sub)) continue;
            std::vector<int> canon = sub;
            for (int k = 0; k < n_; ++k) {
                auto c = conjugate_subgroup(sub, k);
                seen.insert(c);
                if (c < canon) canon = c;
            }
            reps.push_back(canon);
        }
        std::sort(reps.begin(), reps.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) {
                      if (a.size() != b.size()) return a.size() < b.size();
                      return a < b;
                  });
        return reps;
    }

    std::vector<int> generating_set() const {
        std::vector<int> gens;
        std::set<int> closure = {0};
        for (int e = 1; e < n_; ++e) {
            if (closure.count(e)) continue;
            gens.push_back(e);
            // close
            std::vector<int> frontier(closure.begin(), closure.end());
            closure.insert(e);
            frontier.push_back(e);
            while (!frontier.empty()) {
                int a = frontier.back();
                frontier.pop_back();
                for (int b : std::vector<int>(closure.begin(), closure.end())) {
                    for (int p : {mul(a, b), mul(b, a)}) {
                        if (closure.insert(p).second) frontier.push_back(p);
                    }
                }
            }
        }
        return gens;
    }

    // every homomorphism G -> H, each as the image vector of all elements
    static std::vector<std::vector<int>> homomorphisms(const FinGroup& g,
                                                       const FinGroup& h) {
        std::vector<int> gens = g.generating_set();
        // BFS expression of each element as parent * generator
        std::vector<int> parent(static_cast<std::size_t>(g.size()), -1);
        std::vector<int> via(static_cast<std::size_t>(g.size()), -1);
        std::vector<int> bfs = {0};
        parent[0] = 0;
        for (std::size_t head = 0; head < bfs.size(); ++head) {
            int cur = bfs[head];
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                int nxt = g.mul(cur, gens[gi]);
                if (parent[static_cast<std::size_t>(nxt)] >= 0 || nxt == 0) continue;
                parent[static_cast<std::size_t>(nxt)] = cur;
                via[static_cast<std::size_t>(nxt)] = static_cast<int>(gi);
                bfs.push_back(nxt);
            }
        }

        std::vector<std::vector<int>> homs;
        std::vector<int> assign(gens.size(), 0);
        while (true) {
            std::vector<int> phi(static_cast<std::size_t>(g.size()), -1);
            phi[0] = 0;
            for (std::size_t head = 1; head < bfs.size(); ++head) {
                int e = bfs[head];
                phi[static_cast<std::size_t>(e)] =
                    h.mul(phi[static_cast<std::size_t>(parent[static_cast<std::size_t>(e)])],
                          assign[static_cast<std::size_t>(via[static_cast<std::size_t>(e)])]);
            }
            bool ok = true;
            for (int a = 0; a < g.size() && ok; ++a)
                for (int b = 0; b < g.size() && ok; ++b)
                    if (phi[static_cast<std::size_t>(g.mul(a, b))] !=
                        h.mul(phi[static_cast<std::size_t>(a)], phi[static_cast<std::size_t>(b)]))
                        ok = false;
            if (ok) homs.push_back(std::move(phi));

            // next assignment of generator images
            std::size_t pos = 0;
            while (pos < gens.size()) {
                if (++assign[pos] < h.size()) break;
                assign[pos] = 0;
                ++pos;
            }
            if (pos == gens.size()) break;
            if (gens.empty()) break;
        }
        if (gens.empty()) {
            // trivial source group: only the trivial homomorphism, emitted once
            homs.clear();
            homs.push_back({0});
        }
        return homs;
    }

  private:
    int n_ = 1;
    std::string name_;
    std::vector<int> mul_;
    std::vector<int> inv_;
};

/*
 * Finite orbifold model: a finite group acting on a finite point set.
 * act[g][x] is the image of x under g. Orbit data is precomputed; it backs
 * both pushforwards and the invariance check for constructible functions.
 */
class GSet {
  public:
    GSet(std::shared_ptr<const FinGroup> group, std::vector<std::vector<int>> action,
         std::string name = "")
        : group_(std::move(group)), act_(std::move(action)), name_(std::move(name)) {
        const FinGroup& g = *group_;
        if (static_cast<int>(act_.size()) != g.size())
            throw InputError("action table must have one row per group element");
        npoints_ = act_.empty() ? 0 : static_cast<int>(act_[0].size());
        for (const auto& row : act_) {
            if (static_cast<int>(row.size()) != npoints_)
                throw InputError("ragged action table");
            for (int x : row)
                if (x < 0 || x >= npoints_) throw InputError("action image out of range");
        }
        for (int x = 0; x < npoints_; ++x)
            if (act_[0][static_cast<std::size_t>(x)] != x)
                throw InputError("identity must act trivially");
        for (int a = 0; a < g.size(); ++a)
            for (int b = 0; b < g.size(); ++b)
                for (int x = 0; x < npoints_; ++x)
                    if (act(g.mul(a, b), x) != act(a, act(b, x)))
                        throw InputError("action is not compatible with multiplication");
        compute_orbits();
    }

    static GSet coset_action(std::shared_ptr<const FinGroup> group,
                             const std::vector<int>& subgroup, std::string name = "") {
        const FinGroup& g = *group;
        if (!g.is_subgroup(subgroup)) throw InputError("coset_action needs a subgroup");
        std::set<int> sub(subgroup.begin(), subgroup.end());
        // cosets ordered by smallest member
        std::vector<std::vector<int>> cosets;
        std::map<int, int> coset_of;  // element -> coset index
        for (int e = 0; e < g.size(); ++e) {
            if (coset_of.count(e)) continue;
            std::vector<int> coset;
            for (int s : subgroup) coset.push_back(g.mul(e, s));
            std::sort(coset.begin(), coset.end());
            int id = static_cast<int>(cosets.size());
            for (int m : coset) coset_of[m] = id;
            cosets.push_back(std::move(coset));
        }
        std::vector<std::vector<int>> action(static_cast<std::size_t>(g.size()));
        for (int a = 0; a < g.size(); ++a) {
            auto& row = action[static_cast<std::size_t>(a)];
            row.resize(cosets.size());
            for (std::size_t c = 0; c < cosets.size(); ++c)
                row[c] = coset_of.at(g.mul(a, cosets[c][0]));
        }
        return GSet(std::move(group), std::move(action), std::move(name));
    }

    static GSet disjoint_union(const GSet& a, const GSet& b, std::string name = "") {
        if (a.group_.get() != b.group_.get())
            throw InputError("disjoint union needs a common group");
        std::vector<std::vector<int>> action(static_cast<std::size_t>(a.group().size()));
        for (int g = 0; g < a.group().size(); ++g) {
            auto& row = action[static_cast<std::size_t>(g)];
            row.reserve(static_cast<std::size_t>(a.points() + b.points()));
            for (int x = 0; x < a.points(); ++x) row.push_back(a.act(g, x));
            for (int x = 0; x < b.points(); ++x) row.push_back(a.points() + b.act(g, x));
        }
        return GSet(a.group_, std::move(action), std::move(name));
    }

    const FinGroup& group() const { return *group_; }
    const std::shared_ptr<const FinGroup>& group_ptr() const { return group_; }
    const std::string& name() const { return name_; }
    int points() const { return npoints_; }
    int act(int g, int x) const {
        return act_[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)];
    }

    int orbit_count() const { return static_cast<int>(orbit_reps_.size()); }
    int orbit_of(int x) const { return orbit_of_[static_cast<std::size_t>(x)]; }
    int orbit_rep(int o) const { return orbit_reps_[static_cast<std::size_t>(o)]; }
    long orbit_size(int o) const { return orbit_sizes_[static_cast<std::size_t>(o)]; }
    // some group element carrying the orbit representative to x
    int transporter(int x) const { return transporter_[static_cast<std::size_t>(x)]; }

    long stabilizer_order(int x) const {
        long count = 0;
        for (int g = 0; g < group_->size(); ++g)
            if (act(g, x) == x) ++count;
        return count;
    }
    std::vector<int> stabilizer(int x) const {
        std::vector<int> s;
        for (int g = 0; g < group_->size(); ++g)
            if (act(g, x) == x) s.push_back(g);
        return s;
    }

    // the isotropy weight e(x) = |Stab(x)|, precomputed
    long e_weight(int x) const { return e_[static_cast<std::size_t>(x)]; }

    // coarse space: the orbit set with the trivial group
    GSet coarse() const {
        std::vector<std::vector<int>> action(1);
        action[0].resize(static_cast<std::size_t>(orbit_count()));
        std::iota(action[0].begin(), action[0].end(), 0);
        return GSet(std::make_shared<FinGroup>(FinGroup::trivial()), std::move(action),
                    name_.empty() ? "" : name_ + "/G");
    }

  private:
    void compute_orbits() {
        orbit_of_.assign(static_cast<std::size_t>(npoints_), -1);
        transporter_.assign(static_cast<std::size_t>(npoints_), 0);
        for (int x = 0; x < npoints_; ++x) {
            if (orbit_of_[static_cast<std::size_t>(x)] >= 0) continue;
            int o = static_cast<int>(orbit_reps_.size());
            orbit_reps_.push_back(x);
            long size = 0;
            for (int g = 0; g < group_->size(); ++g) {
                int y = act(g, x);
                if (orbit_of_[static_cast<std::size_t>(y)] < 0) {
                    orbit_of_[static_cast<std::size_t>(y)] = o;
                    transporter_[static_cast<std::size_t>(y)] = g;
                    ++size;
                }
            }
            orbit_sizes_.push_back(size);
        }
        e_.resize(static_cast<std::size_t>(npoints_));
        for (int x = 0; x < npoints_; ++x) e_[static_cast<std::size_t>(x)] = stabilizer_order(x);
    }

    std::shared_ptr<const FinGroup> group_;
    std::vector<std::vector<int>> act_;
    std::string name_;
    int npoints_ = 0;
    std::vector<int> orbit_of_;
    std::vector<int> orbit_reps_;
    std::vector<long> orbit_sizes_;
    std::vector<int> transporter_;
    std::vector<long> e_;
};

// Equivariant map of finite orbifold models along a group homomorphism:
// point map f with f(g.x) = hom(g).f(x).
class GSetMap {
  public:
    GSetMap(std::shared_ptr<const GSet> src, std::shared_ptr<const GSet> dst,
            std::vector<int> hom, std::vector<int> pmap)
        : src_(std::move(src)), dst_(std::move(dst)), hom_(std::move(hom)),
          pmap_(std::move(pmap)) {
        const GSet& s = *src_;
        const GSet& t = *dst_;
        if (static_cast<int>(hom_.size()) != s.group().size())
            throw InputError("homomorphism vector has wrong length");
        if (static_cast<int>(pmap_.size()) != s.points())
            throw InputError("point map has wrong length");
        for (int im : hom_)
            if (im < 0 || im >= t.group().size()) throw InputError("hom image out of range");
        for (int im : pmap_)
            if (im < 0 || im >= t.points()) throw InputError("point image out of range");
        for (int a = 0; a < s.group().size(); ++a)
            for (int b = 0; b < s.group().size(); ++b)
                if (hom_[static_cast<std::size_t>(s.group().mul(a, b))] !=
                    t.group().mul(hom_[static_cast<std::size_t>(a)],
                                  hom_[static_cast<std::size_t>(b)]))
                    throw InputError("hom is not a homomorphism");
        for (int g = 0; g < s.group().size(); ++g)
            for (int x = 0; x < s.points(); ++x)
                if (pmap_[static_cast<std::size_t>(s.act(g, x))] !=
                    t.act(hom_[static_cast<std::size_t>(g)], pmap_[static_cast<std::size_t>(x)]))
                    throw InputError("point map is not equivariant");
    }

    // unchecked fast path for maps produced by construction-correct
    // enumeration; the public constructor validates
    struct Unchecked {};
    GSetMap(Unchecked, std::shared_ptr<const GSet> src, std::shared_ptr<const GSet> dst,
            std::vector<int> hom, std::vector<int> pmap)
        : src_(std::move(src)), dst_(std::move(dst)), hom_(std::move(hom)),
          pmap_(std::move(pmap)) {}

    const GSet& src() const { return *src_; }
    const GSet& dst() const { return *dst_; }
    const std::shared_ptr<const GSet>& src_ptr() const { return src_; }
    const std::shared_ptr<const GSet>& dst_ptr() const { return dst_; }
    int hom(int g) const { return hom_[static_cast<std::size_t>(g)]; }
    int operator()(int x) const { return pmap_[static_cast<std::size_t>(x)]; }

    friend GSetMap compose(const GSetMap& outer, const GSetMap& inner) {
        if (outer.src_.get() != inner.dst_.get())
            throw InputError("maps are not composable");
        std::vector<int> hom(inner.hom_.size());
        for (std::size_t g = 0; g < hom.size(); ++g)
            hom[g] = outer.hom_[static_cast<std::size_t>(inner.hom_[g])];
        std::vector<int> pmap(inner.pmap_.size());
        for (std::size_t x = 0; x < pmap.size(); ++x)
            pmap[x] = outer.pmap_[static_cast<std::size_t>(inner.pmap_[x])];
        return GSetMap(Unchecked{}, inner.src_, outer.dst_, std::move(hom), std::move(pmap));
    }

  private:
    std::shared_ptr<const GSet> src_, dst_;
    std::vector<int> hom_;
    std::vector<int> pmap_;
};

// identity map of a model
inline GSetMap identity_map(const std::shared_ptr<const GSet>& m) {
    std::vector<int> hom(static_cast<std::size_t>(m->group().size()));
    std::iota(hom.begin(), hom.end(), 0);
    std::vector<int> pmap(static_cast<std::size_t>(m->points()));
    std::iota(pmap.begin(), pmap.end(), 0);
    return GSetMap(GSetMap::Unchecked{}, m, m, std::move(hom), std::move(pmap));
}

// projection to the coarse space (orbit set, trivial group)
inline GSetMap coarse_projection(const std::shared_ptr<const GSet>& m,
                                 const std::shared_ptr<const GSet>& coarse) {
    std::vector<int> hom(static_cast<std::size_t>(m->group().size()), 0);
    std::vector<int> pmap(static_cast<std::size_t>(m->points()));
    for (int x = 0; x < m->points(); ++x)
        pmap[static_cast<std::size_t>(x)] = m->orbit_of(x);
    return GSetMap(GSetMap::Unchecked{}, m, coarse, std::move(hom), std::move(pmap));
}

template <class R>
void check_invariant(const GSet& m, const std::vector<R>& phi) {
    if (static_cast<int>(phi.size()) != m.points())
        throw InputError("function length differs from point count");
    for (int x = 0; x < m.points(); ++x)
        if (!(phi[static_cast<std::size_t>(x)] ==
              phi[static_cast<std::size_t>(m.orbit_rep(m.orbit_of(x)))]))
            throw InputError("function is not invariant");
}

/*
 * The weighted pushforward of eq-(1) type, specialized to finite models:
 *   (f_* phi)(t) = e_T(t) * sum over source orbits O inside the preimage of
 *                  the orbit of t, of phi(O) / e_S(O).
 * The weighted Euler characteristic of a finite quotient is the sum of the
 * function's values over coarse points, which is what the orbit sum says.
 */
template <class R>
std::vector<R> stack_pushforward(const GSetMap& f, const std::vector<R>& phi) {
    const GSet& s = f.src();
    const GSet& t = f.dst();
    check_invariant(s, phi);
    std::vector<R> per_orbit(static_cast<std::size_t>(t.orbit_count()), R(0));
    for (int o = 0; o < s.orbit_count(); ++o) {
        int rep = s.orbit_rep(o);
        int target_orbit = t.orbit_of(f(rep));
        R val = phi[static_cast<std::size_t>(rep)] / R(s.e_weight(rep));
        per_orbit[static_cast<std::size_t>(target_orbit)] += val;
    }
    std::vector<R> out(static_cast<std::size_t>(t.points()), R(0));
    for (int y = 0; y < t.points(); ++y)
        out[static_cast<std::size_t>(y)] =
            R(t.e_weight(y)) * per_orbit[static_cast<std::size_t>(t.orbit_of(y))];
    return out;
}

// The plain pushforward on the underlying equivariant point sets: the value
// at t is the sum of phi over the fiber f^{-1}(t).
template <class R>
std::vector<R> equivariant_pushforward(const GSetMap& f, const std::vector<R>& phi) {
    const GSet& s = f.src();
    const GSet& t = f.dst();
    check_invariant(s, phi);
    std::vector<R> out(static_cast<std::size_t>(t.points()), R(0));
    for (int x = 0; x < s.points(); ++x)
        out[static_cast<std::size_t>(f(x))] += phi[static_cast<std::size_t>(x)];
    return out;
}

// weighted total mass: the eq-(1) Euler characteristic with trivial outer
// weight, = sum over orbits of phi/e
template <class R>
R weighted_mass(const GSet& m, const std::vector<R>& phi) {
    R total(0);
    for (int o = 0; o < m.orbit_count(); ++o) {
        int rep = m.orbit_rep(o);
        total += phi[static_cast<std::size_t>(rep)] / R(m.e_weight(rep));
    }
    return total;
}

// Inertia model: points are pairs (x, g) with g.x = x, h.(x, g) =
// (h.x, h g h^-1); the returned map is the projection (x, g) -> x.
struct InertiaModel {
    std::shared_ptr<const GSet> model;
    std::vector<std::pair<int, int>> point_labels;  // (x, g) per inertia point
    GSetMap projection;                             // to the base model
};

inline InertiaModel inertia_model(const std::shared_ptr<const GSet>& base) {
    const GSet& m = *base;
    const FinGroup& g = m.group();
    std::vector<std::pair<int, int>> pts;
    std::map<std::pair<int, int>, int> index;
    for (int x = 0; x < m.points(); ++x)
        for (int e = 0; e < g.size(); ++e)
            if (m.act(e, x) == x) {
                index[{x, e}] = static_cast<int>(pts.size());
                pts.emplace_back(x, e);
            }
    std::vector<std::vector<int>> action(static_cast<std::size_t>(g.size()));
    for (int h = 0; h < g.size(); ++h) {
        auto& row = action[static_cast<std::size_t>(h)];
        row.reserve(pts.size());
        for (const auto& [x, e] : pts)
            row.push_back(index.at({m.act(h, x), g.mul(g.mul(h, e), g.inv(h))}));
    }
    auto inertia = std::make_shared<GSet>(m.group_ptr(), std::move(action),
                                          m.name().empty() ? "" : "I(" + m.name() + ")");
    std::vector<int> hom(static_cast<std::size_t>(g.size()));
    std::iota(hom.begin(), hom.end(), 0);
    std::vector<int> pmap;
    pmap.reserve(pts.size());
    for (const auto& [x, e] : pts) pmap.push_back(x);
    GSetMap proj(GSetMap::Unchecked{}, inertia, base, std::move(hom), std::move(pmap));
    return InertiaModel{inertia, std::move(pts), std::move(proj)};
}

}  // namespace orb
