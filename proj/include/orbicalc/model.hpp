#pragma once

#include "orbicalc/group.hpp"

#include <algorithm>
#include <iterator>

#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace orb {

enum class ModelKind { Affine, Projective };

inline const char* kind_name(ModelKind k) {
    return k == ModelKind::Affine ? "affine" : "projective";
}

// Eigenvalue data of one group element g of order m: exponent a stands for
// the eigenvalue zeta_m^a, a normalized to [0, m).
struct EigenEntry {
    long exponent = 0;
    long multiplicity = 0;
    std::vector<CycVec> basis;
    // ascending coordinate labels when the eigenspace is a coordinate
    // subspace (always the case for diagonal actions); enables intersection
    // by label matching instead of elimination
    bool coordinate = false;
    std::vector<long> coord;
};

struct EigenData {
    long order = 1;
    std::vector<EigenEntry> entries;  // ascending exponent
};

// One connected piece of a fixed locus. For projective models the component
// is the projectivized eigenspace P(E) and dim is its projective dimension;
// for affine models it is the fixed subspace itself.
struct FixedComponent {
    long dim = 0;
    Rational age;                  // tangent-weight age; single inertia only
    std::vector<long> exponents;   // defining eigenvalue exponents
};

struct CheckResult {
    bool ok = true;
    std::string certificate;  // offending element / component when not ok
};

struct GorensteinResult {
    bool ok = true;
    bool ages_integral = true;
    // affine cross-check: det(g) = 1 for every g; must agree with the ages
    std::optional<bool> determinants_one;
    std::string certificate;
};

/*
 * A global quotient [V/G] or [P(V)/G] for a finite matrix group G acting on
 * V of dimension n through matrices over Q(zeta_N).
 *
 * Construction enforces the standing hypotheses that make the sector
 * calculus valid: every element order divides lcm(2, N), so all eigenvalues
 * lie in the field (otherwise the fix is to raise root_order), and a
 * projective model contains no nontrivial scalar, so the action on P(V) is
 * faithful and stabilizer orders downstream are the true ones.
 */
class QuotientModel {
  public:
    static QuotientModel affine(long conductor, long n,
                                const std::vector<CycMatrix>& generators,
                                long cap = FiniteMatrixGroup::kDefaultCap) {
        return QuotientModel(ModelKind::Affine, conductor, n, generators, cap);
    }
    static QuotientModel projective(long conductor, long n,
                                    const std::vector<CycMatrix>& generators,
                                    long cap = FiniteMatrixGroup::kDefaultCap) {
        return QuotientModel(ModelKind::Projective, conductor, n, generators, cap);
    }

    ModelKind kind() const { return kind_; }
    long conductor() const { return conductor_; }
    long ambient_dim() const { return n_; }  // dim V
    long stack_dim() const { return kind_ == ModelKind::Affine ? n_ : n_ - 1; }
    const FiniteMatrixGroup& group() const { return group_; }

    const EigenData& eigen(int g) const {
        std::lock_guard<std::mutex> lock(cache_->mx);
        auto it = cache_->eigen.find(g);
        if (it != cache_->eigen.end()) return it->second;

        const CycMatrix& m = group_.element(g);
        EigenData data;
        data.order = group_.element_order(g);
        bool diag = true;
        for (long i = 0; i < n_ && diag; ++i)
            for (long j = 0; j < n_ && diag; ++j)
                if (i != j && !m.at(i, j).is_zero()) diag = false;
        long total = 0;
        for (long k = 0; k < data.order; ++k) {
            Cyclotomic lambda = Cyclotomic::root_of_unity(conductor_, data.order, k);
            std::vector<CycVec> basis;
            if (diag) {
                std::vector<long> idx;
                for (long i = 0; i < n_; ++i)
                    if (m.at(i, i) == lambda) idx.push_back(i);
                basis = coordinate_basis(conductor_, n_, idx);
            } else {
                CycMatrix shifted = m;
                for (long i = 0; i < n_; ++i)
                    shifted.at(i, i) = shifted.at(i, i) - lambda;
                basis = shifted.kernel_basis();
            }
            if (basis.empty()) continue;
            EigenEntry e;
            e.exponent = k;
            e.multiplicity = static_cast<long>(basis.size());
            e.basis = std::move(basis);
            e.coordinate = coordinate_indices(e.basis, e.coord);
            if (!e.coordinate) e.coord.clear();
            total += e.multiplicity;
            data.entries.push_back(std::move(e));
        }
        if (total != n_)
            throw InternalError("eigenspace multiplicities of element " +
                                std::to_string(g) + " sum to " + std::to_string(total) +
                                " != " + std::to_string(n_));
        return cache_->eigen.emplace(g, std::move(data)).first->second;
    }

    // age of g acting on V: sum of normalized eigenvalue exponents a/m
    Rational age_affine(int g) const {
        const EigenData& d = eigen(g);
        Rational age(0);
        for (const auto& e : d.entries)
            age += Rational(e.exponent * e.multiplicity, d.order);
        return age;
    }

    long fixed_dim_affine(int g) const {
        const EigenData& d = eigen(g);
        for (const auto& e : d.entries)
            if (e.exponent == 0) return e.multiplicity;
        return 0;
    }

    FixedComponent affine_component(int g) const {
        FixedComponent c;
        c.dim = fixed_dim_affine(g);
        c.age = age_affine(g);
        return c;
    }

    /*
     * Fixed locus of g on P(V) is the disjoint union of the P(E_lambda).
     * The age at P(E_lambda) sums the normalized tangent weights
     * frac((a_mu - a_lambda)/m) of Hom(E_lambda, E_mu) over mu != lambda,
     * which is the tangent representation of P(V) along the component.
     */
    std::vector<FixedComponent> projective_components(int g) const {
        require_kind(ModelKind::Projective, "projective_components");
        const EigenData& d = eigen(g);
        std::vector<FixedComponent> comps;
        for (const auto& e : d.entries) {
            FixedComponent c;
            c.dim = e.multiplicity - 1;
            c.exponents = {e.exponent};
            Rational age(0);
            for (const auto& f : d.entries) {
                if (f.exponent == e.exponent) continue;
                long delta = ((f.exponent - e.exponent) % d.order + d.order) % d.order;
                age += Rational(delta * f.multiplicity, d.order);
            }
            c.age = age;
            comps.push_back(std::move(c));
        }
        return comps;
    }

    // Components of Fix(g) n Fix(h) for a commuting pair. Ages are not part
    // of the pair data; only dimensions feed the double-inertia integrals.
    std::vector<FixedComponent> double_fixed(int g, int h) const {
        if (!group_.commutes(g, h))
            throw InputError("double_fixed requires a commuting pair");
        if (kind_ == ModelKind::Affine) {
            FixedComponent c;
            c.dim = fixed_intersection_dim(g, h);
            return {c};
        }
        const EigenData& dg = eigen(g);
        const EigenData& dh = eigen(h);
        std::vector<FixedComponent> comps;
        for (const auto& eg : dg.entries) {
            for (const auto& eh : dh.entries) {
                long d = intersection_dim(eg, eh);
                if (d == 0) continue;
                FixedComponent c;
                c.dim = d - 1;
                c.exponents = {eg.exponent, eh.exponent};
                comps.push_back(std::move(c));
            }
        }
        return comps;
    }

    // double_fixed with memoization; the Euler routes revisit pairs heavily
    const std::vector<FixedComponent>& double_fixed_cached(int g, int h) const {
        auto key = std::make_pair(g, h);
        {
            std::lock_guard<std::mutex> lock(cache_->pair_mx);
            auto it = cache_->pair_components.find(key);
            if (it != cache_->pair_components.end()) return it->second;
        }
        std::vector<FixedComponent> comps = double_fixed(g, h);
        std::lock_guard<std::mutex> lock(cache_->pair_mx);
        return cache_->pair_components.emplace(key, std::move(comps)).first->second;
    }

    GorensteinResult gorenstein_check() const {
        GorensteinResult r;
        for (const auto& cls : group_.conjugacy_classes()) {
            int g = cls.representative;
            if (kind_ == ModelKind::Affine) {
                Rational age = age_affine(g);
                if (!is_integer(age) && r.ages_integral) {
                    r.ages_integral = false;
                    r.certificate = "element " + std::to_string(g) + " has age " +
                                    rat_str(age);
                }
            } else {
                for (const auto& c : projective_components(g)) {
                    if (!is_integer(c.age)) {
                        r.ages_integral = false;
                        r.certificate = "element " + std::to_string(g) +
                                        ", eigenvalue exponent " +
                                        std::to_string(c.exponents[0]) + ", age " +
                                        rat_str(c.age);
                        break;
                    }
                }
            }
            if (!r.ages_integral) break;
        }
        if (kind_ == ModelKind::Affine) {
            bool dets = true;
            std::string det_cert;
            for (int g = 0; g < group_.size(); ++g) {
                if (group_.determinant(g) != Cyclotomic::one(conductor_)) {
                    dets = false;
                    det_cert = "element " + std::to_string(g) + " has determinant " +
                               group_.determinant(g).str();
                    break;
                }
            }
            r.determinants_one = dets;
            if (dets != r.ages_integral)
                throw InternalError(
                    "Gorenstein criteria disagree: ages_integral=" +
                    std::to_string(r.ages_integral) +
                    " determinants_one=" + std::to_string(dets));
            if (!dets && r.certificate.empty()) r.certificate = det_cert;
        }
        r.ok = r.ages_integral;
        return r;
    }

    /*
     * K-equivalence of the stack with its coarse space fails exactly when
     * some nonidentity element fixes a divisor. Affine: a fixed subspace of
     * dimension n-1 (a quasi-reflection). Projective: an eigenvalue multiset
     * {lambda^(n-1), mu} fixing a hyperplane pointwise. The absence of
     * nontrivial scalars in projective models is already a construction
     * invariant.
     */
    CheckResult k_equivalence_check() const {
        CheckResult r;
        for (const auto& cls : group_.conjugacy_classes()) {
            int g = cls.representative;
            if (g == 0) continue;
            if (kind_ == ModelKind::Affine) {
                if (fixed_dim_affine(g) == n_ - 1) {
                    r.ok = false;
                    r.certificate = "element " + std::to_string(g) +
                                    " is a quasi-reflection (fixes a hyperplane)";
                    return r;
                }
            } else {
                const EigenData& d = eigen(g);
                for (const auto& e : d.entries) {
                    if (e.multiplicity == n_ - 1) {
                        r.ok = false;
                        r.certificate =
                            "element " + std::to_string(g) +
                            " fixes the divisor P(E) of eigenvalue exponent " +
                            std::to_string(e.exponent) + " pointwise";
                        return r;
                    }
                }
            }
        }
        r.certificate = "no nonidentity element fixes a divisor";
        return r;
    }

  private:
    QuotientModel(ModelKind kind, long conductor, long n,
                  const std::vector<CycMatrix>& generators, long cap)
        : kind_(kind), conductor_(conductor), n_(n),
          group_(FiniteMatrixGroup::generate(conductor, n, generators, cap)) {
        if (n_ < 1) throw InputError("model dimension must be at least 1");
        const long torsion = cyc_field(conductor_).torsion_order;
        for (int g = 0; g < group_.size(); ++g) {
            long m = group_.element_order(g);
            if (torsion % m != 0)
                throw InputError(
                    "element of order " + std::to_string(m) +
                    " has eigenvalues outside Q(zeta_" + std::to_string(conductor_) +
                    "); raise root_order (e.g. to " +
                    std::to_string(std::lcm(conductor_, m)) + ")");
        }
        if (kind_ == ModelKind::Projective) {
            for (int g = 1; g < group_.size(); ++g)
                if (group_.element(g).is_scalar())
                    throw InputError(
                        "projective model contains the nontrivial scalar element " +
                        std::to_string(g) +
                        "; quotient the scalar subgroup out of the input");
        }
    }

    void require_kind(ModelKind k, const char* what) const {
        if (kind_ != k)
            throw PreconditionError(std::string(what) + " requires a " +
                                    kind_name(k) + " model");
    }

    long fixed_intersection_dim(int g, int h) const {
        const EigenEntry* bg = fixed_entry(g);
        const EigenEntry* bh = fixed_entry(h);
        if (bg == nullptr || bh == nullptr) return 0;
        return intersection_dim(*bg, *bh);
    }

    long intersection_dim(const EigenEntry& a, const EigenEntry& b) const {
        if (a.coordinate && b.coordinate) {
            std::vector<long> common;
            std::set_intersection(a.coord.begin(), a.coord.end(), b.coord.begin(),
                                  b.coord.end(), std::back_inserter(common));
            return static_cast<long>(common.size());
        }
        auto meet = intersect_subspaces(conductor_, n_, {a.basis, b.basis});
        return static_cast<long>(meet.size());
    }
    const EigenEntry* fixed_entry(int g) const {
        const EigenData& d = eigen(g);
        for (const auto& e : d.entries)
            if (e.exponent == 0) return &e;
        return nullptr;
    }

    ModelKind kind_;
    long conductor_;
    long n_;
    FiniteMatrixGroup group_;

    struct Cache {
        std::mutex mx;
        std::map<int, EigenData> eigen;
        std::mutex pair_mx;
        std::map<std::pair<int, int>, std::vector<FixedComponent>> pair_components;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace orb
