#pragma once

#include "orbicalc/matrix.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace orb {

struct ConjugacyClass {
    int representative = 0;          // smallest element id in the class
    std::vector<int> members;        // ascending ids
    long centralizer_order = 0;      // |C_G(g)|, by direct commutation count
};

// Orbit of an ordered commuting pair under simultaneous conjugation; the
// index set of the double inertia decomposition.
struct CommutingPairClass {
    std::pair<int, int> representative;  // lexicographically smallest pair
    long orbit_size = 0;
    long stabilizer_order = 0;           // |C_G(g) n C_G(h)|
};

/*
 * Finite matrix group over Q(zeta_N), closed by breadth-first products from
 * the identity. Element ids follow BFS discovery order, so they are stable
 * for a fixed generator list. Identity is always id 0.
 */
class FiniteMatrixGroup {
  public:
    static constexpr long kDefaultCap = 20000;

    static FiniteMatrixGroup generate(long conductor, long dim,
                                      const std::vector<CycMatrix>& generators,
                                      long cap = kDefaultCap) {
        FiniteMatrixGroup g;
        g.conductor_ = conductor;
        g.dim_ = dim;
        for (const auto& m : generators) {
            if (m.rows() != dim || m.cols() != dim)
                throw InputError("generator is not a " + std::to_string(dim) + "x" +
                                 std::to_string(dim) + " matrix");
            if (m.conductor() != conductor)
                throw InputError("generator conductor mismatch");
            if (m.determinant().is_zero())
                throw InputError("generator is not invertible");
        }

        CycMatrix id = CycMatrix::identity(conductor, dim);
        g.push_element(id, {}, 0, -1);
        for (std::size_t head = 0; head < g.elems_.size(); ++head) {
            int cur = static_cast<int>(head);
            g.edges_.emplace_back(generators.size(), -1);
            for (std::size_t gi = 0; gi < generators.size(); ++gi) {
                CycMatrix prod = g.elems_[head] * generators[gi];
                auto it = g.index_.find(prod);
                if (it != g.index_.end()) {
                    g.edges_[head][gi] = it->second;
                    continue;
                }
                if (static_cast<long>(g.elems_.size()) >= cap)
                    throw InputError(
                        "group closure exceeded cap " + std::to_string(cap) +
                        " (found at least " + std::to_string(g.elems_.size() + 1) +
                        " elements; generator of infinite order, or raise the cap)");
                std::vector<int> word = g.words_[head];
                word.push_back(static_cast<int>(gi));
                int fresh = static_cast<int>(g.elems_.size());
                g.edges_[head][gi] = fresh;
                g.index_.emplace(prod, fresh);
                g.push_element(std::move(prod), std::move(word), cur,
                               static_cast<int>(gi));
            }
        }

        g.finish();
        return g;
    }

    long conductor() const { return conductor_; }
    long dim() const { return dim_; }
    long size() const { return static_cast<long>(elems_.size()); }
    const CycMatrix& element(int i) const { return elems_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& word(int i) const { return words_[static_cast<std::size_t>(i)]; }

    std::optional<int> index_of(const CycMatrix& m) const {
        auto it = index_.find(m);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    int mul(int a, int b) const {
        if (!mul_.empty()) return mul_[idx(a, b)];
        // beyond the table limit products are formed on demand; exactness is
        // unaffected, only speed
        CycMatrix prod = elems_[static_cast<std::size_t>(a)] *
                         elems_[static_cast<std::size_t>(b)];
        auto it = index_.find(prod);
        if (it == index_.end()) throw InternalError("group is not closed");
        return it->second;
    }
    int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
    long element_order(int a) const { return order_[static_cast<std::size_t>(a)]; }
    bool commutes(int a, int b) const { return mul(a, b) == mul(b, a); }
    bool is_abelian() const {
        for (int a = 0; a < size(); ++a)
            for (int b = a + 1; b < size(); ++b)
                if (!commutes(a, b)) return false;
        return true;
    }

    int conjugate(int k, int g) const { return mul(mul(k, g), inv(k)); }

    std::vector<int> centralizer(int g) const {
        std::vector<int> c;
        for (int k = 0; k < size(); ++k)
            if (commutes(k, g)) c.push_back(k);
        return c;
    }

    Cyclotomic determinant(int g) const { return element(g).determinant(); }

    const std::vector<ConjugacyClass>& conjugacy_classes() const {
        std::lock_guard<std::mutex> lock(cache_->mx);
        auto& classes_ = cache_->classes;
        if (!classes_.empty() || size() == 0) return classes_;
        std::vector<bool> seen(static_cast<std::size_t>(size()), false);
        for (int g = 0; g < size(); ++g) {
            if (seen[static_cast<std::size_t>(g)]) continue;
            std::set<int> orbit;
            for (int k = 0; k < size(); ++k) orbit.insert(conjugate(k, g));
            ConjugacyClass cc;
            cc.representative = g;
            cc.members.assign(orbit.begin(), orbit.end());
            for (int m : cc.members) seen[static_cast<std::size_t>(m)] = true;
            long cent = 0;
            for (int k = 0; k < size(); ++k)
                if (commutes(k, g)) ++cent;
            cc.centralizer_order = cent;
            if (static_cast<long>(cc.members.size()) * cent != size())
                throw InternalError("class size times centralizer order != |G|");
            classes_.push_back(std::move(cc));
        }
        return classes_;
    }

    const std::vector<CommutingPairClass>& commuting_pair_classes() const {
        std::lock_guard<std::mutex> lock(cache_->mx);
        auto& pair_classes_ = cache_->pair_classes;
        if (!pair_classes_.empty() || size() == 0) return pair_classes_;
        std::set<std::pair<int, int>> seen;
        for (int g = 0; g < size(); ++g) {
            for (int h = 0; h < size(); ++h) {
                if (!commutes(g, h)) continue;
                std::pair<int, int> p{g, h};
                if (seen.count(p)) continue;
                std::set<std::pair<int, int>> orbit;
                for (int k = 0; k < size(); ++k)
                    orbit.emplace(conjugate(k, g), conjugate(k, h));
                seen.insert(orbit.begin(), orbit.end());
                CommutingPairClass pc;
                pc.representative = p;
                pc.orbit_size = static_cast<long>(orbit.size());
                long stab = 0;
                for (int k = 0; k < size(); ++k)
                    if (commutes(k, g) && commutes(k, h)) ++stab;
                pc.stabilizer_order = stab;
                if (pc.orbit_size * stab != size())
                    throw InternalError("pair orbit size times stabilizer order != |G|");
                pair_classes_.push_back(std::move(pc));
            }
        }
        return pair_classes_;
    }

    long commuting_pair_count() const {
        long total = 0;
        for (int g = 0; g < size(); ++g)
            for (int h = 0; h < size(); ++h)
                if (commutes(g, h)) ++total;
        return total;
    }

  private:
    std::size_t idx(int a, int b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(size()) +
               static_cast<std::size_t>(b);
    }

    void push_element(CycMatrix m, std::vector<int> word, int parent, int via) {
        index_.emplace(m, static_cast<int>(elems_.size()));
        elems_.push_back(std::move(m));
        words_.push_back(std::move(word));
        parent_.push_back(parent);
        via_.push_back(via);
    }

    // groups past this size skip the multiplication table (quadratic memory)
    static constexpr long kMulTableLimit = 2048;

    void finish() {
        const long n = size();
        if (n <= kMulTableLimit) {
            // products follow from the BFS edges: a * (parent * gen) =
            // (a * parent) * gen, so the table costs index lookups only
            mul_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
            for (int a = 0; a < n; ++a) mul_[idx(a, 0)] = a;
            for (int b = 1; b < n; ++b) {
                int p = parent_[static_cast<std::size_t>(b)];
                int gi = via_[static_cast<std::size_t>(b)];
                for (int a = 0; a < n; ++a)
                    mul_[idx(a, b)] =
                        edges_[static_cast<std::size_t>(mul_[idx(a, p)])]
                              [static_cast<std::size_t>(gi)];
            }
        }
        inverse_.assign(static_cast<std::size_t>(n), -1);
        order_.assign(static_cast<std::size_t>(n), 0);
        for (int a = 0; a < n; ++a) {
            if (!mul_.empty()) {
                for (int b = 0; b < n; ++b)
                    if (mul_[idx(a, b)] == 0) {
                        inverse_[static_cast<std::size_t>(a)] = b;
                        break;
                    }
            } else {
                auto it = index_.find(elems_[a].inverse());
                if (it == index_.end()) throw InternalError("element without inverse");
                inverse_[static_cast<std::size_t>(a)] = it->second;
            }
            long ord = 1;
            int p = a;
            while (p != 0) {
                p = mul(p, a);
                ++ord;
            }
            order_[static_cast<std::size_t>(a)] = ord;
        }
    }

    long conductor_ = 1;
    long dim_ = 0;
    std::vector<CycMatrix> elems_;
    std::map<CycMatrix, int> index_;
    std::vector<std::vector<int>> words_;
    std::vector<int> parent_;                // BFS discovery parent
    std::vector<int> via_;                   // generator index used from the parent
    std::vector<std::vector<int>> edges_;    // element x generator -> element
    std::vector<int> mul_;
    std::vector<int> inverse_;
    std::vector<long> order_;

    // lazily derived class data; shared across copies of the (immutable) group
    struct LazyCaches {
        std::mutex mx;
        std::vector<ConjugacyClass> classes;
        std::vector<CommutingPairClass> pair_classes;
    };
    std::shared_ptr<LazyCaches> cache_ = std::make_shared<LazyCaches>();
};

}  // namespace orb
