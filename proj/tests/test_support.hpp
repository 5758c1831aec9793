#pragma once

#include "orbicalc/cyclotomic.hpp"
#include "orbicalc/matrix.hpp"
#include "orbicalc/model.hpp"

#include <random>

namespace orbtest {

// fixed seeds keep every run byte-for-byte reproducible
inline std::mt19937_64 make_rng(unsigned long long seed) {
    return std::mt19937_64(seed);
}

inline orb::Rational random_small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    return orb::Rational(num(rng), den(rng));
}

inline orb::Cyclotomic random_cyclotomic(std::mt19937_64& rng, long conductor) {
    const auto& f = orb::cyc_field(conductor);
    orb::Cyclotomic acc(conductor);
    for (long j = 0; j < f.phi; ++j) {
        orb::Rational c = random_small_rational(rng);
        if (c == 0) continue;
        acc += c * orb::Cyclotomic::zeta(conductor, j);
    }
    return acc;
}

// build a matrix from cyclotomic literals, row major
inline orb::CycMatrix mat(long conductor,
                          const std::vector<std::vector<std::string>>& rows) {
    orb::CycMatrix m(conductor, static_cast<long>(rows.size()),
                     static_cast<long>(rows.at(0).size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<long>(i), static_cast<long>(j)) =
                orb::parse_cyclotomic(rows[i][j], conductor);
    return m;
}

// permutation matrix sending basis vector e_i to e_{images[i]}
inline orb::CycMatrix perm_mat(long conductor, const std::vector<int>& images) {
    long n = static_cast<long>(images.size());
    orb::CycMatrix m(conductor, n, n);
    for (long i = 0; i < n; ++i)
        m.at(images[static_cast<std::size_t>(i)], i) = orb::Cyclotomic::one(conductor);
    return m;
}

inline orb::CycMatrix random_matrix(std::mt19937_64& rng, long conductor, long rows,
                                    long cols) {
    orb::CycMatrix m(conductor, rows, cols);
    std::uniform_int_distribution<int> sparse(0, 2);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j)
            if (sparse(rng) != 0) m.at(i, j) = random_cyclotomic(rng, conductor);
    return m;
}

/*
 * Random abelian diagonal action: generators are diagonal matrices of
 * N-th roots of unity. Rejection keeps the group order within max_order;
 * projective draws are also retried until no nontrivial scalar occurs.
 */
inline orb::QuotientModel random_diagonal_model(std::mt19937_64& rng,
                                                orb::ModelKind kind,
                                                long max_dim = 4,
                                                long max_order = 36) {
    static const long conductors[] = {2, 3, 4, 5, 6, 8, 9, 12};
    for (int attempt = 0; attempt < 200; ++attempt) {
        long n = 1 + static_cast<long>(rng() % static_cast<unsigned long long>(max_dim));
        if (kind == orb::ModelKind::Projective && n < 2) n = 2;
        long conductor = conductors[rng() % 8];
        int num_gens = 1 + static_cast<int>(rng() % 2);
        std::vector<orb::CycMatrix> gens;
        for (int t = 0; t < num_gens; ++t) {
            orb::CycVec diag;
            for (long i = 0; i < n; ++i)
                diag.push_back(orb::Cyclotomic::zeta(
                    conductor, static_cast<long>(rng() % static_cast<unsigned long long>(
                                   conductor))));
            gens.push_back(orb::CycMatrix::diagonal(conductor, diag));
        }
        try {
            orb::QuotientModel m =
                kind == orb::ModelKind::Affine
                    ? orb::QuotientModel::affine(conductor, n, gens, max_order)
                    : orb::QuotientModel::projective(conductor, n, gens, max_order);
            return m;
        } catch (const orb::InputError&) {
            continue;  // cap exceeded or scalar element; redraw
        }
    }
    throw std::runtime_error("random_diagonal_model failed to draw a model");
}

}  // namespace orbtest
