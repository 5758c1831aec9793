#pragma once

#include "orbicalc/confun.hpp"
#include "orbicalc/model.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace orb {

using Json = nlohmann::ordered_json;

// A model file, parsed and validated: exactly one of quotient / gset is set.
struct LoadedModel {
    std::string name;
    std::string kind;         // "affine" | "projective" | "gset"
    std::string source_text;  // exact input bytes, hashed for provenance
    std::optional<QuotientModel> quotient;
    std::shared_ptr<const GSet> gset;
};

namespace detail {

inline long line_of_offset(const std::string& text, std::size_t byte) {
    long line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

inline const Json& field(const Json& j, const char* key, const char* expected) {
    auto it = j.find(key);
    if (it == j.end())
        throw InputError(std::string("missing field '") + key + "' (" + expected + ")");
    return *it;
}

inline long int_field(const Json& j, const char* key) {
    const Json& f = field(j, key, "integer");
    if (!f.is_number_integer())
        throw InputError(std::string("field '") + key + "' must be an integer");
    return f.get<long>();
}

}  // namespace detail

// Build a G-set model from permutation generators acting on the point set;
// the abstract group is the closure inside the symmetric group, realized
// through the matrix engine as permutation matrices.
inline std::shared_ptr<const GSet> gset_from_permutations(
    long points, const std::vector<std::vector<int>>& generators,
    const std::string& name, long cap = FiniteMatrixGroup::kDefaultCap) {
    if (points < 1) throw InputError("gset needs at least one point");
    std::vector<CycMatrix> mats;
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
        const auto& images = generators[gi];
        if (static_cast<long>(images.size()) != points)
            throw InputError("generators[" + std::to_string(gi) + "] must list " +
                             std::to_string(points) + " images");
        std::vector<bool> seen(static_cast<std::size_t>(points), false);
        CycMatrix m(1, points, points);
        for (long x = 0; x < points; ++x) {
            int y = images[static_cast<std::size_t>(x)];
            if (y < 0 || y >= points || seen[static_cast<std::size_t>(y)])
                throw InputError("generators[" + std::to_string(gi) +
                                 "] is not a permutation");
            seen[static_cast<std::size_t>(y)] = true;
            m.at(y, x) = Cyclotomic::one(1);
        }
        mats.push_back(std::move(m));
    }
    FiniteMatrixGroup g = FiniteMatrixGroup::generate(1, points, mats, cap);
    auto fin = std::make_shared<const FinGroup>(
        FinGroup::from_matrix_group(g, name.empty() ? "G" : name + ".group"));
    std::vector<std::vector<int>> action(static_cast<std::size_t>(g.size()));
    for (int e = 0; e < g.size(); ++e) {
        auto& row = action[static_cast<std::size_t>(e)];
        row.resize(static_cast<std::size_t>(points));
        const CycMatrix& m = g.element(e);
        for (long x = 0; x < points; ++x) {
            for (long y = 0; y < points; ++y)
                if (!m.at(y, x).is_zero()) {
                    row[static_cast<std::size_t>(x)] = static_cast<int>(y);
                    break;
                }
        }
    }
    return std::make_shared<const GSet>(fin, std::move(action), name);
}

inline LoadedModel load_model_json(const std::string& text, const std::string& origin) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(origin + ": JSON parse error at line " +
                         std::to_string(detail::line_of_offset(text, e.byte)) + ": " +
                         e.what());
    }
    try {
        if (!j.is_object()) throw InputError("top level must be an object");
        LoadedModel out;
        out.source_text = text;
        out.name = j.value("name", origin);
        const Json& kind = detail::field(j, "kind", "\"affine\", \"projective\" or \"gset\"");
        if (!kind.is_string()) throw InputError("field 'kind' must be a string");
        out.kind = kind.get<std::string>();

        if (out.kind == "gset") {
            long points = detail::int_field(j, "points");
            const Json& gens = detail::field(j, "generators", "array of permutations");
            if (!gens.is_array()) throw InputError("field 'generators' must be an array");
            std::vector<std::vector<int>> perms;
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                const Json& p = gens[gi];
                if (!p.is_array())
                    throw InputError("generators[" + std::to_string(gi) +
                                     "] must be an array of point images");
                std::vector<int> images;
                for (const Json& v : p) {
                    if (!v.is_number_integer())
                        throw InputError("generators[" + std::to_string(gi) +
                                         "] must contain integers");
                    images.push_back(v.get<int>());
                }
                perms.push_back(std::move(images));
            }
            long cap = j.contains("cap") ? detail::int_field(j, "cap")
                                         : FiniteMatrixGroup::kDefaultCap;
            out.gset = gset_from_permutations(points, perms, out.name, cap);
            return out;
        }

        if (out.kind != "affine" && out.kind != "projective")
            throw InputError("field 'kind' must be \"affine\", \"projective\" or \"gset\"");

        long root_order = detail::int_field(j, "root_order");
        long dimension = detail::int_field(j, "dimension");
        if (root_order < 1) throw InputError("field 'root_order' must be positive");
        if (dimension < 1) throw InputError("field 'dimension' must be positive");
        const Json& gens = detail::field(j, "generators", "array of matrices");
        if (!gens.is_array()) throw InputError("field 'generators' must be an array");
        std::vector<CycMatrix> mats;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            const Json& gm = gens[gi];
            if (!gm.is_array() || static_cast<long>(gm.size()) != dimension)
                throw InputError("generators[" + std::to_string(gi) + "] must be a " +
                                 std::to_string(dimension) + "x" +
                                 std::to_string(dimension) + " matrix");
            CycMatrix m(root_order, dimension, dimension);
            for (std::size_t r = 0; r < gm.size(); ++r) {
                const Json& row = gm[r];
                if (!row.is_array() || static_cast<long>(row.size()) != dimension)
                    throw InputError("generators[" + std::to_string(gi) + "][" +
                                     std::to_string(r) + "] must list " +
                                     std::to_string(dimension) + " entries");
                for (std::size_t c = 0; c < row.size(); ++c) {
                    const Json& entry = row[c];
                    if (!entry.is_string())
                        throw InputError("generators[" + std::to_string(gi) + "][" +
                                         std::to_string(r) + "][" + std::to_string(c) +
                                         "] must be a cyclotomic literal string");
                    try {
                        m.at(static_cast<long>(r), static_cast<long>(c)) =
                            parse_cyclotomic(entry.get<std::string>(), root_order);
                    } catch (const InputError& e) {
                        throw InputError("generators[" + std::to_string(gi) + "][" +
                                         std::to_string(r) + "][" + std::to_string(c) +
                                         "]: " + e.what());
                    }
                }
            }
            mats.push_back(std::move(m));
        }
        long cap = j.contains("cap") ? detail::int_field(j, "cap")
                                     : FiniteMatrixGroup::kDefaultCap;
        out.quotient = out.kind == "affine"
                           ? QuotientModel::affine(root_order, dimension, mats, cap)
                           : QuotientModel::projective(root_order, dimension, mats, cap);
        return out;
    } catch (const InputError& e) {
        throw InputError(origin + ": " + e.what());
    }
}

inline LoadedModel load_model_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open model file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_model_json(ss.str(), path);
}

}  // namespace orb
