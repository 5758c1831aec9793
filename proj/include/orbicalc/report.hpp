#pragma once

#include "orbicalc/catalog.hpp"
#include "orbicalc/confun_suite.hpp"
#include "orbicalc/invariants.hpp"

#include <array>
#include <cstdint>
#include <iomanip>
#include <sstream>

namespace orb {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportVersion = 1;

namespace detail {

// SHA-256, FIPS 180-4; reports embed the digest of the model source bytes.
class Sha256 {
  public:
    void update(const unsigned char* data, std::size_t len) {
        for (std::size_t i = 0; i < len; ++i) {
            buf_[buflen_++] = data[i];
            total_ += 1;
            if (buflen_ == 64) {
                block();
                buflen_ = 0;
            }
        }
    }
    std::string hex_digest() {
        std::uint64_t bits = total_ * 8;
        unsigned char pad = 0x80;
        update(&pad, 1);
        unsigned char zero = 0;
        while (buflen_ != 56) update(&zero, 1);
        for (int i = 7; i >= 0; --i) {
            unsigned char b = static_cast<unsigned char>(bits >> (8 * i));
            update(&b, 1);
        }
        std::ostringstream os;
        for (std::uint32_t v : h_)
            os << std::hex << std::setfill('0') << std::setw(8) << v;
        return os.str();
    }

  private:
    static std::uint32_t rotr(std::uint32_t x, int n) {
        return (x >> n) | (x << (32 - n));
    }
    void block() {
        static constexpr std::uint32_t k[64] = {
            0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1,
            0x923f82a4, 0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3,
            0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786,
            0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
            0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147,
            0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13,
            0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
            0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
            0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a,
            0x5b9cca4f, 0x682e6ff3, 0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208,
            0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};
        std::uint32_t w[64];
        for (int i = 0; i < 16; ++i)
            w[i] = (std::uint32_t(buf_[4 * i]) << 24) | (std::uint32_t(buf_[4 * i + 1]) << 16) |
                   (std::uint32_t(buf_[4 * i + 2]) << 8) | std::uint32_t(buf_[4 * i + 3]);
        for (int i = 16; i < 64; ++i) {
            std::uint32_t s0 = rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
            std::uint32_t s1 = rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
            w[i] = w[i - 16] + s0 + w[i - 7] + s1;
        }
        std::uint32_t a = h_[0], b = h_[1], c = h_[2], d = h_[3];
        std::uint32_t e = h_[4], f = h_[5], g = h_[6], hh = h_[7];
        for (int i = 0; i < 64; ++i) {
            std::uint32_t s1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
            std::uint32_t ch = (e & f) ^ (~e & g);
            std::uint32_t t1 = hh + s1 + ch + k[i] + w[i];
            std::uint32_t s0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
            std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
            std::uint32_t t2 = s0 + maj;
            hh = g; g = f; f = e; e = d + t1;
            d = c; c = b; b = a; a = t1 + t2;
        }
        h_[0] += a; h_[1] += b; h_[2] += c; h_[3] += d;
        h_[4] += e; h_[5] += f; h_[6] += g; h_[7] += hh;
    }

    std::array<std::uint32_t, 8> h_ = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                                       0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};
    unsigned char buf_[64];
    std::size_t buflen_ = 0;
    std::uint64_t total_ = 0;
};

}  // namespace detail

inline std::string sha256_hex(const std::string& bytes) {
    detail::Sha256 h;
    h.update(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size());
    return h.hex_digest();
}

inline Json epoly_json(const EPolynomial& e) {
    Json terms = Json::array();
    for (const auto& [pq, c] : e.terms()) {
        Json t;
        t["p"] = rat_str(pq.first);
        t["q"] = rat_str(pq.second);
        t["coeff"] = rat_str(c);
        terms.push_back(std::move(t));
    }
    return terms;
}

inline Json hodge_json(const HodgeTable& t) {
    auto table = [](const std::map<EPolynomial::Exp, long>& part) {
        Json out = Json::array();
        for (const auto& [pq, h] : part) {
            Json cell;
            cell["p"] = rat_str(pq.first);
            cell["q"] = rat_str(pq.second);
            cell["h"] = h;
            out.push_back(std::move(cell));
        }
        return out;
    };
    Json j;
    j["integral"] = table(t.integral);
    j["fractional"] = table(t.fractional);
    return j;
}

inline Json sector_json(const Sector& s, bool with_age) {
    Json j;
    j["class"] = s.class_id;
    j["rep"] = s.rep_g;
    if (s.rep_h >= 0) j["rep2"] = s.rep_h;
    if (!s.component.exponents.empty()) j["eigen_exponents"] = s.component.exponents;
    j["dim"] = s.component.dim;
    if (with_age) j["age"] = rat_str(s.component.age);
    j["stabilizer_order"] = s.stabilizer_order;
    j["euler"] = rat_str(s.euler);
    j["e_poly"] = epoly_json(s.e_poly);
    return j;
}

inline Json group_json(const FiniteMatrixGroup& g) {
    Json j;
    j["order"] = g.size();
    const auto& classes = g.conjugacy_classes();
    j["conjugacy_classes"] = Json::array();
    for (const auto& c : classes) {
        Json cj;
        cj["representative"] = c.representative;
        cj["size"] = static_cast<long>(c.members.size());
        cj["centralizer_order"] = c.centralizer_order;
        cj["element_order"] = g.element_order(c.representative);
        j["conjugacy_classes"].push_back(std::move(cj));
    }
    j["num_conjugacy_classes"] = static_cast<long>(classes.size());
    j["num_commuting_pair_classes"] =
        static_cast<long>(g.commuting_pair_classes().size());
    return j;
}

/*
 * The analyze report: group structure, hypothesis certificates, sector
 * tables, and every invariant applicable to the model kind. Checks whose
 * hypotheses fail are reported as not_applicable with the certificate, never
 * as failures. Rationals are serialized as "a/b" strings throughout; the
 * report carries no floats and no timestamps, so a rerun is byte-identical.
 */
inline Json analyze_report(const LoadedModel& model) {
    Json j;
    j["tool"] = {{"name", "orbicalc"}, {"version", kToolVersion}};
    j["report_version"] = kReportVersion;
    Json mj;
    mj["name"] = model.name;
    mj["kind"] = model.kind;
    mj["sha256"] = sha256_hex(model.source_text);

    if (model.quotient) {
        const QuotientModel& m = *model.quotient;
        mj["root_order"] = m.conductor();
        mj["dimension"] = m.ambient_dim();
        mj["stack_dim"] = m.stack_dim();
        j["model"] = std::move(mj);
        j["group"] = group_json(m.group());

        auto gor = m.gorenstein_check();
        Json gj;
        gj["ok"] = gor.ok;
        gj["ages_integral"] = gor.ages_integral;
        if (gor.determinants_one.has_value())
            gj["determinants_one"] = *gor.determinants_one;
        if (!gor.certificate.empty()) gj["certificate"] = gor.certificate;
        auto keq = m.k_equivalence_check();
        Json kj;
        kj["ok"] = keq.ok;
        kj["certificate"] = keq.certificate;
        j["checks"] = {{"gorenstein", std::move(gj)}, {"k_equivalence", std::move(kj)}};

        Json sj;
        sj["inertia"] = Json::array();
        for (const auto& s : inertia_sectors(m))
            sj["inertia"].push_back(sector_json(s, true));
        sj["double_inertia"] = Json::array();
        for (const auto& s : double_inertia_sectors(m))
            sj["double_inertia"].push_back(sector_json(s, false));
        j["sectors"] = std::move(sj);

        Json inv;
        auto ce = coarse_euler(m);
        inv["coarse_euler"] = {{"sector_route", rat_str(ce.sector_route)},
                               {"element_route", rat_str(ce.element_route)},
                               {"value", rat_str(ce.value)}};
        auto se = stringy_euler(m);
        inv["stringy_euler"] = {{"sector_route", rat_str(se.sector_route)},
                                {"pair_route", rat_str(se.pair_route)},
                                {"epoly_route", rat_str(se.epoly_route)},
                                {"value", rat_str(se.value)}};
        inv["orbifold_E"] = epoly_json(orbifold_E(m));
        auto gb = inertia_gauss_bonnet(m);
        inv["inertia_gauss_bonnet"] = {
            {"sector_weighted", rat_str(gb.sector_weighted)},
            {"inertia_coarse", rat_str(gb.inertia_coarse)},
            {"sector_weighted_equals", "coarse_euler"},
            {"inertia_coarse_equals", "stringy_euler"}};
        if (m.kind() == ModelKind::Projective) inv["cr_hodge"] = hodge_json(cr_hodge(m));
        auto guarded = [&](const char* key, auto&& fn) {
            try {
                inv[key] = fn();
            } catch (const PreconditionError& e) {
                inv[key] = {{"not_applicable", e.what()}};
            }
        };
        guarded("c1_ctop1", [&] { return Json(rat_str(c1_ctop1(m))); });
        guarded("trace", [&] {
            auto t = trace_check(m);
            return Json{{"lhs", rat_str(t.lhs)}, {"rhs", rat_str(t.rhs)}, {"equal", t.equal}};
        });
        guarded("evidence", [&] {
            auto t = evidence_check(m);
            return Json{{"lhs", rat_str(t.lhs)}, {"rhs", rat_str(t.rhs)}, {"equal", t.equal}};
        });
        j["invariants"] = std::move(inv);
        return j;
    }

    // gset model: orbit structure plus the function-calculus checks
    const GSet& m = *model.gset;
    mj["points"] = m.points();
    j["model"] = std::move(mj);
    Json gj;
    gj["order"] = m.group().size();
    gj["orbits"] = Json::array();
    for (int o = 0; o < m.orbit_count(); ++o) {
        Json oj;
        oj["representative"] = m.orbit_rep(o);
        oj["size"] = m.orbit_size(o);
        oj["stabilizer_order"] = m.e_weight(m.orbit_rep(o));
        gj["orbits"].push_back(std::move(oj));
    }
    j["group"] = std::move(gj);

    auto shared = model.gset;
    auto phi = stringy_function<Frac64>(shared);
    Json sf = Json::array();
    for (const auto& v : phi) sf.push_back(v.str());
    Frac64 total(0);
    for (const auto& v : phi) total += v;
    Frac64 shadow = Frac64(commuting_triple_count(m)) / Frac64(m.group().size());
    auto p33 = verify_prop_3_3<Frac64>(shared);
    j["confun"] = {{"stringy_function", std::move(sf)},
                   {"stringy_total", total.str()},
                   {"commuting_triples_over_order", shadow.str()},
                   {"prop_3_3", p33.ok},
                   {"inertia_points",
                    static_cast<long>(inertia_model(shared).model->points())}};
    return j;
}

// plain-text rendering of the analyze report
inline std::string analyze_text(const Json& r) {
    std::ostringstream os;
    const auto& m = r.at("model");
    os << "model " << m.at("name").get<std::string>() << " (" <<
        m.at("kind").get<std::string>() << ")\n";
    if (m.contains("dimension"))
        os << "  dimension " << m.at("dimension") << ", root order " << m.at("root_order")
           << ", stack dim " << m.at("stack_dim") << "\n";
    if (m.contains("points")) os << "  points " << m.at("points") << "\n";
    os << "  sha256 " << m.at("sha256").get<std::string>() << "\n";
    const auto& g = r.at("group");
    os << "group of order " << g.at("order");
    if (g.contains("num_conjugacy_classes"))
        os << ", " << g.at("num_conjugacy_classes") << " conjugacy classes, "
           << g.at("num_commuting_pair_classes") << " commuting pair classes";
    os << "\n";
    if (r.contains("checks")) {
        const auto& c = r.at("checks");
        auto fmt = [&](const char* key) {
            const auto& e = c.at(key);
            os << "  " << key << ": " << (e.at("ok").get<bool>() ? "yes" : "NO");
            if (e.contains("certificate"))
                os << " (" << e.at("certificate").get<std::string>() << ")";
            os << "\n";
        };
        fmt("gorenstein");
        fmt("k_equivalence");
    }
    if (r.contains("sectors")) {
        const auto& s = r.at("sectors");
        os << "sectors: " << s.at("inertia").size() << " inertia, "
           << s.at("double_inertia").size() << " double inertia\n";
        os << "  inertia (class, dim, age, stab, chi):\n";
        for (const auto& sec : s.at("inertia"))
            os << "    " << sec.at("class") << "  dim " << sec.at("dim") << "  age "
               << sec.at("age").get<std::string>() << "  stab "
               << sec.at("stabilizer_order") << "  chi "
               << sec.at("euler").get<std::string>() << "\n";
    }
    if (r.contains("invariants")) {
        const auto& inv = r.at("invariants");
        os << "invariants:\n";
        os << "  coarse Euler characteristic  "
           << inv.at("coarse_euler").at("value").get<std::string>() << "\n";
        os << "  stringy Euler characteristic "
           << inv.at("stringy_euler").at("value").get<std::string>() << "\n";
        auto poly_str = [](const Json& terms) {
            std::ostringstream ps;
            bool first = true;
            for (const auto& t : terms) {
                if (!first) ps << " + ";
                first = false;
                std::string c = t.at("coeff").get<std::string>();
                std::string p = t.at("p").get<std::string>();
                std::string q = t.at("q").get<std::string>();
                if (p == "0" && q == "0") { ps << c; continue; }
                if (c != "1") ps << c << "*";
                if (p == q) {
                    ps << "(uv)";
                    if (p != "1") ps << "^" << p;
                } else {
                    ps << "u^" << p << "*v^" << q;
                }
            }
            if (first) ps << "0";
            return ps.str();
        };
        os << "  orbifold E-polynomial        " << poly_str(inv.at("orbifold_E")) << "\n";
        if (inv.contains("cr_hodge")) {
            os << "  Chen-Ruan Hodge numbers      ";
            for (const auto& cell : inv.at("cr_hodge").at("integral"))
                os << "h^{" << cell.at("p").get<std::string>() << ","
                   << cell.at("q").get<std::string>() << "}=" << cell.at("h") << " ";
            for (const auto& cell : inv.at("cr_hodge").at("fractional"))
                os << "h^{" << cell.at("p").get<std::string>() << ","
                   << cell.at("q").get<std::string>() << "}=" << cell.at("h")
                   << " (fractional) ";
            os << "\n";
        }
        auto id_line = [&](const char* key, const char* label) {
            if (!inv.contains(key)) return;
            const auto& t = inv.at(key);
            os << "  " << label << " ";
            if (t.is_object() && t.contains("not_applicable")) {
                os << "not applicable: " << t.at("not_applicable").get<std::string>()
                   << "\n";
            } else if (t.is_object()) {
                os << t.at("lhs").get<std::string>() << " = "
                   << t.at("rhs").get<std::string>() << " ("
                   << (t.at("equal").get<bool>() ? "equal" : "NOT EQUAL") << ")\n";
            } else {
                os << t.get<std::string>() << "\n";
            }
        };
        id_line("c1_ctop1", "stringy Chern number c1*c_(top-1)");
        id_line("trace", "trace identity          ");
        id_line("evidence", "evidence identity       ");
    }
    if (r.contains("confun")) {
        const auto& cf = r.at("confun");
        os << "constructible-function data:\n";
        os << "  stringy function on orbits  [";
        bool first = true;
        for (const auto& v : cf.at("stringy_function")) {
            if (!first) os << ", ";
            first = false;
            os << v.get<std::string>();
        }
        os << "]\n";
        os << "  total " << cf.at("stringy_total").get<std::string>()
           << ", commuting triples / |G| "
           << cf.at("commuting_triples_over_order").get<std::string>() << "\n";
        os << "  proposition 3.3 pushforward check: "
           << (cf.at("prop_3_3").get<bool>() ? "pass" : "FAIL") << "\n";
    }
    return os.str();
}

}  // namespace orb
