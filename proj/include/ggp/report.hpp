#pragma once

// Serialization layer: JSON parsing of family descriptors, Euler inputs and
// q-series; JSON/SVG/text rendering of the atlas report and the region figure.
// All output is deterministic (fixed key order, fixed region order) so the
// documents can be golden-tested byte for byte.

#include "atlas.hpp"
#include "euler.hpp"
#include "qexp.hpp"

#include "json.hpp"

#include <map>
#include <sstream>
#include <string>

namespace ggp {

using Json = nlohmann::ordered_json;

// ---- primitive parsers --------------------------------------------------

inline Int json_int(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw validation_error("bad integer literal: " + j.dump());
        }
    }
    throw validation_error("expected an integer, got " + j.dump());
}

inline long json_long(const Json& j) { return static_cast<long>(json_int(j)); }

inline Rat json_rat(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) {
        try {
            std::string s = j.get<std::string>();
            auto slash = s.find('/');
            if (slash == std::string::npos) return Rat(Int(s));
            Rat r(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
            return r;
        } catch (const std::exception&) {
            throw validation_error("bad rational literal: " + j.dump());
        }
    }
    throw validation_error("expected a rational, got " + j.dump());
}

inline std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline DirichletCharacter json_character(const Json& j) {
    if (j.is_null()) return DirichletCharacter();
    Int modulus = json_int(j.at("modulus"));
    std::map<Int, long> exps;
    if (j.contains("exponents"))
        for (auto& [key, val] : j.at("exponents").items())
            exps[Int(key)] = json_long(val);
    return DirichletCharacter::from_exponents(modulus, exps);
}

inline Json character_to_json(const DirichletCharacter& chi) {
    Json e = Json::object();
    for (auto& f : chi.factors())
        if (f.a != 0) e[f.prime.str()] = f.a;
    return Json{{"modulus", chi.modulus().str()}, {"exponents", e}};
}

inline AlgNum json_algnum(const Json& j) {
    if (j.is_number_integer() || j.is_string()) return AlgNum(json_rat(j));
    if (!j.is_object()) throw validation_error("bad algebraic number: " + j.dump());
    if (j.contains("rational")) return AlgNum(json_rat(j.at("rational")));
    QuadExt F(json_rat(j.at("t")), json_rat(j.at("n")),
              j.contains("branch") ? json_long(j.at("branch")) : 0);
    return AlgNum(json_rat(j.at("x")), json_rat(j.at("y")), F);
}

// ---- Euler input ---------------------------------------------------------

inline GL2HeckeParams json_gl2(const Json& j, long c, const Int& p) {
    AlgNum unit = j.contains("unit") ? json_algnum(j.at("unit")) : AlgNum(1);
    if (j.contains("a_p")) {
        std::optional<int> branch;
        if (j.contains("branch")) branch = static_cast<int>(json_long(j.at("branch")));
        if (!unit.is_rational())
            throw validation_error("a_p form requires a rational unit");
        return ordinary_gl2(json_rat(j.at("a_p")), unit.rational(), c, p, branch);
    }
    return GL2HeckeParams(json_algnum(j.at("a")), json_algnum(j.at("b")), c, p, unit);
}

inline EulerInput json_euler_input(const Json& j) {
    Int p = json_int(j.at("p"));
    Weights w(json_long(j.at("k1")), json_long(j.at("k2")), json_long(j.at("c1")),
              json_long(j.at("c2")));
    const Json& g = j.at("gsp4");
    AlgNum chi = g.contains("chi") ? json_algnum(g.at("chi")) : AlgNum(1);
    GSp4HeckeParams gsp4(json_algnum(g.at("alpha")), json_algnum(g.at("beta")),
                         json_algnum(g.at("gamma")), json_algnum(g.at("delta")), chi,
                         w.k1, w.k2, p);
    return EulerInput(w, std::move(gsp4), json_gl2(j.at("gl2_1"), w.c1, p),
                      json_gl2(j.at("gl2_2"), w.c2, p));
}

// ---- family descriptor ----------------------------------------------------

inline FamilyDescriptor json_family(const Json& j) {
    FamilyDescriptor fd;
    fd.p = json_int(j.at("p"));
    fd.k1 = json_long(j.at("k1"));
    fd.k2 = json_long(j.at("k2"));
    if (j.contains("N")) fd.N = json_int(j.at("N"));
    if (j.contains("N1")) fd.N1 = json_int(j.at("N1"));
    if (j.contains("N2")) fd.N2 = json_int(j.at("N2"));
    if (j.contains("chi_pi")) fd.chi_pi = json_character(j.at("chi_pi"));
    if (j.contains("chi_g1")) fd.chi_g1 = json_character(j.at("chi_g1"));
    if (j.contains("chi_g2")) fd.chi_g2 = json_character(j.at("chi_g2"));
    if (j.contains("cbar")) fd.cbar = json_int(j.at("cbar"));
    if (j.contains("components"))
        for (const Json& c : j.at("components")) {
            LocalComponentDescriptor lc;
            lc.ell = json_int(c.at("ell"));
            if (c.contains("pi")) lc.pi = species_from_name(c.at("pi"));
            if (c.contains("sigma1")) lc.sigma1 = species_from_name(c.at("sigma1"));
            if (c.contains("sigma2")) lc.sigma2 = species_from_name(c.at("sigma2"));
            if (c.contains("epsilon")) lc.epsilon = static_cast<int>(json_long(c.at("epsilon")));
            if (c.contains("test_vector")) lc.test_vector = c.at("test_vector");
            fd.components.push_back(std::move(lc));
        }
    if (j.contains("gsp4")) {
        const Json& g = j.at("gsp4");
        AlgNum chi = g.contains("chi") ? json_algnum(g.at("chi")) : AlgNum(1);
        fd.gsp4 = GSp4HeckeParams(json_algnum(g.at("alpha")), json_algnum(g.at("beta")),
                                  json_algnum(g.at("gamma")), json_algnum(g.at("delta")),
                                  chi, fd.k1, fd.k2, fd.p);
    }
    fd.validate();
    return fd;
}

// ---- q-series ------------------------------------------------------------

template <typename Ring>
QExpansion<Ring> json_series_with_ring(const Json& j, Ring ring) {
    const Json& c = j.at("coefficients");
    auto f = QExpansion<Ring>::zero(std::move(ring),
                                    static_cast<long>(c.size()) - 1,
                                    json_long(j.at("weight")),
                                    j.contains("level") ? json_int(j.at("level")) : 1);
    if (j.contains("character")) f.character = json_character(j.at("character"));
    if (j.contains("twist_tag")) f.twist_tag = j.at("twist_tag");
    for (size_t n = 0; n < c.size(); ++n) {
        if constexpr (std::is_same_v<Ring, RatRing>)
            f.coeffs[n] = json_rat(c[n]);
        else if constexpr (std::is_same_v<Ring, ZpRing>)
            f.coeffs[n] = f.ring.from_int(json_int(c[n]));
        else {
            std::vector<Int> v;
            for (const Json& x : c[n]) v.push_back(json_int(x));
            f.coeffs[n] = f.ring.from_coeffs(std::move(v));
        }
    }
    return f;
}

template <typename Ring>
Json series_to_json(const QExpansion<Ring>& f) {
    Json ring;
    if constexpr (std::is_same_v<Ring, RatRing>) {
        ring = Json{{"type", "rational"}};
    } else if constexpr (std::is_same_v<Ring, ZpRing>) {
        ring = Json{{"type", "zp"}, {"p", f.ring.p.str()}, {"M", f.ring.M}};
    } else {
        ring = Json{{"type", "iwasawa"}, {"p", f.ring.p.str()}, {"M", f.ring.M},
                    {"D", f.ring.D}};
    }
    Json coeffs = Json::array();
    for (const auto& a : f.coeffs) {
        if constexpr (std::is_same_v<Ring, RatRing>) {
            coeffs.push_back(rat_str(a));
        } else if constexpr (std::is_same_v<Ring, ZpRing>) {
            coeffs.push_back(a.str());
        } else {
            Json v = Json::array();
            for (const Int& x : a) v.push_back(x.str());
            coeffs.push_back(v);
        }
    }
    return Json{{"ring", ring},
                {"weight", f.weight},
                {"character", character_to_json(f.character)},
                {"level", f.level.str()},
                {"twist_tag", f.twist_tag},
                {"coefficients", coeffs}};
}

/// Dispatch a generic operation over the ring named in the series document.
template <typename Fn>
Json with_parsed_series(const Json& j, Fn&& fn) {
    const Json& r = j.at("ring");
    std::string type = r.at("type");
    if (type == "rational") return fn(json_series_with_ring(j, RatRing{}));
    if (type == "zp")
        return fn(json_series_with_ring(
            j, ZpRing(json_int(r.at("p")), static_cast<int>(json_long(r.at("M"))))));
    if (type == "iwasawa")
        return fn(json_series_with_ring(
            j, IwRing(json_int(r.at("p")), static_cast<int>(json_long(r.at("M"))),
                      static_cast<int>(json_long(r.at("D"))))));
    throw validation_error("unknown coefficient ring: " + type);
}

// ---- figure geometry -------------------------------------------------------

struct RegionBox {
    RegionLabel region;
    long c1_min, c1_max, c2_min, c2_max;  // lattice bounding box
};

inline std::vector<RegionBox> figure_boxes(long k1, long k2) {
    std::vector<RegionBox> out;
    long bound = k1 + k2 + 2;
    for (RegionLabel r : all_regions()) {
        RegionBox b{r, bound + 1, 0, bound + 1, 0};
        for (long c1 = 1; c1 <= bound; ++c1)
            for (long c2 = 1; c2 <= bound; ++c2) {
                if ((k1 + k2 + c1 + c2) % 2 != 0) continue;
                if (classify(Weights(k1, k2, c1, c2)) != r) continue;
                b.c1_min = std::min(b.c1_min, c1);
                b.c1_max = std::max(b.c1_max, c1);
                b.c2_min = std::min(b.c2_min, c2);
                b.c2_max = std::max(b.c2_max, c2);
            }
        if (b.c1_max > 0) out.push_back(b);
    }
    return out;
}

inline std::string region_dom_id(RegionLabel r) {
    std::string n = region_name(r);
    if (n.size() == 2) n = std::string(1, n[0]) + "-prime";
    return "region-" + n;
}

/// Schematic region map in the (c1, c2) plane: one labeled group per nonempty
/// region, drawn at its lattice bounding box.
inline std::string figure_svg(long k1, long k2, const std::map<std::string, int>* signs = nullptr) {
    long bound = k1 + k2 + 2;
    const long size = 480, margin = 40;
    auto px = [&](long c) { return margin + c * size / (bound + 1); };
    auto py = [&](long c) { return margin + size - c * size / (bound + 1); };
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 560 560\">\n";
    s << "  <rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << size
      << "\" height=\"" << size << "\" fill=\"none\" stroke=\"black\"/>\n";
    s << "  <text x=\"280\" y=\"550\" text-anchor=\"middle\">c1</text>\n";
    s << "  <text x=\"12\" y=\"280\" text-anchor=\"middle\">c2</text>\n";
    for (const RegionBox& b : figure_boxes(k1, k2)) {
        long x0 = px(b.c1_min), x1 = px(b.c1_max + 1);
        long y0 = py(b.c2_max + 1), y1 = py(b.c2_min);
        std::string label = region_name(b.region);
        if (signs) {
            auto it = signs->find(label);
            if (it != signs->end()) label += it->second == 1 ? " +" : " -";
        }
        s << "  <g id=\"" << region_dom_id(b.region) << "\">\n";
        s << "    <rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << (x1 - x0)
          << "\" height=\"" << (y1 - y0)
          << "\" fill=\"none\" stroke=\"gray\" stroke-dasharray=\"4 2\"/>\n";
        s << "    <text x=\"" << (x0 + x1) / 2 << "\" y=\"" << (y0 + y1) / 2
          << "\" text-anchor=\"middle\">" << label << "</text>\n";
        s << "  </g>\n";
    }
    s << "</svg>\n";
    return s.str();
}

inline std::string figure_text(long k1, long k2) {
    std::ostringstream s;
    s << "regions at (k1, k2) = (" << k1 << ", " << k2 << ")\n";
    for (const RegionBox& b : figure_boxes(k1, k2)) {
        s << "  " << region_name(b.region) << ": sign "
          << (sign_infinity(b.region) == 1 ? "+1" : "-1") << ", c1 in [" << b.c1_min
          << ", " << b.c1_max << "], c2 in [" << b.c2_min << ", " << b.c2_max
          << "], parabolic (";
        auto par = parabolic_of_region(b.region);
        s << parabolic_name(par[0]) << ", " << parabolic_name(par[1]) << ", "
          << parabolic_name(par[2]) << ")\n";
    }
    return s.str();
}

inline Json figure_json(long k1, long k2) {
    Json regions = Json::array();
    for (const RegionBox& b : figure_boxes(k1, k2))
        regions.push_back(Json{{"label", region_name(b.region)},
                               {"sign_infinity", sign_infinity(b.region)},
                               {"c1_range", {b.c1_min, b.c1_max}},
                               {"c2_range", {b.c2_min, b.c2_max}}});
    return Json{{"k1", k1}, {"k2", k2}, {"regions", regions}};
}

// ---- table rendering -------------------------------------------------------

inline Json table_row_json(const TableRow& row) {
    Json par = Json::array();
    for (Parabolic p : row.parabolic) par.push_back(parabolic_name(p));
    Json block = Json::array();
    for (int b : row.block) block.push_back(b);
    return Json{{"region", region_name(row.region)}, {"block", block},
                {"parabolic", par}};
}

inline Json table1_json(long k1 = 8, long k2 = 5) {
    Json rows = Json::array();
    for (const TableRow& row : table1_rows(k1, k2)) rows.push_back(table_row_json(row));
    Json diffs = Json::array();
    for (const std::string& d : table1_diff(k1, k2)) diffs.push_back(d);
    return Json{{"rows", rows}, {"diff", diffs}};
}

inline std::string table1_text(long k1 = 8, long k2 = 5) {
    std::ostringstream s;
    s << "region  block(alpha:a1a2,a1b2,b1a2,b1b2 | beta:...)  parabolic\n";
    for (const TableRow& row : table1_rows(k1, k2)) {
        s << "  " << region_name(row.region);
        if (region_name(row.region).size() == 1) s << " ";
        s << "    ";
        for (int i = 0; i < 8; ++i) {
            s << (row.block[i] ? "y" : ".");
            if (i == 3) s << " | ";
        }
        s << "    (";
        s << parabolic_name(row.parabolic[0]) << ", " << parabolic_name(row.parabolic[1])
          << ", " << parabolic_name(row.parabolic[2]) << ")\n";
    }
    auto diffs = table1_diff(k1, k2);
    s << (diffs.empty() ? "reference check: ok\n" : "reference check: DIFFS\n");
    return s.str();
}

// ---- atlas report ----------------------------------------------------------

inline Json atlas_json(const FamilyDescriptor& fd) {
    fd.validate();
    Json components = Json::array();
    for (const auto& c : fd.components)
        components.push_back(Json{{"ell", c.ell.str()},
                                  {"pi", species_name(c.pi)},
                                  {"sigma1", species_name(c.sigma1)},
                                  {"sigma2", species_name(c.sigma2)},
                                  {"epsilon", c.epsilon},
                                  {"test_vector", c.test_vector}});
    Json regions = Json::array();
    for (const ExpectedObject& eo : expected_objects(fd)) {
        auto par = parabolic_of_region(eo.region);
        Json pj = Json::array();
        for (Parabolic p : par) pj.push_back(parabolic_name(p));
        regions.push_back(Json{{"label", region_name(eo.region)},
                               {"empty", region_is_empty(eo.region, fd.k1, fd.k2)},
                               {"sign_infinity", sign_infinity(eo.region)},
                               {"global_sign", eo.sign},
                               {"object", object_kind_name(eo.kind)},
                               {"status", object_status_name(eo.status)},
                               {"parabolic", pj}});
    }
    Json edges = Json::array();
    for (const ReciprocityEdge& e : reciprocity_edges(fd))
        edges.push_back(Json{{"minus", region_name(e.minus_region)},
                             {"plus", region_name(e.plus_region)},
                             {"triple", {e.triple.s0, e.triple.s1, e.triple.s2}}});
    return Json{
        {"family",
         Json{{"p", fd.p.str()}, {"k1", fd.k1}, {"k2", fd.k2}, {"N", fd.N.str()},
              {"N1", fd.N1.str()}, {"N2", fd.N2.str()}, {"cbar", fd.cbar.str()},
              {"chi_pi", character_to_json(fd.chi_pi)},
              {"chi_g1", character_to_json(fd.chi_g1)},
              {"chi_g2", character_to_json(fd.chi_g2)},
              {"components", components}}},
        {"definiteness", definiteness_name(definiteness(fd))},
        {"finite_sign", finite_sign(fd)},
        {"regions", regions},
        {"reciprocity_edges", edges},
        {"table1", table1_json(fd.k1, fd.k2)},
        {"figure", figure_json(fd.k1, fd.k2)}};
}

inline std::string atlas_text(const FamilyDescriptor& fd) {
    fd.validate();
    std::ostringstream s;
    s << "family: p=" << fd.p << " (k1,k2)=(" << fd.k1 << "," << fd.k2 << ") N=" << fd.N
      << " N1=" << fd.N1 << " N2=" << fd.N2 << "\n";
    s << "definiteness: " << definiteness_name(definiteness(fd))
      << " (finite sign " << (finite_sign(fd) == 1 ? "+1" : "-1") << ")\n";
    s << "regions:\n";
    for (const ExpectedObject& eo : expected_objects(fd)) {
        s << "  " << region_name(eo.region);
        if (region_name(eo.region).size() == 1) s << " ";
        s << "  sign " << (eo.sign == 1 ? "+1" : "-1") << "  "
          << object_kind_name(eo.kind) << " [" << object_status_name(eo.status) << "]";
        if (region_is_empty(eo.region, fd.k1, fd.k2)) s << "  (empty)";
        s << "\n";
    }
    s << "reciprocity edges (cycle region -> L-function region):\n";
    for (const ReciprocityEdge& e : reciprocity_edges(fd))
        s << "  " << region_name(e.minus_region) << " -> " << region_name(e.plus_region)
          << "  " << e.triple.str() << "\n";
    s << "table:\n" << table1_text(fd.k1, fd.k2);
    s << "figure:\n" << figure_text(fd.k1, fd.k2);
    return s.str();
}

inline std::string atlas_svg(const FamilyDescriptor& fd) {
    fd.validate();
    std::map<std::string, int> signs;
    for (RegionLabel r : all_regions()) signs[region_name(r)] = global_sign(fd, r);
    return figure_svg(fd.k1, fd.k2, &signs);
}

inline std::string render_atlas(const FamilyDescriptor& fd, const std::string& format) {
    if (format == "json") return atlas_json(fd).dump(2) + "\n";
    if (format == "svg") return atlas_svg(fd);
    if (format == "text") return atlas_text(fd);
    throw validation_error("unknown format: " + format);
}

}  // namespace ggp
