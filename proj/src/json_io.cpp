#include "tdcodes/json_io.hpp"

#include <fstream>

#include "tdcodes/error.hpp"

namespace tdcodes {

Json field_spec_to_json(const FieldSpec& spec) {
    Json base = Json::array();
    for (unsigned i = 0; i <= spec.s; ++i) base.push_back((spec.base_modulus >> i) & 1u);
    Json ext = Json::array();
    for (Symbol c : spec.ext_modulus) ext.push_back(Json::array({static_cast<unsigned>(c)}));
    return Json{{"s", spec.s}, {"m", spec.m}, {"base_modulus", base}, {"ext_modulus", ext}};
}

FieldSpec field_spec_from_json(const Json& j) {
    try {
        FieldSpec spec;
        spec.s = j.at("s").get<unsigned>();
        spec.m = j.at("m").get<unsigned>();
        const Json& base = j.at("base_modulus");
        if (!base.is_array() || base.size() > 32) throw FieldError("base_modulus must be an array of bits");
        for (std::size_t i = 0; i < base.size(); ++i) {
            const unsigned bit = base[i].get<unsigned>();
            if (bit > 1) throw FieldError("base_modulus coefficients must be 0 or 1");
            spec.base_modulus |= static_cast<std::uint32_t>(bit) << i;
        }
        for (const Json& c : j.at("ext_modulus")) {
            const Json& v = c.is_array() ? c.at(0) : c;
            const unsigned r = v.get<unsigned>();
            if (r > 255) throw FieldError("ext_modulus coefficient out of range");
            spec.ext_modulus.push_back(static_cast<Symbol>(r));
        }
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw FieldError(std::string("malformed field spec: ") + e.what());
    }
}

FieldSpec read_field_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open field spec " + path.string());
    try {
        return field_spec_from_json(Json::parse(in));
    } catch (const nlohmann::json::parse_error& e) {
        throw FieldError(std::string("malformed field spec: ") + e.what());
    }
}

Json defining_set_to_json(const DefiningSet& T) {
    return Json{{"n", T.n()}, {"q", T.q()}, {"elems", T.elems()}};
}

Json code_to_json(const CyclicCode& c, std::optional<Parity> parity, const std::string& variant) {
    Json j;
    j["q"] = c.q();
    j["m"] = c.field().m();
    j["n"] = c.n();
    j["parity"] = parity ? Json(parity_index(*parity)) : Json(nullptr);
    if (variant != "plain") j["variant"] = variant;
    j["k"] = c.dimension();
    j["defining_set"] = c.defining_set().elems();
    Json g = Json::array();
    for (Symbol s : c.generator().coeffs()) g.push_back(static_cast<unsigned>(s));
    j["generator_poly"] = g;
    return j;
}

Json witness_to_json(const APWitness& w) {
    return Json{{"b", w.b}, {"a", w.a}, {"i_lo", w.i_lo}, {"i_hi", w.i_hi}};
}

Json bound_to_json(const BoundReport& r) {
    Json j;
    j["delta"] = r.delta;
    if (r.witness) {
        j["b"] = r.witness->b;
        j["a"] = r.witness->a;
        j["i_lo"] = r.witness->i_lo;
        j["i_hi"] = r.witness->i_hi;
    } else {
        j["b"] = j["a"] = j["i_lo"] = j["i_hi"] = nullptr;
    }
    j["source"] = r.source;
    if (r.partial) j["partial"] = true;
    return j;
}

Json distance_to_json(const DistanceReport& r) {
    Json j;
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["exact"] = r.exact ? Json(*r.exact) : Json(nullptr);
    j["method"] = std::string(method_name(r.method));
    j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
    Json w = Json::array();
    for (Symbol s : r.witness) w.push_back(static_cast<unsigned>(s));
    j["witness"] = w;
    return j;
}

}  // namespace tdcodes
