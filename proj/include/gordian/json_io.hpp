#pragma once
// JSON interchange for complexes, decompositions and regions.

#include "gordian/lambda.hpp"
#include "gordian/pieces.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <sstream>
#include <string>

namespace gordian {

using nlohmann::json;

namespace detail {
inline json coeff_json(const Scalar& s) {
    const BigRat& v = s.value();
    if (denominator(v) == 1) {
        BigInt n = numerator(v);
        if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
            return static_cast<long long>(n);
    }
    return s.to_string();
}

inline BigRat parse_coeff(const json& j) {
    if (j.is_number_integer()) return BigRat(j.get<long long>());
    if (!j.is_string()) throw Error("SchemaError", "coefficient must be an integer or \"a/b\"");
    std::string s = j.get<std::string>();
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return BigRat(BigInt(s));
        BigInt d(s.substr(slash + 1));
        if (d == 0) throw Error("SchemaError", "zero denominator");
        return BigRat(BigInt(s.substr(0, slash)), d);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e)) throw;
        throw Error("SchemaError", "bad coefficient '" + s + "'");
    }
}

template <class T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error("SchemaError", std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw Error("SchemaError", std::string("bad field '") + key + "'");
    }
}
} // namespace detail

inline json to_json(const FreeComplex& c) {
    json j;
    j["ring"] = c.ring().name();
    j["generators"] = json::array();
    for (auto& g : c.generators()) j["generators"].push_back({{"id", g.id}, {"t", g.t}, {"q", g.q}});
    j["diff"] = json::array();
    for (std::size_t a = 0; a < c.size(); ++a)
        for (auto& [b, m] : c.out(a))
            j["diff"].push_back(
                {{"src", c.gen(a).id}, {"tgt", c.gen(b).id}, {"coeff", detail::coeff_json(m.coeff)}, {"gexp", m.gexp}});
    return j;
}

inline FreeComplex complex_from_json(const json& j) {
    RingTag r = RingTag::parse(detail::field<std::string>(j, "ring"));
    FreeComplex c(r);
    auto gens = detail::field<json>(j, "generators");
    if (!gens.is_array()) throw Error("SchemaError", "generators must be an array");
    for (auto& g : gens)
        c.add_generator(detail::field<std::string>(g, "id"), detail::field<int>(g, "t"), detail::field<int>(g, "q"));
    auto diff = j.contains("diff") ? j.at("diff") : json::array();
    if (!diff.is_array()) throw Error("SchemaError", "diff must be an array");
    for (auto& e : diff) {
        int k = detail::field<int>(e, "gexp");
        if (k < 0) throw Error("SchemaError", "negative gexp");
        if (!e.contains("coeff")) throw Error("SchemaError", "missing field 'coeff'");
        c.add_to_entry(c.index_of(detail::field<std::string>(e, "src")), c.index_of(detail::field<std::string>(e, "tgt")),
                       Monomial(Scalar(r, detail::parse_coeff(e.at("coeff"))), k));
    }
    c.validate();
    return c;
}

inline std::string write_json(const FreeComplex& c) { return to_json(c).dump(2); }

inline FreeComplex read_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error("SchemaError", e.what());
    }
    return complex_from_json(j);
}

inline FreeComplex read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("SchemaError", "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return read_json(ss.str());
}

inline json to_json(const Decomposition& d) {
    json j;
    j["pawn"] = d.pawn.s;
    j["knights"] = json::array();
    for (auto& k : d.knights) j["knights"].push_back({k.k, k.i, k.q0});
    j["ring"] = d.ring.name();
    return j;
}

inline Decomposition decomposition_from_json(const json& j) {
    Decomposition d;
    d.pawn.s = detail::field<int>(j, "pawn");
    d.ring = RingTag::parse(detail::field<std::string>(j, "ring"));
    for (auto& k : detail::field<json>(j, "knights")) {
        if (!k.is_array() || k.size() != 3) throw Error("SchemaError", "knight must be [k,i,q0]");
        d.knights.push_back({k[0].get<int>(), k[1].get<int>(), k[2].get<int>()});
    }
    std::sort(d.knights.begin(), d.knights.end());
    return d;
}

inline json to_json(const Region& r) {
    json j;
    j["diagonal"] = r.diagonal() ? json(*r.diagonal()) : json(nullptr);
    j["corners"] = json::array();
    for (auto& [a, b] : r.corners()) j["corners"].push_back({a, b});
    return j;
}

inline Region region_from_json(const json& j) {
    std::optional<long long> d;
    if (!j.contains("diagonal") || !j.contains("corners")) throw Error("SchemaError", "region needs diagonal and corners");
    if (!j["diagonal"].is_null()) d = j["diagonal"].get<long long>();
    std::vector<Point> cs;
    for (auto& c : j["corners"]) {
        if (!c.is_array() || c.size() != 2) throw Error("SchemaError", "corner must be [a,b]");
        cs.push_back({c[0].get<long long>(), c[1].get<long long>()});
    }
    return Region(d, cs);
}

} // namespace gordian
