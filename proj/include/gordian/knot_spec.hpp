#pragma once
// Knot specifications: unknot, torus:P,Q, 2bridge:P/Q, mirror:<spec>, file:<path>
// (a bare path to an existing JSON file also works).

#include "gordian/json_io.hpp"
#include "gordian/pairing.hpp"
#include "gordian/pieces.hpp"

#include <filesystem>
#include <string>

namespace gordian {

struct KnotSpec {
    enum class Kind { Unknot, Torus, TwoBridge, Mirror, File };
    Kind kind = Kind::Unknot;
    int a = 0, b = 0;      // torus parameters
    Slope slope;           // two-bridge slope
    std::string path;      // file
    std::string inner;     // mirrored spec

    static KnotSpec parse(const std::string& s) {
        KnotSpec k;
        auto colon = s.find(':');
        std::string head = s.substr(0, colon), rest = colon == std::string::npos ? "" : s.substr(colon + 1);
        if (s == "unknot" || s == "U") return k;
        try {
            if (head == "torus") {
                auto comma = rest.find(',');
                if (comma == std::string::npos) throw Error("SchemaError", "torus spec needs P,Q");
                k.kind = Kind::Torus;
                k.a = std::stoi(rest.substr(0, comma));
                k.b = std::stoi(rest.substr(comma + 1));
                return k;
            }
        } catch (const std::logic_error&) {
            throw Error("SchemaError", "bad torus spec '" + s + "'");
        }
        if (head == "2bridge" || head == "two_bridge") {
            k.kind = Kind::TwoBridge;
            k.slope = Slope::parse(rest);
            return k;
        }
        if (head == "mirror") {
            k.kind = Kind::Mirror;
            parse(rest);
            k.inner = rest;
            return k;
        }
        if (head == "file") {
            k.kind = Kind::File;
            k.path = rest;
            return k;
        }
        if (std::filesystem::exists(s)) {
            k.kind = Kind::File;
            k.path = s;
            return k;
        }
        throw Error("SchemaError", "unknown knot spec '" + s + "'");
    }
};

inline FreeComplex resolve(const KnotSpec& k, RingTag r, bool conjectural = false) {
    switch (k.kind) {
    case KnotSpec::Kind::Unknot: return torus_complex(2, 0, 0, r);
    case KnotSpec::Kind::Torus: return torus_knot(k.a, k.b, r, conjectural);
    case KnotSpec::Kind::TwoBridge: return base_change(zero_closure(k.slope), r);
    case KnotSpec::Kind::Mirror: return dualize(resolve(KnotSpec::parse(k.inner), r, conjectural));
    default: {
        FreeComplex c = read_json_file(k.path);
        if (c.ring() == r) return c;
        return base_change(c, r);
    }
    }
}

inline FreeComplex resolve(const std::string& spec, RingTag r, bool conjectural = false) {
    return resolve(KnotSpec::parse(spec), r, conjectural);
}

} // namespace gordian
