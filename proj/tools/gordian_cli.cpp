#include "gordian/json_io.hpp"
#include "gordian/knot_spec.hpp"
#include "gordian/obstruct.hpp"
#include "gordian/oracle.hpp"
#include "gordian/selftest.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <set>

using namespace gordian;

namespace {

// errors caused by bad input rather than by the engine
const std::set<std::string> input_errors{"InvalidSlope", "SchemaError", "BadRing", "BadParity", "ExcludedSlope"};

struct Opts {
    std::string format = "tsv";
    std::string slope, spec, left, right, ring = "F2", engine = "structured";
    bool graded = false, conjectural = false;
};

struct RegionAnswer {
    bool exact = true;
    Region region, inner, outer;
    std::string note;
};

void print_json(const json& j) { std::cout << j.dump() << "\n"; }

Decomposition decompose_spec(const std::string& spec, RingTag r, bool conj) { return decompose(resolve(spec, r, conj)); }

RegionAnswer structured_region(const Opts& o, RingTag r) {
    RegionAnswer a;
    try {
        auto res = lambda_region_structured(decompose_spec(o.left, r, o.conjectural), decompose_spec(o.right, r, o.conjectural));
        a.exact = res.exact;
        a.region = res.region;
        a.inner = res.inner;
        a.outer = res.outer;
        if (!res.exact) a.note = "multiplicity collision: only bounds are known";
        return a;
    } catch (const Error& e) {
        if (e.kind != "NotSplit" || r.kind != RingTag::Kind::Z) throw;
    }
    // over Z without a splitting: intersect the field answers, an upper approximation only
    a.exact = false;
    a.note = "no splitting over Z; outer is the intersection of";
    std::optional<Region> outer;
    for (auto f : {RingTag::F(2), RingTag::F(3), RingTag::F(5), RingTag::F(7), RingTag::Q()}) {
        try {
            auto d1 = decompose(base_change(resolve(o.left, r, o.conjectural), f));
            auto d2 = decompose(base_change(resolve(o.right, r, o.conjectural), f));
            Region part = lambda_region_structured(d1, d2).outer;
            outer = outer ? intersect(*outer, part) : part;
            a.note += " " + f.name();
        } catch (const Error&) {
        }
    }
    if (!outer) throw Error("NotSplit", "no field splits both complexes");
    a.outer = *outer;
    a.region = *outer;
    a.inner = Region::empty();
    return a;
}

RegionAnswer compute_region(const Opts& o) {
    RingTag r = RingTag::parse(o.ring);
    if (o.engine == "structured") return structured_region(o, r);
    if (r.kind != RingTag::Kind::Fp) throw Error("BadRing", "the brute engine needs a finite field");
    OracleCaps caps = OracleCaps::from_env();
    Region b = lambda_region_brute(resolve(o.left, r, o.conjectural), resolve(o.right, r, o.conjectural), caps);
    if (o.engine == "brute") return {true, b, b, b, ""};
    RegionAnswer s = structured_region(o, r);
    if (!s.exact) throw Error("EngineMismatch", "structured engine is not exact here");
    if (!(s.region == b))
        throw Error("EngineMismatch", "structured " + s.region.to_string() + " vs brute " + b.to_string());
    return s;
}

void emit_region(const Opts& o, const RegionAnswer& a) {
    if (o.format == "json") {
        if (a.exact) return print_json(to_json(a.region));
        print_json({{"exact", false}, {"inner", to_json(a.inner)}, {"outer", to_json(a.outer)}, {"note", a.note}});
        return;
    }
    if (a.exact) {
        std::cout << "region\t" << a.region.to_string() << "\n";
    } else {
        std::cout << "exact\tfalse\n" << "note\t" << a.note << "\n";
        std::cout << "inner\t" << a.inner.to_string() << "\nouter\t" << a.outer.to_string() << "\n";
    }
    std::cout << a.region.render(-3, 6, -3, 6);
}

json zigzag_json(const ZigzagComplex& z) {
    json j;
    j["objects"] = json::array();
    for (auto& ob : z.objects) {
        json x{{"vertex", ob.v == Vertex::Circ ? "o" : "*"}};
        if (ob.t) {
            x["t"] = *ob.t;
            x["q"] = *ob.q;
        }
        j["objects"].push_back(x);
    }
    j["arrows"] = json::array();
    for (auto& a : z.arrows)
        j["arrows"].push_back({{"from", a.from}, {"to", a.to}, {"label", label_name(a.label)}});
    return j;
}

int run(const std::string& cmd, const Opts& o) {
    if (cmd == "zz") {
        Slope s = Slope::parse(o.slope);
        ZigzagComplex z = o.graded ? graded_zz(s) : zz(s);
        if (o.format == "json") print_json(zigzag_json(z));
        else std::cout << z.to_string() << "\n";
    } else if (cmd == "knot") {
        Decomposition d = decompose_spec(o.spec, RingTag::parse(o.ring), o.conjectural);
        if (o.format == "json") {
            print_json(to_json(d));
        } else {
            std::cout << "ring\t" << d.ring.name() << "\npawn\t" << d.pawn.s << "\n";
            for (auto& k : d.knights) std::cout << "knight\t" << k.k << "\t" << k.i << "\t" << k.q0 << "\n";
        }
    } else if (cmd == "signature") {
        Slope s = Slope::parse(o.slope);
        long long sg = two_bridge_signature(s);
        if (o.format == "json") print_json({{"sigma", sg}, {"s", -sg}});
        else std::cout << "sigma\t" << sg << "\ns\t" << -sg << "\n";
    } else if (cmd == "lambda" || cmd == "lambda0") {
        RegionAnswer a = compute_region(o);
        auto pick = [&](const Region& r) { return cmd == "lambda" ? small_lambda(r) : small_lambda0(r); };
        if (a.exact) {
            if (o.format == "json") print_json({{cmd, pick(a.region) ? json(*pick(a.region)) : json(nullptr)}});
            else std::cout << lambda_to_string(pick(a.region)) << "\n";
        } else {
            // lower bound from the outer region, upper bound from the inner one
            auto lo = pick(a.outer), hi = pick(a.inner);
            if (o.format == "json")
                print_json({{"exact", false}, {"lower", lo ? json(*lo) : json(nullptr)}, {"upper", hi ? json(*hi) : json(nullptr)}});
            else std::cout << "lower\t" << lambda_to_string(lo) << "\nupper\t" << lambda_to_string(hi) << "\n";
        }
    } else if (cmd == "region") {
        emit_region(o, compute_region(o));
    } else if (cmd == "alpha" || cmd == "beta") {
        Slope s = Slope::parse(o.slope);
        long long v = cmd == "alpha" ? alpha(s) : beta(s);
        if (o.format == "json") print_json({{cmd, v}});
        else std::cout << v << "\n";
    } else if (cmd == "obstruct") {
        Slope s = Slope::parse(o.slope);
        long long a = alpha(s);
        if (o.left.empty() || o.right.empty()) {
            if (o.format == "json") print_json({{"alpha", a}, {"u0_move", is_u0_move(s)}, {"needs", to_json(replacement_region(s))}});
            else std::cout << "alpha\t" << a << "\nu0_move\t" << (is_u0_move(s) ? "yes" : "no") << "\nneeds\t(" << 1 - a << "," << a << ")\n";
            return 0;
        }
        RegionAnswer r = compute_region(o);
        bool ok;
        std::string verdict;
        if (r.exact) {
            ok = admissible(r.region, s);
            verdict = ok ? "admissible" : "obstructed";
        } else {
            // only the outer region can certify an obstruction
            ok = admissible(r.outer, s);
            verdict = ok ? "not obstructed (bounds only)" : "obstructed";
        }
        if (o.format == "json")
            print_json({{"alpha", a}, {"point", {1 - a, a}}, {"verdict", verdict}, {"warning", orientation_warning()}});
        else std::cout << "alpha\t" << a << "\npoint\t(" << 1 - a << "," << a << ")\nverdict\t" << verdict << "\nwarning\t" << orientation_warning() << "\n";
        return ok ? 0 : 1;
    } else if (cmd == "selftest") {
        bool ok = true;
        for (auto& out : selftest::run_all(GORDIAN_TEST_DATA)) {
            std::cout << selftest::format(out) << std::endl;
            ok = ok && out.pass;
        }
        return ok ? 0 : 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gordian: Bar-Natan complexes, pawn/knight pieces and Gordian distance bounds"};
    app.require_subcommand(1);
    Opts o;
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"tsv", "json"}));

    auto slope_cmd = [&](const std::string& name, const std::string& help) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("--slope", o.slope, "slope P/Q")->required();
        return c;
    };
    auto pair_opts = [&](CLI::App* c, bool required) {
        auto* l = c->add_option("--left", o.left, "knot spec");
        auto* r = c->add_option("--right", o.right, "knot spec");
        if (required) {
            l->required();
            r->required();
        }
        c->add_option("--ring", o.ring, "Z, Q, F2, F3, F5, F7 or Fp");
        c->add_option("--engine", o.engine)->check(CLI::IsMember({"structured", "brute", "both"}));
        c->add_flag("--conjectural", o.conjectural, "allow 3-strand torus knots over Z and odd primes");
    };

    slope_cmd("zz", "zigzag complex of a rational tangle")->add_flag("--graded", o.graded);
    auto* knot = app.add_subcommand("knot", "decompose a knot complex");
    knot->add_option("--spec", o.spec)->required();
    knot->add_option("--ring", o.ring);
    knot->add_flag("--conjectural", o.conjectural);
    slope_cmd("signature", "signature and s of a two-bridge knot");
    for (auto name : {"lambda", "lambda0", "region"}) pair_opts(app.add_subcommand(name, std::string(name) + " between two knots"), true);
    slope_cmd("alpha", "alpha of a replacement slope");
    slope_cmd("beta", "beta of a replacement slope");
    pair_opts(slope_cmd("obstruct", "check a Q_{-1} to Q_{p/q} replacement"), false);
    app.add_subcommand("selftest", "run the acceptance suite");
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        return run(app.get_subcommands().front()->get_name(), o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_errors.count(e.kind) ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
