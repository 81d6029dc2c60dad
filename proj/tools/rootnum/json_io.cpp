#include "json_io.hpp"

#include "rootnum/errors.hpp"
#include "rootnum/polytext.hpp"

#include <fstream>
#include <stdexcept>

namespace rootnum::cli {

namespace {

std::string text_field(const json& j, const char* key) {
    const json& v = j.at(key);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw std::invalid_argument(std::string("field '") + key + "' must be a string or an integer");
}

std::string status_name(int w) { return w == kUndetermined ? "undetermined" : (w > 0 ? "+1" : "-1"); }

json valuation(int v) { return v == kInfinite ? json("inf") : json(v); }

}  // namespace

EllipticSurface surface_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("surface description must be a JSON object");
    if (j.contains("c4") && j.contains("c6")) {
        EllipticSurface s{parse_ratfunc(text_field(j, "c4")), parse_ratfunc(text_field(j, "c6"))};
        validate(s);
        return s;
    }
    if (j.contains("j") && j.contains("d")) return from_j_d(parse_ratfunc(text_field(j, "j")), parse_ratfunc(text_field(j, "d")));
    throw std::invalid_argument("surface description needs c4 and c6, or j and d");
}

EllipticSurface load_surface(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open surface file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return surface_from_json(j);
}

json to_json(const Integer& n) { return n.get_str(); }
json to_json(const Rational& q) { return to_string(q); }

json to_json(const EllipticSurface& s) { return {{"c4", to_string(s.c4)}, {"c6", to_string(s.c6)}}; }

json to_json(const SurfaceAnalysis& a) {
    json places = json::array();
    for (const auto& p : a.places) {
        places.push_back({{"place", to_string(p.place)},
                          {"degree_place", p.degree_place},
                          {"e4", valuation(p.e4)},
                          {"e6", valuation(p.e6)},
                          {"eD", valuation(p.eD)},
                          {"class", to_string(p.klass)},
                          {"badness", to_string(p.badness)}});
    }
    return {{"surface", to_json(a.surface)},
            {"j", to_string(a.j)},
            {"j_constant", a.j_constant},
            {"C4", to_string(a.hom.C4)},
            {"C6", to_string(a.hom.C6)},
            {"D", to_string(a.hom.D)},
            {"places", places},
            {"M", to_string(a.M)},
            {"B", to_string(a.B)},
            {"Bprime", to_string(a.Bprime)},
            {"deg_M", a.M.degree()},
            {"deg_B", a.B.degree()},
            {"deg_irr_Bprime", deg_irr(a.Bprime)}};
}

json to_json(const FiberReport& r) {
    json locals = json::array();
    for (const auto& d : r.locals) {
        locals.push_back({{"p", to_json(d.p)},
                          {"shift", d.k},
                          {"v4", valuation(d.v4)},
                          {"v6", valuation(d.v6)},
                          {"vD", valuation(d.vD)},
                          {"class", to_string(d.klass)},
                          {"w", status_name(d.w)},
                          {"from_table", d.from_table}});
    }
    json und = json::array();
    for (const auto& p : r.undetermined_primes) und.push_back(to_json(p));
    return {{"x", to_json(r.curve.x)},
            {"y", to_json(r.curve.y)},
            {"c4", to_json(r.curve.c4)},
            {"c6", to_json(r.curve.c6)},
            {"delta", to_json(r.curve.delta)},
            {"locals", locals},
            {"w_infinity", r.w_infinity},
            {"W", status_name(r.global)},
            {"undetermined_primes", und}};
}

json to_json(const AverageReport& r) {
    return {{"domain", r.domain},
            {"value", to_json(r.value())},
            {"numeric", r.numeric()},
            {"sum", to_json(r.sum)},
            {"count", r.count},
            {"enumerated", r.enumerated},
            {"skipped", {{"singular", r.skipped.singular},
                         {"undetermined", r.skipped.undetermined},
                         {"incomplete", r.skipped.incomplete}}}};
}

json to_json(const CensusReport& r) {
    return {{"N", r.N},
            {"count", r.count},
            {"main_term", to_double(r.main_term)},
            {"residual", r.residual},
            {"delta", r.delta},
            {"mode", to_string(r.mode)},
            {"domain", r.domain},
            {"enumerated", r.enumerated},
            {"non_squarefree", r.non_squarefree},
            {"incomplete", r.incomplete},
            {"B", r.B},
            {"density", r.domain ? static_cast<double>(r.count) / static_cast<double>(r.domain) : 0.0},
            {"truncation_bound", r.truncation_bound}};
}

json to_json(const TraceReport& r) {
    return {{"N", r.N},
            {"k", r.k},
            {"h", r.h},
            {"epsilon", to_json(r.epsilon)},
            {"trace", r.trace_applicable ? to_json(r.trace) : json(nullptr)},
            {"eta_sum", r.applicable ? to_json(r.eta_sum) : json(nullptr)},
            {"applicable", r.applicable}};
}

json to_json(const FamilyRecipe& r) {
    json q = json::array();
    for (const auto& [f, k] : r.Q) q.push_back({{"Q", to_string(f)}, {"k", k}});
    return {{"target", to_string(r.target)},
            {"Q", q},
            {"R1", to_string(r.R1)},
            {"R2", to_string(r.R2)},
            {"R3", to_string(r.R3)},
            {"R4", to_string(r.R4)},
            {"j", to_string(r.j)},
            {"d", to_string(r.d)}};
}

json to_json(const WeierstrassTwist& E) {
    return {{"d", to_json(E.d)}, {"a2", to_json(E.a2)}, {"a4", to_json(E.a4)}, {"a6", to_json(E.a6)}};
}

json to_json(const CurvePoint& P) {
    if (P.infinity) return "infinity";
    return {{"x", to_json(P.x)}, {"y", to_json(P.y)}};
}

}  // namespace rootnum::cli
