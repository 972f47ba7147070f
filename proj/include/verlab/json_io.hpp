#pragma once

// JSON encoders for library values and the loader for the symmetric-power
// fact file. Requires nlohmann/json.

#include "verlab/charlab.hpp"
#include "verlab/fusion.hpp"
#include "verlab/padix.hpp"
#include "verlab/verpn.hpp"

#include <json.hpp>

#include <fstream>
#include <istream>
#include <string>

namespace verlab::io {

using nlohmann::json;

inline json to_json(const Character& c)
{
    json terms = json::array();
    for (const auto& [w, coeff] : c.terms())
        terms.push_back({{"w", w}, {"c", coeff}});
    return {{"terms", terms}, {"dim", dimension(c)}};
}

/// Digits least significant first, plus the balanced decimal representative.
inline json to_json(const PadicDigits& d)
{
    return {{"p", d.prime().value()}, {"precision", d.precision()}, {"digits", d.digits()}, {"decimal", d.to_signed().str()}};
}

inline json to_json(const FpSeries& s)
{
    return {{"p", s.prime().value()}, {"N", s.truncation()}, {"coeffs", s.coeffs()}};
}

inline json to_json(const FusionElement& x)
{
    json out = json::array();
    for (std::int64_t a = 0; a < x.rank(); ++a)
        if (x.mults()[static_cast<std::size_t>(a)] != 0) {
            const BigInt& m = x.mults()[static_cast<std::size_t>(a)];
            if (m <= std::numeric_limits<std::int64_t>::max())
                out.push_back({{"L", a}, {"mult", m.convert_to<std::int64_t>()}});
            else
                out.push_back({{"L", a}, {"mult", m.str()}});
        }
    return out;
}

inline json to_json(const SymStatus& s)
{
    json out = {{"status", std::string(sym_kind_name(s.kind))}, {"rule", s.rule}, {"statement", s.provenance}};
    out["target"] = s.target ? json(*s.target) : json(nullptr);
    out["premise"] = s.premise ? json(*s.premise) : json(nullptr);
    out["threshold"] = s.threshold ? json(*s.threshold) : json(nullptr);
    return out;
}

inline json to_json(const SymFactTable& t)
{
    json facts = json::array();
    for (const auto& f : t.facts) {
        json r = {{"p", f.p}, {"n", f.n}, {"index", f.index}, {"power", f.power},
                  {"status", std::string(sym_kind_name(f.status))}, {"statement", f.statement}};
        if (f.target)
            r["target"] = *f.target;
        facts.push_back(std::move(r));
    }
    return {{"version", t.version}, {"facts", facts}, {"comments", t.comments}};
}

inline SymFactTable sym_facts_from_json(const json& j)
{
    try {
        SymFactTable t;
        t.version = j.at("version").get<int>();
        for (const auto& r : j.at("facts")) {
            SymFact f{r.at("p").get<std::int64_t>(), r.at("n").get<std::int64_t>(), r.at("index").get<std::int64_t>(),
                      r.at("power").get<std::int64_t>(), parse_sym_kind(r.at("status").get<std::string>()), std::nullopt,
                      r.at("statement").get<std::string>()};
            if (r.contains("target"))
                f.target = r.at("target").get<std::int64_t>();
            // validates p and the index range
            VerpnSimple(Prime(f.p), f.n, f.index);
            t.facts.push_back(std::move(f));
        }
        if (j.contains("comments"))
            t.comments = j.at("comments").get<std::vector<std::string>>();
        return t;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("fact file: ") + e.what());
    }
}

inline SymFactTable load_sym_facts(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::ParseError, "cannot open fact file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("fact file: ") + e.what());
    }
    return sym_facts_from_json(j);
}

} // namespace verlab::io
