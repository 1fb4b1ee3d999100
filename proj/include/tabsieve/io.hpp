#pragma once

// JSON encodings for the documented schemas: tableaux, plane partitions,
// GT-patterns, matrices, biwords, polynomials and check reports.

#include <json.hpp>

#include "tabsieve/planepart.hpp"
#include "tabsieve/qpoly.hpp"
#include "tabsieve/sieve.hpp"
#include "tabsieve/skewrsk.hpp"
#include "tabsieve/tableau.hpp"

namespace tabsieve {

using nlohmann::json;

inline json to_json(const Partition& p) { return json(p.parts()); }

/// { "outer": [...], "inner": [...], "rows": [[...], ...] }
inline json to_json(const Tableau& t) {
    return json{{"outer", t.shape().outer().parts()},
                {"inner", t.shape().inner().parts()},
                {"rows", t.rows()}};
}

inline Tableau tableau_from_json(const json& j) {
    SkewShape shape(Partition(j.at("outer").get<std::vector<int>>()),
                    Partition(j.at("inner").get<std::vector<int>>()));
    return Tableau(shape, j.at("rows").get<std::vector<std::vector<int>>>());
}

/// Array of rows.
inline json to_json(const PlanePartition& p) { return json(p.rows()); }

/// Array of rows, top-down.
inline json to_json(const GTPattern& g) { return json(g.rows()); }

/// Array of rows.
inline json to_json(const ContingencyMatrix& m) { return json(m.entries); }

/// Two parallel arrays.
inline json to_json(const Biword& w) {
    return json{{"top", w.top()}, {"bottom", w.bottom()}};
}

inline Biword biword_from_json(const json& j) {
    Word top = j.at("top").get<Word>();
    Word bottom = j.at("bottom").get<Word>();
    if (top.size() != bottom.size())
        throw std::invalid_argument("biword: top and bottom rows differ in length");
    Biword w;
    for (std::size_t i = 0; i < top.size(); ++i) w.pairs.emplace_back(top[i], bottom[i]);
    return w;
}

/// Exponent -> coefficient map (keys are decimal strings).
inline json to_json(const QPoly& f) {
    json out = json::object();
    for (const auto& [e, c] : f.coeffs()) out[std::to_string(e)] = c.get_str();
    return out;
}

inline QPoly qpoly_from_json(const json& j) {
    QPoly f;
    for (auto it = j.begin(); it != j.end(); ++it)
        f.add_term(std::stol(it.key()), BigInt(it.value().get<std::string>()));
    return f;
}

/// { "order": n, "rows": [{"d","fixed","eval","ok"}], "verdict": ... };
/// biCSP rows carry "i"/"j" instead of "d" and the report both orders.
inline json to_json(const CheckReport& r) {
    json rows = json::array();
    for (const CspRow& row : r.rows) {
        json jr;
        if (r.bivariate) {
            jr["i"] = row.d;
            jr["j"] = row.d2;
        } else {
            jr["d"] = row.d;
        }
        jr["fixed"] = row.fixed;
        jr["eval"] = row.eval;
        jr["ok"] = row.ok;
        rows.push_back(std::move(jr));
    }
    json out{{"order", r.order}, {"rows", std::move(rows)},
             {"verdict", r.pass ? "pass" : "fail"}};
    if (r.bivariate) out["order2"] = r.order2;
    if (!r.note.empty()) out["note"] = r.note;
    return out;
}

}  // namespace tabsieve
