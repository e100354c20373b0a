#include "wklr/json_io.hpp"

#include "wklr/errors.hpp"

namespace wklr {

json toJson(const LaurentPoly& f) {
    json j = json::object();
    for (const auto& [e, c] : f.coeffs()) {
        if (c.fits_slong_p())
            j[std::to_string(e)] = c.get_si();
        else
            j[std::to_string(e)] = c.get_str();
    }
    return j;
}

LaurentPoly laurentFromJson(const json& j) {
    if (!j.is_object()) throw InvalidInput("Laurent polynomial must be a JSON object");
    LaurentPoly f;
    for (auto it = j.begin(); it != j.end(); ++it) {
        long e;
        try {
            e = std::stol(it.key());
        } catch (...) {
            throw InvalidInput("bad exponent key '" + it.key() + "'");
        }
        Integer c;
        if (it.value().is_number_integer())
            c = Integer(it.value().get<long>());
        else if (it.value().is_string())
            c = Integer(it.value().get<std::string>());
        else
            throw InvalidInput("coefficient must be an integer or string");
        f.setCoeff(e, c);
    }
    return f;
}

json toJson(const Multipartition& xi) {
    json j = json::array();
    for (const auto& p : xi.components()) j.push_back(p.parts());
    return j;
}

Multipartition multipartitionFromJson(const json& j) {
    if (!j.is_array()) throw InvalidInput("multipartition must be a JSON array");
    std::vector<Partition> comps;
    for (const auto& comp : j) {
        if (!comp.is_array()) throw InvalidInput("multipartition component must be an array");
        comps.emplace_back(comp.get<std::vector<long>>());
    }
    return Multipartition(std::move(comps));
}

json toJson(const Weighting& w) {
    json theta = json::array();
    for (const auto& t : w.theta()) theta.push_back(rationalToString(t));
    return json{{"kappa", rationalToString(w.kappa())},
                {"theta", theta},
                {"charges", w.charges()},
                {"e", w.modulus()}};
}

Weighting weightingFromJson(const json& j) {
    for (const char* field : {"kappa", "theta", "charges"})
        if (!j.contains(field)) throw InvalidInput(std::string("weighting lacks '") + field + "'");
    Rational kappa = rationalFromString(j.at("kappa").get<std::string>());
    std::vector<Rational> theta;
    for (const auto& t : j.at("theta")) {
        if (t.is_string())
            theta.push_back(rationalFromString(t.get<std::string>()));
        else if (t.is_number_integer())
            theta.push_back(makeRational(t.get<long>()));
        else
            throw InvalidInput("theta entries must be rationals");
    }
    std::vector<long> charges = j.at("charges").get<std::vector<long>>();
    long e = j.contains("e") ? j.at("e").get<long>() : 0;
    return Weighting(kappa, std::move(theta), std::move(charges), e);
}

json toJson(const Abacus& a) {
    return json{{"charge", a.charge()},
                {"extraBeads", std::vector<long>(a.extraBeads().begin(), a.extraBeads().end())},
                {"missingBeads",
                 std::vector<long>(a.missingBeads().begin(), a.missingBeads().end())}};
}

Abacus abacusFromJson(const json& j) {
    if (!j.contains("charge")) throw InvalidInput("abacus lacks 'charge'");
    std::vector<long> extra, missing;
    if (j.contains("extraBeads")) extra = j.at("extraBeads").get<std::vector<long>>();
    if (j.contains("missingBeads")) missing = j.at("missingBeads").get<std::vector<long>>();
    return Abacus(j.at("charge").get<long>(), std::set<long>(extra.begin(), extra.end()),
                  std::set<long>(missing.begin(), missing.end()));
}

json toJson(const EntryPos& p) { return p.toString(); }

EntryPos entryPosFromJson(const json& j) {
    if (j.is_number_integer()) return EntryPos{makeRational(j.get<long>()), 0};
    if (!j.is_string()) throw InvalidInput("entry position must be a string or integer");
    std::string s = j.get<std::string>();
    auto at = s.find('@');
    if (at == std::string::npos) return EntryPos{rationalFromString(s), 0};
    return EntryPos{rationalFromString(s.substr(0, at)), std::stol(s.substr(at + 1))};
}

json toJson(const Loading& L) {
    json points = json::array();
    for (const auto& [pos, r] : L.points())
        points.push_back(json{{"pos", toJson(pos)}, {"res", r.value}});
    return json{{"points", points}};
}

Loading loadingFromJson(const json& j) {
    std::vector<std::pair<EntryPos, Residue>> points;
    if (!j.contains("points")) throw InvalidInput("loading lacks 'points'");
    for (const auto& pt : j.at("points")) {
        if (!pt.contains("pos") || !pt.contains("res"))
            throw InvalidInput("loading point needs 'pos' and 'res'");
        points.emplace_back(entryPosFromJson(pt.at("pos")), Residue{pt.at("res").get<long>()});
    }
    return Loading(std::move(points));
}

json toJson(const ITableau& t) {
    json entries = json::object();
    for (const auto& [b, pos] : t.fill) {
        // Keys are "row,col,component", 1-based.
        std::string key = std::to_string(b.row + 1) + "," + std::to_string(b.col + 1) + "," +
                          std::to_string(b.component + 1);
        entries[key] = pos.toString();
    }
    return json{{"shape", toJson(t.shape)}, {"entries", entries}};
}

json toJson(const FockVector& v) {
    json terms = json::array();
    for (const auto& [xi, c] : v.terms())
        terms.push_back(json{{"shape", toJson(xi)}, {"coeff", toJson(c)}});
    return json{{"terms", terms}};
}

FockVector fockVectorFromJson(const json& j, const Weighting& w) {
    FockVector v(w);
    if (!j.contains("terms")) throw InvalidInput("Fock vector lacks 'terms'");
    for (const auto& term : j.at("terms")) {
        if (!term.contains("shape") || !term.contains("coeff"))
            throw InvalidInput("Fock term needs 'shape' and 'coeff'");
        v.add(multipartitionFromJson(term.at("shape")), laurentFromJson(term.at("coeff")));
    }
    return v;
}

json toJson(const GradedMatrix& M) {
    json rows = json::array(), cols = json::array(), entries = json::array();
    for (const auto& r : M.rows) rows.push_back(toJson(r));
    for (const auto& c : M.cols) cols.push_back(toJson(c));
    for (const auto& row : M.entries) {
        json jrow = json::array();
        for (const auto& e : row) jrow.push_back(toJson(e));
        entries.push_back(jrow);
    }
    return json{{"rows", rows}, {"cols", cols}, {"entries", entries}};
}

json toJson(const RunnerMatrix& M) {
    json u = json::array();
    for (const auto& row : M.u) u.push_back(row);
    json grid = json::array();
    for (const auto& row : M.grid) {
        json jrow = json::array();
        for (const auto& a : row) jrow.push_back(toJson(a));
        grid.push_back(jrow);
    }
    return json{{"u", u},         {"grid", grid},       {"rowSums", M.rowSums},
                {"colSums", M.colSums}, {"defect", M.defect}, {"level", M.level},
                {"modulus", M.modulus}};
}

}  // namespace wklr
