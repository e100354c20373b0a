#include "cli_main.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "wklr/errors.hpp"
#include "wklr/json_io.hpp"

namespace wklr {

namespace {

struct Args {
    std::string command;
    std::map<std::string, std::string> flags;
    bool json = false;

    bool has(const std::string& k) const { return flags.count(k) > 0; }
    std::string get(const std::string& k) const {
        auto it = flags.find(k);
        if (it == flags.end()) throw InvalidInput("missing required flag --" + k);
        return it->second;
    }
    std::string getOr(const std::string& k, const std::string& dflt) const {
        auto it = flags.find(k);
        return it == flags.end() ? dflt : it->second;
    }
};

json parseJsonArg(const std::string& text) {
    // Inline JSON or a path to a JSON file.
    std::string trimmed = text;
    if (!trimmed.empty() && (trimmed[0] == '{' || trimmed[0] == '[' || trimmed[0] == '"'))
        return json::parse(trimmed);
    std::ifstream in(trimmed);
    if (!in) throw InvalidInput("cannot open file '" + trimmed + "'");
    json j;
    in >> j;
    return j;
}

Weighting parseWeighting(const Args& a) {
    return weightingFromJson(parseJsonArg(a.get("weighting")));
}

Multipartition parseShape(const std::string& text) {
    return multipartitionFromJson(parseJsonArg(text));
}

Box parseBox(const std::string& text) {
    // "row,col,component", 1-based.
    long vals[3];
    std::stringstream ss(text);
    std::string part;
    for (int k = 0; k < 3; ++k) {
        if (!std::getline(ss, part, ',')) throw InvalidInput("box must be 'row,col,component'");
        vals[k] = std::stol(part);
    }
    return Box{vals[2] - 1, vals[0] - 1, vals[1] - 1};
}

std::vector<EntryPos> parseEntries(const std::string& text) {
    json j = parseJsonArg(text);
    if (!j.is_array()) throw InvalidInput("entries must be a JSON array");
    std::vector<EntryPos> out;
    for (const auto& v : j) out.push_back(entryPosFromJson(v));
    return out;
}

std::map<long, long> parseContent(const std::string& text) {
    json j = parseJsonArg(text);
    if (!j.is_object()) throw InvalidInput("content must be a JSON object");
    std::map<long, long> content;
    for (auto it = j.begin(); it != j.end(); ++it)
        content[std::stol(it.key())] = it.value().get<long>();
    return content;
}

// ---------------------------------------------------------------------------
// Worked-example presets.

struct ExampleData {
    Weighting weighting;
    std::vector<Multipartition> shapes;            // listed order
    std::vector<std::vector<EntryPos>> entrySets;  // unlabeled sets
    std::vector<Loading> loadings;                 // projective generators
};

ExampleData examplePreset(const std::string& name) {
    auto mkShapes = [] {
        return std::vector<Multipartition>{
            Multipartition({Partition({2}), Partition()}),
            Multipartition({Partition({1, 1}), Partition()}),
            Multipartition({Partition({1}), Partition({1})}),
            Multipartition({Partition(), Partition({2})}),
            Multipartition({Partition(), Partition({1, 1})})};
    };
    auto mkLoadings = [] {
        std::vector<std::pair<long, long>> ab = {{1, -1}, {1, 6}, {1, 10}, {8, 10}, {15, 10}};
        std::vector<Loading> out;
        for (auto [a, b] : ab)
            out.push_back(Loading({{EntryPos{makeRational(a), 0}, Residue{0}},
                                   {EntryPos{makeRational(b), 0}, Residue{1}}}));
        return out;
    };
    auto mkSets = [] {
        std::vector<std::vector<long>> sets = {{1, 3}, {2, 7}, {8, 10}};
        std::vector<std::vector<EntryPos>> out;
        for (const auto& s : sets) {
            std::vector<EntryPos> e;
            for (long x : s) e.push_back(EntryPos{makeRational(x), 0});
            out.push_back(e);
        }
        return out;
    };
    ExampleData d;
    d.shapes = mkShapes();
    if (name == "big-example-1" || name == "big-example-1-case1") {
        d.weighting = Weighting(makeRational(-4), {makeRational(0), makeRational(9)}, {0, 1}, 2);
        d.entrySets = mkSets();
        d.loadings = mkLoadings();
    } else if (name == "big-example-1-case2") {
        d.weighting =
            Weighting(makeRational(-4), {makeRational(0), makeRational(3, 2)}, {0, 1}, 2);
        d.entrySets = mkSets();
    } else if (name == "big-example-1-case3") {
        d.weighting = Weighting(makeRational(-4), {makeRational(9), makeRational(0)}, {0, 1}, 2);
        d.entrySets = mkSets();
    } else if (name == "big-example-2-case1") {
        d.weighting =
            Weighting(makeRational(-9, 2), {makeRational(0), makeRational(9)}, {0, 1}, 2);
        d.loadings = mkLoadings();
    } else if (name == "big-example-2-case2") {
        d.weighting =
            Weighting(makeRational(-9, 2), {makeRational(0), makeRational(3, 2)}, {0, 1}, 2);
    } else if (name == "big-example-2-case3") {
        d.weighting =
            Weighting(makeRational(-9, 2), {makeRational(9), makeRational(0)}, {0, 1}, 2);
    } else {
        throw InvalidInput("unknown example '" + name + "'");
    }
    return d;
}

// ---------------------------------------------------------------------------
// The invariant suites behind `check`.

struct SuiteResult {
    std::string name;
    bool pass;
};

std::vector<Weighting> suiteWeightings() {
    return {Weighting(makeRational(-9, 2), {makeRational(0), makeRational(9)}, {0, 1}, 2),
            Weighting(makeRational(-9, 2), {makeRational(0), makeRational(3, 2)}, {0, 1}, 2),
            uglovWeighting({0, 2}, 2, +1), uglovWeighting({2, -1}, 3, -1),
            uglovWeighting({1, 0, 2}, 2, +1)};
}

struct RandomCase {
    Weighting weighting;
    Multipartition shape;
};

RandomCase randomCase(std::mt19937& rng, long maxSize) {
    std::uniform_int_distribution<long> levelD(1, 3), eD(2, 3), chgD(-3, 3), szD(0, maxSize);
    for (;;) {
        long l = levelD(rng), e = eD(rng);
        std::vector<long> s(static_cast<std::size_t>(l));
        for (auto& x : s) x = chgD(rng);
        try {
            Weighting w = uglovWeighting(s, e, rng() % 2 ? 1 : -1);
            auto shapes = multipartitionsOf(szD(rng), l);
            return {w, shapes[rng() % shapes.size()]};
        } catch (const InvalidInput&) {
            continue;
        }
    }
}

bool fockCommutators(const Weighting& w, const Multipartition& xi) {
    FockVector u = FockVector::basis(xi, w);
    for (long i = 0; i < w.modulus(); ++i) {
        Residue ri{i};
        FockVector comm = applyE(ri, applyF(ri, u));
        comm -= applyF(ri, applyE(ri, u));
        if (!(comm == u * qInt(weightPairing(ri, xi, w)))) return false;
        for (long j = 0; j < w.modulus(); ++j) {
            if (i == j) continue;
            FockVector ab = applyE(ri, applyF(Residue{j}, u));
            ab -= applyF(Residue{j}, applyE(ri, u));
            if (!ab.isZero()) return false;
        }
    }
    return true;
}

bool dividedPowerIntegrality(const Weighting& w, const Multipartition& xi) {
    FockVector u = FockVector::basis(xi, w);
    try {
        for (long i = 0; i < w.modulus(); ++i) {
            dividedPower(Chevalley::F, Residue{i}, 2, u);
            dividedPower(Chevalley::E, Residue{i}, 2, u);
        }
    } catch (const DivisionFailure&) {
        return false;
    }
    return true;
}

bool crystalInverses(const Weighting& w, const Multipartition& xi) {
    for (long i = 0; i < w.modulus(); ++i) {
        Residue r{i};
        auto [eps, phi] = stringLengths(r, xi, w);
        if (phi - eps != weightPairing(r, xi, w)) return false;
        auto up = crystalF(r, xi, w);
        if (up) {
            auto back = crystalE(r, *up, w);
            if (!back || !(*back == xi)) return false;
        } else if (phi != 0) {
            return false;
        }
        auto down = crystalE(r, xi, w);
        if (down) {
            auto back = crystalF(r, *down, w);
            if (!back || !(*back == xi)) return false;
        } else if (eps != 0) {
            return false;
        }
    }
    return true;
}

bool degreeCrossOracle(const Weighting& w, const Multipartition& xi) {
    Loading L;
    try {
        L = canonicalLoading(xi, w);
    } catch (const DegenerateWeighting&) {
        return true;  // degenerate shape at this weighting, nothing to compare
    }
    for (const ITableau& t : enumerateITableaux(xi, L, w))
        if (crossingDegree(t) != tableauDegree(t)) return false;
    return true;
}

bool uglovationInvariants(const Weighting& w, long maxSize) {
    Weighting u = uglovate(w);
    if (!u.isUglov()) return false;
    Weighting uu = uglovate(u);
    if (!(uu.charges() == u.charges()) || !(uu.theta() == u.theta())) return false;
    // Order preservation is a theorem for Uglov inputs (where the map is a
    // plain charge renormalization); for weightings whose kappa spans several
    // theta gaps no Uglov weighting realizes the same partial order, so only
    // idempotence is in force there.
    if (!w.isUglov()) return true;
    for (long n = 0; n <= maxSize; ++n) {
        auto shapes = enumerateBySize(n, w.level(), w);
        for (const auto& a : shapes)
            for (const auto& b : shapes)
                if (dominanceCompare(a, b, w) != dominanceCompare(a, b, u)) return false;
    }
    return true;
}

bool flipInvolution(const Multipartition& xi, const std::vector<long>& charges, long e) {
    auto [mu, t] = koszulFlip(xi, charges, e);
    auto [back, sBack] = koszulFlip(mu, t, xi.level());
    if (!(back == xi) || !(sBack == charges)) return false;
    RunnerMatrix M = matrixU(xi, charges, e);
    return M.rowSums == charges && M.colSums == t &&
           matrixU(mu, t, xi.level()).defect == M.defect;
}

bool dominanceAxioms(const Weighting& w, long maxSize) {
    for (long n = 0; n <= maxSize; ++n) {
        auto shapes = enumerateBySize(n, w.level(), w);
        for (const auto& a : shapes) {
            if (dominanceCompare(a, a, w) != Comparison::Equal) return false;
            for (const auto& b : shapes) {
                Comparison ab = dominanceCompare(a, b, w);
                if (ab == Comparison::Greater && dominanceCompare(b, a, w) != Comparison::Less)
                    return false;
                if (ab == Comparison::Equal && !(a == b)) return false;
                for (const auto& c : shapes)
                    if (ab == Comparison::Greater &&
                        dominanceCompare(b, c, w) == Comparison::Greater &&
                        dominanceCompare(a, c, w) != Comparison::Greater)
                        return false;
            }
        }
    }
    return true;
}

bool peelingInvariants(const Weighting& w) {
    auto block = enumerateBlock(w, {{0, 1}, {1, 1}});
    GradedMatrix B;
    try {
        B = decompositionMatrix(block, w);
    } catch (const PeelFailure&) {
        return false;
    }
    for (std::size_t r = 0; r < block.size(); ++r)
        for (std::size_t c = 0; c < block.size(); ++c) {
            if (r == c && !B.entries[r][c].isOne()) return false;
            if (r != c && !B.entries[r][c].isZero()) {
                if (B.entries[r][c].maxExponent() >= 0) return false;
                for (const auto& [e, coef] : B.entries[r][c].coeffs())
                    if (coef <= 0) return false;
            }
        }
    return true;
}

bool semiOrthogonality(const Weighting& w) {
    BlockBasisData data = blockBasis(w, {{0, 1}, {1, 1}});
    for (const auto& xi : data.block)
        for (const auto& eta : data.block) {
            Comparison cmp = dominanceCompare(eta, xi, w);
            if (cmp != Comparison::Greater && cmp != Comparison::Equal)
                if (!sesquiForm(data, FockVector::basis(xi, w), FockVector::basis(eta, w))
                         .isZero())
                    return false;
        }
    return true;
}

std::vector<SuiteResult> runCheckSuite(long maxSize, long randomCount, unsigned seed) {
    std::vector<SuiteResult> results;
    auto ws = suiteWeightings();
    std::mt19937 rng(seed);

    // Configurations with tied marks are excluded by genericity, so a
    // DegenerateWeighting signal counts as a skip rather than a failure.
    auto sweep = [&](const std::string& name, auto&& perCase) {
        bool ok = true;
        auto guarded = [&](const Weighting& w, const Multipartition& xi) {
            try {
                return perCase(w, xi);
            } catch (const DegenerateWeighting&) {
                return true;
            }
        };
        for (const Weighting& w : ws)
            for (long n = 0; n <= maxSize && ok; ++n)
                for (const auto& xi : multipartitionsOf(n, w.level()))
                    if (!guarded(w, xi)) {
                        ok = false;
                        break;
                    }
        for (long t = 0; t < randomCount && ok; ++t) {
            RandomCase rc = randomCase(rng, maxSize + 1);
            if (!guarded(rc.weighting, rc.shape)) ok = false;
        }
        results.push_back({name, ok});
    };

    sweep("fock-commutators", fockCommutators);
    sweep("divided-power-integrality", dividedPowerIntegrality);
    sweep("crystal-inverses", crystalInverses);
    sweep("degree-cross-oracle", degreeCrossOracle);

    {
        bool ok = true;
        for (const Weighting& w : ws)
            if (!uglovationInvariants(w, maxSize)) ok = false;
        std::mt19937 rng3(seed + 2);
        for (long t = 0; t < randomCount && ok; ++t) {
            RandomCase rc = randomCase(rng3, maxSize);
            if (!uglovationInvariants(rc.weighting, std::min(maxSize, 3L))) ok = false;
        }
        results.push_back({"uglovation-order-preservation", ok});
    }
    {
        bool ok = true;
        std::mt19937 rng2(seed + 1);
        std::uniform_int_distribution<long> chg(-3, 3);
        for (long l = 1; l <= 3 && ok; ++l)
            for (long e = 1; e <= 3 && ok; ++e)
                for (long n = 0; n <= maxSize && ok; ++n)
                    for (const auto& xi : multipartitionsOf(n, l)) {
                        std::vector<long> s(static_cast<std::size_t>(l));
                        for (auto& x : s) x = chg(rng2);
                        if (!flipInvolution(xi, s, e)) {
                            ok = false;
                            break;
                        }
                    }
        results.push_back({"koszul-flip-involution", ok});
    }
    {
        bool ok = true;
        for (const Weighting& w : ws)
            if (!dominanceAxioms(w, maxSize)) ok = false;
        results.push_back({"dominance-partial-order", ok});
    }
    {
        bool ok = true;
        for (const Weighting& w : ws)
            if (w.level() == 2 && !peelingInvariants(w)) ok = false;
        results.push_back({"peeling-unitriangular-positive", ok});
    }
    {
        bool ok = true;
        for (const Weighting& w : ws)
            if (w.level() == 2 && !semiOrthogonality(w)) ok = false;
        results.push_back({"standard-basis-semiorthogonality", ok});
    }
    return results;
}

// ---------------------------------------------------------------------------
// Command implementations.

int cmdResidue(const Args& a, std::ostream& out) {
    Weighting w = parseWeighting(a);
    Box b = parseBox(a.get("box"));
    long r = w.residue(b).value;
    if (a.json)
        out << json{{"residue", r}}.dump() << "\n";
    else
        out << r << "\n";
    return 0;
}

int cmdXcoord(const Args& a, std::ostream& out) {
    Weighting w = parseWeighting(a);
    Box b = parseBox(a.get("box"));
    std::string x = rationalToString(w.xCoord(b));
    if (a.json)
        out << json{{"x", x}}.dump() << "\n";
    else
        out << x << "\n";
    return 0;
}

int cmdDominance(const Args& a, std::ostream& out) {
    Weighting w = parseWeighting(a);
    Multipartition xi = parseShape(a.get("shape"));
    Multipartition eta = parseShape(a.get("shape2"));
    const char* names[] = {"Equal", "Greater", "Less", "Incomparable"};
    const char* r = names[static_cast<int>(dominanceCompare(xi, eta, w))];
    if (a.json)
        out << json{{"comparison", r}}.dump() << "\n";
    else
        out << r << "\n";
    return 0;
}

int cmdCfun(const Args& a, std::ostream& out) {
    Weighting w = parseWeighting(a);
    Multipartition xi = parseShape(a.get("shape"));
    std::string c = rationalToString(cFunction(xi, w));
    if (a.json)
        out << json{{"c", c}}.dump() << "\n";
    else
        out << c << "\n";
    return 0;
}

int cmdUglovate(const Args& a, std::ostream& out) {
    Weighting u = a.has("charges")
                      ? uglovWeighting(parseJsonArg(a.get("charges")).get<std::vector<long>>(),
                                       std::stol(a.get("e")),
                                       a.getOr("sign", "+") == "-" ? -1 : +1)
                      : uglovate(parseWeighting(a));
    if (a.json)
        out << toJson(u).dump() << "\n";
    else
        out << u.toString() << "\n";
    return 0;
}

int cmdBraid(const Args& a, std::ostream& out) {
    Weighting w = parseWeighting(a);
    Weighting r =
        a.has("star") ? starWeighting(w) : braidOnWeighting(std::stol(a.get("generator")), w);
    if (a.has("between")) {
        Weighting mid = weightingFromJson(parseJsonArg(a.get("between")));
        bool btw = betweenCheck(w, mid, r, std::stol(a.getOr("max-size", "4")));
        out << (btw ? "between" : "not-between") << "\n";
        return 0;
    }
    if (a.json)
        out << toJson(r).dump() << "\n";
    else
        out << r.toString() << "\n";
    return 0;
}

int cmdTableaux(const Args& a, std::ostream& out) {
    if (a.has("example")) {
        ExampleData d = examplePreset(a.get("example"));
        if (!d.entrySets.empty()) {
            out << "entry-set tableau counts per shape:\n";
            for (const auto& xi : d.shapes) {
                long total = 0;
                for (const auto& D : d.entrySets)
                    total += static_cast<long>(enumerateDTableaux(xi, D, d.weighting).size());
                out << "  " << xi.toString() << " : " << total << "\n";
            }
        }
        if (!d.loadings.empty()) {
            out << "loading-collection tableau counts per shape:\n";
            Integer squares = 0;
            for (const auto& xi : d.shapes) {
                long total = 0;
                for (const auto& L : d.loadings)
                    total += static_cast<long>(enumerateITableaux(xi, L, d.weighting).size());
                out << "  " << xi.toString() << " : " << total << "\n";
                squares += Integer(total) * Integer(total);
            }
            out << "sum of squares: " << squares.get_str() << "\n";
        }
        return 0;
    }
    Weighting w = parseWeighting(a);
    Multipartition xi = parseShape(a.get("shape"));
    std::vector<ITableau> tabs;
    if (a.has("loading"))
        tabs = enumerateITableaux(xi, loadingFromJson(parseJsonArg(a.get("loading"))), w);
    else
        tabs = enumerateDTableaux(xi, parseEntries(a.get("entries")), w);
    if (a.json) {
        json arr = json::array();
        for (const auto& t : tabs) arr.push_back(toJson(t));
        out << arr.dump() << "\n";
    } else {
        out << tabs.size() << " tableaux\n";
        for (const auto& t : tabs) {
            out << "  " << t.toString() << "  word:";
            for (const Residue& r : russianReadingWord(t)) out << " " << r.value;
            out << "\n";
        }
    }
    return 0;
}

int cmdDegree(const Args& a, std::ostream& out) {
    Weighting w = parseWeighting(a);
    Multipartition xi = parseShape(a.get("shape"));
    std::vector<ITableau> tabs;
    if (a.has("loading"))
        tabs = enumerateITableaux(xi, loadingFromJson(parseJsonArg(a.get("loading"))), w);
    else
        tabs = enumerateDTableaux(xi, parseEntries(a.get("entries")), w);
    json arr = json::array();
    for (const auto& t : tabs) {
        long d = tableauDegree(t);
        long cd = crossingDegree(t);
        if (a.json)
            arr.push_back(json{{"tableau", toJson(t)}, {"degree", d}, {"crossingDegree", cd}});
        else
            out << d << " (crossings " << cd << ")  " << t.toString() << "\n";
    }
    if (a.json) out << arr.dump() << "\n";
    return 0;
}

int cmdCelldim(const Args& a, std::ostream& out) {
    Weighting w = parseWeighting(a);
    Multipartition xi = parseShape(a.get("shape"));
    Loading L = loadingFromJson(parseJsonArg(a.get("loading")));
    LaurentPoly d = gradedCellDim(xi, L, w);
    if (a.json)
        out << toJson(d).dump() << "\n";
    else
        out << d.toString() << "\n";
    return 0;
}

int cmdHomdim(const Args& a, std::ostream& out) {
    Weighting w = parseWeighting(a);
    LaurentPoly d;
    if (a.has("entries"))
        d = dSetHomDim(parseEntries(a.get("entries")), parseEntries(a.get("entries2")), w);
    else
        d = gradedHomDim(loadingFromJson(parseJsonArg(a.get("loading"))),
                         loadingFromJson(parseJsonArg(a.get("loading2"))), w);
    if (a.json)
        out << toJson(d).dump() << "\n";
    else
        out << d.toString() << " (at q=1: " << d.evalAtOne().get_str() << ")\n";
    return 0;
}

std::pair<Weighting, std::vector<Multipartition>> blockFor(const Args& a) {
    if (a.has("example")) {
        ExampleData d = examplePreset(a.get("example"));
        return {d.weighting, enumerateBlock(d.weighting, {{0, 1}, {1, 1}})};
    }
    Weighting w = parseWeighting(a);
    return {w, enumerateBlock(w, parseContent(a.get("content")))};
}

int cmdDecomp(const Args& a, std::ostream& out) {
    auto [w, block] = blockFor(a);
    GradedMatrix B = decompositionMatrix(block, w);
    if (a.json)
        out << toJson(B).dump() << "\n";
    else
        out << B.toString();
    return 0;
}

int cmdCanonical(const Args& a, std::ostream& out) {
    auto [w, block] = blockFor(a);
    BlockBasisData data = blockBasis(w, residueContent(block.front(), w));
    if (a.json) {
        out << toJson(data.canonical).dump() << "\n";
        return 0;
    }
    for (std::size_t j = 0; j < data.block.size(); ++j) {
        out << "b " << data.block[j].toString() << " =";
        FockVector b(w);
        for (std::size_t r = 0; r < data.block.size(); ++r) {
            const LaurentPoly& c = data.canonical.entries[r][j];
            if (c.isZero()) continue;
            out << " + (" << c.toString() << ")u" << data.block[r].toString();
            b.add(data.block[r], c);
        }
        out << "   [bar-fixed: " << (barOnBlock(data, b) == b ? "yes" : "no") << "]\n";
    }
    return 0;
}

int cmdBranch(const Args& a, std::ostream& out) {
    Weighting w = parseWeighting(a);
    Multipartition xi = parseShape(a.get("shape"));
    Residue r{std::stol(a.get("residue"))};
    json j{{"induce", json::array()}, {"restrict", json::array()}};
    for (const auto& [eta, shift] : branchInduce(xi, r, w)) {
        if (a.json)
            j["induce"].push_back(json{{"shape", toJson(eta)}, {"shift", shift}});
        else
            out << "induce   " << eta.toString() << " shift " << shift << "\n";
    }
    for (const auto& [eta, shift] : branchRestrict(xi, r, w)) {
        if (a.json)
            j["restrict"].push_back(json{{"shape", toJson(eta)}, {"shift", shift}});
        else
            out << "restrict " << eta.toString() << " shift " << shift << "\n";
    }
    if (a.json) out << j.dump() << "\n";
    return 0;
}

int cmdFockApply(const Args& a, std::ostream& out) {
    Weighting w = parseWeighting(a);
    FockVector v = a.has("vector") ? fockVectorFromJson(parseJsonArg(a.get("vector")), w)
                                   : FockVector::basis(parseShape(a.get("shape")), w);
    Residue r{std::stol(a.get("residue"))};
    long power = std::stol(a.getOr("power", "1"));
    Chevalley op = a.getOr("op", "F") == "E" ? Chevalley::E : Chevalley::F;
    FockVector img = dividedPower(op, r, power, v);
    if (a.json) {
        out << toJson(img).dump() << "\n";
    } else {
        out << img.toString() << "\n";
        if (a.has("shape"))
            out << "weight pairing: " << weightPairing(r, parseShape(a.get("shape")), w) << "\n";
    }
    return 0;
}

int cmdCrystal(const Args& a, std::ostream& out) {
    Weighting w = parseWeighting(a);
    Multipartition xi = parseShape(a.get("shape"));
    Residue r{std::stol(a.get("residue"))};
    auto up = crystalF(r, xi, w);
    auto down = crystalE(r, xi, w);
    auto [eps, phi] = stringLengths(r, xi, w);
    if (a.json) {
        json j{{"eps", eps}, {"phi", phi}};
        j["f"] = up ? toJson(*up) : json();
        j["e"] = down ? toJson(*down) : json();
        out << j.dump() << "\n";
    } else {
        out << "f: " << (up ? up->toString() : "null") << "\n";
        out << "e: " << (down ? down->toString() : "null") << "\n";
        out << "eps: " << eps << " phi: " << phi << "\n";
    }
    return 0;
}

int cmdWeyl(const Args& a, std::ostream& out) {
    Weighting w = parseWeighting(a);
    FockVector v = a.has("vector") ? fockVectorFromJson(parseJsonArg(a.get("vector")), w)
                                   : FockVector::basis(parseShape(a.get("shape")), w);
    FockVector img = a.has("dual") ? dualQuantumWeylT(std::stol(a.get("dual")), v)
                                   : quantumWeylT(Residue{std::stol(a.get("residue"))}, v);
    if (a.json)
        out << toJson(img).dump() << "\n";
    else
        out << img.toString() << "\n";
    return 0;
}

int cmdFlip(const Args& a, std::ostream& out) {
    Weighting w = parseWeighting(a);
    Multipartition xi = parseShape(a.get("shape"));
    auto [mu, t] = koszulFlip(xi, w.charges(), w.modulus());
    RunnerMatrix M = matrixU(xi, w.charges(), w.modulus());
    if (a.json) {
        out << json{{"dual", toJson(mu)}, {"dualCharges", t}, {"matrix", toJson(M)}}.dump()
            << "\n";
        return 0;
    }
    out << "dual: " << mu.toString() << " charges (";
    for (std::size_t k = 0; k < t.size(); ++k) out << (k ? "," : "") << t[k];
    out << ")\n";
    out << "charge matrix u:\n";
    for (const auto& row : M.u) {
        out << " ";
        for (long v2 : row) out << " " << v2;
        out << "\n";
    }
    out << "defect: " << M.defect << "\n";
    return 0;
}

int cmdInterpDegree(const Args& a, std::ostream& out) {
    Weighting w = parseWeighting(a);
    Multipartition xi = parseShape(a.get("shape"));
    if (a.has("weighting2")) {
        Weighting w2 = weightingFromJson(parseJsonArg(a.get("weighting2")));
        long d = interpolationDegree(xi, w2, w);
        if (a.json)
            out << json{{"degree", d}}.dump() << "\n";
        else
            out << d << "\n";
        return 0;
    }
    long g = std::stol(a.get("generator"));
    long d = braidInterpolationDegree(xi, g, w);
    long p = pushCount(xi, w.charges(), w.modulus(), g);
    if (a.json)
        out << json{{"degree", d}, {"pushCount", p}}.dump() << "\n";
    else
        out << "degree: " << d << "  push count: " << p << "\n";
    return 0;
}

int cmdCheck(const Args& a, std::ostream& out) {
    long maxSize = std::stol(a.getOr("max-size", a.getOr("block-size", "4")));
    long randoms = std::stol(a.getOr("random", "50"));
    unsigned seed = static_cast<unsigned>(std::stoul(a.getOr("seed", "1")));
    auto results = runCheckSuite(maxSize, randoms, seed);
    bool all = true;
    for (const auto& r : results) {
        out << (r.pass ? "pass" : "FAIL") << "  " << r.name << "\n";
        all = all && r.pass;
    }
    out << (all ? "all invariant suites passed\n" : "invariant suite failures\n");
    return all ? 0 : 1;
}

}  // namespace

const std::vector<CliCommand>& cliCommandTable() {
    static const std::vector<CliCommand> table = {
        {"residue", {"residue"}},
        {"xcoord", {"xCoord"}},
        {"dominance", {"dominanceCompare"}},
        {"cfun", {"cFunction"}},
        {"uglovate", {"uglovate", "uglovWeighting"}},
        {"braid", {"braidOnWeighting", "starWeighting", "betweenCheck"}},
        {"tableaux",
         {"enumerateDTableaux", "enumerateITableaux", "canonicalLoading", "russianReadingWord"}},
        {"degree", {"tableauDegree", "relativeStatus", "crossingDegree"}},
        {"celldim", {"gradedCellDim"}},
        {"homdim", {"gradedHomDim", "dSetHomDim"}},
        {"decomp", {"standardMultiplicityColumns", "peelCanonicalBasis"}},
        {"canonical", {"blockBasis", "barOnBlock", "sesquiForm", "mutateBasis"}},
        {"branch", {"branchRestrict", "branchInduce"}},
        {"fock-apply", {"applyF", "applyE", "dividedPower", "weightPairing"}},
        {"crystal", {"crystalF", "crystalE", "stringLengths"}},
        {"weyl", {"quantumWeylT", "dualQuantumWeylT", "dualApplyF", "dualApplyE"}},
        {"flip", {"koszulFlip", "matrixU", "toAbacus", "fromAbacus", "runnerSplit", "runnerJoin"}},
        {"interp-degree", {"interpolationDegree", "braidInterpolationDegree", "pushCount"}},
        {"check",
         {"bar", "qInt", "qFactorial", "qBinomial", "barSymmetrizeHead", "enumerateBlock",
          "enumerateBySize", "addableBoxes", "removableBoxes"}},
    };
    return table;
}

int cliRun(const std::vector<std::string>& args, std::string& outStr) {
    std::ostringstream out;
    int code = 0;
    try {
        if (args.empty()) throw InvalidInput("usage: wklr-cli <command> [--flag value ...]");
        Args a;
        a.command = args[0];
        for (std::size_t k = 1; k < args.size(); ++k) {
            std::string flag = args[k];
            if (flag.rfind("--", 0) != 0) throw InvalidInput("unexpected argument '" + flag + "'");
            flag = flag.substr(2);
            if (flag == "json") {
                a.json = true;
            } else if (flag == "star" || flag == "all") {
                a.flags[flag] = "1";
            } else {
                if (k + 1 >= args.size()) throw InvalidInput("flag --" + flag + " needs a value");
                a.flags[flag] = args[++k];
            }
        }
        // --threads is accepted for interface compatibility; evaluation is
        // sequential and deterministic regardless of its value.
        if (a.has("threads")) (void)std::stol(a.get("threads"));

        if (a.command == "residue") code = cmdResidue(a, out);
        else if (a.command == "xcoord") code = cmdXcoord(a, out);
        else if (a.command == "dominance") code = cmdDominance(a, out);
        else if (a.command == "cfun") code = cmdCfun(a, out);
        else if (a.command == "uglovate") code = cmdUglovate(a, out);
        else if (a.command == "braid") code = cmdBraid(a, out);
        else if (a.command == "tableaux") code = cmdTableaux(a, out);
        else if (a.command == "degree") code = cmdDegree(a, out);
        else if (a.command == "celldim") code = cmdCelldim(a, out);
        else if (a.command == "homdim") code = cmdHomdim(a, out);
        else if (a.command == "decomp") code = cmdDecomp(a, out);
        else if (a.command == "canonical") code = cmdCanonical(a, out);
        else if (a.command == "branch") code = cmdBranch(a, out);
        else if (a.command == "fock-apply") code = cmdFockApply(a, out);
        else if (a.command == "crystal") code = cmdCrystal(a, out);
        else if (a.command == "weyl") code = cmdWeyl(a, out);
        else if (a.command == "flip") code = cmdFlip(a, out);
        else if (a.command == "interp-degree") code = cmdInterpDegree(a, out);
        else if (a.command == "check") code = cmdCheck(a, out);
        else throw InvalidInput("unknown command '" + a.command + "'");
    } catch (const InvalidInput& e) {
        out << e.what() << "\n";
        code = 2;
    } catch (const json::exception& e) {
        out << "invalid input: " << e.what() << "\n";
        code = 2;
    } catch (const std::invalid_argument& e) {
        out << "invalid input: " << e.what() << "\n";
        code = 2;
    } catch (const std::exception& e) {
        out << e.what() << "\n";
        code = 1;
    }
    outStr = out.str();
    return code;
}

int cliMain(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string out;
    int code = cliRun(args, out);
    std::cout << out;
    return code;
}

}  // namespace wklr
