#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "group.hpp"

namespace rouquier::io {

using json = nlohmann::json;

inline constexpr int kFormat = 1;

inline json rational_to_json(const Rational& r) { return r.get_str(); }

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    throw DataError("literal", "rational must be an integer or a \"p/q\" string, got " + j.dump());
}

// {"n": 12, "c": {"0": "1/2", "7": "-2"}}; plain rationals may be given bare.
inline json to_json(const Cyclotomic& c) {
    if (c.is_rational()) return rational_to_json(c.to_rational());
    json cs = json::object();
    for (auto& [i, a] : c.terms()) cs[std::to_string(i)] = rational_to_json(a);
    return {{"n", c.conductor()}, {"c", cs}};
}

inline Cyclotomic cyclotomic_from_json(const json& j) {
    if (!j.is_object()) return Cyclotomic(rational_from_json(j));
    if (!j.contains("n") || !j.contains("c")) throw DataError("literal", "cyclotomic needs \"n\" and \"c\": " + j.dump());
    long n = j.at("n").get<long>();
    if (n < 1) throw DataError("literal", "conductor must be positive");
    std::map<long, Rational> raw;
    for (auto& [k, v] : j.at("c").items()) {
        long e;
        try {
            e = std::stol(k);
        } catch (const std::exception&) {
            throw DataError("literal", "bad exponent '" + k + "'");
        }
        raw[e] += rational_from_json(v);
    }
    return Cyclotomic::make(n, raw);
}

// {"mu": 6, "terms": [[y_exponent, cyclo], ...]}
inline json to_json(const LaurentPoly& p) {
    json t = json::array();
    for (auto& [e, c] : p.terms()) t.push_back({e, to_json(c)});
    return {{"mu", p.mu()}, {"terms", t}};
}

inline LaurentPoly laurent_from_json(const json& j, int default_mu) {
    int mu = j.contains("mu") ? j.at("mu").get<int>() : default_mu;
    if (mu < 1) throw DataError("literal", "mu must be positive");
    LaurentPoly p = LaurentPoly::zero(mu);
    for (auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2) throw DataError("literal", "term must be [exponent, coefficient]");
        p.add_term(t[0].get<long>(), cyclotomic_from_json(t[1]));
    }
    return p;
}

inline json to_json(const GroupDatum& W) {
    json j;
    j["format"] = kFormat;
    j["name"] = W.name;
    j["order"] = W.order;
    j["rank"] = W.rank;
    j["mu"] = W.mu;
    j["spetsial"] = W.spetsial;
    json gens = json::array();
    for (auto& g : W.generators) {
        json m = json::array();
        for (auto& row : g) {
            json r = json::array();
            for (auto& c : row) r.push_back(to_json(c));
            m.push_back(r);
        }
        gens.push_back(m);
    }
    j["generators"] = gens;
    j["degrees"] = W.degrees;
    json cls = json::array();
    for (auto& c : W.classes) cls.push_back({{"word", c.word}, {"size", c.size}});
    j["classes"] = cls;
    json chars = json::array();
    for (auto& ch : W.characters) {
        json vals = json::array();
        for (auto& v : ch.values) vals.push_back(to_json(v));
        chars.push_back({{"name", ch.name}, {"values", vals}});
    }
    j["characters"] = chars;
    json fd = json::array(), sc = json::array();
    for (auto& f : W.fake_degrees) fd.push_back(to_json(f));
    for (auto& s : W.schur) sc.push_back(to_json(s));
    j["fake_degrees"] = fd;
    j["schur_elements"] = sc;
    json par = json::array();
    for (auto& p : W.parabolics) {
        json e = {{"subgroup", p.subgroup}, {"words", p.words}};
        if (!p.induction.empty()) e["induction"] = p.induction;
        par.push_back(e);
    }
    j["parabolics"] = par;
    if (!W.conj_perm.empty()) j["conj_perm"] = W.conj_perm;
    if (W.det_index >= 0) j["det_index"] = W.det_index;
    return j;
}

// Shape-level parsing only; semantic checks live in validate().
inline GroupDatum group_from_json(const json& j) {
    auto need = [&](const char* key) -> const json& {
        if (!j.contains(key)) throw DataError("schema", std::string("missing field \"") + key + "\"");
        return j.at(key);
    };
    try {
        if (need("format").get<int>() != kFormat)
            throw DataError("format", "unsupported format " + j.at("format").dump());
        GroupDatum W;
        W.name = need("name").get<std::string>();
        W.order = need("order").get<long>();
        W.rank = need("rank").get<int>();
        W.mu = need("mu").get<int>();
        W.spetsial = j.value("spetsial", true);
        for (auto& g : need("generators")) {
            Matrix m;
            for (auto& row : g) {
                std::vector<Cyclotomic> r;
                for (auto& c : row) r.push_back(cyclotomic_from_json(c));
                m.push_back(r);
            }
            W.generators.push_back(m);
        }
        W.degrees = need("degrees").get<std::vector<int>>();
        for (auto& c : need("classes")) W.classes.push_back({c.at("word").get<std::vector<int>>(), c.at("size").get<long>()});
        for (auto& ch : need("characters")) {
            Character c{ch.at("name").get<std::string>(), {}};
            for (auto& v : ch.at("values")) c.values.push_back(cyclotomic_from_json(v));
            W.characters.push_back(c);
        }
        if (j.contains("fake_degrees"))
            for (auto& f : j.at("fake_degrees")) W.fake_degrees.push_back(laurent_from_json(f, W.mu));
        for (auto& s : need("schur_elements")) W.schur.push_back(laurent_from_json(s, W.mu));
        if (j.contains("parabolics"))
            for (auto& p : j.at("parabolics")) {
                ParabolicEmbedding e;
                e.subgroup = p.at("subgroup").get<std::string>();
                e.words = p.at("words").get<std::vector<std::vector<int>>>();
                if (p.contains("induction")) e.induction = p.at("induction").get<std::vector<std::vector<long>>>();
                W.parabolics.push_back(e);
            }
        if (j.contains("conj_perm")) W.conj_perm = j.at("conj_perm").get<std::vector<int>>();
        if (j.contains("det_index")) W.det_index = j.at("det_index").get<int>();
        return W;
    } catch (const json::exception& e) {
        throw DataError("schema", e.what());
    }
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("file", "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw DataError("schema", path + ": " + e.what());
    }
}

}  // namespace rouquier::io
