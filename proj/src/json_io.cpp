#include "ccap/json_io.hpp"

#include <algorithm>

#include <json.hpp>

namespace ccap {

using json = nlohmann::ordered_json;

namespace {

Word word_from_json(const json& j, const Alphabet& a) {
    if (j.is_string()) return a.parse_word(j.get<std::string>());
    if (j.is_array()) {
        Word w;
        for (const auto& e : j) {
            if (!e.is_string()) throw ParseError("word entry must be a symbol name");
            std::string name = e.get<std::string>();
            auto it = std::find(a.symbols.begin(), a.symbols.end(), name);
            if (it == a.symbols.end()) throw ParseError("unknown symbol " + name);
            w.push_back(static_cast<uint32_t>(it - a.symbols.begin()));
        }
        return w;
    }
    throw ParseError("word must be a string or an array of symbol names");
}

json word_to_json(const Word& w, const Alphabet& a) {
    if (a.single_char_symbols()) return json(a.word_str(w));
    json arr = json::array();
    for (uint32_t s : w) arr.push_back(a.symbols[s]);
    return arr;
}

FamilySpec family_from_json(const json& j) {
    if (!j.is_object() || !j.contains("name"))
        throw ParseError("family must be an object with a name");
    std::string name = j.at("name").get<std::string>();
    auto need = [&](const char* key) -> int {
        if (!j.contains(key))
            throw ParseError("family " + name + " needs parameter " + key);
        return j.at(key).get<int>();
    };
    if (name == "RLL") return RllParams{need("d"), need("k")};
    if (name == "LB") return LbParams{need("ell"), need("delta")};
    if (name == "PA") return PaParams{need("ell")};
    if (name == "LPA") return LpaParams{need("ell"), need("p")};
    throw ParseError("unknown family " + name);
}

std::vector<Word> spec_words(const json& j, const Alphabet& alphabet) {
    const bool has_forbidden = j.contains("forbidden");
    const bool has_family = j.contains("family");
    if (has_forbidden == has_family)
        throw ParseError("spec entry needs exactly one of forbidden/family");
    if (has_family) {
        return family_generate(family_from_json(j.at("family")), alphabet).words();
    }
    const auto& arr = j.at("forbidden");
    if (!arr.is_array()) throw ParseError("forbidden must be an array");
    std::vector<Word> words;
    for (const auto& e : arr) words.push_back(word_from_json(e, alphabet));
    return words;
}

} // namespace

ForbiddenSet parse_constraint_spec(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("constraint spec: ") + e.what());
    }
    try {
        if (!j.is_object() || !j.contains("q"))
            throw ParseError("constraint spec: needs an integer field q");
        int q = j.at("q").get<int>();
        Alphabet alphabet =
            j.contains("symbols")
                ? Alphabet::make(j.at("symbols").get<std::vector<std::string>>())
                : Alphabet::make(q);
        if (alphabet.q != q) throw ParseError("constraint spec: symbols do not match q");

        int sources = (j.contains("forbidden") ? 1 : 0) + (j.contains("family") ? 1 : 0) +
                      (j.contains("combine") ? 1 : 0);
        if (sources != 1)
            throw ParseError(
                "constraint spec: needs exactly one of forbidden/family/combine");

        if (j.contains("combine")) {
            const auto& arr = j.at("combine");
            if (!arr.is_array() || arr.empty())
                throw ParseError("combine must be a nonempty array");
            std::vector<Word> all;
            for (const auto& e : arr) {
                auto part = spec_words(e, alphabet);
                all.insert(all.end(), part.begin(), part.end());
            }
            return reduce(ForbiddenSet(alphabet, std::move(all)));
        }
        if (j.contains("family")) {
            return family_generate(family_from_json(j.at("family")), alphabet);
        }
        std::vector<Word> words;
        for (const auto& e : j.at("forbidden")) words.push_back(word_from_json(e, alphabet));
        return ForbiddenSet(alphabet, std::move(words));
    } catch (const json::exception& e) {
        throw ParseError(std::string("constraint spec: ") + e.what());
    }
}

std::string constraint_spec_json(const ForbiddenSet& f) {
    json j;
    j["q"] = f.q();
    j["symbols"] = f.alphabet().symbols;
    json arr = json::array();
    for (const auto& w : f.words()) arr.push_back(word_to_json(w, f.alphabet()));
    j["forbidden"] = std::move(arr);
    return j.dump();
}

std::string genfun_json(const GenFun& f) {
    json j;
    auto coeffs = [](const IntPoly& p) {
        json arr = json::array();
        for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
        return arr;
    };
    j["T"] = coeffs(f.T);
    j["S"] = coeffs(f.S);
    j["q"] = f.q;
    j["ellF"] = f.ellF;
    return j.dump();
}

GenFun parse_genfun_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
        auto poly = [](const json& arr) {
            std::vector<BigInt> c;
            for (const auto& e : arr) c.emplace_back(e.get<std::string>());
            return IntPoly(std::move(c));
        };
        GenFun f;
        f.T = poly(j.at("T"));
        f.S = poly(j.at("S"));
        f.q = j.at("q").get<int>();
        f.ellF = j.at("ellF").get<int>();
        return f;
    } catch (const json::exception& e) {
        throw ParseError(std::string("genfun: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("genfun: bad coefficient: ") + e.what());
    }
}

namespace {

std::string rational_str(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string double_str(double v) {
    char buf[64];
    snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace

std::string capacity_json(const CapacityEstimate& est) {
    json j;
    j["capacity"] = double_str(est.value);
    j["eps"] = double_str(est.eps);
    j["x0"] = {rational_str(est.x0.lo), rational_str(est.x0.hi)};
    j["method"] = est.method == CapacityEstimate::Method::cluster ? "cluster" : "spectral";
    return j.dump();
}

std::string bound_report_json(const BoundReport& r, const MaxCodeResult* search) {
    json j;
    j["q"] = r.q;
    j["n"] = r.n;
    j["bound"] = rational_str(r.bound);
    j["bound_decimal"] = double_str(r.bound.get_d());
    j["floor"] = r.floor_value.get_str();
    if (search) {
        j["max_size"] = search->size;
        json words = json::array();
        for (const auto& w : search->witness.words)
            words.push_back(word_to_json(w, search->witness.alphabet));
        j["witness"] = std::move(words);
    }
    return j.dump();
}

std::string graph_json(const DeBruijnGraph& g) {
    json j;
    Alphabet a = Alphabet::make(std::max(1, g.q));
    json verts = json::array();
    for (const auto& v : g.vertices) verts.push_back(a.word_str(v));
    j["vertices"] = std::move(verts);
    json edges = json::array();
    for (size_t i = 0; i < g.m(); ++i) {
        for (uint32_t k : g.out[i]) edges.push_back({i, k});
    }
    j["edges"] = std::move(edges);
    return j.dump();
}

} // namespace ccap
