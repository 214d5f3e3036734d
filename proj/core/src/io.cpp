#include "medalg/io.hpp"

#include <set>

#include <nlohmann/json.hpp>

#include "medalg/generators.hpp"
#include "medalg/order.hpp"

namespace medalg {

namespace {

using json = nlohmann::ordered_json;

void require_keys(const json& obj, const std::string& what,
                  const std::set<std::string>& required,
                  const std::set<std::string>& optional) {
    for (const auto& [key, value] : obj.items()) {
        if (!required.count(key) && !optional.count(key)) {
            throw ParseError(what + ": unknown key \"" + key + "\"");
        }
    }
    for (const auto& key : required) {
        if (!obj.contains(key)) {
            throw ParseError(what + ": missing key \"" + key + "\"");
        }
    }
}

int get_int(const json& v, const std::string& what) {
    if (!v.is_number_integer()) {
        throw ParseError(what + " must be an integer");
    }
    return v.get<int>();
}

std::vector<Element> get_int_array(const json& v, const std::string& what) {
    if (!v.is_array()) {
        throw ParseError(what + " must be an array of integers");
    }
    std::vector<Element> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        out.push_back(get_int(e, what + " entry"));
    }
    return out;
}

std::vector<std::string> get_labels(const json& obj) {
    if (!obj.contains("labels")) return {};
    const json& v = obj.at("labels");
    if (!v.is_array()) {
        throw ParseError("labels must be an array of strings");
    }
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_string()) {
            throw ParseError("labels must be an array of strings");
        }
        out.push_back(e.get<std::string>());
    }
    return out;
}

ParsedAlgebra parse_algebra_json(const json& obj);

MedianAlgebra parse_plain(const json& obj) {
    ParsedAlgebra p = parse_algebra_json(obj);
    return to_algebra(p);
}

ParsedAlgebra parse_algebra_json(const json& obj) {
    if (!obj.is_object()) {
        throw ParseError("algebra file must be a JSON object");
    }
    if (!obj.contains("kind") || !obj.at("kind").is_string()) {
        throw ParseError("algebra file needs a string \"kind\"");
    }
    const std::string kind = obj.at("kind").get<std::string>();

    if (kind == "table") {
        require_keys(obj, "table algebra", {"kind", "size", "table"}, {"labels"});
        int size = get_int(obj.at("size"), "size");
        return MedianAlgebra(size, get_int_array(obj.at("table"), "table"),
                             get_labels(obj));
    }

    if (kind == "semilattice") {
        require_keys(obj, "semilattice algebra", {"kind", "size", "covers"}, {"labels"});
        SemilatticePresentation p;
        p.size = get_int(obj.at("size"), "size");
        const json& covers = obj.at("covers");
        if (!covers.is_array()) {
            throw ParseError("covers must be an array of [child, parent] pairs");
        }
        for (const auto& pair : covers) {
            if (!pair.is_array() || pair.size() != 2) {
                throw ParseError("covers must be an array of [child, parent] pairs");
            }
            p.covers.emplace_back(get_int(pair[0], "cover child"),
                                  get_int(pair[1], "cover parent"));
        }
        p.labels = get_labels(obj);
        auto result = algebra_from_semilattice(p);
        if (auto* rej = std::get_if<SemilatticeRejection>(&result)) {
            throw NotMedian(rej->message());
        }
        return std::get<MedianAlgebra>(std::move(result));
    }

    if (kind == "product") {
        require_keys(obj, "product algebra", {"kind", "factors"}, {});
        const json& factors = obj.at("factors");
        if (!factors.is_array() || factors.empty()) {
            throw ParseError("factors must be a nonempty array of algebra files");
        }
        std::vector<MedianAlgebra> parsed;
        parsed.reserve(factors.size());
        for (const auto& f : factors) {
            parsed.push_back(parse_plain(f));
        }
        return ProductAlgebra(std::move(parsed));
    }

    if (kind == "gen") {
        require_keys(obj, "generated algebra", {"kind", "gen", "n"}, {"parents"});
        if (!obj.at("gen").is_string()) {
            throw ParseError("gen must be one of \"chain\", \"star\", \"tree\"");
        }
        const std::string gen = obj.at("gen").get<std::string>();
        int n = get_int(obj.at("n"), "n");
        if (gen == "chain") {
            if (obj.contains("parents")) {
                throw ParseError("chain does not take parents");
            }
            return chain(n);
        }
        if (gen == "star") {
            if (obj.contains("parents")) {
                throw ParseError("star does not take parents");
            }
            return star(n);
        }
        if (gen == "tree") {
            if (!obj.contains("parents")) {
                throw ParseError("tree needs a parents array");
            }
            std::vector<Element> parents = get_int_array(obj.at("parents"), "parents");
            if (static_cast<int>(parents.size()) != n - 1) {
                throw ParseError("tree with n = " + std::to_string(n) + " needs " +
                                 std::to_string(n - 1) + " parents, got " +
                                 std::to_string(parents.size()));
            }
            return tree_from_parents(parents);
        }
        throw ParseError("unknown generator \"" + gen + "\"");
    }

    throw ParseError("unknown algebra kind \"" + kind + "\"");
}

json parse_text(std::string_view text) {
    json obj = json::parse(text, nullptr, false);
    if (obj.is_discarded()) {
        throw ParseError("invalid JSON");
    }
    return obj;
}

json algebra_to_json(const MedianAlgebra& a) {
    json out;
    out["kind"] = "table";
    out["size"] = a.size();
    out["table"] = a.table();
    if (a.has_labels()) {
        out["labels"] = a.labels();
    }
    return out;
}

json algebra_to_json(const ProductAlgebra& a) {
    json out;
    out["kind"] = "product";
    json factors = json::array();
    for (const auto& f : a.factors()) {
        factors.push_back(algebra_to_json(f));
    }
    out["factors"] = std::move(factors);
    return out;
}

std::string dump(const json& j) {
    return j.dump() + "\n";
}

}  // namespace

ParsedAlgebra parse_algebra(std::string_view text) {
    return parse_algebra_json(parse_text(text));
}

MedianAlgebra to_algebra(const ParsedAlgebra& p) {
    if (const auto* a = std::get_if<MedianAlgebra>(&p)) {
        return *a;
    }
    return std::get<ProductAlgebra>(p).flat();
}

ProductAlgebra to_product(const ParsedAlgebra& p) {
    if (const auto* a = std::get_if<MedianAlgebra>(&p)) {
        return ProductAlgebra({*a});
    }
    return std::get<ProductAlgebra>(p);
}

Mapping parse_mapping(std::string_view text) {
    json obj = parse_text(text);
    if (!obj.is_object()) {
        throw ParseError("mapping file must be a JSON object");
    }
    require_keys(obj, "mapping file", {"domain", "codomain", "values"}, {});
    const json& domain = obj.at("domain");
    if (!domain.is_array() || domain.empty()) {
        throw ParseError("domain must be a nonempty array of algebra files");
    }
    std::vector<MedianAlgebra> factors;
    factors.reserve(domain.size());
    for (const auto& f : domain) {
        factors.push_back(parse_plain(f));
    }
    ProductAlgebra dom(std::move(factors));
    ProductAlgebra cod = to_product(parse_algebra_json(obj.at("codomain")));
    std::vector<Element> values = get_int_array(obj.at("values"), "values");
    return Mapping(std::move(dom), std::move(cod), std::move(values));
}

std::string serialize_algebra(const MedianAlgebra& a) {
    return dump(algebra_to_json(a));
}

std::string serialize_algebra(const ProductAlgebra& a) {
    return dump(algebra_to_json(a));
}

std::string serialize_algebra(const ParsedAlgebra& a) {
    if (const auto* m = std::get_if<MedianAlgebra>(&a)) {
        return serialize_algebra(*m);
    }
    return serialize_algebra(std::get<ProductAlgebra>(a));
}

std::string serialize_mapping(const Mapping& f) {
    json out;
    json domain = json::array();
    for (const auto& factor : f.domain().factors()) {
        domain.push_back(algebra_to_json(factor));
    }
    out["domain"] = std::move(domain);
    if (f.codomain().factor_count() == 1) {
        out["codomain"] = algebra_to_json(f.codomain().factor(0));
    } else {
        out["codomain"] = algebra_to_json(f.codomain());
    }
    out["values"] = f.values();
    return dump(out);
}

}  // namespace medalg
