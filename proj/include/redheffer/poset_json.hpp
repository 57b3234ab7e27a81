#pragma once

// Poset file format: {"elements": ["a","b",...], "covers": [["a","b"], ...]}.
// Elements are unique strings; covers need not be a minimal cover set.

#include <fstream>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "redheffer/errors.hpp"
#include "redheffer/poset.hpp"

namespace redheffer {

inline Poset parse_poset_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw PosetFormatError(std::string("poset file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("elements") || !doc.contains("covers"))
        throw PosetFormatError("poset file must be an object with 'elements' and 'covers'");
    const auto& je = doc["elements"];
    const auto& jc = doc["covers"];
    if (!je.is_array() || !jc.is_array())
        throw PosetFormatError("'elements' and 'covers' must be arrays");
    std::vector<std::string> elements;
    elements.reserve(je.size());
    for (const auto& e : je) {
        if (!e.is_string()) throw PosetFormatError("elements must be strings");
        elements.push_back(e.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> covers;
    covers.reserve(jc.size());
    for (const auto& c : jc) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
            throw PosetFormatError("each cover must be a pair of element names");
        covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
    return build_poset(elements, covers);
}

inline Poset load_poset_json(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_poset_json(text);
}

inline Poset load_poset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PosetFormatError("cannot open poset file '" + path + "'");
    return load_poset_json(in);
}

} // namespace redheffer
