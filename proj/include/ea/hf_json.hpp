#pragma once

#include "ea/hf.hpp"

#include <json.hpp>

namespace ea {

// {"code": "<decimal>", "children": [...]}; codes as strings since they
// overflow any fixed-width JSON number.
inline nlohmann::json to_json(const Hf& s) {
    nlohmann::json j;
    j["code"] = nat_str(s.code());
    nlohmann::json kids = nlohmann::json::array();
    for (const Hf& m : s.members()) kids.push_back(to_json(m));
    j["children"] = std::move(kids);
    return j;
}

inline Hf hf_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("code"))
        throw domain_error("hf_from_json: expected object with \"code\"");
    Hf parsed = empty_set();
    if (j.contains("children")) {
        std::vector<Hf> ms;
        for (const auto& c : j.at("children")) ms.push_back(hf_from_json(c));
        parsed = make_set(std::move(ms));
    } else {
        parsed = decode(nat_parse(j.at("code").get<std::string>()));
    }
    if (nat_str(parsed.code()) != j.at("code").get<std::string>())
        throw domain_error("hf_from_json: code does not match children");
    return parsed;
}

}  // namespace ea
