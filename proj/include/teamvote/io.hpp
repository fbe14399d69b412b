// Instance (de)serialization. One self-describing JSON document;
// parse -> serialize -> parse is the identity and unknown fields are
// rejected.

#ifndef TEAMVOTE_IO_HPP
#define TEAMVOTE_IO_HPP

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "teamvote/core.hpp"

namespace teamvote {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

using json = nlohmann::ordered_json;

inline const json& require_field(const json& doc, const std::string& name) {
    if (!doc.contains(name)) throw ParseError("missing field \"" + name + "\"");
    return doc.at(name);
}

inline int int_field(const json& doc, const std::string& name) {
    const auto& v = require_field(doc, name);
    if (!v.is_number_integer()) throw ParseError("field \"" + name + "\" must be an integer");
    return v.get<int>();
}

inline std::vector<int> int_array(const json& v, const std::string& name) {
    if (!v.is_array()) throw ParseError("field \"" + name + "\" must be an array");
    std::vector<int> out;
    for (const auto& e : v) {
        if (!e.is_number_integer())
            throw ParseError("field \"" + name + "\" must contain integers");
        out.push_back(e.get<int>());
    }
    return out;
}

inline std::vector<PreferenceOrder> profile_field(const json& doc, const std::string& name,
                                                  int k) {
    const auto& v = require_field(doc, name);
    if (!v.is_array() || static_cast<int>(v.size()) != k)
        throw ParseError("field \"" + name + "\" must be an array of k rankings");
    std::vector<PreferenceOrder> out;
    for (const auto& row : v) {
        PreferenceOrder o{int_array(row, name)};
        if (o.k() != k || !o.is_permutation_of_k())
            throw ParseError("field \"" + name + "\": ranking is not a permutation");
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace detail

inline Instance parse_instance(const std::string& text) {
    detail::json doc;
    try {
        doc = detail::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("document must be a JSON object");

    static const std::set<std::string> known = {
        "version", "k",            "side",        "men",
        "women",   "team_index",   "ballots",     "base_scores",
        "target",  "num_manipulators"};
    for (const auto& item : doc.items())
        if (!known.count(item.key())) throw ParseError("unknown field \"" + item.key() + "\"");

    if (detail::int_field(doc, "version") != 1) throw ParseError("field \"version\" must be 1");
    Instance inst;
    inst.k = detail::int_field(doc, "k");
    if (inst.k < 1) throw ParseError("field \"k\" must be >= 1");

    const auto& side = detail::require_field(doc, "side");
    if (!side.is_string() || (side != "men" && side != "women"))
        throw ParseError("field \"side\" must be \"men\" or \"women\"");
    inst.team.side = side == "men" ? Side::Men : Side::Women;

    inst.men = detail::profile_field(doc, "men", inst.k);
    inst.women = detail::profile_field(doc, "women", inst.k);
    inst.team.index = detail::int_field(doc, "team_index");
    if (inst.team.index < 0 || inst.team.index >= inst.k)
        throw ParseError("field \"team_index\" out of range");

    const auto& ballots = detail::require_field(doc, "ballots");
    if (!ballots.is_array()) throw ParseError("field \"ballots\" must be an array");
    for (const auto& row : ballots) {
        PreferenceOrder o{detail::int_array(row, "ballots")};
        if (o.k() != inst.k || !o.is_permutation_of_k())
            throw ParseError("field \"ballots\": ballot is not a permutation");
        inst.ballots.push_back(std::move(o));
    }

    if (doc.contains("base_scores")) {
        auto raw = detail::require_field(doc, "base_scores");
        if (!raw.is_array() || static_cast<int>(raw.size()) != inst.k)
            throw ParseError("field \"base_scores\" must be an array of k integers");
        ScoreVector base;
        for (const auto& e : raw) {
            if (!e.is_number_integer())
                throw ParseError("field \"base_scores\" must contain integers");
            Score s = e.get<Score>();
            if (s < 0) throw ParseError("field \"base_scores\": entries must be >= 0");
            base.push_back(s);
        }
        inst.base_scores = std::move(base);
    }

    inst.num_manipulators = detail::int_field(doc, "num_manipulators");
    if (inst.num_manipulators < 0)
        throw ParseError("field \"num_manipulators\" must be >= 0");
    inst.target = detail::int_field(doc, "target");
    if (inst.target < 0 || inst.target >= inst.k)
        throw ParseError("field \"target\" out of range");

    inst.validate();
    return inst;
}

inline std::string serialize_instance(const Instance& inst) {
    detail::json doc;
    doc["version"] = 1;
    doc["k"] = inst.k;
    doc["side"] = side_name(inst.team.side);
    auto rows = [](const std::vector<PreferenceOrder>& prof) {
        detail::json arr = detail::json::array();
        for (const auto& o : prof) arr.push_back(o.ranking);
        return arr;
    };
    doc["men"] = rows(inst.men);
    doc["women"] = rows(inst.women);
    doc["team_index"] = inst.team.index;
    doc["ballots"] = rows(inst.ballots);
    if (inst.base_scores) doc["base_scores"] = *inst.base_scores;
    doc["num_manipulators"] = inst.num_manipulators;
    doc["target"] = inst.target;
    return doc.dump(2) + "\n";
}

}  // namespace teamvote

#endif
