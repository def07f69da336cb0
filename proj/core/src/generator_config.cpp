#include <map>
#include <set>
#include <string>

#include <json.hpp>

#include "nncalc/errors.hpp"
#include "nncalc/generator.hpp"

namespace nncalc {

namespace {

// Pops `key` from `params` or throws. Catalog entries consume what they
// declare; anything left over afterwards is a typo worth rejecting.
double take(std::map<std::string, double>& params, const std::string& key,
            const std::string& gen_name) {
    auto it = params.find(key);
    if (it == params.end()) {
        throw InvalidParam("generator '" + gen_name + "' requires params." + key);
    }
    const double v = it->second;
    params.erase(it);
    return v;
}

void reject_leftovers(const std::map<std::string, double>& params,
                      const std::string& gen_name) {
    if (params.empty()) return;
    std::string keys;
    for (const auto& [k, v] : params) {
        (void)v;
        if (!keys.empty()) keys += ", ";
        keys += k;
    }
    throw InvalidParam("generator '" + gen_name + "': unknown params: " + keys);
}

}  // namespace

Generator make_generator(const std::string& name,
                         const std::map<std::string, double>& params) {
    std::map<std::string, double> p = params;
    Generator g;
    if (name == "identity") {
        g = identity_generator();
    } else if (name == "log") {
        g = log_generator();
    } else if (name == "neglog") {
        g = neglog_generator();
    } else if (name == "kaniadakis") {
        g = kaniadakis_generator(take(p, "kappa", name));
    } else if (name == "renyi") {
        g = renyi_generator(take(p, "q", name));
    } else if (name == "lemma2") {
        const double a = take(p, "a", name);
        g = lemma2_generator(a, take(p, "n", name));
    } else if (name == "spin") {
        g = spin_generator();
    } else {
        throw InvalidParam(
            "unknown generator '" + name +
            "' (catalog: identity, log, neglog, kaniadakis, renyi, lemma2, spin)");
    }
    reject_leftovers(p, name);
    return g;
}

Generator generator_from_config(const std::string& name_or_json) {
    const auto first = name_or_json.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        throw InvalidParam("empty generator config");
    }
    if (name_or_json[first] != '{') {
        // bare catalog name
        const auto last = name_or_json.find_last_not_of(" \t\r\n");
        return make_generator(name_or_json.substr(first, last - first + 1));
    }

    nlohmann::json j;
    try {
        j = nlohmann::json::parse(name_or_json);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidParam(std::string("generator config is not valid JSON: ") +
                           e.what());
    }
    if (!j.is_object() || !j.contains("name") || !j["name"].is_string()) {
        throw InvalidParam("generator config needs the form "
                           "{\"name\": \"...\", \"params\": {...}}");
    }
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "name" && key != "params") {
            throw InvalidParam("generator config: unknown key '" + key + "'");
        }
    }
    std::map<std::string, double> params;
    if (j.contains("params")) {
        if (!j["params"].is_object()) {
            throw InvalidParam("generator config: params must be an object");
        }
        for (const auto& [key, value] : j["params"].items()) {
            if (!value.is_number()) {
                throw InvalidParam("generator config: params." + key +
                                   " must be a number");
            }
            params[key] = value.get<double>();
        }
    }
    return make_generator(j["name"].get<std::string>(), params);
}

}  // namespace nncalc
