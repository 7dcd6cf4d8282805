#pragma once

/**
 * @file io.hpp
 * @brief JSON serialization of finite rings.
 *
 * Wire format: {"moduli": [...], "constants": [[[...]...]...],
 * "one": [...], "labels": [...]} with "labels" optional. Round-trips are
 * bit-exact; entries are written as plain integers.
 */

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ring.hpp"

namespace ringforge {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

inline ordered_json ring_to_json(const FiniteRing& R) {
    ordered_json j;
    j["moduli"] = R.additive.moduli;
    ordered_json cons = ordered_json::array();
    for (const auto& row : R.constants) {
        ordered_json jrow = ordered_json::array();
        for (const auto& c : row) jrow.push_back(c.coeffs);
        cons.push_back(std::move(jrow));
    }
    j["constants"] = std::move(cons);
    j["one"] = R.one.coeffs;
    if (!R.labels.empty()) j["labels"] = R.labels;
    return j;
}

inline FiniteRing ring_from_json(const json& j) {
    FiniteRing R;
    try {
        R.additive.moduli = j.at("moduli").get<std::vector<uint32_t>>();
        for (const auto& jrow : j.at("constants")) {
            std::vector<RingElement> row;
            for (const auto& jc : jrow)
                row.emplace_back(jc.get<std::vector<uint32_t>>());
            R.constants.push_back(std::move(row));
        }
        R.one = RingElement(j.at("one").get<std::vector<uint32_t>>());
        if (j.contains("labels"))
            R.labels = j.at("labels").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
        throw Error(std::string("malformed ring document: ") + e.what());
    }
    return R;
}

inline void save_ring(const FiniteRing& R, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << ring_to_json(R).dump(2) << "\n";
}

inline FiniteRing load_ring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read ring file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error("cannot parse " + path + ": " + e.what());
    }
    return ring_from_json(j);
}

}  // namespace ringforge
