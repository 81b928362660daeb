#include <stdexcept>

#include <json.hpp>

#include "oddsum/theorem.hpp"

namespace oddsum::theorem {

using ordered_json = nlohmann::ordered_json;

// One line, fixed key order, ascending exponent lists: byte-stable for a
// given certificate.
std::string certificate_to_json(const Certificate& cert) {
    ordered_json j;
    j["g"] = cert.g;
    j["alpha"] = cert.alpha;
    j["t"] = cert.t;
    j["J"] = cert.j_bits;
    ordered_json classes = ordered_json::array();
    for (size_t i = 0; i < cert.residues.size(); ++i)
        classes.push_back({{"i", i}, {"exponents", cert.residues[i]}});
    j["residues"] = std::move(classes);
    j["total"] = cert.total;
    j["truncated"] = cert.truncated;
    return j.dump() + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("certificate parse error: ") + e.what());
    }
    Certificate cert;
    try {
        cert.g = j.at("g").get<uint64_t>();
        cert.alpha = j.at("alpha").get<uint64_t>();
        cert.t = j.at("t").get<uint64_t>();
        cert.j_bits = j.at("J").get<std::vector<uint32_t>>();
        cert.total = j.at("total").get<uint64_t>();
        cert.truncated = j.at("truncated").get<bool>();
        const auto& classes = j.at("residues");
        if (!classes.is_array())
            throw std::invalid_argument("certificate: residues must be an array");
        cert.residues.assign(cert.t, {});
        for (const auto& entry : classes) {
            const uint64_t i = entry.at("i").get<uint64_t>();
            if (i >= cert.t)
                throw std::invalid_argument("certificate: residue index out of range");
            cert.residues[i] = entry.at("exponents").get<std::vector<uint64_t>>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("certificate field error: ") + e.what());
    }
    return cert;
}

}  // namespace oddsum::theorem
