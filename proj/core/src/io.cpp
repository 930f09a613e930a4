#include "dedekind/io.hpp"

#include <json.hpp>

#include "dedekind/errors.hpp"

namespace dedekind {

namespace {

using nlohmann::json;

Int int_from_json(const json& v, const char* what) {
    if (v.is_string()) return int_from_decimal(v.get<std::string>());
    if (v.is_number_integer()) return Int(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_number_unsigned()) return Int(static_cast<unsigned long>(v.get<std::uint64_t>()));
    throw ParseError(std::string(what) + ": expected an integer or a decimal string");
}

}  // namespace

std::string presentation_to_json(const FiniteRingPresentation& R) {
    const std::size_t m = R.m();
    json j;
    j["m"] = m;
    json d = json::array();
    for (const Int& di : R.d) d.push_back(to_decimal(di));
    j["d"] = std::move(d);
    json l = json::array();
    for (std::size_t i = 0; i < m; ++i) {
        json li = json::array();
        for (std::size_t jj = 0; jj < m; ++jj) {
            json lij = json::array();
            for (std::size_t k = 0; k < m; ++k) lij.push_back(to_decimal(R.sc(i, jj, k)));
            li.push_back(std::move(lij));
        }
        l.push_back(std::move(li));
    }
    j["l"] = std::move(l);
    return j.dump();
}

FiniteRingPresentation presentation_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("presentation: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("m") || !j.contains("d") || !j.contains("l"))
        throw ParseError("presentation: expected object with keys m, d, l");

    const std::size_t m = to_size(int_from_json(j["m"], "m"), "presentation m");
    if (!j["d"].is_array() || j["d"].size() != m)
        throw ParseError("presentation: d must be an array of length m");
    if (!j["l"].is_array() || j["l"].size() != m)
        throw ParseError("presentation: l must be an m x m x m array");

    FiniteRingPresentation R;
    R.d.reserve(m);
    for (const auto& v : j["d"]) R.d.push_back(int_from_json(v, "d entry"));
    R.l.resize(m * m * m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& li = j["l"][i];
        if (!li.is_array() || li.size() != m)
            throw ParseError("presentation: l must be an m x m x m array");
        for (std::size_t jj = 0; jj < m; ++jj) {
            const auto& lij = li[jj];
            if (!lij.is_array() || lij.size() != m)
                throw ParseError("presentation: l must be an m x m x m array");
            for (std::size_t k = 0; k < m; ++k)
                R.sc(i, jj, k) = int_from_json(lij[k], "l entry");
        }
    }
    return R;
}

}  // namespace dedekind
