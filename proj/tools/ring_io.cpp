#include "ring_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include <dedekind/errors.hpp>

namespace dedekind::cli {

namespace {

using nlohmann::json;

Int int_from_json(const json& v, const std::string& what) {
    if (v.is_string()) return int_from_decimal(v.get<std::string>());
    if (v.is_number_integer()) return Int(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_number_unsigned()) return Int(static_cast<unsigned long>(v.get<std::uint64_t>()));
    throw ParseError(what + ": expected an integer or a decimal string");
}

std::vector<Int> int_vector(const json& v, std::size_t len, const std::string& what) {
    if (!v.is_array() || v.size() != len)
        throw ParseError(what + ": expected an array of length " + std::to_string(len));
    std::vector<Int> out;
    out.reserve(len);
    for (const auto& e : v) out.push_back(int_from_json(e, what));
    return out;
}

json parse(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw ParseError(path + ": invalid JSON: " + e.what());
    }
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

OrderPresentation load_order(const std::string& path) {
    json j = parse(path);
    if (!j.is_object() || !j.contains("rank") || !j.contains("one") || !j.contains("table"))
        throw ParseError(path + ": expected object with keys rank, one, table");

    const std::size_t n = to_size(int_from_json(j["rank"], "rank"), "rank");
    if (n == 0) throw ParseError(path + ": rank must be at least 1");

    std::vector<Int> one = int_vector(j["one"], n, path + ": one");

    const auto& table = j["table"];
    if (!table.is_array() || table.size() != n)
        throw ParseError(path + ": table must be an n x n x n array");
    std::vector<Int> c(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& ti = table[i];
        if (!ti.is_array() || ti.size() != n)
            throw ParseError(path + ": table must be an n x n x n array");
        for (std::size_t jj = 0; jj < n; ++jj) {
            std::vector<Int> row = int_vector(ti[jj], n, path + ": table row");
            for (std::size_t k = 0; k < n; ++k) c[(i * n + jj) * n + k] = row[k];
        }
    }
    return OrderPresentation(n, std::move(c), std::move(one));
}

IdealFile load_ideal(const std::string& path, std::size_t rank) {
    json j = parse(path);
    if (!j.is_object() || !j.contains("alpha") || !j.contains("beta"))
        throw ParseError(path + ": expected object with keys alpha, beta");

    IdealFile f{TwoGenIdeal{OrderElement{int_vector(j["alpha"], rank, path + ": alpha")},
                            OrderElement{int_vector(j["beta"], rank, path + ": beta")}},
                std::nullopt};
    if (j.contains("h")) {
        Int h = int_from_json(j["h"], path + ": h");
        if (h <= 0) throw ParseError(path + ": h must be positive");
        f.h = std::move(h);
    }
    return f;
}

}  // namespace dedekind::cli
