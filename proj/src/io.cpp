#include "bpp/io.hpp"

#include <json.hpp>

#include <sstream>

namespace bpp {

std::string write_text(const PlanePartition& p) {
    std::ostringstream os;
    os << p.dims.a << ' ' << p.dims.b << ' ' << p.dims.c << '\n';
    for (std::int64_t r = 1; r <= p.dims.a; ++r) {
        for (std::int64_t j = 1; j <= p.dims.b; ++j) {
            if (j > 1) os << ' ';
            os << p.at(r, j);
        }
        os << '\n';
    }
    return os.str();
}

PlanePartition parse_text(const std::string& text) {
    std::istringstream is(text);
    std::int64_t a, b, c;
    if (!(is >> a >> b >> c)) throw DomainError("partition text: missing 'a b c' header");
    const BoxDims dims(a, b, c);
    std::vector<std::vector<std::int64_t>> rows(a, std::vector<std::int64_t>(b));
    for (auto& row : rows)
        for (auto& v : row)
            if (!(is >> v)) throw DomainError("partition text: truncated matrix");
    std::string tail;
    if (is >> tail) throw DomainError("partition text: trailing data: " + tail);
    return PlanePartition::from_rows(dims, rows);
}

std::string write_json(const PlanePartition& p) {
    nlohmann::json j;
    j["a"] = p.dims.a;
    j["b"] = p.dims.b;
    j["c"] = p.dims.c;
    j["z"] = p.rows();
    return j.dump();
}

PlanePartition parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("partition json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("c") ||
        !j.contains("z"))
        throw DomainError("partition json: need keys a, b, c, z");
    const BoxDims dims(j["a"].get<std::int64_t>(), j["b"].get<std::int64_t>(),
                       j["c"].get<std::int64_t>());
    auto rows = j["z"].get<std::vector<std::vector<std::int64_t>>>();
    return PlanePartition::from_rows(dims, rows);
}

}  // namespace bpp
