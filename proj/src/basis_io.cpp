#include "iqlat/basis_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace iqlat {

namespace {

using nlohmann::json;

long long require_int(const json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw ParseError(where + ": expected an exact integer, got " + j.dump());
    return j.get<long long>();
}

}  // namespace

bool operator==(const BasisFile& a, const BasisFile& b) {
    return a.d == b.d && a.vectors == b.vectors;
}

BasisFile parse_basis_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("top level: expected an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "d" && key != "vectors")
            throw ParseError("unknown field \"" + key + "\"");
    }
    if (!j.contains("d")) throw ParseError("missing field \"d\"");
    if (!j.contains("vectors")) throw ParseError("missing field \"vectors\"");

    BasisFile file;
    long long d = require_int(j["d"], "d");
    if (d < 1) throw ParseError("d: must be a positive integer, got " + std::to_string(d));
    try {
        make_field(static_cast<long>(d));
    } catch (const NotSquareFree& e) {
        throw ParseError(std::string("d: ") + e.what());
    }
    file.d = static_cast<long>(d);

    const json& vecs = j["vectors"];
    if (!vecs.is_array() || vecs.size() != 2)
        throw ParseError("vectors: expected an array of exactly 2 vectors");
    for (int v = 0; v < 2; ++v) {
        const json& vec = vecs[v];
        std::string where = "vectors[" + std::to_string(v) + "]";
        if (!vec.is_array() || vec.empty())
            throw ParseError(where + ": expected a nonempty array of coordinate pairs");
        for (size_t i = 0; i < vec.size(); ++i) {
            const json& pair = vec[i];
            std::string pwhere = where + "[" + std::to_string(i) + "]";
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError(pwhere + ": expected a coordinate pair [a, b]");
            file.vectors[v].push_back({require_int(pair[0], pwhere + "[0]"),
                                       require_int(pair[1], pwhere + "[1]")});
        }
    }
    if (file.vectors[0].size() != file.vectors[1].size())
        throw ParseError("vectors: the two vectors have different lengths (" +
                         std::to_string(file.vectors[0].size()) + " vs " +
                         std::to_string(file.vectors[1].size()) + ")");
    return file;
}

BasisFile parse_basis_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open basis file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_basis_text(buf.str());
}

std::string serialize_basis(const BasisFile& file) {
    json j;
    j["d"] = file.d;
    json vecs = json::array();
    for (int v = 0; v < 2; ++v) {
        json vec = json::array();
        for (const auto& pair : file.vectors[v]) vec.push_back({pair[0], pair[1]});
        vecs.push_back(vec);
    }
    j["vectors"] = vecs;
    return j.dump();
}

AlgBasis to_basis(const BasisFile& file) {
    FieldDesc f = make_field(file.d);
    std::array<AlgVector, 2> vs;
    for (int v = 0; v < 2; ++v) {
        vs[v].field = f;
        for (const auto& pair : file.vectors[v])
            vs[v].entries.push_back({Int(static_cast<long>(pair[0])),
                                     Int(static_cast<long>(pair[1]))});
    }
    return make_basis(vs[0], vs[1]);
}

BasisFile from_basis(const AlgBasis& basis) {
    BasisFile file;
    file.d = basis.field.d;
    const AlgVector* vecs[2] = {&basis.b1, &basis.b2};
    for (int v = 0; v < 2; ++v)
        for (const RingElem& e : vecs[v]->entries) {
            if (!e.a.fits_slong_p() || !e.b.fits_slong_p())
                throw ParseError("basis coordinate out of serializable range");
            file.vectors[v].push_back({e.a.get_si(), e.b.get_si()});
        }
    return file;
}

}  // namespace iqlat
