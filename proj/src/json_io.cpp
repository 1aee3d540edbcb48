#include "lomat/json_io.hpp"

#include <fstream>

#include "lomat/error.hpp"

namespace lomat {

using nlohmann::json;

nlohmann::json scalar_to_json(const Scalar& s) {
    if (s.field() == Field::Q)
        return rational_str(s.re());
    return json{{"im", rational_str(s.im())}, {"re", rational_str(s.re())}};
}

Scalar scalar_from_json(const nlohmann::json& j, Field f) {
    if (j.is_string()) {
        mpq_class v = parse_rational(j.get<std::string>());
        return f == Field::Q ? Scalar(v, Field::Q) : Scalar(v, mpq_class(0));
    }
    if (j.is_object() && f == Field::Qi) {
        if (!j.contains("re") || !j.contains("im") || !j["re"].is_string() ||
            !j["im"].is_string())
            throw Error(Errc::parse_error, "Qi scalar needs string fields re and im");
        return Scalar(parse_rational(j["re"].get<std::string>()),
                      parse_rational(j["im"].get<std::string>()));
    }
    throw Error(Errc::parse_error, "scalar must be a string (Q) or {re,im} object (Qi)");
}

nlohmann::json matrix_to_json(const ExactMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"field", field_name(m.field())}, {"rows", std::move(rows)}};
}

namespace {

Field field_from_json(const json& j) {
    if (!j.is_string())
        throw Error(Errc::parse_error, "field tag must be \"Q\" or \"Qi\"");
    std::string s = j.get<std::string>();
    if (s == "Q")
        return Field::Q;
    if (s == "Qi")
        return Field::Qi;
    throw Error(Errc::parse_error, "unknown field tag '" + s + "'");
}

unsigned long ulong_from_json(const json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        throw Error(Errc::parse_error, std::string(what) + " must be a nonnegative integer");
    return j.get<unsigned long>();
}

} // namespace

ExactMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("rows") || !j["rows"].is_array())
        throw Error(Errc::parse_error, "matrix needs field and rows");
    Field f = field_from_json(j["field"]);
    const json& rows = j["rows"];
    const std::size_t r = rows.size();
    std::size_t c = 0;
    if (r > 0) {
        if (!rows[0].is_array())
            throw Error(Errc::parse_error, "matrix rows must be arrays");
        c = rows[0].size();
    }
    ExactMatrix m(r, c, f);
    for (std::size_t i = 0; i < r; ++i) {
        if (!rows[i].is_array() || rows[i].size() != c)
            throw Error(Errc::parse_error, "matrix rows must all have the same length");
        for (std::size_t k = 0; k < c; ++k)
            m.at(i, k) = scalar_from_json(rows[i][k], f);
    }
    return m;
}

nlohmann::json tower_to_json(const TowerDescriptor& d) {
    return json{{"cycle", d.cycle}, {"n1", d.n1}, {"prefix", d.prefix}};
}

TowerDescriptor tower_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n1") || !j.contains("cycle"))
        throw Error(Errc::parse_error, "tower needs n1 and cycle");
    TowerDescriptor d;
    d.n1 = ulong_from_json(j["n1"], "n1");
    d.prefix.clear();
    if (j.contains("prefix")) {
        if (!j["prefix"].is_array())
            throw Error(Errc::parse_error, "prefix must be an array");
        for (const json& v : j["prefix"])
            d.prefix.push_back(ulong_from_json(v, "prefix entry"));
    }
    if (!j["cycle"].is_array())
        throw Error(Errc::parse_error, "cycle must be an array");
    d.cycle.clear();
    for (const json& v : j["cycle"])
        d.cycle.push_back(ulong_from_json(v, "cycle entry"));
    d.validate();
    return d;
}

nlohmann::json element_to_json(const Element& e) {
    return json{{"matrix", matrix_to_json(e.mat)},
                {"stage", e.stage},
                {"tower", tower_to_json(e.tower)}};
}

Element element_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("tower") || !j.contains("stage") || !j.contains("matrix"))
        throw Error(Errc::parse_error, "element needs tower, stage and matrix");
    TowerDescriptor d = tower_from_json(j["tower"]);
    std::size_t stage = ulong_from_json(j["stage"], "stage");
    if (stage < 1)
        throw Error(Errc::parse_error, "stage must be >= 1");
    return make_element(d, stage, matrix_from_json(j["matrix"]));
}

nlohmann::json map_to_json(const MatLinearMap& m) {
    return json{{"coeffs", matrix_to_json(m.coeffs())},
                {"field", field_name(m.field())},
                {"m", m.dst()},
                {"n", m.src()}};
}

MatLinearMap map_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("field") ||
        !j.contains("coeffs"))
        throw Error(Errc::parse_error, "map needs n, m, field and coeffs");
    std::size_t n = ulong_from_json(j["n"], "n");
    std::size_t m = ulong_from_json(j["m"], "m");
    Field f = field_from_json(j["field"]);
    ExactMatrix coeffs = matrix_from_json(j["coeffs"]);
    if (coeffs.field() != f)
        throw Error(Errc::parse_error, "coefficient field differs from the map field");
    if (n == 0 || m == 0 || coeffs.rows() != m * m || coeffs.cols() != n * n)
        throw Error(Errc::parse_error, "coefficient matrix must be m^2 x n^2");
    return MatLinearMap::from_coeffs(n, m, std::move(coeffs));
}

nlohmann::json radical_to_json(const RadicalValue& r) {
    return json{{"n", r.n}, {"v", rational_str(r.v)}};
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::parse_error, "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(Errc::parse_error, "invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out)
        throw Error(Errc::parse_error, "cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

} // namespace lomat
