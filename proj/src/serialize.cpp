#include "cartan/serialize.hpp"

#include <fstream>
#include <sstream>

namespace cartan {

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw SchemaError(where + ": expected a rational string \"p\" or \"p/q\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument&) {
        throw SchemaError(where + ": not a rational: " + j.dump());
    }
}

Json to_json(const Form& f, const std::vector<std::string>& names) {
    Json out = Json::array();
    for (const auto& [mono, scalar] : f.terms()) {
        Json gens = Json::array();
        for (int g : mono.indices()) gens.push_back(names.at(static_cast<std::size_t>(g)));
        for (const auto& [e, c] : scalar.terms()) out.push_back(Json::array({gens, e, c.str()}));
    }
    return out;
}

Json to_json(const Relation& r) {
    Json mons = Json::array(), coeffs = Json::array();
    for (std::size_t i = 0; i < r.monomials.size(); ++i) {
        mons.push_back(r.monomials[i].str());
        coeffs.push_back(r.coefficients[i].str());
    }
    Json j;
    j["monomials"] = mons;
    j["coefficients"] = coeffs;
    return j;
}

Json to_json(const PrimitiveResult& r, const std::vector<std::string>& names) {
    Json j;
    j["primitive"] = r.exact ? to_json(*r.primitive, names) : Json("not_exact");
    j["target_closed"] = r.target_closed;
    j["certificate"] = {{"unknowns", r.certificate.unknowns},
                        {"equations", r.certificate.equations},
                        {"rank", r.certificate.rank},
                        {"rank_augmented", r.certificate.rank_augmented}};
    return j;
}

namespace {

Json matrix_json(const QMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

QMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!j.is_array() || j.size() != rows) throw SchemaError(where + ": expected " + std::to_string(rows) + " rows");
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = j[i];
        std::string rw = where + "[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() != cols) throw SchemaError(rw + ": expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(row[c], rw + "[" + std::to_string(c) + "]");
    }
    return m;
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw SchemaError(where + ": missing field '" + key + "'");
    return j.at(key);
}

int int_from_json(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw SchemaError(where + ": expected an integer");
    return j.get<int>();
}

}  // namespace

Json model_to_json(const ModelBundle& b) {
    const LieModel& m = b.model;
    Json j;
    j["family"] = m.info().family;
    j["params"] = m.info().params;
    j["dims"] = {m.dims()[0], m.dims()[1], m.dims()[2]};
    j["names"] = m.names();
    Json br = Json::array();
    for (const auto& [key, vec] : m.table()) {
        Json terms = Json::array();
        for (const auto& [k, c] : vec) terms.push_back(Json::array({k, c.str()}));
        br.push_back(Json::array({key.first, key.second, terms}));
    }
    j["brackets"] = br;
    Json reps = Json::object();
    for (const auto& r : b.reps) {
        Json mats = Json::array();
        for (const auto& mat : r.matrices) mats.push_back(matrix_json(mat));
        reps[r.label] = {{"dim", r.dim}, {"ghost", r.ghost}, {"extends_to_g", r.extends_to_g}, {"matrices", mats}};
    }
    j["reps"] = reps;
    Json data = Json::object();
    for (const auto& [k, mat] : b.data) data[k] = {{"rows", mat.rows()}, {"cols", mat.cols()}, {"matrix", matrix_json(mat)}};
    j["data"] = data;
    return j;
}

ModelBundle model_from_json(const Json& j) {
    if (!j.is_object()) throw SchemaError("model: expected a JSON object");
    ModelInfo info;
    if (j.contains("family")) {
        if (!j["family"].is_string()) throw SchemaError("family: expected a string");
        info.family = j["family"].get<std::string>();
    }
    if (j.contains("params")) {
        if (!j["params"].is_array()) throw SchemaError("params: expected an array");
        for (std::size_t i = 0; i < j["params"].size(); ++i)
            info.params.push_back(int_from_json(j["params"][i], "params[" + std::to_string(i) + "]"));
    }
    const Json& dj = field(j, "dims", "model");
    if (!dj.is_array() || dj.size() != 3) throw SchemaError("dims: expected [n-, n0, n+]");
    std::array<int, 3> dims{};
    for (std::size_t i = 0; i < 3; ++i) {
        dims[i] = int_from_json(dj[i], "dims[" + std::to_string(i) + "]");
        if (dims[i] < 0) throw SchemaError("dims[" + std::to_string(i) + "]: must be >= 0");
    }
    const int total = dims[0] + dims[1] + dims[2];
    const Json& nj = field(j, "names", "model");
    if (!nj.is_array() || static_cast<int>(nj.size()) != total)
        throw SchemaError("names: expected " + std::to_string(total) + " strings");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nj.size(); ++i) {
        if (!nj[i].is_string()) throw SchemaError("names[" + std::to_string(i) + "]: expected a string");
        names.push_back(nj[i].get<std::string>());
    }
    BracketTable table;
    const Json& bj = field(j, "brackets", "model");
    if (!bj.is_array()) throw SchemaError("brackets: expected an array");
    for (std::size_t e = 0; e < bj.size(); ++e) {
        std::string where = "brackets[" + std::to_string(e) + "]";
        const Json& b = bj[e];
        if (!b.is_array() || b.size() != 3 || !b[2].is_array()) throw SchemaError(where + ": expected [i, j, [[k, \"p/q\"], ...]]");
        int i = int_from_json(b[0], where + "[0]"), jj = int_from_json(b[1], where + "[1]");
        SparseVec v;
        for (std::size_t t = 0; t < b[2].size(); ++t) {
            const Json& term = b[2][t];
            std::string tw = where + "[2][" + std::to_string(t) + "]";
            if (!term.is_array() || term.size() != 2) throw SchemaError(tw + ": expected [k, \"p/q\"]");
            int k = int_from_json(term[0], tw + "[0]");
            if (i < 0 || jj < 0 || k < 0 || i >= total || jj >= total || k >= total)
                throw SchemaError(where + ": index triple [" + std::to_string(i) + "," + std::to_string(jj) + "," +
                                  std::to_string(k) + "] out of range (total dim " + std::to_string(total) + ")");
            v.emplace_back(k, rational_from_json(term[1], tw + "[1]"));
        }
        if (i < 0 || jj < 0 || i >= total || jj >= total)
            throw SchemaError(where + ": index pair [" + std::to_string(i) + "," + std::to_string(jj) + "] out of range (total dim " +
                              std::to_string(total) + ")");
        if (i >= jj) throw SchemaError(where + ": expected i < j");
        if (table.count({i, jj})) throw SchemaError(where + ": duplicate pair");
        table[{i, jj}] = std::move(v);
    }
    ModelBundle out;
    try {
        out.model = LieModel(dims, names, std::move(table), info);
    } catch (const std::exception& ex) {
        throw SchemaError(std::string("model: ") + ex.what());
    }
    if (j.contains("reps")) {
        const Json& rj = j["reps"];
        if (!rj.is_object()) throw SchemaError("reps: expected an object");
        for (const auto& [label, r] : rj.items()) {
            std::string where = "reps." + label;
            Rep rep;
            rep.label = label;
            rep.dim = int_from_json(field(r, "dim", where), where + ".dim");
            if (rep.dim < 0) throw SchemaError(where + ".dim: must be >= 0");
            rep.ghost = r.value("ghost", false);
            rep.extends_to_g = r.value("extends_to_g", false);
            const Json& mats = field(r, "matrices", where);
            if (!mats.is_array() || static_cast<int>(mats.size()) != dims[1])
                throw SchemaError(where + ".matrices: expected one matrix per g0 generator (" + std::to_string(dims[1]) + ")");
            for (std::size_t u = 0; u < mats.size(); ++u)
                rep.matrices.push_back(matrix_from_json(mats[u], static_cast<std::size_t>(rep.dim), static_cast<std::size_t>(rep.dim),
                                                        where + ".matrices[" + std::to_string(u) + "]"));
            out.reps.push_back(std::move(rep));
        }
    }
    if (j.contains("data")) {
        const Json& dd = j["data"];
        if (!dd.is_object()) throw SchemaError("data: expected an object");
        for (const auto& [key, d] : dd.items()) {
            std::string where = "data." + key;
            int rows = int_from_json(field(d, "rows", where), where + ".rows");
            int cols = int_from_json(field(d, "cols", where), where + ".cols");
            if (rows < 0 || cols < 0) throw SchemaError(where + ": negative size");
            out.data[key] = matrix_from_json(field(d, "matrix", where), static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                                             where + ".matrix");
        }
    }
    return out;
}

std::string dump_model(const ModelBundle& b) {
    Json j = model_to_json(b);
    std::ostringstream os;
    os << "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
        if (!first) os << ",\n";
        first = false;
        os << "  " << Json(key).dump() << ": ";
        if ((key == "brackets" && !value.empty()) || ((key == "reps" || key == "data") && !value.empty())) {
            bool array = value.is_array();
            os << (array ? "[\n" : "{\n");
            bool f2 = true;
            for (const auto& [k2, v2] : value.items()) {
                if (!f2) os << ",\n";
                f2 = false;
                os << "    ";
                if (!array) os << Json(k2).dump() << ": ";
                os << v2.dump();
            }
            os << (array ? "\n  ]" : "\n  }");
        } else {
            os << value.dump();
        }
    }
    os << "\n}\n";
    return os.str();
}

ModelBundle parse_model_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    return model_from_json(j);
}

ModelBundle parse_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open model file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_model_text(ss.str());
}

}  // namespace cartan
