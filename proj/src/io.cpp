#include "grseries/io.hpp"

#include <fstream>
#include <stdexcept>

namespace grseries {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<std::int64_t> int_vector(const json& j, const std::string& what) {
    if (!j.is_array()) throw std::domain_error("input: " + what + " must be an array");
    std::vector<std::int64_t> v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw std::domain_error("input: " + what + " must be integers");
        v.push_back(x.get<std::int64_t>());
    }
    return v;
}

HomologyClass class_vector(const json& j, int rank, const std::string& what) {
    auto v = int_vector(j, what);
    if (v.size() != static_cast<std::size_t>(rank))
        throw std::domain_error("input: " + what + " length does not match model rank");
    return HomologyClass{std::move(v)};
}

const json& field(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw std::domain_error("input: missing \"" + std::string(key) + "\" in " + where);
    return *it;
}

}  // namespace

ProblemInput problem_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::domain_error("input: top level must be an object");
    const json& jm = field(j, "model", "top level");
    const json& jrank = field(jm, "rank", "model");
    if (!jrank.is_number_integer() || jrank.get<std::int64_t>() <= 0)
        throw std::domain_error("input: model rank must be a positive integer");
    const int rank = jrank.get<int>();

    ProblemInput out;
    out.model = std::make_shared<ManifoldModel>(rank, int_vector(field(jm, "form", "model"), "form"),
                                                int_vector(field(jm, "kappa", "model"), "kappa"),
                                                int_vector(field(jm, "grading", "model"), "grading"));

    const json& jt = field(j, "table", "top level");
    for (const auto& je : jt.value("generic", json::array())) {
        GenericEntry entry;
        entry.cls = class_vector(field(je, "class", "generic entry"), rank, "generic class");
        const json& jc = field(je, "counts", "generic entry");
        if (!jc.is_object()) throw std::domain_error("input: counts must be an object keyed by d");
        for (const auto& [key, val] : jc.items()) {
            std::size_t pos = 0;
            std::int64_t d = 0;
            try {
                d = std::stoll(key, &pos);
            } catch (const std::exception&) {
                pos = std::string::npos;
            }
            if (pos != key.size() || d < 0)
                throw std::domain_error("input: count key \"" + key +
                                        "\" is not a nonnegative integer");
            if (!val.is_number_integer())
                throw std::domain_error("input: count values must be integers");
            entry.counts[d] = val.get<std::int64_t>();
        }
        out.table.generic.push_back(std::move(entry));
    }
    for (const auto& je : jt.value("exceptional", json::array())) {
        ExceptionalEntry entry;
        entry.cls = class_vector(field(je, "class", "exceptional entry"), rank, "exceptional class");
        const json& jc = field(je, "count", "exceptional entry");
        if (!jc.is_number_integer()) throw std::domain_error("input: exceptional count must be an integer");
        entry.count = jc.get<std::int64_t>();
        out.table.exceptional.push_back(std::move(entry));
    }
    for (const auto& je : jt.value("tori", json::array())) {
        const HomologyClass cls = class_vector(field(je, "class", "torus entry"), rank, "torus class");
        const json& js = field(je, "sign", "torus entry");
        const json& jk = field(je, "type", "torus entry");
        if (!js.is_number_integer() || (js.get<int>() != 1 && js.get<int>() != -1))
            throw std::domain_error("input: torus sign must be 1 or -1");
        if (!jk.is_number_integer() || jk.get<int>() < 0 || jk.get<int>() > 3)
            throw std::domain_error("input: torus type must be in 0..3");
        out.table.tori.push_back(TorusData::of_type(cls, js.get<int>(), jk.get<int>()));
    }

    validate_table(*out.model, out.table);
    return out;
}

ProblemInput load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("input: cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::domain_error("input: JSON parse error in " + path + ": " + e.what());
    }
    return problem_from_json(j);
}

nlohmann::ordered_json problem_to_json(const ManifoldModel& model, const CurveTable& table) {
    ordered_json jm;
    jm["rank"] = model.rank();
    jm["form"] = model.form();
    jm["kappa"] = model.kappa();
    jm["grading"] = model.grading();

    ordered_json jt;
    jt["generic"] = ordered_json::array();
    for (const auto& e : table.generic) {
        ordered_json je;
        je["class"] = e.cls.coords;
        ordered_json jc = ordered_json::object();
        for (const auto& [d, count] : e.counts) jc[std::to_string(d)] = count;
        je["counts"] = std::move(jc);
        jt["generic"].push_back(std::move(je));
    }
    jt["exceptional"] = ordered_json::array();
    for (const auto& e : table.exceptional) {
        ordered_json je;
        je["class"] = e.cls.coords;
        je["count"] = e.count;
        jt["exceptional"].push_back(std::move(je));
    }
    jt["tori"] = ordered_json::array();
    for (const auto& t : table.tori) {
        ordered_json je;
        je["class"] = t.cls.coords;
        je["sign"] = t.sgn_d0;
        je["type"] = t.type();
        jt["tori"].push_back(std::move(je));
    }

    ordered_json j;
    j["model"] = std::move(jm);
    j["table"] = std::move(jt);
    return j;
}

std::string canonical_problem_text(const ManifoldModel& model, const CurveTable& table) {
    return problem_to_json(model, table).dump(2) + "\n";
}

nlohmann::ordered_json series_to_json(const Series& series) {
    ordered_json terms = ordered_json::array();
    for (const auto& [m, c] : series.terms()) {
        ordered_json jt;
        jt["coeff"] = rat_to_string(c);
        jt["class"] = m.cls.coords;
        jt["s"] = m.sdeg;
        terms.push_back(std::move(jt));
    }
    ordered_json j;
    j["torder"] = series.torder();
    j["sorder"] = series.sorder();
    j["terms"] = std::move(terms);
    return j;
}

nlohmann::ordered_json expansion_to_json(const InvariantExpansion& expansion) {
    ordered_json rows = ordered_json::array();
    for (const auto& [key, value] : expansion.rows) {
        ordered_json jr;
        jr["class"] = key.first.coords;
        jr["delta"] = key.second;
        jr["value"] = value.str();
        rows.push_back(std::move(jr));
    }
    return rows;
}

std::string expansion_text(const InvariantExpansion& expansion) {
    std::string out;
    for (const auto& [key, value] : expansion.rows) {
        out += "Gr_" + std::to_string(key.second) + "[";
        for (std::size_t i = 0; i < key.first.coords.size(); ++i) {
            if (i > 0) out += ",";
            out += std::to_string(key.first.coords[i]);
        }
        out += "] = " + value.str() + "\n";
    }
    return out;
}

}  // namespace grseries
