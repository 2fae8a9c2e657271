#include "vertexlab/series_io.hpp"

namespace vertexlab {

Json series_to_json(const HalfLaurentSeries& s) {
    Json terms = Json::array();
    for (const auto& [k, c] : s.terms()) terms.push_back(Json::array({k, rat_to_string(c)}));
    Json window = Json::array();
    window.push_back(s.lo());
    if (s.exact())
        window.push_back(nullptr);
    else
        window.push_back(s.hi());
    return Json{{"terms", std::move(terms)}, {"window", std::move(window)}};
}

HalfLaurentSeries series_from_json(const Json& j) {
    if (!j.contains("terms") || !j.contains("window"))
        throw ValidationError("series document needs 'terms' and 'window'");
    const Json& w = j.at("window");
    std::int64_t lo = w.at(0).get<std::int64_t>();
    std::int64_t hi = w.at(1).is_null() ? HalfLaurentSeries::kInf : w.at(1).get<std::int64_t>();
    HalfLaurentSeries s(lo, hi);
    for (const auto& t : j.at("terms")) {
        std::int64_t k = t.at(0).get<std::int64_t>();
        if (k < lo) throw ValidationError("series term below window");
        s.set(k, rat_from_string(t.at(1).get<std::string>()));
    }
    return s;
}

Json multiclass_to_json(const MultiClassSeries& z) {
    Json classes = Json::array();
    for (const auto& [cls, s] : z.terms) {
        Json entry;
        entry["class"] = cls;
        Json doc = series_to_json(s);
        entry["terms"] = doc.at("terms");
        entry["window"] = doc.at("window");
        classes.push_back(std::move(entry));
    }
    return Json{{"weights", z.weights},
                {"cutoff", z.cutoff},
                {"constant", rat_to_string(z.constant)},
                {"classes", std::move(classes)}};
}

MultiClassSeries multiclass_from_json(const Json& j) {
    MultiClassSeries z(j.at("weights").get<std::vector<std::int64_t>>(),
                       j.at("cutoff").get<std::int64_t>(),
                       rat_from_string(j.at("constant").get<std::string>()));
    for (const auto& entry : j.at("classes")) {
        ClassVector cls = entry.at("class").get<ClassVector>();
        Json doc{{"terms", entry.at("terms")}, {"window", entry.at("window")}};
        z.add_term(cls, series_from_json(doc));
    }
    return z;
}

Json gv_table_to_json(const GVTable& t) {
    Json entries = Json::array();
    for (const auto& [key, n] : t.entries)
        entries.push_back(Json::array({key.first, key.second, rat_to_string(n)}));
    return Json{{"weights", t.weights}, {"cutoff", t.cutoff}, {"entries", std::move(entries)}};
}

GVTable gv_table_from_json(const Json& j) {
    GVTable t(j.at("weights").get<std::vector<std::int64_t>>(),
              j.at("cutoff").get<std::int64_t>());
    for (const auto& e : j.at("entries")) {
        long g = e.at(0).get<long>();
        ClassVector cls = e.at(1).get<ClassVector>();
        if (!class_is_effective(cls))
            throw ValidationError("table entry with non-effective class");
        t.set(g, cls, rat_from_string(e.at(2).get<std::string>()));
    }
    return t;
}

Json truncation_to_json(const TruncationData& d) {
    Json classes = Json::array();
    for (const auto& [cls, row] : d) {
        Json coeffs = Json::array();
        for (const auto& [n, c] : row) coeffs.push_back(Json::array({n, rat_to_string(c)}));
        classes.push_back(Json{{"class", cls}, {"coeffs", std::move(coeffs)}});
    }
    return Json{{"classes", std::move(classes)}};
}

TruncationData truncation_from_json(const Json& j) {
    TruncationData d;
    for (const auto& entry : j.at("classes")) {
        ClassVector cls = entry.at("class").get<ClassVector>();
        std::map<std::int64_t, Rat> row;
        for (const auto& c : entry.at("coeffs"))
            row[c.at(0).get<std::int64_t>()] = rat_from_string(c.at(1).get<std::string>());
        d.emplace(std::move(cls), std::move(row));
    }
    return d;
}

} // namespace vertexlab
