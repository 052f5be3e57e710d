#include "qschur/json_io.hpp"

#include <map>

namespace qschur {

json laurent_to_json(const Laurent& x) {
    json j = json::object();
    for (const auto& [e, c] : x.terms()) j[std::to_string(e)] = c;
    return j;
}

Laurent laurent_from_json(const json& j) {
    Laurent x;
    std::map<int, long long> sorted;
    for (auto it = j.begin(); it != j.end(); ++it)
        sorted[std::stoi(it.key())] = it.value().get<long long>();
    for (const auto& [e, c] : sorted) x += Laurent::v_pow(e, c);
    return x;
}

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.n; ++i) {
        json row = json::array();
        for (int j = 0; j < m.n; ++j) row.push_back(m.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

Mat mat_from_json(const json& j) {
    int n = static_cast<int>(j.size());
    Mat m(n);
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < n; ++c) m.at(i, c) = j[static_cast<size_t>(i)][static_cast<size_t>(c)].get<int>();
    return m;
}

json schur_table_to_json(const SchurTable& T, int lprime) {
    json j;
    j["schema"] = "qschur/1";
    j["n"] = T.n;
    j["r"] = T.r;
    j["lprime"] = lprime;
    json basis = json::array();
    for (const Mat& m : T.labels) basis.push_back(mat_to_json(m));
    j["basis"] = basis;
    // deterministic order: sort by (left, right, out)
    std::map<std::tuple<int, int, int>, const Laurent*> entries;
    for (const auto& [key, row] : T.products()) {
        int a = static_cast<int>(key >> 32), b = static_cast<int>(key & 0xffffffffu);
        for (const auto& [c, coeff] : row) entries[{a, b, c}] = &coeff;
    }
    json sc = json::array();
    for (const auto& [k, coeff] : entries) {
        json e;
        e["left"] = std::get<0>(k);
        e["right"] = std::get<1>(k);
        e["out"] = std::get<2>(k);
        e["coeff"] = laurent_to_json(*coeff);
        sc.push_back(e);
    }
    j["structconst"] = sc;
    return j;
}

bool schur_table_matches_json(const SchurTable& T, const json& j) {
    if (j.at("n").get<int>() != T.n || j.at("r").get<int>() != T.r) return false;
    const json& basis = j.at("basis");
    if (basis.size() != T.labels.size()) return false;
    for (size_t i = 0; i < T.labels.size(); ++i)
        if (!(mat_from_json(basis[i]) == T.labels[i])) return false;
    std::map<std::tuple<int, int, int>, Laurent> loaded;
    for (const json& e : j.at("structconst"))
        loaded[{e.at("left").get<int>(), e.at("right").get<int>(), e.at("out").get<int>()}] =
            laurent_from_json(e.at("coeff"));
    size_t count = 0;
    for (const auto& [key, row] : T.products()) {
        int a = static_cast<int>(key >> 32), b = static_cast<int>(key & 0xffffffffu);
        for (const auto& [c, coeff] : row) {
            auto it = loaded.find({a, b, c});
            if (it == loaded.end() || !(it->second == coeff)) return false;
            ++count;
        }
    }
    return count == loaded.size();
}

}
