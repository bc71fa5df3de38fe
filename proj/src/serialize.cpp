#include "curvecount/serialize.hpp"

#include <sstream>

namespace curvecount {

namespace {

std::string int_str(const Integer& v) { return Rational(v).to_string(); }

Integer int_from_str(const std::string& s) { return Rational::parse(s).to_integer(); }

} // namespace

Json series_to_json(const RSeries& s) {
    Json profile = Json::array();
    for (const VarSpec& v : s.profile().specs())
        profile.push_back({{"var", var_name(v.var)}, {"min", v.min_deg}, {"max", v.max_deg}});
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms()) // std::map iteration: exponent order
        terms.push_back({{"exp", e}, {"coeff", c.to_string()}});
    return Json{{"profile", profile}, {"terms", terms}};
}

RSeries series_from_json(const Json& j) {
    std::vector<VarSpec> specs;
    for (const Json& v : j.at("profile"))
        specs.push_back({var_from_name(v.at("var").get<std::string>()), v.at("min").get<int>(),
                         v.at("max").get<int>()});
    RSeries s{Profile(specs)};
    for (const Json& t : j.at("terms"))
        s.add_to(t.at("exp").get<ExpVec>(), Rational::parse(t.at("coeff").get<std::string>()));
    return s;
}

Json table_to_json(const MTable& t) {
    Json entries = Json::array();
    for (const auto& [key, v] : t.values()) {
        auto [h, d, n] = key;
        entries.push_back({h, d, n, int_str(v)});
    }
    return Json{{"kind", "m3"},
                {"h_max", t.h_max()},
                {"d_max", t.d_max()},
                {"n_min", t.n_min()},
                {"n_max", t.n_max()},
                {"window_lo", t.window_lo()},
                {"window_hi", t.window_hi()},
                {"entries", entries}};
}

MTable m_table_from_json(const Json& j) {
    std::map<std::tuple<int, int, long>, Integer> values;
    for (const Json& e : j.at("entries"))
        values[{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<long>()}] =
            int_from_str(e.at(3).get<std::string>());
    return MTable(std::move(values), j.at("h_max").get<int>(), j.at("d_max").get<int>(),
                  j.at("n_min").get<long>(), j.at("n_max").get<long>(),
                  j.at("window_lo").get<long>(), j.at("window_hi").get<long>());
}

Json table_to_json(const MRowTable& t) {
    Json entries = Json::array();
    for (const auto& [key, v] : t.values())
        entries.push_back({key.first, key.second, int_str(v)});
    return Json{{"kind", "m2"},
                {"d_max", t.d_max()},
                {"n_min", t.n_min()},
                {"n_max", t.n_max()},
                {"entries", entries}};
}

MRowTable m_row_table_from_json(const Json& j) {
    std::map<std::pair<int, long>, Integer> values;
    for (const Json& e : j.at("entries"))
        values[{e.at(0).get<int>(), e.at(1).get<long>()}] =
            int_from_str(e.at(2).get<std::string>());
    return MRowTable(std::move(values), j.at("d_max").get<int>(), j.at("n_min").get<long>(),
                     j.at("n_max").get<long>());
}

Json table_to_json(const QuadraticCoeffTable& t) {
    Json entries = Json::array();
    for (const auto& [m, v] : t.values()) entries.push_back({m, int_str(v)});
    return Json{{"kind", "quadratic"},
                {"name", t.name()},
                {"m_bound", t.certified_bound()},
                {"grid_d_max", t.grid_d_max()},
                {"grid_k_max", t.grid_k_max()},
                {"entries", entries}};
}

QuadraticCoeffTable quadratic_table_from_json(const Json& j) {
    std::map<long, Integer> values;
    for (const Json& e : j.at("entries"))
        values[e.at(0).get<long>()] = int_from_str(e.at(1).get<std::string>());
    return QuadraticCoeffTable(j.at("name").get<std::string>(), std::move(values),
                               j.at("m_bound").get<long>(), j.at("grid_d_max").get<int>(),
                               j.at("grid_k_max").get<int>());
}

Json table_to_json(const EulerTable& t) {
    Json entries = Json::array();
    for (const Integer& v : t.values()) entries.push_back(int_str(v));
    return Json{{"kind", "euler"}, {"entries", entries}};
}

EulerTable euler_table_from_json(const Json& j) {
    std::vector<Integer> values;
    for (const Json& e : j.at("entries")) values.push_back(int_from_str(e.get<std::string>()));
    return EulerTable(std::move(values));
}

std::string table_to_csv(const MTable& t) {
    std::ostringstream os;
    os << "h,d,n,value\n";
    for (int h = 0; h <= t.h_max(); ++h)
        for (int d = 0; d <= t.d_max(); ++d)
            for (long n = t.n_min(); n <= t.n_max(); ++n)
                os << h << "," << d << "," << n << "," << int_str(t.at(h, d, n)) << "\n";
    return os.str();
}

std::string table_to_csv(const MRowTable& t) {
    std::ostringstream os;
    os << "d,n,value\n";
    for (int d = 0; d <= t.d_max(); ++d)
        for (long n = t.n_min(); n <= t.n_max(); ++n)
            os << d << "," << n << "," << int_str(t.at(d, n)) << "\n";
    return os.str();
}

std::string table_to_csv(const QuadraticCoeffTable& t) {
    std::ostringstream os;
    os << "m,value\n";
    for (const auto& [m, v] : t.values())
        if (m <= t.certified_bound()) os << m << "," << int_str(v) << "\n";
    return os.str();
}

std::string table_to_csv(const EulerTable& t) {
    std::ostringstream os;
    os << "d,value\n";
    for (int d = 0; d <= t.d_max(); ++d) os << d << "," << int_str(t.at(d)) << "\n";
    return os.str();
}

} // namespace curvecount
