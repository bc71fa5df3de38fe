#ifndef CURVECOUNT_SERIALIZE_HPP
#define CURVECOUNT_SERIALIZE_HPP

#include <json.hpp>

#include <string>

#include "curvecount/series.hpp"
#include "curvecount/tables.hpp"

namespace curvecount {

using Json = nlohmann::json;

/// {"profile": [{"var": "p", "min": -3, "max": 5}, ...],
///  "terms": [{"exp": [..], "coeff": "num/den"}, ...]} sorted by exponent.
Json series_to_json(const RSeries& s);
RSeries series_from_json(const Json& j);

Json table_to_json(const MTable& t);
MTable m_table_from_json(const Json& j);

Json table_to_json(const MRowTable& t);
MRowTable m_row_table_from_json(const Json& j);

Json table_to_json(const QuadraticCoeffTable& t);
QuadraticCoeffTable quadratic_table_from_json(const Json& j);

Json table_to_json(const EulerTable& t);
EulerTable euler_table_from_json(const Json& j);

/// CSV with header "h,d,n,value"; values in num/den form.
std::string table_to_csv(const MTable& t);
/// CSV with header "d,n,value".
std::string table_to_csv(const MRowTable& t);
/// CSV with header "m,value".
std::string table_to_csv(const QuadraticCoeffTable& t);
/// CSV with header "d,value".
std::string table_to_csv(const EulerTable& t);

} // namespace curvecount

#endif
