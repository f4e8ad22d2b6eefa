#ifndef MAHLER_REPORT_JSON_HPP
#define MAHLER_REPORT_JSON_HPP

#include <json.hpp>

#include "mahler/matrix_length.hpp"
#include "mahler/measures.hpp"
#include "mahler/number_field.hpp"
#include "mahler/search.hpp"

namespace mahler {

using nlohmann::json;

// MeasureReport schema: degree, mahler, mahler_err, translation_length,
// length_err, lower_bound, upper_bound, equality_case, inputs_echo.
json to_json(const MeasureReport& r);
MeasureReport measure_report_from_json(const json& j);

json to_json(const BoundFunctionValue& v);
BoundFunctionValue bound_function_value_from_json(const json& j);

json to_json(const SearchRecord& r);
SearchRecord search_record_from_json(const json& j);

json to_json(const CorollaryBounds& b);
CorollaryBounds corollary_bounds_from_json(const json& j);

json to_json(const ClassicalInequalities& c);
json to_json(const SemisimpleCertificate& c);
json to_json(const TheoremAReport& r);
json to_json(const IntegralityReport& r);
json to_json(const RootSet& rs);

// field specification file: {"min_poly": "1,0,-2", "label": "Q(sqrt2)"}
struct FieldSpec {
    IntPolynomial min_poly;
    std::string label;
};
FieldSpec field_spec_from_json(const json& j);

// FieldMatrix file: array of rows; each entry is a coordinate vector whose
// values are integers or rational strings like "1/2"
FieldMatrix field_matrix_from_json(const json& j, const NumberField& field);

} // namespace mahler

#endif
