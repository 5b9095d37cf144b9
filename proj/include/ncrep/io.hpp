#pragma once

// JSON and CSV formats for presentations, fat points, representations and census tables.

#include <string>

#include <json.hpp>

#include "ncrep/classify.hpp"
#include "ncrep/fatpoint.hpp"

namespace ncrep::io {

using Json = nlohmann::ordered_json;

Json scalar_to_json(Scalar z);  ///< [re, im]
Scalar scalar_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);  ///< row-major rows of [re, im]
Matrix matrix_from_json(const Json& j);

/// {"generators": [...], "relations": [[{"word": [..], "re": .., "im": ..}, ..], ..], "label": ..}
Json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

/// {"period": e, "multiplicities": [..], "blocks": {generator: [matrix per position]}}
Json fatpoint_to_json(const FatPoint& f);
FatPoint fatpoint_from_json(const Json& j, const Presentation& algebra);

/// {"dimension": k, "matrices": {generator: matrix}, "residual": r, "stabilizer_order": e, "algebra": ..}
/// stabilizer_order < 0 omits the field; 0 is written as "infinite".
Json representation_to_json(const Representation& r, int stabilizer_order = -1);
Representation representation_from_json(const Json& j, const Presentation& algebra);
/// Uses the embedded "algebra" entry.
Representation representation_from_json(const Json& j);

/// Columns: character-id, dimension, class-count, stabilizer-order, residual, g-value.
std::string census_csv(const Census& c);

/// A JSON file path, or a built-in name: "qplane:re,im", "cubic" (primitive
/// cube root exp(2 pi i/3)), "cubic:re,im", "sklyanin:a_re,a_im;b_re,b_im;c_re,c_im", "free:g".
Presentation load_presentation(const std::string& spec);

Json read_json_file(const std::string& path);

/// Parses "re,im" or "re".
Scalar parse_scalar(const std::string& text);

/// Fixed-precision decimal text used in all CSV/plain outputs.
std::string format_double(double x, int digits = 10);

}  // namespace ncrep::io
