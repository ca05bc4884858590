#pragma once

#include "eqc/presentation.hpp"
#include "eqc/sullivan.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqc {

// Malformed input files. The CLI maps this to exit status 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

// [{"coeff": "a/b", "exponents": {"p1": 2}}, ...] in canonical term order.
Json element_to_json(const Element& x);
Element element_from_json(const Json& j, const AlgebraPtr& algebra);

// {"label", "generators": [{"name", "degree"}], "relations": [element, ...]}
Json presentation_to_json(const QuotientPresentation& p);
QuotientPresentation presentation_from_json(const Json& j);

// Presentation format plus "differential": {odd generator: element}. Even
// generators form the base, odd ones the fiber.
Json model_to_json(const SullivanModel& m);
SullivanModel model_from_json(const Json& j);

// Parses text, wrapping JSON syntax errors in ParseError.
Json parse_json(std::string_view text);
std::string read_file(const std::string& path);

}  // namespace eqc
