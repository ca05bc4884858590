#pragma once

#include "eqc/grassmann.hpp"
#include "eqc/serialize.hpp"

#include <string>
#include <vector>

namespace eqc {

Json hilbert_to_json(const HilbertTable& t, const std::string& label);
Json cohomology_to_json(const CohomologyReport& r, const std::string& label);
Json report_to_json(const VerificationReport& r);
Json batch_to_json(const std::vector<VerificationReport>& reports);

// Aligned columns, one per degree, followed by a checksum line:
//   degree  0  1  2
//   dim     1  0  2
//   checksum 3
std::string hilbert_to_text(const HilbertTable& t, const std::string& label);
std::string cohomology_to_text(const CohomologyReport& r, const std::string& label);
std::string report_to_text(const VerificationReport& r);
std::string batch_to_text(const std::vector<VerificationReport>& reports);

bool all_pass(const std::vector<VerificationReport>& reports);

}  // namespace eqc
