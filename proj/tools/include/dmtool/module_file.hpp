#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "dieudonne/chain_analysis.hpp"
#include "dieudonne/lattice.hpp"
#include "dieudonne/slopes.hpp"
#include "dieudonne/unitary_module.hpp"

namespace dmtool {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent input (exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json ring_to_json(const dieudonne::RingContext& ring);
dieudonne::Ring ring_from_json(const Json& j);

Json element_to_json(const dieudonne::RingContext& ring, const dieudonne::RingElement& e);
dieudonne::RingElement element_from_json(const dieudonne::RingContext& ring, const Json& j);

/// Row-major grid of elements.
Json matrix_to_json(const dieudonne::Matrix& m);
dieudonne::Matrix matrix_from_json(const dieudonne::Ring& ring, const Json& j, int rows,
                                   int cols);

/// {denom, generators}, generators in canonical Hermite form.
Json lattice_to_json(const dieudonne::Lattice& l);
Json rational_to_json(const dieudonne::Rational& r);

/// The module file: {ring, signature, basis, F, pairing, meta}. Integers are
/// written as decimal strings; the parser accepts strings or JSON numbers.
Json module_to_json(const dieudonne::UnitaryModule& dm);
dieudonne::UnitaryModule module_from_json(const Json& j);

Json parse_json(const std::string& text);
dieudonne::UnitaryModule read_module_file(const std::string& path);
std::string dump(const Json& j);
void write_text_file(const std::string& path, const std::string& text);

Json chain_to_json(const dieudonne::ChainAnalysis& ca);
Json height_to_json(const dieudonne::MinimalHeightReport& report);
Json slope_report_to_json(const dieudonne::SlopeReport& report);
Json certificate_to_json(const dieudonne::NotSupersingularCertificate& cert);
Json validation_to_json(const dieudonne::ValidationReport& report);
Json chain_conditions_to_json(const dieudonne::ChainConditionReport& report);

}  // namespace dmtool
