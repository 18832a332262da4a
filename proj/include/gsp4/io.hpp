#pragma once

// JSON encoding of exact values, lattice inputs and eigen systems.
// Rationals are "num/den" strings, pi-quantities {"coeff": "num/den", "pi_exp": e}.

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "gsp4/exactnum.hpp"
#include "gsp4/lattice.hpp"

namespace gsp4 {

using Json = nlohmann::ordered_json;

/// Malformed input; the message starts with the offending field path.
class InputError : public std::invalid_argument {
public:
    InputError(const std::string& field, const std::string& problem)
        : std::invalid_argument("field '" + field + "': " + problem) {}
};

Json to_json(const BigRational& q);
Json to_json(const PiQuantity& x);
/// Integer as a JSON number when it fits in 64 bits, otherwise as a decimal string.
Json to_json(const BigInt& z);
Json to_json(const RationalMatrix& m);

/// Accepts "num/den" or "n" strings and JSON integers.
BigRational rational_from_json(const Json& j, const std::string& field);
/// Accepts JSON integers and decimal strings.
BigInt integer_from_json(const Json& j, const std::string& field);
PiQuantity pi_from_json(const Json& j, const std::string& field);
RationalMatrix matrix_from_json(const Json& j, const std::string& field);

struct LatticeInput {
    LatticeZp lattice;
    BilinearForm form;
    std::optional<RationalMatrix> splitter;
};

/// {"prime": p, "basis": [[...]], "gram": [[...]], "alternating": bool, "splitter": [[...]] (optional)}.
LatticeInput lattice_from_json(const Json& j);
Json to_json(const LatticeInput& in);

/// {"min_poly": [ints], "values": {"T_2": [ints], ...}}; validated.
EigenSystem eigen_system_from_json(const Json& j);
/// Values ordered by n.
Json to_json(const EigenSystem& e);

/// Reads and parses a UTF-8 JSON file. Throws InputError naming the file on failure.
Json read_json_file(const std::string& path);

}  // namespace gsp4
