#pragma once

/// File formats: matrices and designs travel as JSON objects with a "kind"
/// tag; verification reports mirror VerificationReport with every residual as
/// a decimal number.
///
///   butson            {"kind":"butson","q":2,"n":2,"exp":[[0,0],[0,1]]}
///   signature-butson  same grid with null marking the zero diagonal
///   complex           {"kind":"complex","n":N,"re":[[..]],"im":[[..]]}
///   signature-complex complex grids with a zero diagonal
///   design            {"kind":"design","v":7,"rows":["0110100",...]}
///
/// Exact kinds round-trip bit for bit; float kinds round-trip through
/// shortest-form decimal literals that parse back to the same doubles.

#include <cstdint>
#include <string>
#include <variant>

#include <json.hpp>

#include "chm/designs.hpp"
#include "chm/frames.hpp"
#include "chm/matrix.hpp"

namespace chm::io {

using nlohmann::json;

enum class FileKind { Butson, Complex, SignatureButson, SignatureComplex, Design };

const char* kind_name(FileKind k);

/// Raw 0/1 incidence grid as read from a design file; design verification
/// proper happens later so that a structurally valid file that fails the
/// design axioms is a verification failure, not a parse error.
using DesignGrid = std::vector<std::vector<int>>;

struct MatrixFile {
    FileKind kind;
    std::variant<ExactMatrix, ComplexMatrix, DesignGrid> payload;
};

json to_json(const ExactMatrix& m, bool signature_kind);
json to_json(const ComplexMatrix& m, bool signature_kind);
json to_json(const chm::Design& d);
json to_json(const MatrixVariant& m, bool signature_kind);
json to_json(const AnalysisMatrix& v);  // {"kind":"analysis","n":..,"k":..,...}

/// Parses and validates one of the five kinds above; throws ParseError on
/// malformed files or invariant violations.
MatrixFile parse_matrix_file(const json& j);
MatrixFile parse_matrix_file(const std::string& text);

json report_to_json(const VerificationReport& rep);

/// FNV-1a 64-bit content digest, hex encoded.
std::string digest(std::string_view bytes);

}  // namespace chm::io
