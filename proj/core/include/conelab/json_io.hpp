#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "conelab/degrees.hpp"
#include "conelab/invariants.hpp"
#include "conelab/ldl.hpp"
#include "conelab/rank3.hpp"
#include "conelab/realization.hpp"
#include "conelab/verify.hpp"

/// JSON formats. Rationals are strings ("3", "-1/2"); readers also take
/// JSON integers. Block indices and matrix entry indices are 1-based.
/// Malformed input raises ParseError naming the offending location.
namespace conelab::io {

using Json = nlohmann::json;

Json to_json(const Rational& value);
Rational rational_from_json(const Json& j, const std::string& where);

/// Nested rows [["1", "0"], ["0", "1"]].
Json to_json(const Matrix& m);
/// {"rows": R, "cols": C, "entries": [[i, j, "v"], ...]}
Json to_sparse_json(const Matrix& m);
/// Either of the two forms above.
Matrix matrix_from_json(const Json& j, const std::string& where);

/// {"partition": [n_1, ...], "spaces": [{"k": 2, "j": 1, "basis": [sparse matrix, ...]}, ...]}
Json to_json(const Realization& v);
Realization realization_from_json(const Json& j);

/// {"diag": [...], "off": [{"k": 2, "j": 1, "coords": [...]}, ...]}; missing pairs read as zero.
Json to_json(const ConeElement& x);
ConeElement cone_element_from_json(const Json& j, const Realization& v);

/// {"diag": [...], "lower": [{"k", "j", "coords"}, ...]}
Json to_json(const GroupElement& h);
GroupElement group_element_from_json(const Json& j, const Realization& v);

/// {"r": R, "dims": {"d21": ..., "d31": ..., "d32": ...}}; keys are
/// "d<k><j>" while k < 10 and "d<k>_<j>" beyond. Both forms are read.
Json to_json(const DimTable& d);
DimTable dim_table_from_json(const Json& j);

/// {"sigma": [[...]], "degrees": [...], "trace": {"l": [...], "epsilon": [...]}}
Json to_json(const SigmaMatrix& sigma);

Json to_json(const VerificationReport& report);
Json to_json(const LdlResult& ldl, bool approx);

/// {"r", "s", "n", "A": [nested rows, ...]}
Json to_json(const rank3::CompositionFamily& f);
rank3::CompositionFamily family_from_json(const Json& j);

/// {"x11", "x22", "x33", "x", "y", "z"}
Json to_json(const rank3::Rank3Element& x);
rank3::Rank3Element rank3_element_from_json(const Json& j, const rank3::CompositionFamily& f);
/// {"xi11", "xi22", "xi33", "xi", "eta", "zeta"}
Json to_json(const rank3::DualRank3Element& xi);
rank3::DualRank3Element dual_rank3_element_from_json(const Json& j, const rank3::CompositionFamily& f);

Json to_json(const rank3::DegreeClassification& c);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace conelab::io
