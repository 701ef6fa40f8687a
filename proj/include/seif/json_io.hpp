#pragma once

#include <string>

#include "json.hpp"
#include "seif/thomseb.hpp"

namespace seif {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

// Scalars: integers and "p/q" or decimal strings are exact, other JSON
// numbers are floats, [re, im] pairs are complex. Matrices are row lists.
Rational rational_from_json(const Json& j);  // exact entries only
Frac frac_from_json(const Json& j);
Cx scalar_from_json(const Json& j);
Mat matrix_from_json(const Json& j);
std::optional<MatrixQ> exact_matrix_from_json(const Json& j);
Vec vector_from_json(const Json& j);
Json to_json(const MatrixQ& a);  // entries as "p/q" strings
Json to_json(const Mat& a);      // numbers, or [re, im] where not real
Json to_json(const Vec& v);

// Documents carry "schema_version": "1" and a "kind". Throws BadInput.
void check_document(const Json& j, const std::string& kind);
Json document(const std::string& kind);

// kind "seifert": {"gram": matrix}. A bare matrix is accepted as well.
SeifertForm seifert_from_json(const Json& j);
Json to_json(const SeifertForm& l);
// kind "triple": {"m": matrix, "s": matrix, "sym": 0 or 1}.
IsometricTriple triple_from_json(const Json& j);
Json to_json(const IsometricTriple& t);
// kind "pmhs": {"dim", "weight", "signed", "m", "s", "f": [{"p", "basis": [vectors]}]}.
// F^p is H below the first listed p and zero above the last.
SteenbrinkPMHS pmhs_from_json(const Json& j);
Json to_json(const SteenbrinkPMHS& p);
// {"z_side": bool, "generators": [[{"a": vector, "alpha": "p/q"}, ...], ...]}.
LatticeBasis lattice_from_json(const Json& j);
Json to_json(const LatticeBasis& b);
// kind "tezp": {"m", "seifert": matrix, "pmhs"?: document, "lattice"?: lattice}.
TEZPData tezp_from_json(const Json& j);
Json to_json(const TEZPData& t);
// kind "split_spec": {"weight", "signed", "seed", "ladders": [{"p", "q", "angle", "dim"}]}.
struct SplitSpec {
  std::vector<LadderSpec> ladders;
  int weight = 0;
  bool is_signed = false;
  unsigned seed = 0;
};
SplitSpec split_spec_from_json(const Json& j);

Json to_json(const Decomposition<SeifType>& d);
Json to_json(const Decomposition<IsoType>& d);
// Sorted list of [alpha_num, alpha_den, k, mult].
Json to_json(const SpectralPairs& spp);
Json to_json(const Report& r);

}  // namespace seif
