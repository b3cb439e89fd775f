#pragma once

// JSON encodings. Ordinal elements are written 1-based; carriers as sorted
// label lists; maps and action generators as label -> label objects. Keys are
// emitted sorted, so equal values serialize to identical bytes.
//
//   Injection        {"dom": m, "cod": k, "img": [...]}
//   Permutation      {"deg": n, "img": [...]}
//   PartialBijection {"src": [...], "tgt": [...], "img": [...]}
//   Morphism         {"src": [m,n], "dst": [k,l], "phi": [...], "psi": [...], "alpha": [...]}
//                    alpha lists the images of the sorted complement of phi.
//   "jfunctor.v1"    {"window": [M,N], "objects": [{"at", "carrier"}], "edges": [{"morphism", "map"}]}
//                    identity edges may be omitted on input.
//   "tdatum.v1"      {"window": [M,N], "objects": [{"at", "carrier", "left", "right"}],
//                     "shifts": [{"at", "map"}]}
//   "spectrum.v1"    {"K": [...], "levels": [{"carrier", "generators"}], "bondings": [map]}
//                    bonding keys are "(x,k)" product labels.
//   "coend.v1"       {"at": [k,l], "generators": g, "relations": r,
//                     "classes": [{"representative", "members"?}]}

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "jspec/dayconv.hpp"
#include "jspec/diagrams.hpp"
#include "jspec/spectra.hpp"

namespace jspec {

using Json = nlohmann::json;

/// Malformed input. `path` locates the offending value, e.g. "$.objects[2].carrier[1]".
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Strict parse: syntax errors and duplicate object keys raise SchemaError.
Json parse_json(const std::string& text);
/// Two-space indented, sorted keys, trailing newline.
std::string dump_json(const Json& j);

Json to_json(const Injection& f);
Json to_json(const Permutation& s);
Json to_json(const PartialBijection& a);
Json to_json(JObject a);
Json to_json(const JMorphism& f);
Json to_json(const FinCarrier& c);
/// {"src label": "dst label", ...}.
Json to_json(const FinMap& f);
Json to_json(const Report& r);
Json to_json(const JFunctor& F);
Json to_json(const TDatum& D);
Json to_json(const SymSpectrum& S);
Json to_json(const CoendPresentation& P, bool members);

Injection injection_from_json(const Json& j, const std::string& path = "$");
Permutation permutation_from_json(const Json& j, const std::string& path = "$");
PartialBijection partial_bijection_from_json(const Json& j, const std::string& path = "$");
JObject object_from_json(const Json& j, const std::string& path = "$");
JMorphism morphism_from_json(const Json& j, const std::string& path = "$");
FinCarrier carrier_from_json(const Json& j, const std::string& path = "$");
FinMap map_from_json(const Json& j, const FinCarrier& src, const FinCarrier& dst, const std::string& path = "$");
JFunctor jfunctor_from_json(const Json& j, const std::string& path = "$");
TDatum tdatum_from_json(const Json& j, const std::string& path = "$");
SymSpectrum spectrum_from_json(const Json& j, const std::string& path = "$");

/// The "schema" field, or "" when absent.
std::string schema_of(const Json& j);

}  // namespace jspec
