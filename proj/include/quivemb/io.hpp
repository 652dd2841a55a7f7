#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "quivemb/dynkin.hpp"
#include "quivemb/grassmannian.hpp"
#include "quivemb/stable.hpp"
#include "quivemb/verdict.hpp"

namespace quivemb::io {

using json = nlohmann::json;

// Malformed or inconsistent input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);

// {"vertices": [labels], "arrows": [[src, tgt], ...]} with labels as endpoints.
json to_json(const Quiver& q);
Quiver quiver_from_json(const json& j);

// Integers where possible, "p/q" otherwise. Over F_{p^k} with k > 1 entries
// are element codes 0..q-1.
json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, const Field& f);
// Row lists.
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const Field& f, std::size_t rows, std::size_t cols);

DimVector dims_from_json(const json& j, std::size_t n);
// "1,0,2" style dimension vectors from the command line.
DimVector parse_dims(const std::string& text, std::size_t n);

// {"quiver", "field", "dims", "matrices"}
json to_json(const Representation& x);
Representation rep_from_json(const json& j);

// {"source", "target", "matrices"}; reading re-checks intertwining.
json to_json(const Morphism& f);
Morphism morphism_from_json(const json& j);

json to_json(const Verdict& v, const Quiver& q);
json to_json(const StableSearchReport& r);
json to_json(const GenericHomEstimate& g);
json to_json(const StabilizationReport& s);
json to_json(const GrassmannianCount& c);

// Roots, representation files and the Hom matrix H; reading validates.
json to_json(const IndecomposableTable& t);
IndecomposableTable table_from_json(const json& j);

}  // namespace quivemb::io
