#ifndef BOSONIC_TOOLS_JSON_IO_HPP
#define BOSONIC_TOOLS_JSON_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "bosonic/kernelcalc.hpp"
#include "bosonic/linspace.hpp"

namespace bosonic::cli {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent input; maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MapSpec {
  RealLinearMap map;
  MapKind kind = MapKind::symplectic;
};

Json to_json(cplx z);
Json to_json(const HVector& v);
Json to_json(const CMatrix& m);

cplx complex_from_json(const Json& j);
HVector vector_from_json(const Json& j);
CMatrix matrix_from_json(const Json& j);

/// Reads top-level "C", "A" and "kind"; "A" defaults to zero.
MapSpec map_from_json(const Json& j);

/// Entries keyed "a1,..;b1,.." in basis order.
Json table_to_json(const DoubledTable& t);

Json parse_text(const std::string& text);

}  // namespace bosonic::cli

#endif  // BOSONIC_TOOLS_JSON_IO_HPP
