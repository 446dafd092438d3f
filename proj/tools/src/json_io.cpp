#include "json_io.hpp"

#include "bosonic/complexify.hpp"

namespace bosonic::cli {

Json to_json(cplx z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const HVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const CMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

cplx complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_object() || !j.contains("re")) throw InputError("complex number must be a number or {\"re\", \"im\"}");
  const Json& re = j.at("re");
  const Json im = j.contains("im") ? j.at("im") : Json(0.0);
  if (!re.is_number() || !im.is_number()) throw InputError("complex parts must be numbers");
  return {re.get<double>(), im.get<double>()};
}

HVector vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("vector must be a non-empty array");
  HVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  CMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(rows));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != rows) throw InputError("matrix must be square");
    for (std::size_t c = 0; c < rows; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex_from_json(j[r][c]);
    }
  }
  return m;
}

MapSpec map_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("map description must be a JSON object");
  if (!j.contains("C")) throw InputError("map description needs \"C\"");
  MapSpec spec;
  const CMatrix c = matrix_from_json(j.at("C"));
  const CMatrix a = j.contains("A") ? matrix_from_json(j.at("A")) : CMatrix::Zero(c.rows(), c.cols());
  if (a.rows() != c.rows()) throw InputError("\"C\" and \"A\" must have the same size");
  spec.map = RealLinearMap(c, a);
  const std::string kind = j.value("kind", std::string("symplectic"));
  if (kind == "symplectic") {
    spec.kind = MapKind::symplectic;
  } else if (kind == "antisymplectic") {
    spec.kind = MapKind::antisymplectic;
  } else {
    throw InputError("\"kind\" must be \"symplectic\" or \"antisymplectic\"");
  }
  return spec;
}

Json table_to_json(const DoubledTable& t) {
  Json out = Json::object();
  const DoubledIndex& idx = t.index();
  const MonomialBasis& h = *idx.half();
  for (std::size_t i = 0; i < t.table().size(); ++i) {
    out[DoubledIndex::key(h.exponents(idx.first(i)), h.exponents(idx.second(i)))] = to_json(t.table()[i]);
  }
  return out;
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace bosonic::cli
