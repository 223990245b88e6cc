#include "heisenkep/exactalg/serialize.hpp"

#include "heisenkep/exactalg/errors.hpp"

namespace heisenkep {

Json to_json(const Scalar& s) { return s.str(); }

Json to_json(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.str());
  return a;
}

Json to_json(const RatFunc& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const ExactVector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_json(v(i)));
  return a;
}

Json to_json(const DiffOperator& op, const std::string& var) {
  Json c = Json::array();
  for (const auto& f : op.coeffs()) c.push_back(to_json(f));
  return Json{{"order", op.order()}, {"var", var}, {"coeffs", std::move(c)}};
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  if (j.is_number()) return Scalar::from_decimal(j.get<double>());
  throw ParseError("expected a scalar string or number");
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) return Poly(scalar_from_json(j));
  std::vector<Scalar> c;
  for (const auto& e : j) c.push_back(scalar_from_json(e));
  return Poly(std::move(c));
}

RatFunc ratfunc_from_json(const Json& j) {
  if (j.is_object()) {
    Poly den = j.contains("den") ? poly_from_json(j.at("den")) : Poly(1);
    return RatFunc(poly_from_json(j.at("num")), den);
  }
  return RatFunc(poly_from_json(j));
}

ExactMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array() || j.front().empty())
    throw DimensionError("matrix must be a non-empty array of non-empty rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.front().size());
  ExactMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw DimensionError("ragged matrix rows");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = ratfunc_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

DiffOperator diffop_from_json(const Json& j) {
  std::vector<RatFunc> c;
  for (const auto& e : j.at("coeffs")) c.push_back(ratfunc_from_json(e));
  return DiffOperator(std::move(c));
}

}  // namespace heisenkep
