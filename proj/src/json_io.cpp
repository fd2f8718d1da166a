#include <coxeterlab/json_io.hpp>

#include <cstdio>
#include <stdexcept>

namespace coxlab {

namespace {

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

std::string sig12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

json to_json(const IntPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

IntPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial: expected an array");
  std::vector<Int> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(int_from_json(e));
  return IntPoly(std::move(c));
}

json to_json(const CycFactorization& f) {
  json factors = json::object();
  for (const auto& [m, e] : f.factors) factors[std::to_string(m)] = e;
  return json{{"factors", std::move(factors)}, {"residual", to_json(f.residual)}};
}

CycFactorization factorization_from_json(const json& j) {
  CycFactorization f;
  for (const auto& [k, v] : j.at("factors").items())
    f.factors[std::stoul(k)] = v.get<unsigned>();
  f.residual = poly_from_json(j.at("residual"));
  return f;
}

json to_json(const IntMat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMat intmat_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix: expected a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.at(0).size());
  IntMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j.at(i).size()) != cols)
      throw std::invalid_argument("matrix: ragged rows");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = int_from_json(j.at(i).at(k));
  }
  return m;
}

json to_json(const CartanAlgebra& a) {
  return json{{"cartan", to_json(a.cartan())},
              {"labels", a.labels()},
              {"provenance", a.provenance()}};
}

CartanAlgebra cartan_from_json(const json& j) {
  return CartanAlgebra(intmat_from_json(j.at("cartan")),
                       j.at("labels").get<std::vector<std::string>>(),
                       j.value("provenance", std::string("json")));
}

QuiverSpec quiver_from_json(const json& j) {
  QuiverSpec q;
  q.vertices = j.at("vertices").get<std::vector<std::string>>();
  for (const auto& a : j.at("arrows")) {
    if (!a.is_array() || a.size() != 2)
      throw std::invalid_argument("quiver: each arrow must be [source, target]");
    q.arrows.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
  }
  q.validate();
  return q;
}

PosetSpec poset_from_json(const json& j) {
  PosetSpec p;
  p.elements = j.at("elements").get<std::vector<std::string>>();
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2)
      throw std::invalid_argument("poset: each cover must be [lower, upper]");
    p.covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
  }
  p.validate();
  return p;
}

GroupAction action_from_json(const json& j) {
  GroupAction g;
  g.generators = j.at("generators").get<std::vector<std::vector<int>>>();
  return g;
}

json to_json(const PeriodicityReport& r) {
  json out{{"cyclotomic", r.is_cyclotomic}, {"diagonalizable", r.is_diagonalizable}};
  if (r.period)
    out["period"] = *r.period;
  else
    out["period"] = "infinity";
  return out;
}

json to_json(const HomFormReport& r) {
  return json{{"hform", form_class_name(r.classification)},
              {"radical_rank", r.radical_rank}};
}

json to_json(const SpectralReport& r) {
  json roots = json::array();
  for (const auto& z : r.roots)
    roots.push_back(json{{"re", sig12(z.real())}, {"im", sig12(z.imag())}});
  return json{{"roots", std::move(roots)},
              {"spectral_radius", sig12(r.spectral_radius)},
              {"mahler", sig12(r.mahler)},
              {"energy", sig12(r.energy)},
              {"frobenius", sig12(r.frobenius)},
              {"eigen_square_sum", sig12(r.eigen_square_sum)},
              {"tolerance", r.tolerance},
              {"certified_cyclotomic", r.certified_cyclotomic}};
}

const char* form_class_name(FormClass c) {
  switch (c) {
    case FormClass::PositiveDefinite: return "positive";
    case FormClass::NonNegative: return "nonnegative";
    case FormClass::Indefinite: return "indefinite";
  }
  return "indefinite";
}

}  // namespace coxlab
