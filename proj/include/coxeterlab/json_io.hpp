#pragma once

// JSON (de)serialization for polynomials, factorizations, algebras and
// reports. Polynomials are arrays of decimal coefficient strings, constant
// term first; matrices are arrays of rows of integer strings.

#include <coxeterlab/cartan.hpp>
#include <coxeterlab/coxeter.hpp>
#include <coxeterlab/cyclotomic.hpp>
#include <coxeterlab/spectral.hpp>

#include <json.hpp>

namespace coxlab {

using json = nlohmann::json;

json to_json(const IntPoly& p);
IntPoly poly_from_json(const json& j);

json to_json(const CycFactorization& f);
CycFactorization factorization_from_json(const json& j);

json to_json(const IntMat& m);
IntMat intmat_from_json(const json& j);

json to_json(const CartanAlgebra& a);
CartanAlgebra cartan_from_json(const json& j);

QuiverSpec quiver_from_json(const json& j);
PosetSpec poset_from_json(const json& j);
GroupAction action_from_json(const json& j);

json to_json(const PeriodicityReport& r);
json to_json(const HomFormReport& r);
json to_json(const SpectralReport& r);

const char* form_class_name(FormClass c);

}  // namespace coxlab
