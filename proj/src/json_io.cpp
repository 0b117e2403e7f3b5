#include "cyclosynth/json_io.hpp"

#include <cmath>

#include "cyclosynth/errors.hpp"

namespace cyclosynth {

Json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw ParseError("not an integer: \"" + j.get<std::string>() + "\"");
    }
  }
  throw ParseError("expected an integer, got " + j.dump());
}

namespace {

RingSpec ring_field(const Json& j, std::optional<int> ring) {
  if (!j.is_object() || !j.contains("ring")) throw ParseError("missing \"ring\" field");
  const int n = j.at("ring").get<int>();
  if (ring && *ring != n) {
    throw SpecMismatch("document ring " + std::to_string(n) + " does not match --ring " + std::to_string(*ring));
  }
  return RingSpec(n);
}

int denom_field(const Json& j) {
  if (!j.contains("denom_exp")) return 0;
  const int k = j.at("denom_exp").get<int>();
  if (k < 0) throw ParseError("negative denom_exp");
  return k;
}

Json coeffs_json(const CycInt& a) {
  Json arr = Json::array();
  for (const auto& c : a.coeffs()) arr.push_back(int_to_json(c));
  return arr;
}

CycInt coeffs_from(RingSpec spec, const Json& arr) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != spec.phi()) {
    throw ParseError("coefficient list must have length " + std::to_string(spec.phi()));
  }
  std::vector<Int> cs;
  for (const auto& c : arr) cs.push_back(int_from_json(c));
  return CycInt::from_coeffs(spec, cs);
}

template <class F>
auto wrap(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Json elem_to_json(const CycInt& a) {
  Json j;
  j["ring"] = a.spec().n();
  j["coeffs"] = coeffs_json(a);
  return j;
}

CycInt elem_from_json(const Json& j, std::optional<int> ring) {
  return wrap([&] { return coeffs_from(ring_field(j, ring), j.at("coeffs")); });
}

Json loc_elem_to_json(const LocElem& x) {
  Json j;
  j["ring"] = x.spec().n();
  j["denom_exp"] = x.denom_exp();
  j["coeffs"] = coeffs_json(x.num());
  return j;
}

LocElem loc_elem_from_json(const Json& j, std::optional<int> ring) {
  return wrap([&] { return LocElem(coeffs_from(ring_field(j, ring), j.at("coeffs")), denom_field(j)); });
}

Json vector_to_json(const LocVector& v) {
  Json j;
  j["ring"] = v.spec().n();
  j["denom_exp"] = v.denom_exp();
  j["entries"] = Json::array();
  for (const auto& w : v.nums()) j["entries"].push_back(coeffs_json(w));
  return j;
}

LocVector vector_from_json(const Json& j, std::optional<int> ring) {
  return wrap([&] {
    const RingSpec spec = ring_field(j, ring);
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.empty()) throw ParseError("\"entries\" must be a non-empty array");
    std::vector<CycInt> nums;
    for (const auto& e : entries) nums.push_back(coeffs_from(spec, e));
    return LocVector(std::move(nums), denom_field(j));
  });
}

Json matrix_to_json(const LocMatrix& m) {
  Json j;
  j["ring"] = m.spec().n();
  j["denom_exp"] = m.denom_exp();
  j["rows"] = Json::array();
  for (int r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(coeffs_json(m.num(r, c)));
    j["rows"].push_back(std::move(row));
  }
  return j;
}

LocMatrix matrix_from_json(const Json& j, std::optional<int> ring) {
  return wrap([&] {
    const RingSpec spec = ring_field(j, ring);
    const auto& rows = j.at("rows");
    if (!rows.is_array() || rows.empty()) throw ParseError("\"rows\" must be a non-empty array");
    const int dim = static_cast<int>(rows.size());
    std::vector<CycInt> nums;
    for (const auto& row : rows) {
      if (!row.is_array() || static_cast<int>(row.size()) != dim) throw DimensionMismatch("matrix must be square");
      for (const auto& e : row) nums.push_back(coeffs_from(spec, e));
    }
    return LocMatrix(dim, std::move(nums), denom_field(j));
  });
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace cyclosynth
