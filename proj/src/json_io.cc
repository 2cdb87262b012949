// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "divflag/json_io.h"

#include <fstream>
#include <memory>
#include <sstream>

namespace divflag {
namespace {

[[noreturn]] void Fail(const std::string& path, const std::string& what) {
  throw JsonFormatError(path + ": " + what);
}

const Json& Field(const Json& j, const std::string& path, const std::string& key) {
  if (!j.is_object()) Fail(path.empty() ? "<root>" : path, "expected an object");
  auto it = j.find(key);
  const std::string sub = path.empty() ? key : path + "." + key;
  if (it == j.end()) Fail(sub, "missing");
  return *it;
}

Json BigToJson(const mpz_class& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

mpz_class BigFromJson(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpz_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0) Fail(path, "expected a decimal integer");
    return v;
  }
  Fail(path, "expected an integer");
}

int IntFromJson(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) Fail(path, "expected an integer");
  const std::int64_t v = j.get<std::int64_t>();
  if (v < INT32_MIN || v > INT32_MAX) Fail(path, "integer out of range");
  return static_cast<int>(v);
}

std::vector<int> IntListFromJson(const Json& j, const std::string& path) {
  if (!j.is_array()) Fail(path, "expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(IntFromJson(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Json IntListToJson(const std::vector<int>& v) {
  Json out = Json::array();
  for (int x : v) out.push_back(x);
  return out;
}

Scalar ScalarFromJson(const FieldSpec& field, const Json& j, const std::string& path) {
  if (field.is_rational()) {
    if (j.is_number_integer()) return Scalar(field, static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
      try {
        return Scalar::Parse(field, j.get<std::string>());
      } catch (const std::exception&) {
        Fail(path, "expected a rational \"a\" or \"a/b\"");
      }
    }
    Fail(path, "expected an integer or a rational string");
  }
  const std::string range = "expected an integer in [0, " + std::to_string(field.modulus()) + ")";
  if (!j.is_number_integer()) Fail(path, range);
  const std::int64_t v = j.get<std::int64_t>();
  if (v < 0 || static_cast<std::uint64_t>(v) >= field.modulus()) Fail(path, range);
  return Scalar(field, static_cast<long>(v));
}

Json ScalarToJson(const Scalar& s) {
  if (!s.field().is_rational()) return Json(static_cast<std::int64_t>(s.residue()));
  const mpq_class& q = s.rational();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) {
    return Json(static_cast<std::int64_t>(q.get_num().get_si()));
  }
  return Json(q.get_str());
}

IFCertificate IFFromJson(const Json& j, const std::string& path) {
  const std::string kind_path = path.empty() ? "kind" : path + ".kind";
  const Json& kind = Field(j, path, "kind");
  if (kind != "inductive") Fail(kind_path, "expected \"inductive\"");
  const std::string arr_path = path.empty() ? "arrangement" : path + ".arrangement";
  Arrangement a = [&] {
    try {
      return ArrangementFromJson(Field(j, path, "arrangement"));
    } catch (const JsonFormatError& e) {
      throw JsonFormatError(arr_path + "." + e.what());
    }
  }();
  IFCertificate cert{std::move(a), {}};
  const std::string steps_path = path.empty() ? "steps" : path + ".steps";
  const Json& steps = Field(j, path, "steps");
  if (!steps.is_array()) Fail(steps_path, "expected an array");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string sp = steps_path + "[" + std::to_string(i) + "]";
    const Json& s = steps[i];
    IFStep step;
    step.hyperplane = IntFromJson(Field(s, sp, "hyperplane"), sp + ".hyperplane");
    step.chi_restriction =
        PolyFromJson(Field(s, sp, "chi_restriction"), sp + ".chi_restriction");
    step.chi_deletion = PolyFromJson(Field(s, sp, "chi_deletion"), sp + ".chi_deletion");
    const Json& nested = Field(s, sp, "restriction");
    if (!nested.is_null()) {
      step.restriction =
          std::make_shared<IFCertificate>(IFFromJson(nested, sp + ".restriction"));
    }
    cert.steps.push_back(std::move(step));
  }
  return cert;
}

}  // namespace

Json ArrangementToJson(const Arrangement& a) {
  Json j;
  if (a.field().is_rational()) {
    j["field"] = "Q";
  } else {
    j["field"] = Json{{"Fp", a.field().modulus()}};
  }
  j["dim"] = a.dim();
  Json rows = Json::array();
  for (const Vector& v : a.hyperplanes()) {
    Json row = Json::array();
    for (const Scalar& s : v) row.push_back(ScalarToJson(s));
    rows.push_back(std::move(row));
  }
  j["hyperplanes"] = std::move(rows);
  return j;
}

Arrangement ArrangementFromJson(const Json& j) {
  const Json& field_json = Field(j, "", "field");
  FieldSpec field = FieldSpec::Rationals();
  if (field_json.is_string()) {
    if (field_json != "Q") Fail("field", "expected \"Q\" or {\"Fp\": p}");
  } else if (field_json.is_object()) {
    const Json& p = Field(field_json, "field", "Fp");
    if (!p.is_number_unsigned() && !p.is_number_integer()) Fail("field.Fp", "expected a prime");
    try {
      field = FieldSpec::Prime(p.get<std::uint64_t>());
    } catch (const std::exception& e) {
      Fail("field.Fp", e.what());
    }
  } else {
    Fail("field", "expected \"Q\" or {\"Fp\": p}");
  }
  const int dim = IntFromJson(Field(j, "", "dim"), "dim");
  if (dim < 1) Fail("dim", "must be >= 1");
  const Json& rows = Field(j, "", "hyperplanes");
  if (!rows.is_array()) Fail("hyperplanes", "expected an array");
  std::vector<Vector> covectors;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string rp = "hyperplanes[" + std::to_string(i) + "]";
    if (!rows[i].is_array()) Fail(rp, "expected an array");
    if (static_cast<int>(rows[i].size()) != dim) {
      Fail(rp, "has length " + std::to_string(rows[i].size()) + ", expected " +
                   std::to_string(dim));
    }
    Vector v;
    for (std::size_t c = 0; c < rows[i].size(); ++c) {
      v.push_back(ScalarFromJson(field, rows[i][c], rp + "[" + std::to_string(c) + "]"));
    }
    covectors.push_back(std::move(v));
  }
  try {
    return Arrangement::Make(field, dim, covectors);
  } catch (const std::invalid_argument& e) {
    Fail("hyperplanes", e.what());
  }
}

Json PolyToJson(const IntPoly& p) {
  Json out = Json::array();
  for (const mpz_class& c : p.coefficients()) out.push_back(BigToJson(c));
  return out;
}

IntPoly PolyFromJson(const Json& j, const std::string& path) {
  if (!j.is_array()) Fail(path, "expected an array of coefficients");
  std::vector<mpz_class> coeffs;
  for (std::size_t i = 0; i < j.size(); ++i) {
    coeffs.push_back(BigFromJson(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return IntPoly(std::move(coeffs));
}

Json FlagToJson(const DivisionalFlag& flag) {
  Json j;
  j["kind"] = "divisional-flag";
  Json flats = Json::array();
  for (const auto& f : flag.flats) flats.push_back(IntListToJson(f));
  j["flats"] = std::move(flats);
  Json polys = Json::array();
  for (const IntPoly& p : flag.charpolys) polys.push_back(PolyToJson(p));
  j["charpolys"] = std::move(polys);
  if (flag.exponents) {
    Json e = Json::array();
    for (std::int64_t x : *flag.exponents) e.push_back(x);
    j["exponents"] = std::move(e);
  } else {
    j["exponents"] = nullptr;
  }
  return j;
}

DivisionalFlag FlagFromJson(const Json& j) {
  const Json& kind = Field(j, "", "kind");
  if (kind != "divisional-flag") Fail("kind", "expected \"divisional-flag\"");
  DivisionalFlag flag;
  const Json& flats = Field(j, "", "flats");
  if (!flats.is_array()) Fail("flats", "expected an array");
  for (std::size_t i = 0; i < flats.size(); ++i) {
    flag.flats.push_back(IntListFromJson(flats[i], "flats[" + std::to_string(i) + "]"));
  }
  const Json& polys = Field(j, "", "charpolys");
  if (!polys.is_array()) Fail("charpolys", "expected an array");
  for (std::size_t i = 0; i < polys.size(); ++i) {
    flag.charpolys.push_back(PolyFromJson(polys[i], "charpolys[" + std::to_string(i) + "]"));
  }
  if (j.contains("exponents") && !j["exponents"].is_null()) {
    const Json& e = j["exponents"];
    if (!e.is_array()) Fail("exponents", "expected an array or null");
    std::vector<std::int64_t> exps;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i].is_number_integer()) Fail("exponents[" + std::to_string(i) + "]", "expected an integer");
      exps.push_back(e[i].get<std::int64_t>());
    }
    flag.exponents = std::move(exps);
  }
  return flag;
}

Json IFCertificateToJson(const IFCertificate& cert) {
  Json j;
  j["kind"] = "inductive";
  j["arrangement"] = ArrangementToJson(cert.arrangement);
  Json steps = Json::array();
  for (const IFStep& s : cert.steps) {
    Json step;
    step["hyperplane"] = s.hyperplane;
    step["chi_restriction"] = PolyToJson(s.chi_restriction);
    step["chi_deletion"] = PolyToJson(s.chi_deletion);
    step["restriction"] = s.restriction ? IFCertificateToJson(*s.restriction) : Json(nullptr);
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  return j;
}

IFCertificate IFCertificateFromJson(const Json& j) { return IFFromJson(j, ""); }

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw JsonFormatError(path + ": not valid JSON (" + e.what() + ")");
  }
}

void WriteJsonFile(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
  if (!out) throw std::runtime_error("error writing " + path);
}

}  // namespace divflag
