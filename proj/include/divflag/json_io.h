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

// JSON encodings.
//
// Arrangement:
//   {"field": "Q" | {"Fp": p}, "dim": n, "hyperplanes": [[c1, ..., cn], ...]}
// Rational entries are integers or strings "a" / "a/b"; F_p entries are
// integers in [0, p).
//
// Polynomial: array of integer coefficients, lowest degree first. Values
// outside the int64 range are written as decimal strings.
//
// Divisional flag certificate:
//   {"kind": "divisional-flag", "flats": [[members], ...],
//    "charpolys": [poly, ...], "exponents": [...] | null}
//
// Inductive certificate:
//   {"kind": "inductive", "arrangement": arrangement,
//    "steps": [{"hyperplane": h, "chi_restriction": poly,
//               "chi_deletion": poly, "restriction": certificate | null}]}

#ifndef DIVFLAG_JSON_IO_H_
#define DIVFLAG_JSON_IO_H_

#include <stdexcept>
#include <string>

#include "divflag/arrangement.h"
#include "divflag/freeness.h"
#include "divflag/poly.h"
#include "json.hpp"

namespace divflag {

using Json = nlohmann::ordered_json;

// Malformed input. The message starts with the path of the offending field,
// e.g. "hyperplanes[2][1]: expected an integer in [0, 7)".
class JsonFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json ArrangementToJson(const Arrangement& a);
Arrangement ArrangementFromJson(const Json& j);

Json PolyToJson(const IntPoly& p);
IntPoly PolyFromJson(const Json& j, const std::string& path);

Json FlagToJson(const DivisionalFlag& flag);
DivisionalFlag FlagFromJson(const Json& j);

Json IFCertificateToJson(const IFCertificate& cert);
IFCertificate IFCertificateFromJson(const Json& j);

// File helpers. Throw std::runtime_error on IO failure and JsonFormatError on
// unparsable text.
Json ReadJsonFile(const std::string& path);
void WriteJsonFile(const std::string& path, const Json& j);

}  // namespace divflag

#endif  // DIVFLAG_JSON_IO_H_
