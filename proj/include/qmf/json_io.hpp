#pragma once

#include "qmf/embeddings.hpp"
#include "qmf/enumeration.hpp"

#include "json.hpp"

#include <array>
#include <string>

namespace qmf {

using json = nlohmann::json;

// Rationals are written as "p/q" strings (plain "p" when integral); numbers
// and strings are both accepted on input.
json to_json(const Rational& q);
Rational rational_from_json(const json& j);

// {"algebra", "coords"} with coords in the order basis.
json to_json(const Comp<Rational>& x);
Comp<Rational> comp_from_json(const json& j, Alg fallback = Alg::theta0);

// {"algebra", "diag", "off"}.  A bare number s stands for s * 1_3, and the
// strings "I" and "E" for the two class representatives over theta0.
json to_json(const RJordan& X);
RJordan jordan_from_json(const json& j, Alg fallback = Alg::theta0);

// {"a", "b", "c", "d"}, optional "algebra" used by shorthand Jordan slots.
json to_json(const RFreud& w);
RFreud freud_from_json(const json& j);

json to_json(const GaussMat& m);
GaussMat gauss_mat_from_json(const json& j);
json to_json(const CDSplit& e);   // {"base", "tail": {"b": [...], "c": [...]}}
CDSplit cd_split_from_json(const json& j);
json to_json(const TitsSplit& e);  // {"base", "tail": [eta1, eta2]}
TitsSplit tits_split_from_json(const json& j);

json to_json(const JordanEnum& r);
json to_json(const WEnum& r);

// "a,b,c,d" with rational entries.
std::array<Rational, 4> parse_quad(const std::string& s);

// Inline JSON, a file path ("@path" or a bare path), "-" for stdin, or the
// class names I and E.
json read_payload(const std::string& arg);

}  // namespace qmf
