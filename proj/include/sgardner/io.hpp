#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "sgardner/verify.hpp"

namespace sgardner::io {

using Json = nlohmann::json;

// [{"mask": m, "re": x, "im": y}, ...]
Json to_json(const Grassmann& a);
Grassmann grassmann_from_json(const Json& j, unsigned num_generators);

// {"generators": n, "frame": "XT"|"xt", "terms": [{"xpow", "tpow", "k": [re, im],
//  "w": [re, im], "coeff": [...]}]}
Json to_json(const SuperPoly& a, Frame frame);
SuperPoly superpoly_from_json(const Json& j, Frame* frame = nullptr);

// {"regime", "sigma", "kind", "entries": [{"k", "phase", "fermion"}]}
Json to_json(const SolitonSpec& spec);
SolitonSpec spec_from_json(const Json& j);

// Superpoly documents of g and f plus regime/frame/sigma/prefactor and the
// spec the pair was built from.
Json to_json(const TauPair& tau);
TauPair tau_from_json(const Json& j);

// {"equation", "frame", "max_abs", "at": {...}, "tol", "pass"}
Json to_json(const ResidualReport& r);
Json to_json(const IdentityReport& r);
Json to_json(const LongwaveTable& t);
Json to_json(const AsymptoticReport& r);

// Header X,T,monomial,re,im; rows monomial-major, then T, then X; 17
// significant digits.
void write_csv(std::ostream& os, const FieldSample& sample);

// printf %.17g
std::string format_double(double v);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

} // namespace sgardner::io
