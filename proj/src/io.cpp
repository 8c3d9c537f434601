#include "sgardner/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

namespace sgardner::io {

namespace {

Json complex_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) throw FormatError(std::string(what) + ": expected [re, im]");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

// nlohmann errors become FormatError with the caller's context.
template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

Json point_json(const Point& p) { return Json{{"x", p.x}, {"t", p.t}}; }

} // namespace

Json to_json(const Grassmann& a) {
  Json out = Json::array();
  for (const auto& t : a.terms()) {
    out.push_back({{"mask", t.mask}, {"re", t.coeff.real()}, {"im", t.coeff.imag()}});
  }
  return out;
}

Grassmann grassmann_from_json(const Json& j, unsigned num_generators) {
  return guarded("grassmann element", [&] {
    if (!j.is_array()) throw FormatError("grassmann element: expected an array of {mask, re, im}");
    std::vector<Grassmann::Term> terms;
    for (const auto& t : j) {
      terms.push_back({t.at("mask").get<Mask>(), Complex(t.at("re").get<double>(), t.at("im").get<double>())});
    }
    return Grassmann::from_terms(num_generators, std::move(terms));
  });
}

Json to_json(const SuperPoly& a, Frame frame) {
  Json terms = Json::array();
  for (const auto& t : a.terms()) {
    terms.push_back({{"xpow", t.xpow},
                     {"tpow", t.tpow},
                     {"k", complex_json(t.k)},
                     {"w", complex_json(t.w)},
                     {"coeff", to_json(t.coeff)}});
  }
  return Json{{"generators", a.num_generators()}, {"frame", std::string(to_string(frame))}, {"terms", terms}};
}

SuperPoly superpoly_from_json(const Json& j, Frame* frame) {
  return guarded("superpoly", [&] {
    const unsigned n = j.at("generators").get<unsigned>();
    if (n == 0 || n > kMaxGenerators) throw FormatError("superpoly: generator count out of range");
    if (frame) *frame = parse_frame(j.at("frame").get<std::string>());
    std::vector<SuperPolyTerm> terms;
    for (const auto& t : j.at("terms")) {
      terms.push_back({t.at("xpow").get<unsigned>(), t.at("tpow").get<unsigned>(), complex_from(t.at("k"), "k"),
                       complex_from(t.at("w"), "w"), grassmann_from_json(t.at("coeff"), n)});
    }
    return SuperPoly::from_terms(n, std::move(terms));
  });
}

Json to_json(const SolitonSpec& spec) {
  Json entries = Json::array();
  for (const auto& e : spec.entries) entries.push_back({{"k", e.k}, {"phase", e.phase}, {"fermion", e.fermion}});
  return Json{{"regime", std::string(to_string(spec.regime))},
              {"sigma", spec.sigma},
              {"kind", std::string(to_string(spec.kind))},
              {"entries", entries}};
}

SolitonSpec spec_from_json(const Json& j) {
  return guarded("soliton spec", [&] {
    SolitonSpec spec;
    spec.regime = parse_regime(j.at("regime").get<std::string>());
    spec.sigma = j.at("sigma").get<double>();
    spec.kind = j.contains("kind") ? parse_kind(j.at("kind").get<std::string>()) : Kind::soliton;
    if (j.contains("entries")) {
      for (const auto& e : j.at("entries")) {
        SolitonEntry entry;
        entry.k = e.at("k").get<double>();
        entry.phase = e.value("phase", 0.0);
        entry.fermion = e.value("fermion", true);
        spec.entries.push_back(entry);
      }
    }
    return spec;
  });
}

Json to_json(const TauPair& tau) {
  Json j{{"regime", std::string(to_string(tau.regime))},
         {"frame", std::string(to_string(tau.frame))},
         {"sigma", tau.sigma},
         {"prefactor", complex_json(tau.prefactor)},
         {"g", to_json(tau.g, tau.frame)},
         {"f", to_json(tau.f, tau.frame)}};
  if (tau.spec) j["spec"] = to_json(*tau.spec);
  return j;
}

TauPair tau_from_json(const Json& j) {
  return guarded("tau pair", [&] {
    TauPair tau;
    tau.regime = parse_regime(j.at("regime").get<std::string>());
    tau.frame = parse_frame(j.at("frame").get<std::string>());
    tau.sigma = j.at("sigma").get<double>();
    tau.prefactor = j.contains("prefactor") ? complex_from(j.at("prefactor"), "prefactor")
                                            : superfield_prefactor(tau.regime);
    Frame gf = tau.frame;
    Frame ff = tau.frame;
    tau.g = superpoly_from_json(j.at("g"), &gf);
    tau.f = superpoly_from_json(j.at("f"), &ff);
    if (gf != tau.frame || ff != tau.frame) throw FormatError("tau pair: g/f frame differs from the pair's frame");
    if (tau.g.num_generators() != tau.f.num_generators()) {
      throw FormatError("tau pair: g and f have different generator counts");
    }
    if (j.contains("spec")) tau.spec = spec_from_json(j.at("spec"));
    return tau;
  });
}

Json to_json(const ResidualReport& r) {
  Json at = Json::object();
  if (r.term) {
    at["monomial"] = monomial_name(r.term->mask);
    at["mask"] = r.term->mask;
    at["xpow"] = r.term->xpow;
    at["tpow"] = r.term->tpow;
    at["k"] = complex_json(r.term->k);
    at["w"] = complex_json(r.term->w);
  }
  if (r.point) {
    at["x"] = r.point->x;
    at["t"] = r.point->t;
    at["monomial"] = monomial_name(r.mask);
    at["mask"] = r.mask;
  }
  Json j{{"equation", r.equation}, {"frame", std::string(to_string(r.frame))}, {"max_abs", r.max_abs},
         {"at", at},           {"tol", r.tol},                                {"pass", r.pass}};
  if (r.point || !r.skipped.empty()) {
    j["points_checked"] = r.points_checked;
    Json skipped = Json::array();
    for (const auto& p : r.skipped) skipped.push_back(point_json(p));
    j["skipped"] = skipped;
  }
  return j;
}

Json to_json(const IdentityReport& r) {
  Json trials = Json::array();
  for (const auto& t : r.trials) {
    trials.push_back({{"cross_identity", t.cross_identity},
                      {"pair_forms", t.pair_forms},
                      {"unit_forms", t.unit_forms},
                      {"even_powers", t.even_powers},
                      {"pass", t.pass}});
  }
  return Json{{"equation", "identities"}, {"seed", r.seed},         {"tol", r.tol},
              {"passed", r.passed},       {"total", r.trials.size()}, {"max_abs", r.max_residual},
              {"pass", r.passed == r.trials.size()}, {"trials", trials}};
}

Json to_json(const LongwaveTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    rows.push_back({{"eps", row.eps}, {"max_deviation", row.max_deviation}, {"ratio", row.ratio}, {"order", row.order}});
  }
  return Json{{"equation", "longwave"},
              {"sigma", t.sigma},
              {"k0", t.k0},
              {"grid", {{"xmin", t.grid.xmin}, {"xmax", t.grid.xmax}, {"nx", t.grid.nx},
                        {"tmin", t.grid.tmin}, {"tmax", t.grid.tmax}, {"nt", t.grid.nt}}},
              {"rows", rows},
              {"min_order", t.min_order}};
}

Json to_json(const AsymptoticReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j{{"t", row.t},
           {"soliton_frame_deviation", row.soliton_frame_deviation},
           {"rational_frame_deviation", row.rational_frame_deviation}};
    if (row.recovered_shift) {
      j["recovered_shift"] = to_json(*row.recovered_shift);
      j["shift_deviation"] = row.shift_deviation;
    }
    rows.push_back(j);
  }
  return Json{{"equation", "asymptotics"},
              {"sigma", r.sigma},
              {"k10", r.k10},
              {"k2", r.k2},
              {"expected_shift", to_json(r.expected_shift)},
              {"tol", r.tol},
              {"soliton_frame_pass", r.soliton_frame_pass},
              {"rational_frame_pass", r.rational_frame_pass},
              {"rows", rows}};
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const FieldSample& sample) {
  os << "X,T,monomial,re,im\n";
  const Grid& g = sample.grid;
  for (std::size_t m = 0; m < sample.monomials.size(); ++m) {
    const std::string name = monomial_name(sample.monomials[m]);
    for (std::size_t j = 0; j < g.nt; ++j) {
      for (std::size_t i = 0; i < g.nx; ++i) {
        const Complex v = sample.values[m][j * g.nx + i];
        os << format_double(g.x(i)) << ',' << format_double(g.t(j)) << ',' << name << ',' << format_double(v.real())
           << ',' << format_double(v.imag()) << '\n';
      }
    }
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << text;
  if (!out) throw FormatError("write failed for " + path.string());
}

} // namespace sgardner::io
