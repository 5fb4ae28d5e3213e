#include "logderiv/json_io.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <iomanip>
#include <sstream>

#include "logderiv/errors.hpp"

namespace logderiv {

namespace {

double number_at(const Json& v, const char* what) {
  if (!v.is_number()) throw ParseError(std::string("expected a number for ") + what);
  return v.get<double>();
}

Complex complex_at(const Json& v, const char* what) {
  if (!v.is_array() || v.size() != 2) throw ParseError(std::string("expected [re, im] for ") + what);
  return {number_at(v[0], what), number_at(v[1], what)};
}

Json interval_pair(const Interval& i) { return Json::array({i.lo, i.hi}); }

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

PoleSet pole_set_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("angles"))
    throw ParseError("pole set: expected an object with \"n\" and \"angles\"");
  const Json& n = doc["n"];
  if (!n.is_number_integer() || n.get<long long>() < 1) throw ParseError("pole set: \"n\" must be a positive integer");
  const Json& angles = doc["angles"];
  if (!angles.is_array()) throw ParseError("pole set: \"angles\" must be an array");
  if (angles.size() != n.get<std::size_t>()) throw ParseError("pole set: angle count differs from n");
  std::vector<double> values;
  for (const Json& a : angles) {
    const double v = number_at(a, "angle");
    if (!std::isfinite(v)) throw ParseError("pole set: non-finite angle");
    values.push_back(v);
  }
  return PoleSet(std::move(values), kAngleSnapTolerance);
}

Json to_json(const PoleSet& poles) {
  Json angles = Json::array();
  for (double a : poles.angles()) angles.push_back(a);
  return Json{{"n", poles.size()}, {"angles", angles}};
}

DiskPolynomial disk_polynomial_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("zeros")) throw ParseError("disk polynomial: expected an object with \"zeros\"");
  const Json& zs = doc["zeros"];
  if (!zs.is_array() || zs.empty()) throw ParseError("disk polynomial: \"zeros\" must be a non-empty array");
  std::vector<Complex> zeros;
  for (const Json& z : zs) zeros.push_back(complex_at(z, "zero"));
  const Complex leading = doc.contains("leading") ? complex_at(doc["leading"], "leading") : Complex{1.0, 0.0};
  try {
    return DiskPolynomial(std::move(zeros), leading);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("disk polynomial: ") + e.what());
  }
}

Json to_json(const DiskPolynomial& p) {
  Json zeros = Json::array();
  for (const Complex& z : p.zeros()) zeros.push_back(Json::array({z.real(), z.imag()}));
  return Json{{"leading", Json::array({p.leading().real(), p.leading().imag()})}, {"zeros", zeros}};
}

Json to_json(const IntervalUnion& u) {
  Json pieces = Json::array();
  for (const Interval& i : u.intervals()) pieces.push_back(interval_pair(i));
  return Json{{"intervals", pieces}, {"measure", u.measure()}};
}

IntervalUnion interval_union_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("intervals")) throw ParseError("interval union: expected \"intervals\"");
  std::vector<Interval> pieces;
  for (const Json& p : doc["intervals"]) {
    if (!p.is_array() || p.size() != 2) throw ParseError("interval union: expected [a, b] pairs");
    pieces.push_back({number_at(p[0], "a"), number_at(p[1], "b")});
  }
  try {
    return IntervalUnion(std::move(pieces));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("interval union: ") + e.what());
  }
}

Json to_json(const QuadratureResult& r) {
  Json j{{"divergent", r.divergent}, {"panels", r.panels}, {"function_evals", r.function_evals}};
  if (r.divergent) {
    j["value"] = "inf";
    j["error"] = nullptr;
  } else {
    j["value"] = r.value;
    j["error"] = r.error_estimate;
  }
  return j;
}

Json to_json(const Theorem1Report& r) {
  return Json{{"p", r.p},
              {"n", r.n},
              {"unweighted", to_json(r.unweighted)},
              {"weighted", to_json(r.weighted)},
              {"bound", r.bound},
              {"unweighted_ge_weighted", r.unweighted_ge_weighted},
              {"weighted_ge_bound", r.weighted_ge_bound}};
}

Json to_json(const Certificate& c) {
  Json alpha = Json::array();
  for (const AlphaRow& row : c.alpha_table) alpha.push_back(Json::array({row.alpha, row.plus, row.minus}));
  return Json{{"case", to_string(c.case_tag)},
              {"n", c.n},
              {"m", c.m},
              {"delta", c.delta},
              {"rho", c.rho},
              {"M", c.M},
              {"h_table", c.h_table},
              {"alpha_table", alpha},
              {"witness", to_json(c.witness)},
              {"guarantee", c.guarantee},
              {"guaranteed_measure", c.guaranteed_measure},
              {"near_band_edge", c.near_edge}};
}

Certificate certificate_from_json(const Json& doc) {
  try {
    Certificate c;
    const std::string tag = doc.at("case").get<std::string>();
    if (tag == "Case1Plus") c.case_tag = CaseTag::Case1Plus;
    else if (tag == "Case1Minus") c.case_tag = CaseTag::Case1Minus;
    else if (tag == "Case2") c.case_tag = CaseTag::Case2;
    else throw ParseError("certificate: unknown case tag " + tag);
    c.n = doc.at("n").get<std::size_t>();
    c.m = doc.at("m").get<std::size_t>();
    c.delta = doc.at("delta").get<double>();
    c.rho = doc.at("rho").get<double>();
    c.M = doc.at("M").get<double>();
    c.h_table = doc.at("h_table").get<std::vector<double>>();
    for (const Json& row : doc.at("alpha_table"))
      c.alpha_table.push_back({row.at(0).get<double>(), row.at(1).get<double>(), row.at(2).get<double>()});
    c.witness = interval_union_from_json(doc.at("witness"));
    c.guarantee = doc.at("guarantee").get<double>();
    c.guaranteed_measure = doc.at("guaranteed_measure").get<double>();
    c.near_edge = doc.value("near_band_edge", std::vector<std::size_t>{});
    return c;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
}

Json to_json(const StudyRecord& r) {
  return Json{{"n", r.n},
              {"objective", r.objective.label()},
              {"best_value", r.best_value},
              {"search_value", r.search_value},
              {"best_angles", r.best_angles},
              {"reference_value", r.reference_value},
              {"gap", r.gap},
              {"seeds", r.seeds},
              {"evaluations", r.evaluations},
              {"converged_seeds", r.converged_seeds},
              {"failed_evaluations", r.failed_evaluations},
              {"bound_violations", r.bound_violations}};
}

std::string poles_hash(const PoleSet& poles) {
  std::uint64_t h = 1469598103934665603ULL;
  for (double a : poles.angles()) {
    unsigned char bytes[sizeof(double)];
    std::memcpy(bytes, &a, sizeof(double));
    for (unsigned char b : bytes) {
      h ^= b;
      h *= 1099511628211ULL;
    }
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace logderiv
