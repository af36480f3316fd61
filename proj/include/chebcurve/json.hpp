#pragma once

// JSON encodings of the library's values. Keys keep insertion order so that
// reports are byte-stable.

#include <json.hpp>

#include "chebcurve/autgroup.hpp"
#include "chebcurve/plane_curve.hpp"

namespace chebcurve::json {

using Json = nlohmann::ordered_json;

inline Json field(const Field& f) {
  Json j;
  j["p"] = f->p();
  j["m"] = f->m();
  j["defining_poly"] = f->defining_poly();
  return j;
}

/// An integer in a prime field, else the coordinate list (low first).
inline Json element(const FieldElement& e) {
  if (e.field()->m() == 1) return e.constant_term();
  return std::vector<std::uint32_t>(e.coords().begin(), e.coords().end());
}

inline Json coefficients(const Poly& f) {
  Json a = Json::array();
  for (const auto& c : f.coeffs()) a.push_back(element(c));
  return a;
}

inline Json poly(const Poly& f) {
  Json j;
  j["field"] = field(f.field());
  j["coeffs"] = coefficients(f);
  return j;
}

inline Json matrix(const Mat2& m) { return Json::array({Json::array({element(m.a), element(m.b)}), Json::array({element(m.c), element(m.d)})}); }

inline Json moebius(const Moebius& mu) { return matrix(mu.matrix()); }

inline Json point(const ProjPoint2& P) { return Json::array({element(P.X()), element(P.Y()), element(P.Z())}); }

inline Json fingerprint(const GroupFingerprint& fp) {
  Json j;
  j["order"] = fp.order;
  j["label"] = fp.label;
  j["abelian"] = fp.abelian;
  j["element_orders"] = fp.element_orders;
  return j;
}

inline Json automorphism(const CurveAutomorphism& a) {
  Json j;
  const auto [mu, lam] = a.canonical();
  j["field"] = field(a.field());
  j["moebius"] = moebius(mu);
  j["lambda"] = element(lam);
  j["y_weight"] = a.y_weight;
  return j;
}

inline Json verdict(const MaximalityVerdict& v) {
  Json j;
  j["q"] = v.q;
  j["genus"] = v.genus;
  j["bound"] = v.hasse_weil_bound;
  j["criterion"] = v.criterion ? Json(*v.criterion) : Json(nullptr);
  j["criterion_is_iff"] = v.criterion_is_iff;
  j["count"] = v.count ? Json(*v.count) : Json(nullptr);
  j["criterion_only"] = v.criterion_only;
  j["maximal"] = v.maximal();
  return j;
}

}  // namespace chebcurve::json
