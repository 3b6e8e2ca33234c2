#include "negbeta/serialize.hpp"

#include "negbeta/error.hpp"

namespace negbeta {

Json to_json(const RationalPoly& p) {
  Json out = Json::array();
  for (int i = 0; i <= p.degree(); ++i) out.push_back(to_string(p.coeff(i)));
  return out;
}

RationalPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "polynomial must be an array of coefficient strings");
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(parse_rational(e.get<std::string>()));
  return RationalPoly(std::move(c));
}

Json to_json(const RationalBracket& b) { return Json::array({to_string(b.lo), to_string(b.hi)}); }

Json to_json(const NumberField& field) {
  return {{"min_poly", to_json(field.min_poly())}, {"bracket", to_json(field.bracket())}};
}

NumberField field_from_json(const Json& j) {
  const auto& b = j.at("bracket");
  RationalBracket br{parse_rational(b.at(0).get<std::string>()), parse_rational(b.at(1).get<std::string>())};
  return NumberField::from_poly(poly_from_json(j.at("min_poly")), br);
}

Json to_json(const Base& base) {
  if (base.is_exact()) {
    Json j = to_json(base.field());
    j["approx"] = base.approx();
    return j;
  }
  RealInterval b = base.beta_interval();
  return {{"interval", {to_decimal(b.lo(), 25), to_decimal(b.hi(), 25)}}, {"approx", base.approx()}};
}

Json to_json(const Value& v, int digits) {
  return v.is_exact() ? Json(v.to_string()) : Json(v.to_decimal(digits));
}

Json to_json(const std::optional<Period>& p) {
  if (!p) return nullptr;
  return {{"p", p->preperiod}, {"q", p->period}};
}

Json to_json(const OrbitRecord& orbit, int digits) {
  Json pts = Json::array();
  for (const auto& v : orbit.points) pts.push_back(to_json(v, digits));
  return {{"beta", to_json(orbit.base)}, {"digits", orbit.digits}, {"points", pts}, {"period", to_json(orbit.period)}};
}

Json to_json(const IdentityResult& r) { return {{"identity", r.identity}, {"n", r.n}, {"pass", r.pass}}; }

Json to_json(const SpectralIndex& s) {
  return {{"n", s.n},
          {"chain", s.chain == Chain::kGamma ? "gamma" : "eta"},
          {"bracket", to_json(s.bracket)},
          {"approx", to_double(s.bracket.mid())},
          {"poly", s.poly.to_string()}};
}

Json to_json(const OrbitInterval& iv, int digits) {
  Json j = {{"kind", std::string(1, iv.kind)},
            {"label", iv.label()},
            {"m", iv.level},
            {"k", iv.k},
            {"lo", iv.lo.to_decimal(digits)},
            {"hi", iv.hi.to_decimal(digits)},
            {"lo_open", iv.lo_open},
            {"hi_open", iv.hi_open},
            {"hi_orbit_index", iv.hi_index}};
  j["lo_orbit_index"] = iv.lo_index ? Json(*iv.lo_index) : Json(nullptr);
  if (iv.kind == 'G') j["one_based_label"] = "G_{" + std::to_string(iv.level + 1) + "," + std::to_string(iv.k + 1) + "}";
  if (iv.lo.is_exact()) j["lo_exact"] = iv.lo.to_string();
  if (iv.hi.is_exact()) j["hi_exact"] = iv.hi.to_string();
  return j;
}

Json to_json(const GapStructure& s, int digits) {
  Json gaps = Json::array(), sup = Json::array();
  for (const auto& g : s.gaps) gaps.push_back(to_json(g, digits));
  for (const auto& f : s.supports) sup.push_back(to_json(f, digits));
  return {{"beta", to_json(s.beta)}, {"n", s.n}, {"gap_count", s.gaps.size()}, {"gaps", gaps}, {"supports", sup}};
}

Json to_json(const TransitionMatrix& m) { return m.entries; }

Json to_json(const ParryResult& r) {
  switch (r.kind) {
    case ParryResult::Kind::kAbsent:
      return nullptr;
    case ParryResult::Kind::kFinite:
      return {{"finite", r.finite_n}};
    case ParryResult::Kind::kPeriodic:
      break;
  }
  return {{"p", r.period.preperiod}, {"q", r.period.period}};
}

}  // namespace negbeta
