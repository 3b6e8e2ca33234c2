#pragma once

#include <nlohmann/json.hpp>

#include "negbeta/gaps.hpp"
#include "negbeta/spectra.hpp"
#include "negbeta/words.hpp"
#include "negbeta/yrrap.hpp"

namespace negbeta {

using Json = nlohmann::json;

// Coefficient strings "p/q", lowest degree first.
Json to_json(const RationalPoly& p);
RationalPoly poly_from_json(const Json& j);

Json to_json(const RationalBracket& b);
Json to_json(const NumberField& field);
NumberField field_from_json(const Json& j);

Json to_json(const Base& base);
Json to_json(const Value& v, int digits = 20);
Json to_json(const std::optional<Period>& p);

// {beta, digits, points, period}; exact points as "a + b*beta" strings,
// numeric ones as decimals.
Json to_json(const OrbitRecord& orbit, int digits = 20);

Json to_json(const IdentityResult& r);
Json to_json(const SpectralIndex& s);
Json to_json(const OrbitInterval& iv, int digits = 20);
Json to_json(const GapStructure& s, int digits = 20);
Json to_json(const TransitionMatrix& m);
Json to_json(const ParryResult& r);

}  // namespace negbeta
