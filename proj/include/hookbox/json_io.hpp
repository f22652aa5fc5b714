// Stable JSON shapes. Integer coefficients travel as decimal strings.
#pragma once

#include <json.hpp>

#include "hookbox/factor_bag.hpp"
#include "hookbox/identities.hpp"
#include "hookbox/symfunc.hpp"

namespace hookbox {

using Json = nlohmann::ordered_json;

// {"terms":[{"q":a,"t":b,"c":"<decimal>"}, ...]}
Json to_json(const IntPoly& p);
IntPoly intpoly_from_json(const Json& j);

// {"num":[[a,b], ...], "den":[[a,b], ...]}
Json to_json(const FactorBag& bag);
FactorBag factor_bag_from_json(const Json& j);

// {"num":<IntPoly>, "den":<IntPoly>}
Json to_json(const QTFraction& f);
QTFraction fraction_from_json(const Json& j);

/// "175" or "-3/4".
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Partition& lambda);
Partition partition_from_json(const Json& j);

Json to_json(const IdentityReport& report);

// {"degree":d, "basis":"monomial", "coeffs":[{"mu":[...], "num":..., "den":...}]}
Json to_json(const SymFunc& f);
SymFunc symfunc_from_json(const Json& j);

Json to_json(const EllipticTable& table);
Json to_json(const Completion& completion);

}  // namespace hookbox
