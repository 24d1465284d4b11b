#pragma once

// JSON forms of the exact value types. Integers that do not fit in a signed
// 64-bit JSON number are written as decimal strings; readers accept both.

#include <nlohmann/json.hpp>

#include "gtbasis/ballint.hpp"
#include "gtbasis/clifford.hpp"
#include "gtbasis/hseries.hpp"
#include "gtbasis/mvpoly.hpp"
#include "gtbasis/scalar.hpp"

namespace gtbasis {

nlohmann::json integer_to_json(const mpz_class& z);
mpz_class integer_from_json(const nlohmann::json& j);

/// {"dim": m, "terms": [{"blade", "num", "den"[, "inum", "iden"]}]}; the
/// imaginary fields appear only when some coefficient is non-real.
nlohmann::json to_json(const Multivector& mv);
Multivector multivector_from_json(const nlohmann::json& j);

/// {"dim": m, "terms": [{"blade", "re", "im"}]}
nlohmann::json to_json(const MultivectorF& mv);

/// {"m", "ring": "gaussian"|"clifford", "terms": [{"exp", ["blade",] "num", "den", "inum", "iden"}]}
nlohmann::json to_json(const MPoly& p);
MPoly mpoly_from_json(const nlohmann::json& j);

/// {"m", "order", "terms": [{"k": [k_2..k_m], "poly": MPoly}]}
nlohmann::json to_json(const HSeries& s);
HSeries hseries_from_json(const nlohmann::json& j);

/// {"q_num", "q_den", "sqrt_pi_pow"}
nlohmann::json to_json(const PiScaled& v);
PiScaled pi_scaled_from_json(const nlohmann::json& j);

}  // namespace gtbasis
