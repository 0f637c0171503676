#pragma once

#include <optional>
#include <string_view>

#include "powsum/modular.hpp"
#include "powsum/natural.hpp"

namespace powsum {

enum class Claim { Fermat, Theorem1, HermiteBachmann, PascalIdentity };

// Short stable name used in CLI records: "fermat", "theorem1", "hb", "pascal".
std::string_view claim_name(Claim claim) noexcept;

// Verdict record for one checked claim instance.
//
// Congruence claims (Fermat, Theorem1, HermiteBachmann) carry modulus and
// expected residue, and holds == (lhs mod modulus == expected.value()).
// The exact identity claim (PascalIdentity) has no modulus; it carries the
// exact right-hand side instead and holds == (lhs == rhs).
struct CongruenceReport {
    Claim claim;
    Natural lhs;                      // computed left-hand value
    std::optional<Natural> rhs;       // exact right-hand side (identity claims)
    std::optional<Modulus> modulus;   // congruence modulus (congruence claims)
    std::optional<Residue> expected;  // expected residue (congruence claims)
    bool holds = false;
};

}  // namespace powsum
