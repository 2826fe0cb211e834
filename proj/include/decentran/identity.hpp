#pragma once

#include "decentran/bytes.hpp"
#include "decentran/crypto.hpp"
#include "decentran/time.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace decentran::identity {

// Tier-2 identifier: SHA-256 of the entity's current public key. Byte-exact
// equality; ordered so it can key std::map.
struct BcAdd {
    Bytes value;

    auto operator<=>(const BcAdd&) const = default;
};

// Tier-1 identifier. Held only by the owning entity and the regulator; it
// must never be serialized into a transaction, block or wire message.
struct RealId {
    Bytes value;

    bool operator==(const RealId&) const = default;
};

// Tier-3 application-layer identifier, derived from the BCADD with a keyed
// hash so observers can link neither the BCADD nor the private parameters.
struct AppId {
    Bytes value;
    std::uint64_t epoch = 0;

    bool operator==(const AppId&) const = default;
};

struct IdentityBundle {
    crypto::KeyPair keypair;
    BcAdd bcadd;
    std::optional<RealId> real_id;
    std::vector<AppId> app_ids;
    SimTime bcadd_valid_from = 0;
    SimDuration bcadd_slot_length = kDefaultSlotLength;

    // Rotation state. chain_seed is the secret seed the current keypair was
    // derived from; user_seed and rotation_epoch reproduce the derivation
    // chain for the regulator.
    Bytes chain_seed;
    Bytes user_seed;
    std::uint64_t rotation_epoch = 0;
    std::optional<BcAdd> prev_bcadd; // grace-period lookups after rotation

    static constexpr SimDuration kDefaultSlotLength = sim_sec(1000);

    bool stale(SimTime now) const { return now >= bcadd_valid_from + bcadd_slot_length; }
};

// Deterministic identity creation. When real_id is present the key seed
// chain is keyed by it, which is what makes verify_regulatory_derivation
// pass for this bundle and every rotation of it.
IdentityBundle generate_identity(const Bytes& seed, const std::optional<RealId>& real_id,
                                 SimTime now = 0,
                                 SimDuration slot_length = IdentityBundle::kDefaultSlotLength);

// Hash(PK). Throws malformed-key unless the key has the scheme's length.
BcAdd derive_bcadd(const Bytes& public_key);

// New keypair and BCADD once the current slot has elapsed; the old BCADD is
// kept on the bundle for grace-period lookups. Throws rotation-too-early.
IdentityBundle rotate_bcadd(const IdentityBundle& bundle, SimTime now);

// Keyed hash over (bcadd, epoch) with private_params as the key. Pure in its
// inputs. Throws stale-identity when the bundle's slot has expired.
AppId derive_app_id(const IdentityBundle& bundle, const Bytes& private_params,
                    std::uint64_t epoch, SimTime now = 0);

// Proof transcript the owner hands to the regulator: (user_seed,
// rotation_epoch) in canonical encoding. Only someone holding the RealId can
// replay the seed chain, so the proof reveals nothing to anyone else.
Bytes make_regulatory_proof(const IdentityBundle& bundle);

// Regulator-side check that bcadd was produced by a generate/rotate chain
// seeded from real_id. Throws malformed-proof when the transcript does not
// decode.
bool verify_regulatory_derivation(const RealId& real_id, const BcAdd& bcadd, const Bytes& proof);

} // namespace decentran::identity
