#include "decentran/identity.hpp"

#include "decentran/codec.hpp"
#include "decentran/errors.hpp"

namespace decentran::identity {

namespace {

// Domain-separation tags for the seed chain. The "anon" variants are used
// when no RealId is attached; they share no key material with the regulated
// chain, so an anonymous bundle can never verify under someone's RealId.
const char* kTagSeed = "bcadd-seed:v1";
const char* kTagRotate = "bcadd-rotate:v1";
const char* kTagSeedAnon = "bcadd-seed-anon:v1";
const char* kTagRotateAnon = "bcadd-rotate-anon:v1";
const char* kTagAppId = "appid:v1";

Bytes tagged(const char* tag, const Bytes& data) {
    Bytes out = str_bytes(tag);
    out.insert(out.end(), data.begin(), data.end());
    return out;
}

Bytes initial_chain_seed(const Bytes& user_seed, const std::optional<RealId>& real_id) {
    if (real_id)
        return crypto::hmac_sha256(real_id->value, tagged(kTagSeed, user_seed));
    return crypto::sha256(tagged(kTagSeedAnon, user_seed));
}

Bytes next_chain_seed(const Bytes& seed, const std::optional<RealId>& real_id) {
    if (real_id)
        return crypto::hmac_sha256(real_id->value, tagged(kTagRotate, seed));
    return crypto::sha256(tagged(kTagRotateAnon, seed));
}

// A derivation chain is bounded; anything longer is a malformed transcript,
// not a plausible rotation history.
constexpr std::uint64_t kMaxRotations = 1u << 20;

} // namespace

IdentityBundle generate_identity(const Bytes& seed, const std::optional<RealId>& real_id,
                                 SimTime now, SimDuration slot_length) {
    if (seed.empty())
        fail(Errc::InvalidArgument, "identity seed must be non-empty");
    IdentityBundle b;
    b.user_seed = seed;
    b.real_id = real_id;
    b.chain_seed = initial_chain_seed(seed, real_id);
    b.keypair = crypto::keypair_from_seed(b.chain_seed);
    b.bcadd = derive_bcadd(b.keypair.public_key);
    b.rotation_epoch = 0;
    b.bcadd_valid_from = now;
    b.bcadd_slot_length = slot_length;
    return b;
}

BcAdd derive_bcadd(const Bytes& public_key) {
    if (public_key.size() != crypto::kPublicKeySize)
        fail(Errc::MalformedKey, "public key must be 32 bytes");
    return BcAdd{crypto::sha256(public_key)};
}

IdentityBundle rotate_bcadd(const IdentityBundle& bundle, SimTime now) {
    if (now < bundle.bcadd_valid_from + bundle.bcadd_slot_length)
        fail(Errc::RotationTooEarly, "bcadd slot has not elapsed");
    IdentityBundle next = bundle;
    next.chain_seed = next_chain_seed(bundle.chain_seed, bundle.real_id);
    next.keypair = crypto::keypair_from_seed(next.chain_seed);
    next.bcadd = derive_bcadd(next.keypair.public_key);
    next.prev_bcadd = bundle.bcadd;
    next.rotation_epoch = bundle.rotation_epoch + 1;
    next.bcadd_valid_from = now;
    next.app_ids.clear();
    return next;
}

AppId derive_app_id(const IdentityBundle& bundle, const Bytes& private_params,
                    std::uint64_t epoch, SimTime now) {
    if (bundle.stale(now))
        fail(Errc::StaleIdentity, "bcadd slot has expired; rotate first");
    codec::Writer w;
    w.raw(str_bytes(kTagAppId));
    w.bytes(bundle.bcadd.value);
    w.u64(epoch);
    return AppId{crypto::hmac_sha256(private_params, w.out()), epoch};
}

Bytes make_regulatory_proof(const IdentityBundle& bundle) {
    codec::Writer w;
    w.bytes(bundle.user_seed);
    w.u64(bundle.rotation_epoch);
    return w.take();
}

bool verify_regulatory_derivation(const RealId& real_id, const BcAdd& bcadd, const Bytes& proof) {
    Bytes user_seed;
    std::uint64_t epoch = 0;
    try {
        codec::Reader r(proof);
        user_seed = r.bytes();
        epoch = r.u64();
        r.expect_done();
    } catch (const Error&) {
        fail(Errc::MalformedProof, "regulatory proof does not decode");
    }
    if (user_seed.empty() || epoch > kMaxRotations)
        fail(Errc::MalformedProof, "regulatory proof out of range");

    std::optional<RealId> rid = real_id;
    Bytes seed = initial_chain_seed(user_seed, rid);
    for (std::uint64_t i = 0; i < epoch; ++i)
        seed = next_chain_seed(seed, rid);
    crypto::KeyPair kp = crypto::keypair_from_seed(seed);
    return derive_bcadd(kp.public_key) == bcadd;
}

} // namespace decentran::identity
