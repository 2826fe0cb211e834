#include "decentran/crypto.hpp"

#include "decentran/errors.hpp"

#include <sodium.h>

#include <cstring>

namespace decentran::crypto {

void init() {
    static const int rc = sodium_init();
    if (rc < 0)
        fail(Errc::IoError, "libsodium failed to initialize");
}

Bytes sha256(const Bytes& data) {
    init();
    Bytes out(crypto_hash_sha256_BYTES);
    crypto_hash_sha256(out.data(), data.data(), data.size());
    return out;
}

Bytes hmac_sha256(const Bytes& key, const Bytes& data) {
    init();
    Bytes out(crypto_auth_hmacsha256_BYTES);
    crypto_auth_hmacsha256_state st;
    crypto_auth_hmacsha256_init(&st, key.data(), key.size());
    crypto_auth_hmacsha256_update(&st, data.data(), data.size());
    crypto_auth_hmacsha256_final(&st, out.data());
    return out;
}

KeyPair keypair_from_seed(const Bytes& seed32) {
    init();
    if (seed32.size() != kSeedSize)
        fail(Errc::MalformedKey, "keypair seed must be 32 bytes");
    KeyPair kp;
    kp.public_key.resize(crypto_sign_ed25519_PUBLICKEYBYTES);
    kp.private_key.resize(crypto_sign_ed25519_SECRETKEYBYTES);
    crypto_sign_ed25519_seed_keypair(kp.public_key.data(), kp.private_key.data(), seed32.data());
    return kp;
}

Bytes sign(const KeyPair& signer, const Bytes& message) {
    init();
    if (signer.private_key.size() != kPrivateKeySize)
        fail(Errc::MalformedKey, "private key must be 64 bytes");
    Bytes sig(crypto_sign_ed25519_BYTES);
    crypto_sign_ed25519_detached(sig.data(), nullptr, message.data(), message.size(),
                                 signer.private_key.data());
    return sig;
}

bool verify(const Bytes& public_key, const Bytes& message, const Bytes& signature) {
    init();
    if (public_key.size() != kPublicKeySize || signature.size() != kSignatureSize)
        return false;
    return crypto_sign_ed25519_verify_detached(signature.data(), message.data(), message.size(),
                                               public_key.data()) == 0;
}

Bytes key_agree(const KeyPair& local, const Bytes& peer_public) {
    init();
    if (local.private_key.size() != kPrivateKeySize)
        fail(Errc::MalformedKey, "private key must be 64 bytes");
    if (peer_public.size() != kPublicKeySize)
        fail(Errc::MalformedKey, "peer public key must be 32 bytes");

    unsigned char x_sk[crypto_scalarmult_curve25519_BYTES];
    unsigned char x_pk[crypto_scalarmult_curve25519_BYTES];
    if (crypto_sign_ed25519_sk_to_curve25519(x_sk, local.private_key.data()) != 0)
        fail(Errc::MalformedKey, "private key not convertible to x25519");
    if (crypto_sign_ed25519_pk_to_curve25519(x_pk, peer_public.data()) != 0)
        fail(Errc::MalformedKey, "peer public key not convertible to x25519");

    Bytes shared(crypto_scalarmult_BYTES);
    if (crypto_scalarmult(shared.data(), x_sk, x_pk) != 0)
        fail(Errc::MalformedKey, "x25519 agreement failed");
    sodium_memzero(x_sk, sizeof x_sk);
    return shared;
}

static void seq_nonce(std::uint64_t seq, unsigned char out[crypto_secretbox_NONCEBYTES]) {
    std::memset(out, 0, crypto_secretbox_NONCEBYTES);
    for (int i = 0; i < 8; ++i)
        out[i] = static_cast<unsigned char>(seq >> (8 * i));
}

Bytes seal(const Bytes& key32, std::uint64_t seq, const Bytes& plaintext) {
    init();
    if (key32.size() != crypto_secretbox_KEYBYTES)
        fail(Errc::MalformedKey, "session key must be 32 bytes");
    unsigned char nonce[crypto_secretbox_NONCEBYTES];
    seq_nonce(seq, nonce);
    Bytes out(plaintext.size() + crypto_secretbox_MACBYTES);
    crypto_secretbox_easy(out.data(), plaintext.data(), plaintext.size(), nonce, key32.data());
    return out;
}

std::optional<Bytes> open(const Bytes& key32, std::uint64_t seq, const Bytes& ciphertext) {
    init();
    if (key32.size() != crypto_secretbox_KEYBYTES)
        fail(Errc::MalformedKey, "session key must be 32 bytes");
    if (ciphertext.size() < crypto_secretbox_MACBYTES)
        return std::nullopt;
    unsigned char nonce[crypto_secretbox_NONCEBYTES];
    seq_nonce(seq, nonce);
    Bytes out(ciphertext.size() - crypto_secretbox_MACBYTES);
    if (crypto_secretbox_open_easy(out.data(), ciphertext.data(), ciphertext.size(), nonce,
                                   key32.data()) != 0)
        return std::nullopt;
    return out;
}

} // namespace decentran::crypto
