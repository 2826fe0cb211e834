#pragma once

#include "decentran/bytes.hpp"

#include <cstdint>
#include <optional>

namespace decentran::crypto {

// Fixed primitives for the whole system: Ed25519 signatures, SHA-256
// digests, HMAC-SHA-256 keyed derivation, X25519 agreement (over converted
// Ed25519 keys) and XSalsa20-Poly1305 for payload sealing.
inline constexpr std::size_t kDigestSize = 32;
inline constexpr std::size_t kSeedSize = 32;
inline constexpr std::size_t kPublicKeySize = 32;
inline constexpr std::size_t kPrivateKeySize = 64;
inline constexpr std::size_t kSignatureSize = 64;
inline constexpr std::size_t kSessionKeySize = 32;

// Idempotent; called by every entry point that touches libsodium.
void init();

Bytes sha256(const Bytes& data);
Bytes hmac_sha256(const Bytes& key, const Bytes& data);

struct KeyPair {
    Bytes public_key;  // 32 bytes
    Bytes private_key; // 64 bytes, secret: seed || public half

    bool operator==(const KeyPair&) const = default;
};

// Deterministic: the same 32-byte seed always yields the same pair.
KeyPair keypair_from_seed(const Bytes& seed32);

Bytes sign(const KeyPair& signer, const Bytes& message);
bool verify(const Bytes& public_key, const Bytes& message, const Bytes& signature);

// Diffie-Hellman over the Ed25519 keys mapped to X25519. Symmetric:
// key_agree(a, B.pub) == key_agree(b, A.pub).
Bytes key_agree(const KeyPair& local, const Bytes& peer_public);

// Authenticated symmetric encryption keyed by a 32-byte session key.
// The nonce is derived from the packet sequence number, so a (key, seq)
// pair must never be reused by the caller.
Bytes seal(const Bytes& key32, std::uint64_t seq, const Bytes& plaintext);
std::optional<Bytes> open(const Bytes& key32, std::uint64_t seq, const Bytes& ciphertext);

} // namespace decentran::crypto
