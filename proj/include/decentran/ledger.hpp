#pragma once

#include "decentran/codec.hpp"
#include "decentran/identity.hpp"
#include "decentran/time.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace decentran::ledger {

using identity::BcAdd;

enum class TxKind : std::uint8_t {
    IdentityRegister = 0,
    MobilityUpdate = 1,
    PolicySet = 2,
    Payload = 3,
};

struct Transaction {
    TxKind kind = TxKind::Payload;
    BcAdd sender;
    Bytes body;
    std::uint64_t nonce = 0;
    Bytes signature;
    SimTime submit_time = 0;

    // Bytes the sender signs; also the preimage of the transaction id, so
    // the id is stable across resubmissions (submit_time is excluded).
    Bytes signing_bytes() const;
    Bytes id() const;

    void encode(codec::Writer& w) const;
    static Transaction decode(codec::Reader& r);
};

Transaction make_signed_tx(TxKind kind, const identity::IdentityBundle& sender, Bytes body,
                           std::uint64_t nonce, SimTime submit_time);

// Transaction bodies.
struct IdentityRegisterBody {
    Bytes public_key;

    Bytes encode() const;
    static std::optional<IdentityRegisterBody> decode(const Bytes& body);
};

struct MobilityUpdateBody {
    std::uint32_t gnb_id = 0;
    std::uint32_t cell_id = 0;
    std::uint64_t sequence = 0;

    Bytes encode() const;
    static std::optional<MobilityUpdateBody> decode(const Bytes& body);
};

struct PolicySetBody {
    std::uint32_t flags = 0;

    Bytes encode() const;
    static std::optional<PolicySetBody> decode(const Bytes& body);
};

struct Block {
    std::uint64_t height = 0;
    Bytes prev_hash;
    std::vector<Transaction> tx_list;
    std::uint32_t proposer = 0;
    SimTime commit_time = 0;
    Bytes block_hash;

    // Canonical bytes of every field except block_hash.
    Bytes hash_preimage() const;
    Bytes compute_hash() const;
    void seal() { block_hash = compute_hash(); }

    void encode(codec::Writer& w) const;
    static Block decode(codec::Reader& r);
    Bytes encode_bytes() const;
};

inline const Bytes kGenesisPrevHash = Bytes(32, 0);

struct RegistrationRecord {
    Bytes public_key;
    std::uint64_t registered_height = 0;
    std::uint64_t last_nonce = 0;

    bool operator==(const RegistrationRecord&) const = default;
};

struct MobilityRecord {
    BcAdd ue;
    std::uint32_t serving_gnb = 0;
    std::uint32_t cell_id = 0;
    std::uint64_t sequence = 0;
    SimTime updated_at = 0;

    bool operator==(const MobilityRecord&) const = default;
};

// Deterministic contract state: the left-fold of apply_block over the
// committed chain. Maps are ordered so snapshots serialize canonically.
struct LedgerState {
    std::map<BcAdd, RegistrationRecord> identity_registry;
    std::map<BcAdd, MobilityRecord> mobility_registry;
    std::map<BcAdd, std::uint32_t> policy_table;
    std::uint64_t chain_height = 0;
    Bytes head_hash = kGenesisPrevHash;

    Bytes encode() const;
    Bytes digest() const;

    bool operator==(const LedgerState&) const = default;
};

enum class TxVerdict {
    Ok,
    BadSignature,
    BadNonce,
    AlreadyRegistered,
    NotRegistered,
    BadBody,
    SequenceConflict,
};

TxVerdict validate_transaction_verdict(const Transaction& tx, const LedgerState& state);

inline bool validate_transaction(const Transaction& tx, const LedgerState& state) {
    return validate_transaction_verdict(tx, state) == TxVerdict::Ok;
}

// Pure fold step. Invalid transactions inside a committed block are skipped;
// applied[i] reports the verdict per transaction when non-null. Throws
// chain-break when the block does not chain onto the state head.
LedgerState apply_block(const LedgerState& state, const Block& block,
                        std::vector<bool>* applied = nullptr);

bool verify_chain(const std::vector<Block>& blocks);

// Committed chain plus the folded state; the replica every full node keeps.
struct Replica {
    std::vector<Block> blocks;
    LedgerState state;

    // Returns per-tx applied flags.
    std::vector<bool> append(const Block& block);

    const Block* block_at(std::uint64_t height) const;
};

// Chain dump file format: length-prefixed concatenation of encoded blocks.
Bytes encode_chain(const std::vector<Block>& blocks);
std::vector<Block> decode_chain(const Bytes& data);
void dump_chain(const std::vector<Block>& blocks, const std::string& path);
std::vector<Block> load_chain(const std::string& path);

} // namespace decentran::ledger
