#pragma once

#include "decentran/codec.hpp"
#include "decentran/ledger.hpp"

#include <cstdint>
#include <optional>

namespace decentran::wire {

// Every frame on the simulated network is an Envelope in canonical encoding:
// u16 kind tag, u32-length-prefixed payload. Payload layouts are fixed per
// message struct below.
enum class MsgKind : std::uint16_t {
    // Ordering service, client-facing.
    ClientSubmit = 1,
    SubmitReply = 2,
    CommitNotify = 3,
    TxGossip = 4,
    CommittedBlock = 5,
    BlockFetchReq = 6,
    BlockFetchResp = 7,

    // Raft-like engine.
    RaftRequestVote = 16,
    RaftVoteReply = 17,
    RaftAppendEntries = 18,
    RaftAppendReply = 19,

    // HotStuff-like engine.
    HsNewView = 32,
    HsProposal = 33,
    HsVote = 34,
    HsQcAnnounce = 35,
    HsDecide = 36,

    // Ledger access tiers.
    RegistryQuery = 48,
    RegistryResp = 49,
    SnapshotReq = 50,
    SnapshotResp = 51,
    RelaySubmit = 52,
    HeaderAnnounce = 53,

    // Mutual authentication.
    AuthHello = 64,
    AuthChallenge = 65,
    AuthResponse = 66,

    // Data plane and UE-side control.
    DataForward = 80,
    UeTxForward = 81,
};

struct Envelope {
    MsgKind kind;
    Bytes payload;

    Bytes encode() const;
    static Envelope decode(const Bytes& frame);
};

template <typename Msg>
Bytes pack(const Msg& msg) {
    codec::Writer w;
    msg.encode(w);
    return Envelope{Msg::kKind, w.take()}.encode();
}

template <typename Msg>
Msg unpack(const Envelope& env) {
    codec::Reader r(env.payload);
    Msg m = Msg::decode(r);
    r.expect_done();
    return m;
}

// --- ordering service ---

struct ClientSubmit {
    static constexpr MsgKind kKind = MsgKind::ClientSubmit;
    ledger::Transaction tx;

    void encode(codec::Writer& w) const;
    static ClientSubmit decode(codec::Reader& r);
};

enum class SubmitStatus : std::uint8_t {
    Accepted = 0,
    Backpressure = 1,
    NotLeader = 2,
    Invalid = 3,
};

struct SubmitReply {
    static constexpr MsgKind kKind = MsgKind::SubmitReply;
    Bytes tx_id;
    SubmitStatus status = SubmitStatus::Accepted;
    std::uint32_t leader_hint = 0xffffffff;

    void encode(codec::Writer& w) const;
    static SubmitReply decode(codec::Reader& r);
};

struct CommitNotify {
    static constexpr MsgKind kKind = MsgKind::CommitNotify;
    Bytes tx_id;
    std::uint64_t height = 0;
    bool applied = true;
    SimTime commit_time = 0;

    void encode(codec::Writer& w) const;
    static CommitNotify decode(codec::Reader& r);
};

struct TxGossip {
    static constexpr MsgKind kKind = MsgKind::TxGossip;
    ledger::Transaction tx;
    std::uint32_t origin_node = 0;

    void encode(codec::Writer& w) const;
    static TxGossip decode(codec::Reader& r);
};

struct CommittedBlock {
    static constexpr MsgKind kKind = MsgKind::CommittedBlock;
    ledger::Block block;

    void encode(codec::Writer& w) const;
    static CommittedBlock decode(codec::Reader& r);
};

struct BlockFetchReq {
    static constexpr MsgKind kKind = MsgKind::BlockFetchReq;
    std::uint64_t from_height = 0;

    void encode(codec::Writer& w) const;
    static BlockFetchReq decode(codec::Reader& r);
};

struct BlockFetchResp {
    static constexpr MsgKind kKind = MsgKind::BlockFetchResp;
    struct Entry {
        ledger::Block block;
        Bytes commit_qc; // encoded QuorumCertificate, empty for CFT engines
    };
    std::vector<Entry> entries;

    void encode(codec::Writer& w) const;
    static BlockFetchResp decode(codec::Reader& r);
};

// --- raft-like ---

struct RaftRequestVote {
    static constexpr MsgKind kKind = MsgKind::RaftRequestVote;
    std::uint64_t term = 0;
    std::uint32_t candidate = 0;
    std::uint64_t last_log_index = 0;
    std::uint64_t last_log_term = 0;

    void encode(codec::Writer& w) const;
    static RaftRequestVote decode(codec::Reader& r);
};

struct RaftVoteReply {
    static constexpr MsgKind kKind = MsgKind::RaftVoteReply;
    std::uint64_t term = 0;
    bool granted = false;
    std::uint32_t voter = 0;

    void encode(codec::Writer& w) const;
    static RaftVoteReply decode(codec::Reader& r);
};

struct RaftAppendEntries {
    static constexpr MsgKind kKind = MsgKind::RaftAppendEntries;
    std::uint64_t term = 0;
    std::uint32_t leader = 0;
    std::uint64_t prev_index = 0;
    std::uint64_t prev_term = 0;
    std::uint64_t leader_commit = 0;
    struct Entry {
        std::uint64_t term = 0;
        ledger::Block block;
    };
    std::vector<Entry> entries;

    void encode(codec::Writer& w) const;
    static RaftAppendEntries decode(codec::Reader& r);
};

struct RaftAppendReply {
    static constexpr MsgKind kKind = MsgKind::RaftAppendReply;
    std::uint64_t term = 0;
    bool success = false;
    std::uint64_t match_index = 0;
    std::uint32_t follower = 0;

    void encode(codec::Writer& w) const;
    static RaftAppendReply decode(codec::Reader& r);
};

// --- hotstuff-like ---

enum class Phase : std::uint8_t { Prepare = 0, PreCommit = 1, Commit = 2 };

struct QuorumCertificate {
    Bytes block_hash;
    std::uint64_t view = 0;
    Phase phase = Phase::Prepare;
    std::vector<std::uint32_t> signer_set; // sorted, distinct
    Bytes aggregate_signature;             // concatenated 64-byte signatures

    static Bytes vote_payload(const Bytes& block_hash, std::uint64_t view, Phase phase);

    void encode(codec::Writer& w) const;
    static QuorumCertificate decode(codec::Reader& r);
    Bytes encode_bytes() const;
    static std::optional<QuorumCertificate> decode_bytes(const Bytes& data);
};

struct HsNewView {
    static constexpr MsgKind kKind = MsgKind::HsNewView;
    std::uint64_t view = 0;
    std::uint32_t sender = 0;
    std::uint64_t committed_height = 0;
    std::optional<QuorumCertificate> prepare_qc;
    std::optional<ledger::Block> prepare_block;

    void encode(codec::Writer& w) const;
    static HsNewView decode(codec::Reader& r);
};

struct HsProposal {
    static constexpr MsgKind kKind = MsgKind::HsProposal;
    std::uint64_t view = 0;
    ledger::Block block;
    std::optional<QuorumCertificate> justify;

    void encode(codec::Writer& w) const;
    static HsProposal decode(codec::Reader& r);
};

struct HsVote {
    static constexpr MsgKind kKind = MsgKind::HsVote;
    std::uint64_t view = 0;
    Phase phase = Phase::Prepare;
    Bytes block_hash;
    std::uint32_t voter = 0;
    Bytes signature;

    void encode(codec::Writer& w) const;
    static HsVote decode(codec::Reader& r);
};

struct HsQcAnnounce {
    static constexpr MsgKind kKind = MsgKind::HsQcAnnounce;
    std::uint64_t view = 0;
    QuorumCertificate qc;

    void encode(codec::Writer& w) const;
    static HsQcAnnounce decode(codec::Reader& r);
};

struct HsDecide {
    static constexpr MsgKind kKind = MsgKind::HsDecide;
    std::uint64_t view = 0;
    ledger::Block block;
    QuorumCertificate commit_qc;

    void encode(codec::Writer& w) const;
    static HsDecide decode(codec::Reader& r);
};

// --- ledger access tiers ---

enum class RegistryKind : std::uint8_t { Identity = 0, Mobility = 1, Policy = 2 };

struct RegistryQuery {
    static constexpr MsgKind kKind = MsgKind::RegistryQuery;
    std::uint64_t query_id = 0;
    RegistryKind registry = RegistryKind::Identity;
    Bytes key; // bcadd bytes

    void encode(codec::Writer& w) const;
    static RegistryQuery decode(codec::Reader& r);
};

struct RegistryResp {
    static constexpr MsgKind kKind = MsgKind::RegistryResp;
    std::uint64_t query_id = 0;
    RegistryKind registry = RegistryKind::Identity;
    bool found = false;
    Bytes record; // canonical record bytes, empty when !found
    std::uint64_t snapshot_height = 0;
    Bytes signature; // responder's signature over the response payload

    Bytes signing_bytes() const;
    void encode(codec::Writer& w) const;
    static RegistryResp decode(codec::Reader& r);
};

struct SnapshotReq {
    static constexpr MsgKind kKind = MsgKind::SnapshotReq;
    std::uint64_t req_id = 0;

    void encode(codec::Writer& w) const;
    static SnapshotReq decode(codec::Reader& r);
};

struct SnapshotResp {
    static constexpr MsgKind kKind = MsgKind::SnapshotResp;
    std::uint64_t req_id = 0;
    Bytes state; // LedgerState::encode()
    std::uint64_t height = 0;

    void encode(codec::Writer& w) const;
    static SnapshotResp decode(codec::Reader& r);
};

struct RelaySubmit {
    static constexpr MsgKind kKind = MsgKind::RelaySubmit;
    ledger::Transaction tx;

    void encode(codec::Writer& w) const;
    static RelaySubmit decode(codec::Reader& r);
};

struct HeaderAnnounce {
    static constexpr MsgKind kKind = MsgKind::HeaderAnnounce;
    std::uint64_t height = 0;
    Bytes block_hash;

    void encode(codec::Writer& w) const;
    static HeaderAnnounce decode(codec::Reader& r);
};

// --- mutual authentication ---

struct AuthHello {
    static constexpr MsgKind kKind = MsgKind::AuthHello;
    std::uint64_t session_id = 0;
    Bytes bcadd;
    Bytes public_key;
    Bytes nonce;
    std::uint32_t address = 0;

    void encode(codec::Writer& w) const;
    static AuthHello decode(codec::Reader& r);
};

struct AuthChallenge {
    static constexpr MsgKind kKind = MsgKind::AuthChallenge;
    std::uint64_t session_id = 0;
    Bytes bcadd;
    Bytes public_key;
    Bytes nonce;
    Bytes initiator_nonce; // echo
    std::uint32_t address = 0;
    Bytes signature;

    void encode(codec::Writer& w) const;
    static AuthChallenge decode(codec::Reader& r);
};

struct AuthResponse {
    static constexpr MsgKind kKind = MsgKind::AuthResponse;
    std::uint64_t session_id = 0;
    Bytes responder_nonce; // echo
    Bytes signature;

    void encode(codec::Writer& w) const;
    static AuthResponse decode(codec::Reader& r);
};

// --- data plane ---

struct DataPacketMsg {
    static constexpr MsgKind kKind = MsgKind::DataForward;
    Bytes src_bcadd;
    Bytes dst_bcadd;
    Bytes ciphertext;
    std::uint64_t seq = 0;

    void encode(codec::Writer& w) const;
    static DataPacketMsg decode(codec::Reader& r);
};

struct UeTxForward {
    static constexpr MsgKind kKind = MsgKind::UeTxForward;
    ledger::Transaction tx;

    void encode(codec::Writer& w) const;
    static UeTxForward decode(codec::Reader& r);
};

} // namespace decentran::wire
