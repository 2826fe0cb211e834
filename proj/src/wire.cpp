#include "decentran/wire.hpp"

#include "decentran/errors.hpp"

namespace decentran::wire {

Bytes Envelope::encode() const {
    codec::Writer w;
    w.u16(static_cast<std::uint16_t>(kind));
    w.bytes(payload);
    return w.take();
}

Envelope Envelope::decode(const Bytes& frame) {
    codec::Reader r(frame);
    Envelope env;
    env.kind = static_cast<MsgKind>(r.u16());
    env.payload = r.bytes();
    r.expect_done();
    return env;
}

void ClientSubmit::encode(codec::Writer& w) const { tx.encode(w); }
ClientSubmit ClientSubmit::decode(codec::Reader& r) {
    return ClientSubmit{ledger::Transaction::decode(r)};
}

void SubmitReply::encode(codec::Writer& w) const {
    w.bytes(tx_id);
    w.u8(static_cast<std::uint8_t>(status));
    w.u32(leader_hint);
}
SubmitReply SubmitReply::decode(codec::Reader& r) {
    SubmitReply m;
    m.tx_id = r.bytes();
    m.status = static_cast<SubmitStatus>(r.u8());
    m.leader_hint = r.u32();
    return m;
}

void CommitNotify::encode(codec::Writer& w) const {
    w.bytes(tx_id);
    w.u64(height);
    w.u8(applied ? 1 : 0);
    w.i64(commit_time);
}
CommitNotify CommitNotify::decode(codec::Reader& r) {
    CommitNotify m;
    m.tx_id = r.bytes();
    m.height = r.u64();
    m.applied = r.u8() != 0;
    m.commit_time = r.i64();
    return m;
}

void TxGossip::encode(codec::Writer& w) const {
    tx.encode(w);
    w.u32(origin_node);
}
TxGossip TxGossip::decode(codec::Reader& r) {
    TxGossip m;
    m.tx = ledger::Transaction::decode(r);
    m.origin_node = r.u32();
    return m;
}

void CommittedBlock::encode(codec::Writer& w) const { block.encode(w); }
CommittedBlock CommittedBlock::decode(codec::Reader& r) {
    return CommittedBlock{ledger::Block::decode(r)};
}

void BlockFetchReq::encode(codec::Writer& w) const { w.u64(from_height); }
BlockFetchReq BlockFetchReq::decode(codec::Reader& r) { return BlockFetchReq{r.u64()}; }

void BlockFetchResp::encode(codec::Writer& w) const {
    w.u32(static_cast<std::uint32_t>(entries.size()));
    for (const auto& e : entries) {
        e.block.encode(w);
        w.bytes(e.commit_qc);
    }
}
BlockFetchResp BlockFetchResp::decode(codec::Reader& r) {
    BlockFetchResp m;
    std::uint32_t n = r.u32();
    m.entries.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        Entry e;
        e.block = ledger::Block::decode(r);
        e.commit_qc = r.bytes();
        m.entries.push_back(std::move(e));
    }
    return m;
}

void RaftRequestVote::encode(codec::Writer& w) const {
    w.u64(term);
    w.u32(candidate);
    w.u64(last_log_index);
    w.u64(last_log_term);
}
RaftRequestVote RaftRequestVote::decode(codec::Reader& r) {
    RaftRequestVote m;
    m.term = r.u64();
    m.candidate = r.u32();
    m.last_log_index = r.u64();
    m.last_log_term = r.u64();
    return m;
}

void RaftVoteReply::encode(codec::Writer& w) const {
    w.u64(term);
    w.u8(granted ? 1 : 0);
    w.u32(voter);
}
RaftVoteReply RaftVoteReply::decode(codec::Reader& r) {
    RaftVoteReply m;
    m.term = r.u64();
    m.granted = r.u8() != 0;
    m.voter = r.u32();
    return m;
}

void RaftAppendEntries::encode(codec::Writer& w) const {
    w.u64(term);
    w.u32(leader);
    w.u64(prev_index);
    w.u64(prev_term);
    w.u64(leader_commit);
    w.u32(static_cast<std::uint32_t>(entries.size()));
    for (const auto& e : entries) {
        w.u64(e.term);
        e.block.encode(w);
    }
}
RaftAppendEntries RaftAppendEntries::decode(codec::Reader& r) {
    RaftAppendEntries m;
    m.term = r.u64();
    m.leader = r.u32();
    m.prev_index = r.u64();
    m.prev_term = r.u64();
    m.leader_commit = r.u64();
    std::uint32_t n = r.u32();
    m.entries.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        Entry e;
        e.term = r.u64();
        e.block = ledger::Block::decode(r);
        m.entries.push_back(std::move(e));
    }
    return m;
}

void RaftAppendReply::encode(codec::Writer& w) const {
    w.u64(term);
    w.u8(success ? 1 : 0);
    w.u64(match_index);
    w.u32(follower);
}
RaftAppendReply RaftAppendReply::decode(codec::Reader& r) {
    RaftAppendReply m;
    m.term = r.u64();
    m.success = r.u8() != 0;
    m.match_index = r.u64();
    m.follower = r.u32();
    return m;
}

Bytes QuorumCertificate::vote_payload(const Bytes& block_hash, std::uint64_t view, Phase phase) {
    codec::Writer w;
    w.raw(str_bytes("hs-vote:v1"));
    w.bytes(block_hash);
    w.u64(view);
    w.u8(static_cast<std::uint8_t>(phase));
    return w.take();
}

void QuorumCertificate::encode(codec::Writer& w) const {
    w.bytes(block_hash);
    w.u64(view);
    w.u8(static_cast<std::uint8_t>(phase));
    w.u32(static_cast<std::uint32_t>(signer_set.size()));
    for (auto s : signer_set)
        w.u32(s);
    w.bytes(aggregate_signature);
}
QuorumCertificate QuorumCertificate::decode(codec::Reader& r) {
    QuorumCertificate qc;
    qc.block_hash = r.bytes();
    qc.view = r.u64();
    qc.phase = static_cast<Phase>(r.u8());
    std::uint32_t n = r.u32();
    qc.signer_set.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i)
        qc.signer_set.push_back(r.u32());
    qc.aggregate_signature = r.bytes();
    return qc;
}

Bytes QuorumCertificate::encode_bytes() const {
    codec::Writer w;
    encode(w);
    return w.take();
}

std::optional<QuorumCertificate> QuorumCertificate::decode_bytes(const Bytes& data) {
    try {
        codec::Reader r(data);
        QuorumCertificate qc = decode(r);
        r.expect_done();
        return qc;
    } catch (const Error&) {
        return std::nullopt;
    }
}

static void encode_opt_qc(codec::Writer& w, const std::optional<QuorumCertificate>& qc) {
    w.u8(qc ? 1 : 0);
    if (qc)
        qc->encode(w);
}

static std::optional<QuorumCertificate> decode_opt_qc(codec::Reader& r) {
    if (r.u8() == 0)
        return std::nullopt;
    return QuorumCertificate::decode(r);
}

void HsNewView::encode(codec::Writer& w) const {
    w.u64(view);
    w.u32(sender);
    w.u64(committed_height);
    encode_opt_qc(w, prepare_qc);
    w.u8(prepare_block ? 1 : 0);
    if (prepare_block)
        prepare_block->encode(w);
}
HsNewView HsNewView::decode(codec::Reader& r) {
    HsNewView m;
    m.view = r.u64();
    m.sender = r.u32();
    m.committed_height = r.u64();
    m.prepare_qc = decode_opt_qc(r);
    if (r.u8() != 0)
        m.prepare_block = ledger::Block::decode(r);
    return m;
}

void HsProposal::encode(codec::Writer& w) const {
    w.u64(view);
    block.encode(w);
    encode_opt_qc(w, justify);
}
HsProposal HsProposal::decode(codec::Reader& r) {
    HsProposal m;
    m.view = r.u64();
    m.block = ledger::Block::decode(r);
    m.justify = decode_opt_qc(r);
    return m;
}

void HsVote::encode(codec::Writer& w) const {
    w.u64(view);
    w.u8(static_cast<std::uint8_t>(phase));
    w.bytes(block_hash);
    w.u32(voter);
    w.bytes(signature);
}
HsVote HsVote::decode(codec::Reader& r) {
    HsVote m;
    m.view = r.u64();
    m.phase = static_cast<Phase>(r.u8());
    m.block_hash = r.bytes();
    m.voter = r.u32();
    m.signature = r.bytes();
    return m;
}

void HsQcAnnounce::encode(codec::Writer& w) const {
    w.u64(view);
    qc.encode(w);
}
HsQcAnnounce HsQcAnnounce::decode(codec::Reader& r) {
    HsQcAnnounce m;
    m.view = r.u64();
    m.qc = QuorumCertificate::decode(r);
    return m;
}

void HsDecide::encode(codec::Writer& w) const {
    w.u64(view);
    block.encode(w);
    commit_qc.encode(w);
}
HsDecide HsDecide::decode(codec::Reader& r) {
    HsDecide m;
    m.view = r.u64();
    m.block = ledger::Block::decode(r);
    m.commit_qc = QuorumCertificate::decode(r);
    return m;
}

void RegistryQuery::encode(codec::Writer& w) const {
    w.u64(query_id);
    w.u8(static_cast<std::uint8_t>(registry));
    w.bytes(key);
}
RegistryQuery RegistryQuery::decode(codec::Reader& r) {
    RegistryQuery m;
    m.query_id = r.u64();
    m.registry = static_cast<RegistryKind>(r.u8());
    m.key = r.bytes();
    return m;
}

Bytes RegistryResp::signing_bytes() const {
    codec::Writer w;
    w.raw(str_bytes("registry-resp:v1"));
    w.u64(query_id);
    w.u8(static_cast<std::uint8_t>(registry));
    w.u8(found ? 1 : 0);
    w.bytes(record);
    w.u64(snapshot_height);
    return w.take();
}
void RegistryResp::encode(codec::Writer& w) const {
    w.u64(query_id);
    w.u8(static_cast<std::uint8_t>(registry));
    w.u8(found ? 1 : 0);
    w.bytes(record);
    w.u64(snapshot_height);
    w.bytes(signature);
}
RegistryResp RegistryResp::decode(codec::Reader& r) {
    RegistryResp m;
    m.query_id = r.u64();
    m.registry = static_cast<RegistryKind>(r.u8());
    m.found = r.u8() != 0;
    m.record = r.bytes();
    m.snapshot_height = r.u64();
    m.signature = r.bytes();
    return m;
}

void SnapshotReq::encode(codec::Writer& w) const { w.u64(req_id); }
SnapshotReq SnapshotReq::decode(codec::Reader& r) { return SnapshotReq{r.u64()}; }

void SnapshotResp::encode(codec::Writer& w) const {
    w.u64(req_id);
    w.bytes(state);
    w.u64(height);
}
SnapshotResp SnapshotResp::decode(codec::Reader& r) {
    SnapshotResp m;
    m.req_id = r.u64();
    m.state = r.bytes();
    m.height = r.u64();
    return m;
}

void RelaySubmit::encode(codec::Writer& w) const { tx.encode(w); }
RelaySubmit RelaySubmit::decode(codec::Reader& r) {
    return RelaySubmit{ledger::Transaction::decode(r)};
}

void HeaderAnnounce::encode(codec::Writer& w) const {
    w.u64(height);
    w.bytes(block_hash);
}
HeaderAnnounce HeaderAnnounce::decode(codec::Reader& r) {
    HeaderAnnounce m;
    m.height = r.u64();
    m.block_hash = r.bytes();
    return m;
}

void AuthHello::encode(codec::Writer& w) const {
    w.u64(session_id);
    w.bytes(bcadd);
    w.bytes(public_key);
    w.bytes(nonce);
    w.u32(address);
}
AuthHello AuthHello::decode(codec::Reader& r) {
    AuthHello m;
    m.session_id = r.u64();
    m.bcadd = r.bytes();
    m.public_key = r.bytes();
    m.nonce = r.bytes();
    m.address = r.u32();
    return m;
}

void AuthChallenge::encode(codec::Writer& w) const {
    w.u64(session_id);
    w.bytes(bcadd);
    w.bytes(public_key);
    w.bytes(nonce);
    w.bytes(initiator_nonce);
    w.u32(address);
    w.bytes(signature);
}
AuthChallenge AuthChallenge::decode(codec::Reader& r) {
    AuthChallenge m;
    m.session_id = r.u64();
    m.bcadd = r.bytes();
    m.public_key = r.bytes();
    m.nonce = r.bytes();
    m.initiator_nonce = r.bytes();
    m.address = r.u32();
    m.signature = r.bytes();
    return m;
}

void AuthResponse::encode(codec::Writer& w) const {
    w.u64(session_id);
    w.bytes(responder_nonce);
    w.bytes(signature);
}
AuthResponse AuthResponse::decode(codec::Reader& r) {
    AuthResponse m;
    m.session_id = r.u64();
    m.responder_nonce = r.bytes();
    m.signature = r.bytes();
    return m;
}

void DataPacketMsg::encode(codec::Writer& w) const {
    w.bytes(src_bcadd);
    w.bytes(dst_bcadd);
    w.bytes(ciphertext);
    w.u64(seq);
}
DataPacketMsg DataPacketMsg::decode(codec::Reader& r) {
    DataPacketMsg m;
    m.src_bcadd = r.bytes();
    m.dst_bcadd = r.bytes();
    m.ciphertext = r.bytes();
    m.seq = r.u64();
    return m;
}

void UeTxForward::encode(codec::Writer& w) const { tx.encode(w); }
UeTxForward UeTxForward::decode(codec::Reader& r) {
    return UeTxForward{ledger::Transaction::decode(r)};
}

} // namespace decentran::wire
