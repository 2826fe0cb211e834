#include "decentran/ledger.hpp"

#include "decentran/crypto.hpp"
#include "decentran/errors.hpp"

#include <fstream>

namespace decentran::ledger {

Bytes Transaction::signing_bytes() const {
    codec::Writer w;
    w.u8(static_cast<std::uint8_t>(kind));
    w.bytes(sender.value);
    w.bytes(body);
    w.u64(nonce);
    return w.take();
}

Bytes Transaction::id() const { return crypto::sha256(signing_bytes()); }

void Transaction::encode(codec::Writer& w) const {
    w.u8(static_cast<std::uint8_t>(kind));
    w.bytes(sender.value);
    w.bytes(body);
    w.u64(nonce);
    w.bytes(signature);
    w.i64(submit_time);
}

Transaction Transaction::decode(codec::Reader& r) {
    Transaction tx;
    std::uint8_t k = r.u8();
    if (k > static_cast<std::uint8_t>(TxKind::Payload))
        fail(Errc::CodecError, "unknown transaction kind");
    tx.kind = static_cast<TxKind>(k);
    tx.sender.value = r.bytes();
    tx.body = r.bytes();
    tx.nonce = r.u64();
    tx.signature = r.bytes();
    tx.submit_time = r.i64();
    return tx;
}

Transaction make_signed_tx(TxKind kind, const identity::IdentityBundle& sender, Bytes body,
                           std::uint64_t nonce, SimTime submit_time) {
    Transaction tx;
    tx.kind = kind;
    tx.sender = sender.bcadd;
    tx.body = std::move(body);
    tx.nonce = nonce;
    tx.submit_time = submit_time;
    tx.signature = crypto::sign(sender.keypair, tx.signing_bytes());
    return tx;
}

Bytes IdentityRegisterBody::encode() const {
    codec::Writer w;
    w.bytes(public_key);
    return w.take();
}

std::optional<IdentityRegisterBody> IdentityRegisterBody::decode(const Bytes& body) {
    try {
        codec::Reader r(body);
        IdentityRegisterBody b{r.bytes()};
        r.expect_done();
        return b;
    } catch (const Error&) {
        return std::nullopt;
    }
}

Bytes MobilityUpdateBody::encode() const {
    codec::Writer w;
    w.u32(gnb_id);
    w.u32(cell_id);
    w.u64(sequence);
    return w.take();
}

std::optional<MobilityUpdateBody> MobilityUpdateBody::decode(const Bytes& body) {
    try {
        codec::Reader r(body);
        MobilityUpdateBody b;
        b.gnb_id = r.u32();
        b.cell_id = r.u32();
        b.sequence = r.u64();
        r.expect_done();
        return b;
    } catch (const Error&) {
        return std::nullopt;
    }
}

Bytes PolicySetBody::encode() const {
    codec::Writer w;
    w.u32(flags);
    return w.take();
}

std::optional<PolicySetBody> PolicySetBody::decode(const Bytes& body) {
    try {
        codec::Reader r(body);
        PolicySetBody b{r.u32()};
        r.expect_done();
        return b;
    } catch (const Error&) {
        return std::nullopt;
    }
}

Bytes Block::hash_preimage() const {
    codec::Writer w;
    w.u64(height);
    w.bytes(prev_hash);
    w.u32(static_cast<std::uint32_t>(tx_list.size()));
    for (const auto& tx : tx_list)
        tx.encode(w);
    w.u32(proposer);
    w.i64(commit_time);
    return w.take();
}

Bytes Block::compute_hash() const { return crypto::sha256(hash_preimage()); }

void Block::encode(codec::Writer& w) const {
    w.u64(height);
    w.bytes(prev_hash);
    w.u32(static_cast<std::uint32_t>(tx_list.size()));
    for (const auto& tx : tx_list)
        tx.encode(w);
    w.u32(proposer);
    w.i64(commit_time);
    w.bytes(block_hash);
}

Block Block::decode(codec::Reader& r) {
    Block b;
    b.height = r.u64();
    b.prev_hash = r.bytes();
    std::uint32_t n = r.u32();
    b.tx_list.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i)
        b.tx_list.push_back(Transaction::decode(r));
    b.proposer = r.u32();
    b.commit_time = r.i64();
    b.block_hash = r.bytes();
    return b;
}

Bytes Block::encode_bytes() const {
    codec::Writer w;
    encode(w);
    return w.take();
}

Bytes LedgerState::encode() const {
    codec::Writer w;
    w.u32(static_cast<std::uint32_t>(identity_registry.size()));
    for (const auto& [k, v] : identity_registry) {
        w.bytes(k.value);
        w.bytes(v.public_key);
        w.u64(v.registered_height);
        w.u64(v.last_nonce);
    }
    w.u32(static_cast<std::uint32_t>(mobility_registry.size()));
    for (const auto& [k, v] : mobility_registry) {
        w.bytes(k.value);
        w.u32(v.serving_gnb);
        w.u32(v.cell_id);
        w.u64(v.sequence);
        w.i64(v.updated_at);
    }
    w.u32(static_cast<std::uint32_t>(policy_table.size()));
    for (const auto& [k, v] : policy_table) {
        w.bytes(k.value);
        w.u32(v);
    }
    w.u64(chain_height);
    w.bytes(head_hash);
    return w.take();
}

Bytes LedgerState::digest() const { return crypto::sha256(encode()); }

TxVerdict validate_transaction_verdict(const Transaction& tx, const LedgerState& state) {
    auto reg = state.identity_registry.find(tx.sender);
    const bool registered = reg != state.identity_registry.end();

    // Signature first. Registration supplies the key; IdentityRegister
    // carries it in the body (the sender is unregistered by definition) and
    // the bcadd binding Hash(pk) == sender is what authenticates it.
    const Bytes* pk = nullptr;
    IdentityRegisterBody reg_body;
    if (tx.kind == TxKind::IdentityRegister) {
        auto body = IdentityRegisterBody::decode(tx.body);
        if (!body)
            return TxVerdict::BadBody;
        reg_body = *body;
        if (reg_body.public_key.size() != crypto::kPublicKeySize)
            return TxVerdict::BadBody;
        if (identity::derive_bcadd(reg_body.public_key) != tx.sender)
            return TxVerdict::BadBody;
        pk = &reg_body.public_key;
    } else {
        if (!registered)
            return TxVerdict::NotRegistered;
        pk = &reg->second.public_key;
    }

    if (!crypto::verify(*pk, tx.signing_bytes(), tx.signature))
        return TxVerdict::BadSignature;

    // Replay protection: per-sender nonces strictly increase.
    const std::uint64_t last_nonce = registered ? reg->second.last_nonce : 0;
    if (tx.nonce <= last_nonce)
        return TxVerdict::BadNonce;

    switch (tx.kind) {
    case TxKind::IdentityRegister:
        if (registered)
            return TxVerdict::AlreadyRegistered;
        return TxVerdict::Ok;
    case TxKind::MobilityUpdate: {
        auto body = MobilityUpdateBody::decode(tx.body);
        if (!body)
            return TxVerdict::BadBody;
        auto cur = state.mobility_registry.find(tx.sender);
        const std::uint64_t cur_seq =
            cur == state.mobility_registry.end() ? 0 : cur->second.sequence;
        if (body->sequence <= cur_seq)
            return TxVerdict::SequenceConflict;
        return TxVerdict::Ok;
    }
    case TxKind::PolicySet:
        return PolicySetBody::decode(tx.body) ? TxVerdict::Ok : TxVerdict::BadBody;
    case TxKind::Payload:
        return TxVerdict::Ok;
    }
    return TxVerdict::BadBody;
}

LedgerState apply_block(const LedgerState& state, const Block& block,
                        std::vector<bool>* applied) {
    if (block.height != state.chain_height)
        fail(Errc::ChainBreak, "block height does not extend the chain");
    if (block.prev_hash != state.head_hash)
        fail(Errc::ChainBreak, "block prev_hash does not match chain head");

    LedgerState next = state;
    if (applied) {
        applied->clear();
        applied->reserve(block.tx_list.size());
    }
    for (const auto& tx : block.tx_list) {
        const bool ok = validate_transaction(tx, next);
        if (applied)
            applied->push_back(ok);
        if (!ok)
            continue;
        switch (tx.kind) {
        case TxKind::IdentityRegister: {
            auto body = *IdentityRegisterBody::decode(tx.body);
            next.identity_registry[tx.sender] =
                RegistrationRecord{body.public_key, block.height, tx.nonce};
            break;
        }
        case TxKind::MobilityUpdate: {
            auto body = *MobilityUpdateBody::decode(tx.body);
            next.mobility_registry[tx.sender] = MobilityRecord{
                tx.sender, body.gnb_id, body.cell_id, body.sequence, block.commit_time};
            next.identity_registry[tx.sender].last_nonce = tx.nonce;
            break;
        }
        case TxKind::PolicySet: {
            auto body = *PolicySetBody::decode(tx.body);
            next.policy_table[tx.sender] = body.flags;
            next.identity_registry[tx.sender].last_nonce = tx.nonce;
            break;
        }
        case TxKind::Payload:
            next.identity_registry[tx.sender].last_nonce = tx.nonce;
            break;
        }
    }
    next.chain_height = block.height + 1;
    next.head_hash = block.block_hash;
    return next;
}

bool verify_chain(const std::vector<Block>& blocks) {
    Bytes prev = kGenesisPrevHash;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const Block& b = blocks[i];
        if (b.height != i)
            return false;
        if (b.prev_hash != prev)
            return false;
        if (b.block_hash != b.compute_hash())
            return false;
        prev = b.block_hash;
    }
    return true;
}

std::vector<bool> Replica::append(const Block& block) {
    std::vector<bool> applied;
    state = apply_block(state, block, &applied);
    blocks.push_back(block);
    return applied;
}

const Block* Replica::block_at(std::uint64_t height) const {
    if (height >= blocks.size())
        return nullptr;
    return &blocks[height];
}

Bytes encode_chain(const std::vector<Block>& blocks) {
    codec::Writer w;
    for (const auto& b : blocks)
        w.bytes(b.encode_bytes());
    return w.take();
}

std::vector<Block> decode_chain(const Bytes& data) {
    codec::Reader r(data);
    std::vector<Block> blocks;
    while (!r.done()) {
        Bytes one = r.bytes();
        codec::Reader br(one);
        blocks.push_back(Block::decode(br));
        br.expect_done();
    }
    return blocks;
}

void dump_chain(const std::vector<Block>& blocks, const std::string& path) {
    Bytes data = encode_chain(blocks);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        fail(Errc::IoError, "cannot open chain dump for writing: " + path);
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
}

std::vector<Block> load_chain(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(Errc::IoError, "cannot open chain dump: " + path);
    Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return decode_chain(data);
}

} // namespace decentran::ledger
