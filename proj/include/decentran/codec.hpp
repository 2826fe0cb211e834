#pragma once

#include "decentran/bytes.hpp"
#include "decentran/errors.hpp"

#include <cstdint>
#include <string>

namespace decentran::codec {

// Canonical binary encoding shared by transactions, blocks, wire messages
// and file dumps. Fixed field order, little-endian fixed-width integers,
// u32 length prefixes for variable-size fields. The layout is documented in
// docs/FORMATS.md; hashes and signatures are computed over these bytes, so
// the encoding must stay platform-independent.

class Writer {
public:
    void u8(std::uint8_t v) { buf_.push_back(v); }

    void u16(std::uint16_t v) {
        buf_.push_back(static_cast<std::uint8_t>(v));
        buf_.push_back(static_cast<std::uint8_t>(v >> 8));
    }

    void u32(std::uint32_t v) {
        for (int i = 0; i < 4; ++i)
            buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }

    void u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i)
            buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }

    void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }

    void bytes(const Bytes& b) {
        u32(static_cast<std::uint32_t>(b.size()));
        buf_.insert(buf_.end(), b.begin(), b.end());
    }

    void str(const std::string& s) {
        u32(static_cast<std::uint32_t>(s.size()));
        buf_.insert(buf_.end(), s.begin(), s.end());
    }

    // No length prefix; for fields whose size is fixed by context.
    void raw(const Bytes& b) { buf_.insert(buf_.end(), b.begin(), b.end()); }

    const Bytes& out() const { return buf_; }
    Bytes take() { return std::move(buf_); }

private:
    Bytes buf_;
};

class Reader {
public:
    explicit Reader(const Bytes& buf) : buf_(buf) {}

    std::uint8_t u8() {
        need(1);
        return buf_[pos_++];
    }

    std::uint16_t u16() {
        need(2);
        std::uint16_t v = static_cast<std::uint16_t>(buf_[pos_] | (buf_[pos_ + 1] << 8));
        pos_ += 2;
        return v;
    }

    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i)
            v |= static_cast<std::uint32_t>(buf_[pos_ + i]) << (8 * i);
        pos_ += 4;
        return v;
    }

    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i)
            v |= static_cast<std::uint64_t>(buf_[pos_ + i]) << (8 * i);
        pos_ += 8;
        return v;
    }

    std::int64_t i64() { return static_cast<std::int64_t>(u64()); }

    Bytes bytes() {
        std::uint32_t n = u32();
        need(n);
        Bytes out(buf_.begin() + static_cast<std::ptrdiff_t>(pos_),
                  buf_.begin() + static_cast<std::ptrdiff_t>(pos_ + n));
        pos_ += n;
        return out;
    }

    std::string str() {
        std::uint32_t n = u32();
        need(n);
        std::string out(buf_.begin() + static_cast<std::ptrdiff_t>(pos_),
                        buf_.begin() + static_cast<std::ptrdiff_t>(pos_ + n));
        pos_ += n;
        return out;
    }

    Bytes raw(std::size_t n) {
        need(n);
        Bytes out(buf_.begin() + static_cast<std::ptrdiff_t>(pos_),
                  buf_.begin() + static_cast<std::ptrdiff_t>(pos_ + n));
        pos_ += n;
        return out;
    }

    bool done() const { return pos_ == buf_.size(); }

    void expect_done() const {
        if (!done())
            fail(Errc::CodecError, "trailing bytes after decode");
    }

    std::size_t remaining() const { return buf_.size() - pos_; }

private:
    void need(std::size_t n) const {
        if (pos_ + n > buf_.size())
            fail(Errc::CodecError, "truncated input");
    }

    const Bytes& buf_;
    std::size_t pos_ = 0;
};

} // namespace decentran::codec
