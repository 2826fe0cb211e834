#pragma once

#include "decentran/bytes.hpp"
#include "decentran/time.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

namespace decentran::sim {

// Deterministic PRNG (xoshiro256** seeded via splitmix64) with hand-rolled
// distributions. std:: distributions are implementation-defined, which would
// break byte-identical reruns, so everything random goes through this.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();
    // Inclusive bounds.
    std::uint64_t uniform_u64(std::uint64_t lo, std::uint64_t hi);
    double uniform01();
    double normal(double mean, double sd);
    double exponential(double mean);
    Bytes bytes(std::size_t n);

    // Independent deterministic substream.
    Rng fork(std::uint64_t stream_id);

private:
    std::uint64_t s_[4];
};

class Simulator;

// Append-only event log: one line per event, "time_us,entity,kind,detail".
class Trace {
public:
    void emit(SimTime at, const std::string& entity, const std::string& kind,
              const std::string& detail);
    const std::string& text() const { return text_; }
    void clear() { text_.clear(); }

private:
    std::string text_;
};

class Simulator {
public:
    explicit Simulator(std::uint64_t seed);

    SimTime now() const { return now_; }
    Rng& rng() { return rng_; }
    Trace& trace() { return trace_; }

    void at(SimTime t, std::function<void()> fn);
    void after(SimDuration d, std::function<void()> fn) { at(now_ + d, std::move(fn)); }

    // Runs events scheduled up to and including t; leaves the clock at t.
    void run_until(SimTime t);
    void run_for(SimDuration d) { run_until(now_ + d); }
    // Drains the queue; returns the number of events executed.
    std::size_t run_all(std::size_t max_events = SIZE_MAX);
    bool step();
    bool idle() const { return queue_.empty(); }

private:
    struct Event {
        SimTime at;
        std::uint64_t seq;
        std::function<void()> fn;
    };
    struct Later {
        bool operator()(const Event& a, const Event& b) const {
            if (a.at != b.at) return a.at > b.at;
            return a.seq > b.seq;
        }
    };

    std::priority_queue<Event, std::vector<Event>, Later> queue_;
    SimTime now_ = 0;
    std::uint64_t next_seq_ = 0;
    Rng rng_;
    Trace trace_;
};

using EntityId = std::uint32_t;
inline constexpr EntityId kNoEntity = 0xffffffff;

class Endpoint {
public:
    virtual ~Endpoint() = default;
    virtual void on_frame(EntityId from, const Bytes& frame) = 0;
};

struct NetConfig {
    SimDuration latency_mean = sim_us(200); // 0.2 ms
    SimDuration jitter_sd = sim_us(50);
    double bandwidth_bps = 10000e6; // 10,000 Mbps
};

struct CapturedFrame {
    SimTime at;
    EntityId from;
    EntityId to;
    Bytes data;
};

// Point-to-point message fabric. Per-pair serialization models bandwidth;
// propagation delay is a truncated normal around latency_mean. Frames to or
// from a down entity, or across a partition, are dropped silently.
class Network {
public:
    Network(Simulator& sim, NetConfig cfg);

    EntityId attach(Endpoint* ep, std::string name);
    void send(EntityId from, EntityId to, Bytes frame);

    void set_down(EntityId id, bool down);
    bool is_down(EntityId id) const;

    // Partition groups: traffic crosses only within the same group.
    void set_group(EntityId id, int group);
    void heal_all();

    void set_capture(bool on) { capture_ = on; }
    const std::vector<CapturedFrame>& captured() const { return captured_; }

    const std::string& name_of(EntityId id) const;
    std::uint64_t frames_sent() const { return frames_sent_; }
    std::uint64_t frames_delivered() const { return frames_delivered_; }

private:
    struct Peer {
        Endpoint* ep;
        std::string name;
        bool down = false;
        int group = 0;
    };

    Simulator& sim_;
    NetConfig cfg_;
    Rng rng_;
    std::vector<Peer> peers_;
    std::map<std::pair<EntityId, EntityId>, SimTime> link_busy_until_;
    bool capture_ = false;
    std::vector<CapturedFrame> captured_;
    std::uint64_t frames_sent_ = 0;
    std::uint64_t frames_delivered_ = 0;
};

// Single-core work model: each unit of work occupies the meter for
// 1/budget_per_s simulated seconds, serialized FIFO. budget_per_s == 0
// means unlimited (work completes immediately).
class WorkMeter {
public:
    explicit WorkMeter(double budget_per_s = 0.0) : budget_(budget_per_s) {}

    // Returns the completion time for `units` of work started no earlier
    // than `now`, and advances the meter.
    SimTime schedule(SimTime now, double units);

    double consumed() const { return consumed_; }
    SimTime free_at() const { return free_at_; }

private:
    double budget_;
    double consumed_ = 0.0;
    SimTime free_at_ = 0;
};

} // namespace decentran::sim
