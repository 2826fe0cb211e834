#include "decentran/sim.hpp"

#include "decentran/errors.hpp"

#include <cmath>
#include <cstdio>

namespace decentran::sim {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

} // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& s : s_)
        s = splitmix64(sm);
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

std::uint64_t Rng::uniform_u64(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi)
        fail(Errc::InvalidArgument, "uniform_u64 bounds inverted");
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) // full range
        return next_u64();
    // Rejection sampling to keep the draw unbiased.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return lo + v % span;
}

double Rng::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal(double mean, double sd) {
    // Box-Muller; one draw per call keeps the stream position predictable.
    double u1 = uniform01();
    double u2 = uniform01();
    while (u1 <= 1e-300) u1 = uniform01();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    return mean + sd * mag * std::cos(2.0 * M_PI * u2);
}

double Rng::exponential(double mean) {
    double u = uniform01();
    while (u <= 1e-300) u = uniform01();
    return -mean * std::log(u);
}

Bytes Rng::bytes(std::size_t n) {
    Bytes out(n);
    std::size_t i = 0;
    while (i < n) {
        std::uint64_t v = next_u64();
        for (int b = 0; b < 8 && i < n; ++b, ++i)
            out[i] = static_cast<std::uint8_t>(v >> (8 * b));
    }
    return out;
}

Rng Rng::fork(std::uint64_t stream_id) {
    std::uint64_t mix = next_u64();
    return Rng(mix ^ (stream_id * 0x9e3779b97f4a7c15ull));
}

void Trace::emit(SimTime at, const std::string& entity, const std::string& kind,
                 const std::string& detail) {
    char head[64];
    std::snprintf(head, sizeof head, "%lld,", static_cast<long long>(at));
    text_ += head;
    text_ += entity;
    text_ += ',';
    text_ += kind;
    text_ += ',';
    text_ += detail;
    text_ += '\n';
}

Simulator::Simulator(std::uint64_t seed) : rng_(seed) {}

void Simulator::at(SimTime t, std::function<void()> fn) {
    if (t < now_)
        t = now_;
    queue_.push(Event{t, next_seq_++, std::move(fn)});
}

bool Simulator::step() {
    if (queue_.empty())
        return false;
    Event ev = queue_.top();
    queue_.pop();
    now_ = ev.at;
    ev.fn();
    return true;
}

void Simulator::run_until(SimTime t) {
    while (!queue_.empty() && queue_.top().at <= t)
        step();
    if (now_ < t)
        now_ = t;
}

std::size_t Simulator::run_all(std::size_t max_events) {
    std::size_t n = 0;
    while (n < max_events && step())
        ++n;
    return n;
}

Network::Network(Simulator& sim, NetConfig cfg)
    : sim_(sim), cfg_(cfg), rng_(sim.rng().fork(0x6e657477ull)) {}

EntityId Network::attach(Endpoint* ep, std::string name) {
    peers_.push_back(Peer{ep, std::move(name)});
    return static_cast<EntityId>(peers_.size() - 1);
}

void Network::send(EntityId from, EntityId to, Bytes frame) {
    if (from >= peers_.size() || to >= peers_.size())
        fail(Errc::UnknownNode, "send to unattached entity");
    ++frames_sent_;
    if (capture_)
        captured_.push_back(CapturedFrame{sim_.now(), from, to, frame});

    if (peers_[from].down || peers_[to].down)
        return;
    if (peers_[from].group != peers_[to].group)
        return;

    // Serialization on the (from,to) link, then propagation with jitter.
    const SimTime now = sim_.now();
    SimTime tx_time = 0;
    if (cfg_.bandwidth_bps > 0)
        tx_time = static_cast<SimTime>(static_cast<double>(frame.size()) * 8.0 * 1e6 /
                                       cfg_.bandwidth_bps);
    SimTime& busy = link_busy_until_[{from, to}];
    const SimTime start = std::max(now, busy);
    busy = start + tx_time;

    double prop = cfg_.jitter_sd > 0
                      ? rng_.normal(static_cast<double>(cfg_.latency_mean),
                                    static_cast<double>(cfg_.jitter_sd))
                      : static_cast<double>(cfg_.latency_mean);
    if (prop < 0)
        prop = 0;

    const SimTime deliver_at = busy + static_cast<SimTime>(prop);
    Endpoint* target = peers_[to].ep;
    sim_.at(deliver_at, [this, from, to, target, frame = std::move(frame)]() {
        // Re-check liveness and partition at delivery time.
        if (peers_[from].down || peers_[to].down)
            return;
        if (peers_[from].group != peers_[to].group)
            return;
        ++frames_delivered_;
        target->on_frame(from, frame);
    });
}

void Network::set_down(EntityId id, bool down) {
    if (id >= peers_.size())
        fail(Errc::UnknownNode, "no such entity");
    peers_[id].down = down;
}

bool Network::is_down(EntityId id) const {
    if (id >= peers_.size())
        fail(Errc::UnknownNode, "no such entity");
    return peers_[id].down;
}

void Network::set_group(EntityId id, int group) {
    if (id >= peers_.size())
        fail(Errc::UnknownNode, "no such entity");
    peers_[id].group = group;
}

void Network::heal_all() {
    for (auto& p : peers_)
        p.group = 0;
}

const std::string& Network::name_of(EntityId id) const {
    if (id >= peers_.size())
        fail(Errc::UnknownNode, "no such entity");
    return peers_[id].name;
}

SimTime WorkMeter::schedule(SimTime now, double units) {
    consumed_ += units;
    if (budget_ <= 0.0)
        return now;
    const SimTime start = std::max(now, free_at_);
    const auto busy = static_cast<SimTime>(units * 1e6 / budget_);
    free_at_ = start + busy;
    return free_at_;
}

} // namespace decentran::sim
