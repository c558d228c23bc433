#pragma once

#include <cstdint>
#include <cstring>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace gridtwin {

/// Simulation time in integer microseconds. All schedulers, timers and
/// output timestamps use this base; wall clock never enters the run.
using SimTime = std::int64_t;

constexpr SimTime kMicrosPerSecond = 1'000'000;

inline SimTime seconds_to_sim(double s) {
  return static_cast<SimTime>(s * static_cast<double>(kMicrosPerSecond) + 0.5);
}
inline double sim_to_seconds(SimTime t) {
  return static_cast<double>(t) / static_cast<double>(kMicrosPerSecond);
}

using Bytes = std::vector<std::uint8_t>;

/// FNV-1a 64-bit, used for blob integrity tags.
inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

class ByteWriter {
public:
  void u8(std::uint8_t v) { buf_.push_back(v); }
  void u16le(std::uint16_t v) {
    buf_.push_back(static_cast<std::uint8_t>(v & 0xFF));
    buf_.push_back(static_cast<std::uint8_t>(v >> 8));
  }
  void u16be(std::uint16_t v) {
    buf_.push_back(static_cast<std::uint8_t>(v >> 8));
    buf_.push_back(static_cast<std::uint8_t>(v & 0xFF));
  }
  void u24le(std::uint32_t v) {
    buf_.push_back(static_cast<std::uint8_t>(v & 0xFF));
    buf_.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
    buf_.push_back(static_cast<std::uint8_t>((v >> 16) & 0xFF));
  }
  void u32le(std::uint32_t v) {
    u16le(static_cast<std::uint16_t>(v & 0xFFFF));
    u16le(static_cast<std::uint16_t>(v >> 16));
  }
  void u32be(std::uint32_t v) {
    u16be(static_cast<std::uint16_t>(v >> 16));
    u16be(static_cast<std::uint16_t>(v & 0xFFFF));
  }
  void f32le(float v) {
    std::uint32_t bits;
    std::memcpy(&bits, &v, 4);
    u32le(bits);
  }
  void raw(const Bytes& b) { buf_.insert(buf_.end(), b.begin(), b.end()); }
  void raw(const std::uint8_t* p, std::size_t n) { buf_.insert(buf_.end(), p, p + n); }

  const Bytes& bytes() const { return buf_; }
  Bytes take() { return std::move(buf_); }
  std::size_t size() const { return buf_.size(); }

private:
  Bytes buf_;
};

/// Bounds-checked sequential reader. Reads past the end set fail() and
/// return zeros; callers check fail() once at the end of a parse.
class ByteReader {
public:
  ByteReader(const std::uint8_t* data, std::size_t size) : data_(data), size_(size) {}
  explicit ByteReader(const Bytes& b) : ByteReader(b.data(), b.size()) {}

  std::uint8_t u8() {
    if (pos_ + 1 > size_) return fail_take();
    return data_[pos_++];
  }
  std::uint16_t u16le() {
    std::uint16_t lo = u8(), hi = u8();
    return static_cast<std::uint16_t>(lo | (hi << 8));
  }
  std::uint16_t u16be() {
    std::uint16_t hi = u8(), lo = u8();
    return static_cast<std::uint16_t>(lo | (hi << 8));
  }
  std::uint32_t u24le() {
    std::uint32_t b0 = u8(), b1 = u8(), b2 = u8();
    return b0 | (b1 << 8) | (b2 << 16);
  }
  std::uint32_t u32le() {
    std::uint32_t lo = u16le(), hi = u16le();
    return lo | (hi << 16);
  }
  float f32le() {
    std::uint32_t bits = u32le();
    float v;
    std::memcpy(&v, &bits, 4);
    return v;
  }
  bool fail() const { return failed_; }
  std::size_t remaining() const { return size_ - pos_; }
  std::size_t pos() const { return pos_; }

private:
  std::uint8_t fail_take() {
    failed_ = true;
    pos_ = size_;
    return 0;
  }
  const std::uint8_t* data_;
  std::size_t size_;
  std::size_t pos_ = 0;
  bool failed_ = false;
};

/// Shared run-wide device/event log. One line per event:
///   <sim_time_s> <device_id> <severity> <event> <key=value ...>
class EventLog {
public:
  struct Line {
    SimTime t;
    std::string device;
    std::string severity;
    std::string event;
    std::string detail;
  };

  void log(SimTime t, std::string_view device, std::string_view severity,
           std::string_view event, std::string_view detail = {}) {
    lines_.push_back(Line{t, std::string(device), std::string(severity),
                          std::string(event), std::string(detail)});
  }
  void info(SimTime t, std::string_view dev, std::string_view ev, std::string_view d = {}) {
    log(t, dev, "INFO", ev, d);
  }
  void warn(SimTime t, std::string_view dev, std::string_view ev, std::string_view d = {}) {
    log(t, dev, "WARN", ev, d);
  }
  void alarm(SimTime t, std::string_view dev, std::string_view ev, std::string_view d = {}) {
    log(t, dev, "ALARM", ev, d);
  }

  const std::vector<Line>& lines() const { return lines_; }
  void write(std::ostream& os) const;

private:
  std::vector<Line> lines_;
};

}  // namespace gridtwin
