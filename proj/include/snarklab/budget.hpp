#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace snarklab {

/// Search budget. Node limits are deterministic; the wall-clock limit is not.
/// Zero means unlimited.
struct Budget {
  std::uint64_t max_nodes = 0;
  double max_seconds = 0.0;

  static Budget unlimited() { return {}; }
  static Budget nodes(std::uint64_t n) { return {n, 0.0}; }
  static Budget seconds(double s) { return {0, s}; }
};

class BudgetMeter {
 public:
  explicit BudgetMeter(const Budget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

  /// Counts one search node. Returns false once the budget is spent.
  bool tick() {
    if (exhausted_) return false;
    ++nodes_;
    if (budget_.max_nodes && nodes_ > budget_.max_nodes) exhausted_ = true;
    if (budget_.max_seconds > 0 && (nodes_ & 1023) == 0) {
      std::chrono::duration<double> el = std::chrono::steady_clock::now() - start_;
      if (el.count() > budget_.max_seconds) exhausted_ = true;
    }
    return !exhausted_;
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

/// Outcome of a visitor-driven enumeration.
struct Enumeration {
  std::uint64_t count = 0;
  bool truncated = false;  // budget ran out before the stream ended
  bool stopped = false;    // visitor asked to stop
};

enum class Status { exact, bounded };

inline const char* to_string(Status s) { return s == Status::exact ? "exact" : "bounded"; }

/// Exact value, or an interval [lower, upper] when the budget ran out. The
/// certificate, when present, witnesses `upper`.
template <class Certificate>
struct MeasureResult {
  Status status = Status::bounded;
  int lower = 0;
  int upper = 0;
  std::optional<Certificate> certificate;
  std::uint64_t nodes = 0;

  bool is_exact() const { return status == Status::exact; }
  int value() const {
    if (!is_exact()) throw std::logic_error("bounded result has no exact value");
    return upper;
  }
};

}  // namespace snarklab
