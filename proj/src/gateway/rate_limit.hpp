#pragma once

#include <chrono>
#include <condition_variable>
#include <deque>
#include <memory>
#include <mutex>

namespace trialkit::gateway {

/// Injectable time source so the limiter logic is testable without sleeping.
struct Clock {
  using time_point = std::chrono::steady_clock::time_point;
  virtual ~Clock() = default;
  virtual time_point now() = 0;
  virtual void sleep_until(time_point t) = 0;
};

struct SteadyClock : Clock {
  time_point now() override { return std::chrono::steady_clock::now(); }
  void sleep_until(time_point t) override { std::this_thread::sleep_until(t); }
};

/// Sliding 1-second window limiter: at most `per_second` acquisitions in any
/// window. Shared across workers; acquire() blocks until a slot opens.
class RateLimiter {
public:
  RateLimiter(size_t per_second, std::shared_ptr<Clock> clock = nullptr);

  void acquire();

  size_t limit() const { return per_second_; }

private:
  size_t per_second_;
  std::shared_ptr<Clock> clock_;
  std::mutex mu_;
  std::deque<Clock::time_point> window_;
};

/// Caps in-flight requests at K. RAII token.
class InflightLimiter {
public:
  explicit InflightLimiter(size_t max_in_flight);

  class Token {
  public:
    explicit Token(InflightLimiter* owner) : owner_(owner) {}
    Token(Token&& other) noexcept : owner_(other.owner_) { other.owner_ = nullptr; }
    Token(const Token&) = delete;
    ~Token();

  private:
    InflightLimiter* owner_;
  };

  Token enter();
  size_t peak() const;

private:
  friend class Token;
  void leave();

  size_t max_;
  mutable std::mutex mu_;
  std::condition_variable cv_;
  size_t active_ = 0;
  size_t peak_ = 0;
};

} // namespace trialkit::gateway
