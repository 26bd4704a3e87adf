#include "gateway/rate_limit.hpp"

#include <thread>

namespace trialkit::gateway {

RateLimiter::RateLimiter(size_t per_second, std::shared_ptr<Clock> clock)
    : per_second_(per_second), clock_(clock ? std::move(clock) : std::make_shared<SteadyClock>()) {}

void RateLimiter::acquire() {
  if (per_second_ == 0) return; // unlimited
  using namespace std::chrono;
  for (;;) {
    Clock::time_point wait_until;
    {
      std::lock_guard lock(mu_);
      auto now = clock_->now();
      while (!window_.empty() && now - window_.front() >= seconds(1)) {
        window_.pop_front();
      }
      if (window_.size() < per_second_) {
        window_.push_back(now);
        return;
      }
      wait_until = window_.front() + seconds(1);
    }
    clock_->sleep_until(wait_until);
  }
}

InflightLimiter::InflightLimiter(size_t max_in_flight)
    : max_(max_in_flight == 0 ? SIZE_MAX : max_in_flight) {}

InflightLimiter::Token InflightLimiter::enter() {
  std::unique_lock lock(mu_);
  cv_.wait(lock, [&] { return active_ < max_; });
  ++active_;
  peak_ = std::max(peak_, active_);
  return Token(this);
}

void InflightLimiter::leave() {
  {
    std::lock_guard lock(mu_);
    --active_;
  }
  cv_.notify_one();
}

size_t InflightLimiter::peak() const {
  std::lock_guard lock(mu_);
  return peak_;
}

InflightLimiter::Token::~Token() {
  if (owner_ != nullptr) owner_->leave();
}

} // namespace trialkit::gateway
