// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <cstddef>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <utility>

namespace tangency {

struct MemoStats {
  std::size_t entries = 0;
  std::size_t hits = 0;
  std::size_t misses = 0;
};

/// Map guarded by a reader/writer lock. Lookups share the lock; the first
/// insertion of a key wins and later duplicates are discarded, so concurrent
/// workers that race on the same key still agree on the stored value.
template <class Key, class Value, class Map>
class Memo {
 public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) {
      misses_.fetch_add(1, std::memory_order_relaxed);
      return std::nullopt;
    }
    hits_.fetch_add(1, std::memory_order_relaxed);
    return it->second;
  }

  void insert(const Key& key, Value value) {
    std::unique_lock lock(mutex_);
    map_.try_emplace(key, std::move(value));
  }

  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

  MemoStats stats() const {
    std::shared_lock lock(mutex_);
    return {map_.size(), hits_.load(), misses_.load()};
  }

 private:
  mutable std::shared_mutex mutex_;
  Map map_;
  mutable std::atomic<std::size_t> hits_{0};
  mutable std::atomic<std::size_t> misses_{0};
};

}  // namespace tangency
