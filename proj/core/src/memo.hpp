#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

namespace prelie::detail {

/// String-keyed cache safe under concurrent lookup and insertion. Values are
/// computed outside the lock; a racing duplicate insert keeps the first value.
template <typename Value>
class Memo {
 public:
  std::optional<Value> find(const std::string& key) const {
    std::lock_guard lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const std::string& key, const Value& value) {
    std::lock_guard lock(mutex_);
    map_.try_emplace(key, value);
  }

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, Value> map_;
};

}  // namespace prelie::detail
