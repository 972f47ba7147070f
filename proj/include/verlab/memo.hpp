#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>

namespace verlab::detail {

/// Write-once memo table. Entries are never erased, so references handed out
/// stay valid for the life of the table. Concurrent inserts of the same key
/// keep whichever value landed first; callers only ever insert identical values.
template <class Key, class Value>
class MemoTable {
public:
    template <class Compute>
    const Value& get_or_compute(const Key& key, Compute&& compute)
    {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end())
                return it->second;
        }
        Value value = compute();
        std::unique_lock lock(mutex_);
        return table_.try_emplace(key, std::move(value)).first->second;
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, Value> table_;
};

} // namespace verlab::detail
