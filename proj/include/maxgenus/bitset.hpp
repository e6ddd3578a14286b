#pragma once

#include <cstdint>
#include <vector>

namespace maxgenus {

// Fixed-capacity dynamic bitset over dense indices. Used for edge subsets
// and cycle vertex sets; intersection tests are word-wise with early exit.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int capacity)
        : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

    int capacity() const { return capacity_; }

    void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : words_) if (w) return true;
        return false;
    }

    bool intersects(const Bitset& other) const {
        size_t k = words_.size() < other.words_.size() ? words_.size()
                                                       : other.words_.size();
        for (size_t i = 0; i < k; ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& other) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t rhs = i < other.words_.size() ? other.words_[i] : 0;
            if (words_[i] & ~rhs) return false;
        }
        return true;
    }

    Bitset complement() const {
        Bitset r(capacity_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    bool operator==(const Bitset& other) const {
        return capacity_ == other.capacity_ && words_ == other.words_;
    }

    // Ascending set-index traversal.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (size_t wi = 0; wi < words_.size(); ++wi) {
            uint64_t w = words_[wi];
            while (w) {
                int bit = __builtin_ctzll(w);
                fn(static_cast<int>(wi * 64 + bit));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

private:
    void trim() {
        if (capacity_ & 63)
            words_.back() &= (uint64_t{1} << (capacity_ & 63)) - 1;
    }

    int capacity_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace maxgenus
