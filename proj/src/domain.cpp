#include "fdres/domain.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace fdres {

namespace {
constexpr int kWordBits = 64;
}

Domain::Domain(int lo, int hi) : lo_(lo), hi_(hi) {
    if (hi < lo)
        throw std::invalid_argument("Domain: empty initial range");
    size_ = hi - lo + 1;
    min_ = lo;
    max_ = hi;
    const int nwords = (size_ + kWordBits - 1) / kWordBits;
    words_.assign(static_cast<std::size_t>(nwords), ~std::uint64_t{0});
    // clear the unused tail bits of the last word
    const int tail = size_ % kWordBits;
    if (tail != 0)
        words_.back() = (std::uint64_t{1} << tail) - 1;
}

bool Domain::contains(int v) const {
    if (!in_universe(v))
        return false;
    const int b = v - lo_;
    return (words_[static_cast<std::size_t>(b / kWordBits)] >> (b % kWordBits)) & 1u;
}

RemoveResult Domain::remove(int v) {
    if (!contains(v))
        return RemoveResult::Unchanged;
    if (size_ == 1)
        return RemoveResult::Empty;
    const int b = v - lo_;
    words_[static_cast<std::size_t>(b / kWordBits)] &= ~(std::uint64_t{1} << (b % kWordBits));
    --size_;
    if (v == min_ || v == max_)
        recompute_bounds();
    return RemoveResult::Changed;
}

void Domain::insert(int v) {
    if (!in_universe(v))
        throw std::logic_error("Domain::insert: value outside universe");
    if (contains(v))
        return;
    const int b = v - lo_;
    words_[static_cast<std::size_t>(b / kWordBits)] |= std::uint64_t{1} << (b % kWordBits);
    ++size_;
    if (v < min_) min_ = v;
    if (v > max_) max_ = v;
}

void Domain::recompute_bounds() {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) {
            min_ = lo_ + static_cast<int>(w) * kWordBits + std::countr_zero(words_[w]);
            break;
        }
    }
    for (std::size_t w = words_.size(); w-- > 0;) {
        if (words_[w] != 0) {
            max_ = lo_ + static_cast<int>(w) * kWordBits + (kWordBits - 1 - std::countl_zero(words_[w]));
            break;
        }
    }
}

std::vector<int> Domain::values() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits != 0) {
            const int b = std::countr_zero(bits);
            out.push_back(lo_ + static_cast<int>(w) * kWordBits + b);
            bits &= bits - 1;
        }
    }
    return out;
}

bool Domain::operator==(const Domain& other) const {
    if (size_ != other.size_ || min_ != other.min_ || max_ != other.max_)
        return false;
    if (lo_ == other.lo_)
        return words_ == other.words_;
    return values() == other.values();
}

bool Domain::subset_of(const Domain& other) const {
    if (size_ > other.size_)
        return false;
    if (lo_ == other.lo_) {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if ((words_[w] & ~other.words_[w]) != 0)
                return false;
        return true;
    }
    for (int v : values())
        if (!other.contains(v))
            return false;
    return true;
}

}  // namespace fdres
