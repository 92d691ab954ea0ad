#ifndef FDRES_DOMAIN_HPP
#define FDRES_DOMAIN_HPP

#include <cstdint>
#include <vector>

namespace fdres {

enum class RemoveResult {
    Unchanged,  // value was not a member
    Changed,    // value removed, domain still non-empty
    Empty       // value was the last member; domain left untouched, caller must fail
};

// Finite set of integers over a fixed universe [lo, hi], bitset-backed.
// A Domain is never observably empty: remove() refuses to drop the last
// value and reports Empty instead, so failure is always signalled by the
// operation that caused it.
class Domain {
public:
    Domain(int lo, int hi);

    bool contains(int v) const;
    int size() const { return size_; }
    int min() const { return min_; }
    int max() const { return max_; }
    bool fixed() const { return size_ == 1; }
    int value() const { return min_; }  // only meaningful when fixed()

    RemoveResult remove(int v);

    // Re-adds a previously removed value. Trail rollback support; normal
    // search code never widens a domain.
    void insert(int v);

    std::vector<int> values() const;

    bool operator==(const Domain& other) const;
    bool operator!=(const Domain& other) const { return !(*this == other); }

    // true iff every value of this domain is a member of `other`
    bool subset_of(const Domain& other) const;

private:
    bool in_universe(int v) const { return v >= lo_ && v <= hi_; }
    void recompute_bounds();

    int lo_, hi_;
    int size_;
    int min_, max_;
    std::vector<std::uint64_t> words_;
};

}  // namespace fdres

#endif
