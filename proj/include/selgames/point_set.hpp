#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace selgames {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

/// A constructed value violates one of its type invariants. The message names the invariant.
class InvariantError : public Error {
public:
    using Error::Error;
};

class IllegalMove : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded() : Error("budget exceeded") {}
};

inline constexpr int kMaxPoints = 64;

/// A set of points of a finite space, stored as a bit-vector (bit i = point i).
/// Ordering is by the integer value of the bit-vector; this is the canonical set order.
class PointSet {
public:
    constexpr PointSet() = default;
    constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}
    PointSet(std::initializer_list<int> points) {
        for (int p : points) insert(p);
    }

    static PointSet from_points(const std::vector<int>& points) {
        PointSet s;
        for (int p : points) s.insert(p);
        return s;
    }
    static constexpr PointSet full(int n) {
        return PointSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    static constexpr PointSet singleton(int p) { return PointSet(std::uint64_t{1} << p); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int p) const { return (bits_ >> p) & 1U; }
    constexpr bool subset_of(PointSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(PointSet o) const { return (bits_ & o.bits_) != 0; }
    /// Least member; undefined on the empty set.
    constexpr int min() const { return std::countr_zero(bits_); }
    /// Greatest member + 1 (0 for the empty set).
    constexpr int bound() const { return 64 - std::countl_zero(bits_); }

    void insert(int p) {
        if (p < 0 || p >= kMaxPoints) throw RangeError("point " + std::to_string(p) + " out of range");
        bits_ |= std::uint64_t{1} << p;
    }
    void erase(int p) { bits_ &= ~(std::uint64_t{1} << p); }

    constexpr PointSet operator|(PointSet o) const { return PointSet(bits_ | o.bits_); }
    constexpr PointSet operator&(PointSet o) const { return PointSet(bits_ & o.bits_); }
    constexpr PointSet operator-(PointSet o) const { return PointSet(bits_ & ~o.bits_); }
    PointSet& operator|=(PointSet o) { bits_ |= o.bits_; return *this; }
    PointSet& operator&=(PointSet o) { bits_ &= o.bits_; return *this; }
    PointSet& operator-=(PointSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr auto operator<=>(const PointSet&) const = default;

    std::vector<int> points() const {
        std::vector<int> out;
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
    }

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for_each([&](int p) {
            if (!first) s += ",";
            s += std::to_string(p);
            first = false;
        });
        return s + "}";
    }

private:
    std::uint64_t bits_ = 0;
};

struct PointSetHash {
    std::size_t operator()(PointSet s) const noexcept {
        std::uint64_t x = s.bits() * 0x9E3779B97F4A7C15ULL;
        return static_cast<std::size_t>(x ^ (x >> 29));
    }
};

/// Sorts ascending in canonical order and removes duplicates.
void canonicalize(std::vector<PointSet>& family);

/// Union of all members.
PointSet union_of(const std::vector<PointSet>& family);

}  // namespace selgames
