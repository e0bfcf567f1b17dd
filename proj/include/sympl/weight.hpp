#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "sympl/rational.hpp"

namespace sympl {

/// A point of t* with exact rational coordinates.
///
/// For the type A realization the coordinates are the trace-zero coordinates
/// of R^{r+1}; for a generic Cartan matrix they are the pairings with the
/// simple coroots (coordinates in the fundamental-weight basis).
struct Weight {
    std::vector<QQ> c;

    Weight() = default;
    explicit Weight(std::size_t n) : c(n) {}
    Weight(std::initializer_list<QQ> init) : c(init) {}
    explicit Weight(std::vector<QQ> coords) : c(std::move(coords)) {}

    std::size_t size() const { return c.size(); }
    QQ& operator[](std::size_t i) { return c[i]; }
    const QQ& operator[](std::size_t i) const { return c[i]; }

    bool operator==(const Weight& o) const { return c == o.c; }
    bool operator!=(const Weight& o) const { return c != o.c; }

    Weight& operator+=(const Weight& o) {
        check_size(o);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        check_size(o);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
        return *this;
    }
    Weight& operator*=(const QQ& s) {
        for (auto& x : c) x *= s;
        return *this;
    }

    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(const QQ& s, Weight a) { return a *= s; }

    bool is_zero() const {
        for (const auto& x : c)
            if (x != 0) return false;
        return true;
    }

    /// Standard dot product (the invariant inner product in trace-zero coordinates).
    QQ dot(const Weight& o) const {
        check_size(o);
        QQ s = 0;
        for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * o.c[i];
        return s;
    }

    QQ coordinate_sum() const {
        QQ s = 0;
        for (const auto& x : c) s += x;
        return s;
    }

    std::vector<double> to_doubles() const {
        std::vector<double> v;
        v.reserve(c.size());
        for (const auto& x : c) v.push_back(to_double(x));
        return v;
    }

private:
    void check_size(const Weight& o) const {
        if (c.size() != o.c.size()) throw std::invalid_argument("weight dimension mismatch");
    }
};

}  // namespace sympl
