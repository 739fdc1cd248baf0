#pragma once

#include <string>
#include <vector>

#include "mero/mpoly.hpp"
#include "mero/rat.hpp"

namespace mero {

/// Univariate polynomial in the formal parameter s over Q. Leading
/// coefficient nonzero unless the zero polynomial.
class SPoly {
public:
    SPoly() = default;
    explicit SPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static SPoly constant(const Rat& c) { return SPoly({c}); }
    /// s + a
    static SPoly linear(const Rat& a) { return SPoly({a, Rat(1)}); }

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return (int)c_.size() - 1; }

    Rat eval(const Rat& s0) const;
    SPoly operator*(const SPoly& o) const;
    SPoly operator+(const SPoly& o) const;
    bool operator==(const SPoly& o) const { return c_ == o.c_; }

    /// As a polynomial over vars, with s at position s_index.
    MPoly to_mpoly(const std::vector<std::string>& vars, size_t s_index) const;
    /// From a polynomial that only involves the variable at s_index.
    static SPoly from_mpoly(const MPoly& p, size_t s_index);

    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;  // c_[k] is the coefficient of s^k
};

}  // namespace mero
