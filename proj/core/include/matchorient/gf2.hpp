#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace matchorient {

// Dense bit vector over GF(2), packed into 64-bit words.
class Gf2Vector {
  public:
    Gf2Vector() = default;
    explicit Gf2Vector(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    Gf2Vector& operator^=(const Gf2Vector& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    std::size_t popcount() const;
    std::optional<std::size_t> first_set() const;

    // <a,b> over GF(2).
    bool dot(const Gf2Vector& o) const;

    std::vector<std::size_t> set_bits() const;

    friend bool operator==(const Gf2Vector& a, const Gf2Vector& b) {
        return a.bits_ == b.bits_ && a.words_ == b.words_;
    }

  private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

struct Gf2SolveResult {
    bool feasible = false;
    // Valid iff feasible: one solution of A x = b with free variables set to 0.
    Gf2Vector solution;
    // Valid iff !feasible: first row combination y with y^T A = 0, y.b = 1.
    Gf2Vector infeasible_combination;
    // Row combinations y with y^T A = 0, independent of b; deterministic order.
    std::vector<Gf2Vector> left_null_basis;
    std::size_t rank = 0;
};

// Solves A x = b over GF(2) by row reduction with leftmost-column pivoting,
// tracking row combinations so that infeasibility and the left null space
// come out as certificates over the original rows.
Gf2SolveResult gf2_solve(std::vector<Gf2Vector> rows, Gf2Vector rhs, std::size_t cols);

// True iff target is in the span of basis.
bool gf2_in_span(const std::vector<Gf2Vector>& basis, const Gf2Vector& target);

}  // namespace matchorient
