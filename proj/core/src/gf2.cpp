#include "matchorient/gf2.hpp"

#include <bit>

namespace matchorient {

std::size_t Gf2Vector::popcount() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::optional<std::size_t> Gf2Vector::first_set() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i]) {
            std::size_t bit = i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
            return bit < bits_ ? std::optional<std::size_t>(bit) : std::nullopt;
        }
    }
    return std::nullopt;
}

bool Gf2Vector::dot(const Gf2Vector& o) const {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
    return std::popcount(acc) & 1;
}

std::vector<std::size_t> Gf2Vector::set_bits() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < bits_; ++i)
        if (get(i)) out.push_back(i);
    return out;
}

Gf2SolveResult gf2_solve(std::vector<Gf2Vector> rows, Gf2Vector rhs, std::size_t cols) {
    const std::size_t m = rows.size();
    std::vector<Gf2Vector> combo(m);
    std::vector<bool> b(m);
    for (std::size_t i = 0; i < m; ++i) {
        combo[i] = Gf2Vector(m);
        combo[i].set(i, true);
        b[i] = rhs.get(i);
    }

    std::vector<std::size_t> pivot_col_of_row;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < m; ++col) {
        std::size_t pivot = m;
        for (std::size_t r = rank; r < m; ++r) {
            if (rows[r].get(col)) {
                pivot = r;
                break;
            }
        }
        if (pivot == m) continue;
        std::swap(rows[rank], rows[pivot]);
        std::swap(combo[rank], combo[pivot]);
        std::swap(b[rank], b[pivot]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r != rank && rows[r].get(col)) {
                rows[r] ^= rows[rank];
                combo[r] ^= combo[rank];
                b[r] = b[r] ^ b[rank];
            }
        }
        pivot_col_of_row.push_back(col);
        ++rank;
    }

    Gf2SolveResult res;
    res.rank = rank;
    res.feasible = true;
    for (std::size_t r = rank; r < m; ++r) {
        res.left_null_basis.push_back(combo[r]);
        if (b[r] && res.feasible) {
            res.feasible = false;
            res.infeasible_combination = combo[r];
        }
    }
    if (res.feasible) {
        res.solution = Gf2Vector(cols);
        for (std::size_t r = 0; r < rank; ++r)
            if (b[r]) res.solution.set(pivot_col_of_row[r], true);
    }
    return res;
}

bool gf2_in_span(const std::vector<Gf2Vector>& basis, const Gf2Vector& target) {
    std::vector<Gf2Vector> reduced;
    std::vector<std::size_t> lead;
    auto reduce = [&](Gf2Vector v) {
        bool progress = true;
        while (progress) {
            progress = false;
            auto fs = v.first_set();
            if (!fs) break;
            for (std::size_t i = 0; i < reduced.size(); ++i) {
                if (lead[i] == *fs) {
                    v ^= reduced[i];
                    progress = true;
                    break;
                }
            }
        }
        return v;
    };
    for (const Gf2Vector& b : basis) {
        Gf2Vector v = reduce(b);
        if (auto fs = v.first_set()) {
            reduced.push_back(std::move(v));
            lead.push_back(*fs);
        }
    }
    return !reduce(target).any();
}

}  // namespace matchorient
