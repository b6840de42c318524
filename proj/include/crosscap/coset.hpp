#pragma once

// Todd-Coxeter coset enumeration (HLT strategy with row filling and full
// coincidence processing).  Deterministic: cosets are introduced in
// first-use order, relators scanned in presentation order.  Enumeration
// never claims a group is infinite; it either closes or overflows.

#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <vector>

#include "crosscap/errors.hpp"
#include "crosscap/presentation.hpp"

namespace crosscap {

struct CosetTable {
    enum class Status { closed, overflowed };

    Status status = Status::overflowed;
    std::size_t num_generators = 0;
    // row per live coset (0 = subgroup coset), 2 columns per generator:
    // 2i = action of generator i+1, 2i+1 = action of its inverse; -1 = undefined
    std::vector<std::vector<int>> rows;

    std::size_t index() const { return rows.size(); }

    // signed 1-based generator -> column
    static std::size_t column(int signed_gen) {
        std::size_t i = static_cast<std::size_t>(signed_gen > 0 ? signed_gen : -signed_gen) - 1;
        return 2 * i + (signed_gen > 0 ? 0 : 1);
    }

    int step(int coset, int signed_gen) const {
        return rows.at(static_cast<std::size_t>(coset)).at(column(signed_gen));
    }

    int trace(int coset, const std::vector<int>& word) const {
        for (int s : word) coset = step(coset, s);
        return coset;
    }
};

namespace detail {

class Enumerator {
public:
    Enumerator(std::size_t num_generators, std::size_t max_cosets)
        : ncols_(2 * num_generators), max_cosets_(max_cosets) {
        new_coset();
    }

    bool overflowed() const { return overflowed_; }
    std::size_t defined() const { return tab_.size(); }

    bool alive(std::size_t a) const { return p_[a] == a; }

    std::size_t rep(std::size_t a) const {
        while (p_[a] != a) a = p_[a];
        return a;
    }

    int get(std::size_t a, std::size_t col) const { return tab_[a][col]; }

    // scan word w (columns precomputed) at coset a, defining cosets to fill gaps
    void scan_and_fill(std::size_t a, const std::vector<std::size_t>& w) {
        if (w.empty()) return;
        std::size_t f = a, b = a;
        std::size_t i = 0, j = w.size() - 1;
        for (;;) {
            while (i <= j && tab_[f][w[i]] >= 0) {
                f = static_cast<std::size_t>(tab_[f][w[i]]);
                if (i == j) {
                    if (f != b) coincidence(f, b);
                    return;
                }
                ++i;
            }
            while (j >= i && tab_[b][w[j] ^ 1] >= 0) {
                b = static_cast<std::size_t>(tab_[b][w[j] ^ 1]);
                if (j == i) {
                    coincidence(f, b);
                    return;
                }
                --j;
            }
            if (i == j) {   // deduction closes the cycle
                set(f, w[i], b);
                return;
            }
            if (overflowed_) return;
            define(f, w[i]);
        }
    }

    void fill_row(std::size_t a) {
        for (std::size_t col = 0; col < ncols_ && !overflowed_; ++col)
            if (tab_[a][col] < 0) define(a, col);
    }

    // renumber live cosets in definition order
    CosetTable compress() const {
        CosetTable t;
        t.num_generators = ncols_ / 2;
        std::vector<int> newid(tab_.size(), -1);
        for (std::size_t a = 0; a < tab_.size(); ++a)
            if (alive(a)) {
                newid[a] = static_cast<int>(t.rows.size());
                t.rows.emplace_back();
            }
        std::size_t out = 0;
        for (std::size_t a = 0; a < tab_.size(); ++a) {
            if (!alive(a)) continue;
            auto& row = t.rows[out++];
            row.assign(ncols_, -1);
            for (std::size_t col = 0; col < ncols_; ++col)
                if (tab_[a][col] >= 0)
                    row[col] = newid[static_cast<std::size_t>(tab_[a][col])];
        }
        t.status = CosetTable::Status::closed;
        return t;
    }

private:
    void new_coset() {
        if (tab_.size() >= max_cosets_) {
            overflowed_ = true;
            return;
        }
        tab_.emplace_back(ncols_, -1);
        p_.push_back(tab_.size() - 1);
    }

    void set(std::size_t a, std::size_t col, std::size_t b) {
        tab_[a][col] = static_cast<int>(b);
        tab_[b][col ^ 1] = static_cast<int>(a);
    }

    void define(std::size_t a, std::size_t col) {
        new_coset();
        if (overflowed_) return;
        set(a, col, tab_.size() - 1);
    }

    void merge(std::size_t a, std::size_t b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        p_[b] = a;
        queue_.push(b);
    }

    void coincidence(std::size_t a, std::size_t b) {
        merge(a, b);
        while (!queue_.empty()) {
            std::size_t dead = queue_.front();
            queue_.pop();
            for (std::size_t col = 0; col < ncols_; ++col) {
                if (tab_[dead][col] < 0) continue;
                std::size_t target = static_cast<std::size_t>(tab_[dead][col]);
                tab_[target][col ^ 1] = -1;
                std::size_t u = rep(dead), v = rep(target);
                if (tab_[u][col] >= 0)
                    merge(v, static_cast<std::size_t>(tab_[u][col]));
                else if (tab_[v][col ^ 1] >= 0)
                    merge(u, static_cast<std::size_t>(tab_[v][col ^ 1]));
                else
                    set(u, col, v);
            }
        }
    }

    std::size_t ncols_;
    std::size_t max_cosets_;
    bool overflowed_ = false;
    std::vector<std::vector<int>> tab_;
    std::vector<std::size_t> p_;
    std::queue<std::size_t> queue_;
};

inline std::vector<std::size_t> to_columns(const std::vector<int>& word,
                                           std::size_t num_generators) {
    std::vector<std::size_t> cols;
    for (int s : word) {
        if (s == 0 || static_cast<std::size_t>(s > 0 ? s : -s) > num_generators)
            throw validation_error("word letter " + std::to_string(s) +
                                   " outside the generator alphabet");
        cols.push_back(CosetTable::column(s));
    }
    return cols;
}

} // namespace detail

inline CosetTable todd_coxeter(const FlatPresentation& p,
                               const std::vector<std::vector<int>>& subgroup,
                               std::size_t max_cosets) {
    const std::size_t n = p.names.size();
    std::vector<std::vector<std::size_t>> rel_cols, sub_cols;
    for (const auto& r : p.relators) rel_cols.push_back(detail::to_columns(r, n));
    for (const auto& w : subgroup) sub_cols.push_back(detail::to_columns(w, n));

    detail::Enumerator e(n, max_cosets);
    for (const auto& w : sub_cols) {
        e.scan_and_fill(0, w);
        if (e.overflowed()) break;
    }
    for (std::size_t a = 0; a < e.defined() && !e.overflowed(); ++a) {
        if (!e.alive(a)) continue;
        for (const auto& r : rel_cols) {
            e.scan_and_fill(a, r);
            if (e.overflowed() || !e.alive(a)) break;
        }
        if (!e.overflowed() && e.alive(a)) e.fill_row(a);
    }
    if (e.overflowed()) {
        CosetTable t;
        t.status = CosetTable::Status::overflowed;
        t.num_generators = n;
        return t;
    }

    CosetTable t = e.compress();
    // full verification: every relator closes at every coset, subgroup words fix coset 0
    for (const auto& row : t.rows)
        for (int entry : row)
            if (entry < 0 || static_cast<std::size_t>(entry) >= t.rows.size())
                throw error("coset table incomplete after closure");
    for (std::size_t a = 0; a < t.rows.size(); ++a)
        for (const auto& r : p.relators)
            if (t.trace(static_cast<int>(a), r) != static_cast<int>(a))
                throw error("closed coset table violates a relator");
    for (const auto& w : subgroup)
        if (t.trace(0, w) != 0)
            throw error("closed coset table violates a subgroup generator");
    return t;
}

inline std::optional<std::uint64_t> group_order(const CosetTable& t) {
    if (t.status != CosetTable::Status::closed) return std::nullopt;
    return t.rows.size();
}

struct GroupStructure {
    bool abelian = false;
    std::uint64_t exponent = 0;
};

// Structure of the finite group presented by a table over the trivial
// subgroup: coset i corresponds to the element tracing i's definition path.
inline GroupStructure analyze_structure(const CosetTable& t) {
    if (t.status != CosetTable::Status::closed)
        throw validation_error("structure analysis needs a closed table");
    const std::size_t n = t.rows.size();

    // Schreier representatives by breadth-first search from coset 0
    std::vector<std::vector<int>> rep(n);
    std::vector<bool> seen(n, false);
    seen[0] = true;
    std::queue<int> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
        int a = bfs.front();
        bfs.pop();
        for (std::size_t g = 1; g <= t.num_generators; ++g)
            for (int s : {static_cast<int>(g), -static_cast<int>(g)}) {
                int b = t.step(a, s);
                if (!seen[static_cast<std::size_t>(b)]) {
                    seen[static_cast<std::size_t>(b)] = true;
                    rep[static_cast<std::size_t>(b)] = rep[static_cast<std::size_t>(a)];
                    rep[static_cast<std::size_t>(b)].push_back(s);
                    bfs.push(b);
                }
            }
    }
    for (bool s : seen)
        if (!s) throw error("coset table is not transitive");

    auto mult = [&](int i, int j) { return t.trace(i, rep[static_cast<std::size_t>(j)]); };

    GroupStructure out;
    out.abelian = true;
    for (std::size_t i = 0; i < n && out.abelian; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (mult(static_cast<int>(i), static_cast<int>(j)) !=
                mult(static_cast<int>(j), static_cast<int>(i))) {
                out.abelian = false;
                break;
            }
    out.exponent = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t order = 1;
        int acc = static_cast<int>(i);
        while (acc != 0) {
            acc = mult(acc, static_cast<int>(i));
            ++order;
        }
        out.exponent = std::lcm(out.exponent, order);
    }
    return out;
}

} // namespace crosscap
