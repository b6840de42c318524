#pragma once

// Dense GF(2) vectors and matrices, sized for first homology of a surface.
// Vectors are bit-packed into a single word; the mod-2 intersection form on
// the crosscap basis is the identity, so the pairing is just a parity dot.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "crosscap/errors.hpp"

namespace crosscap {

class Z2Vector {
public:
    Z2Vector() = default;

    Z2Vector(int len, std::uint64_t bits) : len_(len), bits_(bits) {
        if (len < 0 || len > 64)
            throw validation_error("Z2Vector length must be in [0,64], got " + std::to_string(len));
        if (len < 64 && (bits >> len) != 0)
            throw validation_error("Z2Vector has bits beyond its length");
    }

    static Z2Vector zero(int len) { return Z2Vector(len, 0); }

    // basis vector e_i, 1-based
    static Z2Vector basis(int len, int i) {
        if (i < 1 || i > len)
            throw validation_error("basis index " + std::to_string(i) + " out of range");
        return Z2Vector(len, std::uint64_t{1} << (i - 1));
    }

    int size() const { return len_; }
    std::uint64_t bits() const { return bits_; }
    bool bit(int i) const { return ((bits_ >> (i - 1)) & 1) != 0; } // 1-based
    int popcount() const { return std::popcount(bits_); }
    bool is_zero() const { return bits_ == 0; }

    Z2Vector operator+(const Z2Vector& o) const {
        require_same_size(o);
        return Z2Vector(len_, bits_ ^ o.bits_);
    }

    bool operator==(const Z2Vector& o) const = default;

    // mod-2 intersection pairing; the form is the identity on this basis
    friend int dot(const Z2Vector& a, const Z2Vector& b) {
        a.require_same_size(b);
        return std::popcount(a.bits_ & b.bits_) & 1;
    }

    int self_pairing() const { return popcount() & 1; }

    // "0110" style, coordinate 1 first
    std::string to_string() const {
        std::string s(static_cast<std::size_t>(len_), '0');
        for (int i = 1; i <= len_; ++i)
            if (bit(i)) s[static_cast<std::size_t>(i - 1)] = '1';
        return s;
    }

    static Z2Vector from_string(const std::string& s) {
        if (s.size() > 64) throw validation_error("bit string longer than 64");
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                bits |= std::uint64_t{1} << i;
            else if (s[i] != '0')
                throw validation_error("bit string must be over {0,1}: " + s);
        }
        return Z2Vector(static_cast<int>(s.size()), bits);
    }

private:
    void require_same_size(const Z2Vector& o) const {
        if (len_ != o.len_) throw validation_error("Z2Vector size mismatch");
    }

    int len_ = 0;
    std::uint64_t bits_ = 0;
};

class Z2Matrix {
public:
    Z2Matrix() = default;

    explicit Z2Matrix(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
        if (n < 0 || n > 64) throw validation_error("Z2Matrix size must be in [0,64]");
    }

    static Z2Matrix identity(int n) {
        Z2Matrix m(n);
        for (int i = 0; i < n; ++i) m.rows_[static_cast<std::size_t>(i)] = std::uint64_t{1} << i;
        return m;
    }

    // I + v v^T: x |-> x + <x,v> v.  Only isotropic vectors (<v,v> = 0) give a
    // form-preserving involution; for <v,v> = 1 the map kills v outright, so
    // building it is always an error in this model.
    static Z2Matrix transvection(const Z2Vector& v) {
        if (v.self_pairing() != 0)
            throw validation_error("transvection vector must have even weight");
        Z2Matrix m = identity(v.size());
        for (int i = 1; i <= v.size(); ++i)
            if (v.bit(i)) m.rows_[static_cast<std::size_t>(i - 1)] ^= v.bits();
        return m;
    }

    int size() const { return n_; }

    bool entry(int i, int j) const { // 1-based
        return ((rows_[static_cast<std::size_t>(i - 1)] >> (j - 1)) & 1) != 0;
    }

    Z2Vector apply(const Z2Vector& x) const {
        if (x.size() != n_) throw validation_error("matrix/vector size mismatch");
        std::uint64_t out = 0;
        for (int i = 0; i < n_; ++i)
            out |= static_cast<std::uint64_t>(std::popcount(rows_[static_cast<std::size_t>(i)] & x.bits()) & 1) << i;
        return Z2Vector(n_, out);
    }

    Z2Vector column(int j) const { // 1-based: image of e_j
        std::uint64_t out = 0;
        for (int i = 0; i < n_; ++i)
            out |= ((rows_[static_cast<std::size_t>(i)] >> (j - 1)) & 1) << i;
        return Z2Vector(n_, out);
    }

    Z2Matrix operator*(const Z2Matrix& o) const {
        if (n_ != o.n_) throw validation_error("matrix size mismatch");
        Z2Matrix out(n_);
        for (int i = 0; i < n_; ++i) {
            std::uint64_t acc = 0;
            std::uint64_t row = rows_[static_cast<std::size_t>(i)];
            while (row != 0) {
                int j = std::countr_zero(row);
                row &= row - 1;
                acc ^= o.rows_[static_cast<std::size_t>(j)];
            }
            out.rows_[static_cast<std::size_t>(i)] = acc;
        }
        return out;
    }

    Z2Matrix transpose() const {
        Z2Matrix out(n_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                if (entry(i, j)) out.rows_[static_cast<std::size_t>(j - 1)] |= std::uint64_t{1} << (i - 1);
        return out;
    }

    Z2Matrix inverse() const {
        // Gauss-Jordan on [M | I]
        std::vector<std::uint64_t> a(rows_), inv(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) inv[static_cast<std::size_t>(i)] = std::uint64_t{1} << i;
        for (int col = 0; col < n_; ++col) {
            int pivot = -1;
            for (int r = col; r < n_; ++r)
                if ((a[static_cast<std::size_t>(r)] >> col) & 1) { pivot = r; break; }
            if (pivot < 0) throw validation_error("matrix is singular over GF(2)");
            std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(pivot)]);
            std::swap(inv[static_cast<std::size_t>(col)], inv[static_cast<std::size_t>(pivot)]);
            for (int r = 0; r < n_; ++r) {
                if (r != col && ((a[static_cast<std::size_t>(r)] >> col) & 1)) {
                    a[static_cast<std::size_t>(r)] ^= a[static_cast<std::size_t>(col)];
                    inv[static_cast<std::size_t>(r)] ^= inv[static_cast<std::size_t>(col)];
                }
            }
        }
        Z2Matrix out(n_);
        out.rows_ = inv;
        return out;
    }

    bool is_identity() const { return *this == identity(n_); }

    bool operator==(const Z2Matrix& o) const = default;

    // n rows of bit strings
    std::string to_string() const {
        std::string s;
        for (int i = 0; i < n_; ++i) {
            Z2Vector row(n_, rows_[static_cast<std::size_t>(i)]);
            s += row.to_string();
            if (i + 1 < n_) s += '\n';
        }
        return s;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> rows_; // rows_[i] bit j = entry (i,j), 0-based
};

} // namespace crosscap
