#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace lscat {

/// Fixed-length vector over the two-element field, packed 64 bits per word.
class BitVec {
  public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    BitVec() = default;
    explicit BitVec(std::size_t length);
    BitVec(std::initializer_list<int> bits);

    static BitVec unit(std::size_t length, std::size_t index);

    std::size_t size() const { return length_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool is_zero() const;
    std::size_t popcount() const;

    /// Index of the first set bit at or after `from`, or npos.
    std::size_t find_next(std::size_t from) const;
    std::size_t find_first() const { return find_next(0); }

    /// Indices of all set bits in increasing order.
    std::vector<std::size_t> ones() const;

    BitVec& operator^=(const BitVec& other);
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    bool operator==(const BitVec& other) const = default;

    /// Inner product (mod 2).
    bool dot(const BitVec& other) const;

    std::string to_string() const;

  private:
    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense row-major matrix over GF(2).
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);
    BitMatrix(std::initializer_list<std::initializer_list<int>> rows);

    static BitMatrix identity(std::size_t n);
    /// Rows given explicitly; every row must have length `cols`.
    static BitMatrix from_rows(std::vector<BitVec> rows, std::size_t cols);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }

    const BitVec& row(std::size_t r) const { return rows_[r]; }
    BitVec column(std::size_t c) const;
    void append_row(BitVec row);
    void swap_rows(std::size_t a, std::size_t b) { std::swap(rows_[a], rows_[b]); }
    /// rows[dst] += rows[src]
    void add_row(std::size_t src, std::size_t dst) { rows_[dst] ^= rows_[src]; }

    BitMatrix transpose() const;
    /// Matrix-vector product; `v.size()` must equal cols().
    BitVec apply(const BitVec& v) const;

    bool operator==(const BitMatrix& other) const = default;
    friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);

    std::string to_string() const;

  private:
    std::size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

std::size_t rank(const BitMatrix& m);

/// True iff `v` is a GF(2) combination of the rows of `basis`.
/// Throws std::invalid_argument if the lengths differ.
bool in_span(const BitVec& v, const BitMatrix& basis);

/// Treats `m` as a linear map on column vectors (source dimension = cols).
bool is_injective(const BitMatrix& m);

/// Incrementally maintained row-echelon basis of a subspace of GF(2)^n.
/// Each stored vector has a distinct pivot (its lowest set bit) and has been
/// reduced against all earlier pivots.
class EchelonBasis {
  public:
    explicit EchelonBasis(std::size_t length);

    std::size_t length() const { return length_; }
    std::size_t size() const { return vectors_.size(); }
    bool empty() const { return vectors_.empty(); }

    /// Reduces `v` in place; it becomes zero iff it was in the span.
    void reduce(BitVec& v) const;
    bool contains(BitVec v) const;
    /// Adds `v` to the span; returns false if it was already there.
    bool insert(BitVec v);

    const std::vector<BitVec>& vectors() const { return vectors_; }

  private:
    std::size_t length_;
    std::vector<BitVec> vectors_;
    std::vector<std::size_t> pivot_row_;  // column -> row in vectors_, or npos
};

}  // namespace lscat
