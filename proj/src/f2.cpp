#include "lscat/f2.hpp"

#include <bit>
#include <stdexcept>

namespace lscat {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

BitVec::BitVec(std::size_t length) : length_(length), words_(word_count(length), 0) {}

BitVec::BitVec(std::initializer_list<int> bits) : BitVec(bits.size()) {
    std::size_t i = 0;
    for (int b : bits) {
        if (b & 1) set(i);
        ++i;
    }
}

BitVec BitVec::unit(std::size_t length, std::size_t index) {
    BitVec v(length);
    v.set(index);
    return v;
}

void BitVec::set(std::size_t i, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
        words_[i >> 6] |= mask;
    else
        words_[i >> 6] &= ~mask;
}

bool BitVec::is_zero() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

std::size_t BitVec::popcount() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t BitVec::find_next(std::size_t from) const {
    if (from >= length_) return npos;
    std::size_t w = from >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (word) return (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
        if (++w == words_.size()) return npos;
        word = words_[w];
    }
}

std::vector<std::size_t> BitVec::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t i = find_first(); i != npos; i = find_next(i + 1)) out.push_back(i);
    return out;
}

BitVec& BitVec::operator^=(const BitVec& other) {
    if (other.length_ != length_) throw std::invalid_argument("BitVec length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

bool BitVec::dot(const BitVec& other) const {
    if (other.length_ != length_) throw std::invalid_argument("BitVec length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
}

std::string BitVec::to_string() const {
    std::string s;
    s.reserve(length_);
    for (std::size_t i = 0; i < length_; ++i) s += get(i) ? '1' : '0';
    return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

BitMatrix::BitMatrix(std::initializer_list<std::initializer_list<int>> rows) {
    cols_ = rows.size() ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged BitMatrix initializer");
        rows_.emplace_back(r);
    }
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVec> rows, std::size_t cols) {
    BitMatrix m;
    m.cols_ = cols;
    for (auto& r : rows) m.append_row(std::move(r));
    return m;
}

BitVec BitMatrix::column(std::size_t c) const {
    BitVec v(rows());
    for (std::size_t r = 0; r < rows(); ++r)
        if (get(r, c)) v.set(r);
    return v;
}

void BitMatrix::append_row(BitVec row) {
    if (row.size() != cols_) throw std::invalid_argument("row length does not match column count");
    rows_.push_back(std::move(row));
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
        for (auto c : rows_[r].ones()) t.set(c, r);
    return t;
}

BitVec BitMatrix::apply(const BitVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length does not match column count");
    BitVec out(rows());
    for (std::size_t r = 0; r < rows(); ++r)
        if (rows_[r].dot(v)) out.set(r);
    return out;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (auto k : a.row(r).ones()) out.rows_[r] ^= b.row(k);
    return out;
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (const auto& r : rows_) s += r.to_string() + '\n';
    return s;
}

std::size_t rank(const BitMatrix& m) {
    EchelonBasis basis(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(m.row(r));
    return basis.size();
}

bool in_span(const BitVec& v, const BitMatrix& basis) {
    if (v.size() != basis.cols()) throw std::invalid_argument("in_span: vector length does not match basis");
    EchelonBasis ech(basis.cols());
    for (std::size_t r = 0; r < basis.rows(); ++r) ech.insert(basis.row(r));
    return ech.contains(v);
}

bool is_injective(const BitMatrix& m) { return rank(m) == m.cols(); }

EchelonBasis::EchelonBasis(std::size_t length) : length_(length), pivot_row_(length, BitVec::npos) {}

void EchelonBasis::reduce(BitVec& v) const {
    if (v.size() != length_) throw std::invalid_argument("EchelonBasis: vector length mismatch");
    // Pivot rows only carry bits at or above their pivot, so a left-to-right
    // sweep never revisits a cleared position.
    for (std::size_t c = v.find_first(); c != BitVec::npos; c = v.find_next(c + 1)) {
        if (pivot_row_[c] != BitVec::npos) v ^= vectors_[pivot_row_[c]];
    }
}

bool EchelonBasis::contains(BitVec v) const {
    reduce(v);
    return v.is_zero();
}

bool EchelonBasis::insert(BitVec v) {
    reduce(v);
    const std::size_t pivot = v.find_first();
    if (pivot == BitVec::npos) return false;
    pivot_row_[pivot] = vectors_.size();
    vectors_.push_back(std::move(v));
    return true;
}

}  // namespace lscat
