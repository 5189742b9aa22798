#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace equigrass {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }
    bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1; }
    void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void flip(std::size_t i) { w_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    bool any() const;
    std::size_t popcount() const;
    std::size_t first_set(std::size_t from_bit = 0) const;  // simd::npos if none
    std::vector<std::size_t> ones() const;

    BitVec& operator^=(const BitVec& o);
    bool operator==(const BitVec&) const = default;

    std::uint64_t* data() { return w_.data(); }
    const std::uint64_t* data() const { return w_.data(); }
    std::size_t words() const { return w_.size(); }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

// Incremental row echelon form over F2. Each stored row may carry a tag vector
// recording which inserted vectors it is a combination of.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t nbits, std::size_t ntags = 0);

    std::size_t rank() const { return rows_.size(); }
    std::size_t nbits() const { return nbits_; }

    // true if v was independent of the current rows (and is now added)
    bool insert(const BitVec& v);
    // tagged insert: tag index identifies the caller's generator
    bool insert(const BitVec& v, std::size_t tag);

    bool contains(const BitVec& v) const;
    // tag combination summing to v, when v lies in the span
    std::optional<BitVec> express(const BitVec& v) const;

private:
    struct Row {
        BitVec v;
        BitVec tag;
    };
    void reduce(BitVec& v, BitVec* tag) const;

    std::size_t nbits_;
    std::size_t ntags_;
    std::vector<Row> rows_;
    std::vector<int> pivot_row_;
};

std::size_t f2_rank(const std::vector<BitVec>& rows);

}  // namespace equigrass
