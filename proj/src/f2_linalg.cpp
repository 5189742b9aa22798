#include "equigrass/f2_linalg.hpp"

#include <stdexcept>

#include "equigrass/bitops.hpp"

namespace equigrass {

bool BitVec::any() const
{
    return simd::any(w_.data(), w_.size());
}

std::size_t BitVec::popcount() const
{
    return simd::popcount(w_.data(), w_.size());
}

std::size_t BitVec::first_set(std::size_t from_bit) const
{
    std::size_t word = from_bit / 64;
    if (word >= w_.size()) return simd::npos;
    std::uint64_t head = w_[word] & (~std::uint64_t{0} << (from_bit % 64));
    if (head) return word * 64 + static_cast<std::size_t>(__builtin_ctzll(head));
    return simd::first_set(w_.data(), w_.size(), word + 1);
}

std::vector<std::size_t> BitVec::ones() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = first_set(); i != simd::npos; i = first_set(i + 1)) out.push_back(i);
    return out;
}

BitVec& BitVec::operator^=(const BitVec& o)
{
    if (o.nbits_ != nbits_) throw std::invalid_argument("bit vector size mismatch");
    simd::xor_into(w_.data(), o.w_.data(), w_.size());
    return *this;
}

EchelonBasis::EchelonBasis(std::size_t nbits, std::size_t ntags)
    : nbits_(nbits), ntags_(ntags), pivot_row_(nbits, -1)
{
}

void EchelonBasis::reduce(BitVec& v, BitVec* tag) const
{
    for (std::size_t p = v.first_set(); p != simd::npos; p = v.first_set(p + 1)) {
        int r = pivot_row_[p];
        if (r < 0) continue;
        v ^= rows_[r].v;
        if (tag) *tag ^= rows_[r].tag;
    }
}

bool EchelonBasis::insert(const BitVec& v)
{
    BitVec w = v;
    BitVec tag(ntags_);
    reduce(w, &tag);
    std::size_t p = w.first_set();
    if (p == simd::npos) return false;
    pivot_row_[p] = static_cast<int>(rows_.size());
    rows_.push_back({std::move(w), std::move(tag)});
    return true;
}

bool EchelonBasis::insert(const BitVec& v, std::size_t tag_index)
{
    BitVec w = v;
    BitVec tag(ntags_);
    tag.flip(tag_index);
    reduce(w, &tag);
    std::size_t p = w.first_set();
    if (p == simd::npos) return false;
    pivot_row_[p] = static_cast<int>(rows_.size());
    rows_.push_back({std::move(w), std::move(tag)});
    return true;
}

bool EchelonBasis::contains(const BitVec& v) const
{
    BitVec w = v;
    reduce(w, nullptr);
    return !w.any();
}

std::optional<BitVec> EchelonBasis::express(const BitVec& v) const
{
    BitVec w = v;
    BitVec tag(ntags_);
    reduce(w, &tag);
    if (w.any()) return std::nullopt;
    return tag;
}

std::size_t f2_rank(const std::vector<BitVec>& rows)
{
    if (rows.empty()) return 0;
    EchelonBasis b(rows.front().size());
    for (const auto& r : rows) b.insert(r);
    return b.rank();
}

}  // namespace equigrass
