#pragma once

#include <cstdint>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "addcomb/rational.hpp"

namespace addcomb {

using Element = std::int64_t;  // index in [0, order), little-endian mixed radix

// A finite abelian group presented as a product of cyclic factors
// Z/m_1 x ... x Z/m_r. Z/N is the single-factor case; F_q^n (q prime) is
// the n-equal-factor case.
struct GroupSpec {
    std::vector<std::int64_t> factors;
    std::int64_t order = 1;

    GroupSpec() = default;
    explicit GroupSpec(std::vector<std::int64_t> fs);

    static GroupSpec cyclic(std::int64_t n);
    static GroupSpec vector_space(std::int64_t q, int n);

    bool operator==(const GroupSpec& o) const { return factors == o.factors; }
    bool operator!=(const GroupSpec& o) const { return !(*this == o); }

    std::vector<std::int64_t> coords(Element x) const;
    Element from_coords(const std::vector<std::int64_t>& c) const;

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const;
    // c * a for any integer c (c reduced mod each factor).
    Element scalar_mul(std::int64_t c, Element a) const;

    void check_element(Element x) const;
    std::string str() const;  // "m_1,...,m_r"
};

// Dense subset of a group, backed by a bitset of length |G|.
class GroupSet {
public:
    GroupSet() = default;
    explicit GroupSet(GroupSpec g);
    GroupSet(GroupSpec g, const std::vector<Element>& elems);

    const GroupSpec& group() const { return group_; }
    std::int64_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    Rational density() const { return Rational(size_, group_.order); }

    bool contains(Element x) const {
        return (bits_[static_cast<std::size_t>(x) >> 6] >> (x & 63)) & 1;
    }
    void insert(Element x);
    void erase(Element x);

    std::vector<Element> elements() const;

    bool operator==(const GroupSet& o) const {
        return group_ == o.group_ && bits_ == o.bits_;
    }

    static GroupSet full(const GroupSpec& g);

private:
    GroupSpec group_;
    std::vector<std::uint64_t> bits_;
    std::int64_t size_ = 0;
};

// {c*a : a in A}.
GroupSet dilate(std::int64_t c, const GroupSet& a);

// {a + b : a in A, b in B}; throws on group mismatch.
GroupSet sumset(const GroupSet& a, const GroupSet& b);

GroupSet translate(const GroupSet& a, Element t);
GroupSet negate(const GroupSet& a);
GroupSet intersect(const GroupSet& a, const GroupSet& b);
GroupSet complement(const GroupSet& a);
GroupSet set_difference(const GroupSet& a, const GroupSet& b);

// Z/N' for the least prime N' in [6N, 12N], plus the map k -> k mod N'.
// The prime range guarantees that solutions to our 4-variable equations
// among images of [N] lift back to genuine integer solutions.
struct IntervalEmbedding {
    GroupSpec group;
    std::int64_t n = 0;        // original interval bound
    std::int64_t modulus = 0;  // N'
    Element map(std::int64_t k) const { return ((k % modulus) + modulus) % modulus; }
    GroupSet image() const;                                 // images of 1..N
    GroupSet image_of(const std::vector<std::int64_t>& ks) const;
};
IntervalEmbedding embed_interval(std::int64_t n);

bool is_prime(std::int64_t n);

// Character gamma(x) = e(sum_i gamma_i x_i / m_i), via the self-dual
// coordinate pairing.
std::complex<double> character_value(const GroupSpec& g, Element gamma, Element x);

// Fractional part of sum_i gamma_i x_i / m_i, in [0, 1).
double character_phase(const GroupSpec& g, Element gamma, Element x);

}  // namespace addcomb
