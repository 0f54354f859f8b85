#include "addcomb/group.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace addcomb {

GroupSpec::GroupSpec(std::vector<std::int64_t> fs) : factors(std::move(fs)) {
    if (factors.empty()) throw std::invalid_argument("GroupSpec: no factors");
    order = 1;
    for (auto m : factors) {
        if (m < 2) throw std::invalid_argument("GroupSpec: factor < 2");
        order *= m;
        if (order > (std::int64_t{1} << 40))
            throw std::invalid_argument("GroupSpec: order too large");
    }
}

GroupSpec GroupSpec::cyclic(std::int64_t n) { return GroupSpec({n}); }

GroupSpec GroupSpec::vector_space(std::int64_t q, int n) {
    if (!is_prime(q)) throw std::invalid_argument("vector_space: q must be prime");
    return GroupSpec(std::vector<std::int64_t>(static_cast<std::size_t>(n), q));
}

std::vector<std::int64_t> GroupSpec::coords(Element x) const {
    std::vector<std::int64_t> c(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        c[i] = x % factors[i];
        x /= factors[i];
    }
    return c;
}

Element GroupSpec::from_coords(const std::vector<std::int64_t>& c) const {
    if (c.size() != factors.size())
        throw std::invalid_argument("from_coords: wrong arity");
    Element x = 0;
    for (std::size_t i = factors.size(); i-- > 0;) {
        std::int64_t v = c[i] % factors[i];
        if (v < 0) v += factors[i];
        x = x * factors[i] + v;
    }
    return x;
}

Element GroupSpec::add(Element a, Element b) const {
    Element out = 0, mult = 1;
    for (auto m : factors) {
        std::int64_t s = a % m + b % m;
        if (s >= m) s -= m;
        out += s * mult;
        mult *= m;
        a /= m;
        b /= m;
    }
    return out;
}

Element GroupSpec::sub(Element a, Element b) const { return add(a, neg(b)); }

Element GroupSpec::neg(Element a) const {
    Element out = 0, mult = 1;
    for (auto m : factors) {
        std::int64_t d = a % m;
        out += (d == 0 ? 0 : m - d) * mult;
        mult *= m;
        a /= m;
    }
    return out;
}

Element GroupSpec::scalar_mul(std::int64_t c, Element a) const {
    Element out = 0, mult = 1;
    for (auto m : factors) {
        std::int64_t cr = c % m;
        if (cr < 0) cr += m;
        out += (a % m) * cr % m * mult;
        mult *= m;
        a /= m;
    }
    return out;
}

void GroupSpec::check_element(Element x) const {
    if (x < 0 || x >= order) throw std::out_of_range("element index out of range");
}

std::string GroupSpec::str() const {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(factors[i]);
    }
    return s;
}

GroupSet::GroupSet(GroupSpec g)
    : group_(std::move(g)),
      bits_(static_cast<std::size_t>((group_.order + 63) / 64), 0) {}

GroupSet::GroupSet(GroupSpec g, const std::vector<Element>& elems) : GroupSet(std::move(g)) {
    for (auto e : elems) {
        group_.check_element(e);
        insert(e);
    }
}

void GroupSet::insert(Element x) {
    auto& w = bits_[static_cast<std::size_t>(x) >> 6];
    std::uint64_t m = std::uint64_t{1} << (x & 63);
    if (!(w & m)) {
        w |= m;
        ++size_;
    }
}

void GroupSet::erase(Element x) {
    auto& w = bits_[static_cast<std::size_t>(x) >> 6];
    std::uint64_t m = std::uint64_t{1} << (x & 63);
    if (w & m) {
        w &= ~m;
        --size_;
    }
}

std::vector<Element> GroupSet::elements() const {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (std::size_t w = 0; w < bits_.size(); ++w) {
        std::uint64_t word = bits_[w];
        while (word) {
            int b = std::countr_zero(word);
            out.push_back(static_cast<Element>(w * 64 + static_cast<std::size_t>(b)));
            word &= word - 1;
        }
    }
    return out;
}

GroupSet GroupSet::full(const GroupSpec& g) {
    GroupSet s(g);
    for (Element x = 0; x < g.order; ++x) s.insert(x);
    return s;
}

GroupSet dilate(std::int64_t c, const GroupSet& a) {
    GroupSet out(a.group());
    for (Element x : a.elements()) out.insert(a.group().scalar_mul(c, x));
    return out;
}

static void require_same_group(const GroupSet& a, const GroupSet& b) {
    if (a.group() != b.group()) throw std::invalid_argument("group mismatch");
}

GroupSet sumset(const GroupSet& a, const GroupSet& b) {
    require_same_group(a, b);
    GroupSet out(a.group());
    auto ea = a.elements();
    auto eb = b.elements();
    for (Element x : ea)
        for (Element y : eb) out.insert(a.group().add(x, y));
    return out;
}

GroupSet translate(const GroupSet& a, Element t) {
    GroupSet out(a.group());
    for (Element x : a.elements()) out.insert(a.group().add(x, t));
    return out;
}

GroupSet negate(const GroupSet& a) {
    GroupSet out(a.group());
    for (Element x : a.elements()) out.insert(a.group().neg(x));
    return out;
}

GroupSet intersect(const GroupSet& a, const GroupSet& b) {
    require_same_group(a, b);
    GroupSet out(a.group());
    for (Element x : a.elements())
        if (b.contains(x)) out.insert(x);
    return out;
}

GroupSet complement(const GroupSet& a) {
    GroupSet out(a.group());
    for (Element x = 0; x < a.group().order; ++x)
        if (!a.contains(x)) out.insert(x);
    return out;
}

GroupSet set_difference(const GroupSet& a, const GroupSet& b) {
    require_same_group(a, b);
    GroupSet out(a.group());
    for (Element x : a.elements())
        if (!b.contains(x)) out.insert(x);
    return out;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

IntervalEmbedding embed_interval(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("embed_interval: N >= 1 required");
    for (std::int64_t p = 6 * n; p <= 12 * n; ++p) {
        if (is_prime(p)) {
            IntervalEmbedding e;
            e.group = GroupSpec::cyclic(p);
            e.n = n;
            e.modulus = p;
            return e;
        }
    }
    // Bertrand's postulate puts a prime in [6N, 12N] for every N >= 1.
    throw std::logic_error("embed_interval: no prime in [6N, 12N]");
}

GroupSet IntervalEmbedding::image() const {
    GroupSet s(group);
    for (std::int64_t k = 1; k <= n; ++k) s.insert(map(k));
    return s;
}

GroupSet IntervalEmbedding::image_of(const std::vector<std::int64_t>& ks) const {
    GroupSet s(group);
    for (auto k : ks) s.insert(map(k));
    return s;
}

double character_phase(const GroupSpec& g, Element gamma, Element x) {
    double phase = 0.0;
    for (auto m : g.factors) {
        phase += static_cast<double>((gamma % m) * (x % m) % m) / static_cast<double>(m);
        gamma /= m;
        x /= m;
    }
    phase -= std::floor(phase);
    return phase;
}

std::complex<double> character_value(const GroupSpec& g, Element gamma, Element x) {
    g.check_element(gamma);
    g.check_element(x);
    double theta = 2.0 * std::numbers::pi * character_phase(g, gamma, x);
    return {std::cos(theta), std::sin(theta)};
}

}  // namespace addcomb
