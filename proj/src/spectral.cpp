#include "addcomb/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace addcomb {

namespace {

// ---- exact arithmetic modulo a 62-bit NTT prime ----

constexpr std::uint64_t kNttPrime = 4179340454199820289ULL;  // 29 * 2^57 + 1
constexpr std::uint64_t kNttRoot = 3;                        // primitive root

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kNttPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kNttPrime - 2); }

// In-place power-of-two NTT.
void ntt(std::vector<std::uint64_t>& a, bool inverse) {
    std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        std::uint64_t w = powmod(kNttRoot, (kNttPrime - 1) / len);
        if (inverse) w = invmod(w);
        for (std::size_t i = 0; i < n; i += len) {
            std::uint64_t wj = 1;
            for (std::size_t j = 0; j < len / 2; ++j) {
                std::uint64_t u = a[i + j];
                std::uint64_t v = mulmod(a[i + j + len / 2], wj);
                a[i + j] = u + v < kNttPrime ? u + v : u + v - kNttPrime;
                a[i + j + len / 2] = u >= v ? u - v : u + kNttPrime - v;
                wj = mulmod(wj, w);
            }
        }
    }
    if (inverse) {
        std::uint64_t ninv = invmod(static_cast<std::uint64_t>(n));
        for (auto& x : a) x = mulmod(x, ninv);
    }
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// Largest NTT problem we attempt before falling back to the naive loop.
constexpr std::size_t kMaxNttSize = std::size_t{1} << 23;

void require_same_group(const DenseFunction& f, const DenseFunction& g) {
    if (f.group != g.group) throw std::invalid_argument("convolve: group mismatch");
}

unsigned __int128 value_bound(const DenseFunction& f, const DenseFunction& g) {
    unsigned __int128 sum_f = 0, sum_g = 0;
    std::uint64_t max_f = 0, max_g = 0;
    for (auto v : f.values) {
        std::uint64_t a = static_cast<std::uint64_t>(v < 0 ? -v : v);
        sum_f += a;
        max_f = std::max(max_f, a);
    }
    for (auto v : g.values) {
        std::uint64_t a = static_cast<std::uint64_t>(v < 0 ? -v : v);
        sum_g += a;
        max_g = std::max(max_g, a);
    }
    return std::min(sum_f * max_g, sum_g * max_f);
}

// ---- complex FFT (power of two + Bluestein for arbitrary lengths) ----

using cd = std::complex<double>;

void fft_pow2(std::vector<cd>& a, bool inverse) {
    std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double ang = 2.0 * std::numbers::pi / static_cast<double>(len) * (inverse ? 1 : -1);
        cd wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cd w(1);
            for (std::size_t j = 0; j < len / 2; ++j) {
                cd u = a[i + j], v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (inverse)
        for (auto& x : a) x /= static_cast<double>(n);
}

// Forward DFT of arbitrary length n with kernel e^(-2*pi*i*jk/n).
void dft_any(std::vector<cd>& a) {
    std::size_t n = a.size();
    if (n == 1) return;
    if ((n & (n - 1)) == 0) {
        fft_pow2(a, false);
        return;
    }
    // Bluestein: jk = (j^2 + k^2 - (j-k)^2) / 2.
    std::size_t m = next_pow2(2 * n - 1);
    std::vector<cd> chirp(n);
    for (std::size_t k = 0; k < n; ++k) {
        // k^2 mod 2n keeps the angle small for precision.
        std::size_t k2 = (k * k) % (2 * n);
        double ang = std::numbers::pi * static_cast<double>(k2) / static_cast<double>(n);
        chirp[k] = cd(std::cos(ang), -std::sin(ang));
    }
    std::vector<cd> u(m, 0.0), v(m, 0.0);
    for (std::size_t k = 0; k < n; ++k) u[k] = a[k] * chirp[k];
    v[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < n; ++k) {
        v[k] = std::conj(chirp[k]);
        v[m - k] = std::conj(chirp[k]);
    }
    fft_pow2(u, false);
    fft_pow2(v, false);
    for (std::size_t i = 0; i < m; ++i) u[i] *= v[i];
    fft_pow2(u, true);
    for (std::size_t j = 0; j < n; ++j) a[j] = u[j] * chirp[j];
}

void idft_any(std::vector<cd>& a) {
    for (auto& x : a) x = std::conj(x);
    dft_any(a);
    double n = static_cast<double>(a.size());
    for (auto& x : a) x = std::conj(x) / n;
}

// Apply a length-m transform along one axis of the mixed-radix cube.
template <typename Fn>
void transform_axis(std::vector<cd>& data, std::size_t stride, std::size_t m, Fn&& fn) {
    std::size_t block = stride * m;
    std::vector<cd> line(m);
    for (std::size_t base = 0; base < data.size(); base += block) {
        for (std::size_t s = 0; s < stride; ++s) {
            for (std::size_t t = 0; t < m; ++t) line[t] = data[base + s + t * stride];
            fn(line);
            for (std::size_t t = 0; t < m; ++t) data[base + s + t * stride] = line[t];
        }
    }
}

void multidim_transform(std::vector<cd>& data, const GroupSpec& g, bool inverse) {
    std::size_t stride = 1;
    for (auto mf : g.factors) {
        std::size_t m = static_cast<std::size_t>(mf);
        transform_axis(data, stride, m, [&](std::vector<cd>& line) {
            if (inverse)
                idft_any(line);
            else
                dft_any(line);
        });
        stride *= m;
    }
}

}  // namespace

DenseFunction DenseFunction::indicator(const GroupSet& a) {
    DenseFunction f(a.group());
    for (Element x : a.elements()) f.values[static_cast<std::size_t>(x)] = 1;
    return f;
}

DenseFunction DenseFunction::delta(const GroupSpec& g, Element x) {
    DenseFunction f(g);
    g.check_element(x);
    f.values[static_cast<std::size_t>(x)] = 1;
    return f;
}

DenseFunction DenseFunction::dilate_pushforward(std::int64_t c, const GroupSet& a) {
    DenseFunction f(a.group());
    for (Element x : a.elements())
        ++f.values[static_cast<std::size_t>(a.group().scalar_mul(c, x))];
    return f;
}

std::int64_t DenseFunction::sum() const {
    std::int64_t s = 0;
    for (auto v : values) s += v;
    return s;
}

ComplexFunction ComplexFunction::from(const DenseFunction& f) {
    ComplexFunction c(f.group);
    for (std::size_t i = 0; i < f.values.size(); ++i)
        c.values[i] = static_cast<double>(f.values[i]);
    return c;
}

DenseFunction convolve_naive(const DenseFunction& f, const DenseFunction& g) {
    require_same_group(f, g);
    const GroupSpec& grp = f.group;
    std::size_t n = static_cast<std::size_t>(grp.order);
    std::vector<__int128> acc(n, 0);
    for (std::size_t y = 0; y < n; ++y) {
        std::int64_t fy = f.values[y];
        if (fy == 0) continue;
        for (std::size_t z = 0; z < n; ++z) {
            if (g.values[z] == 0) continue;
            std::size_t x = static_cast<std::size_t>(
                grp.add(static_cast<Element>(y), static_cast<Element>(z)));
            acc[x] += static_cast<__int128>(fy) * g.values[z];
        }
    }
    DenseFunction out(grp);
    for (std::size_t i = 0; i < n; ++i) {
        if (acc[i] > std::numeric_limits<std::int64_t>::max() ||
            acc[i] < std::numeric_limits<std::int64_t>::min())
            throw std::overflow_error("convolve: result exceeds 64 bits");
        out.values[i] = static_cast<std::int64_t>(acc[i]);
    }
    return out;
}

DenseFunction convolve(const DenseFunction& f, const DenseFunction& g) {
    require_same_group(f, g);
    const GroupSpec& grp = f.group;

    // Embed the multidimensional cyclic convolution into one linear
    // convolution: radix 2m_i - 1 per axis keeps coordinate sums carry-free.
    std::size_t embedded = 1;
    bool feasible = true;
    for (auto m : grp.factors) {
        embedded *= static_cast<std::size_t>(2 * m - 1);
        if (embedded > kMaxNttSize / 2) {
            feasible = false;
            break;
        }
    }
    unsigned __int128 bound = value_bound(f, g);
    if (!feasible || 2 * bound + 1 >= kNttPrime || grp.order < 32)
        return convolve_naive(f, g);

    std::size_t ntt_n = next_pow2(2 * embedded - 1);
    std::vector<std::uint64_t> fa(ntt_n, 0), ga(ntt_n, 0);
    // Little-endian mixed-radix strides over the widened radices.
    std::vector<std::size_t> stride(grp.factors.size());
    {
        std::size_t s = 1;
        for (std::size_t i = 0; i < grp.factors.size(); ++i) {
            stride[i] = s;
            s *= static_cast<std::size_t>(2 * grp.factors[i] - 1);
        }
    }
    for (Element x = 0; x < grp.order; ++x) {
        std::size_t idx = 0;
        Element t = x;
        for (std::size_t i = 0; i < grp.factors.size(); ++i) {
            idx += static_cast<std::size_t>(t % grp.factors[i]) * stride[i];
            t /= grp.factors[i];
        }
        auto enc = [&](std::int64_t v) {
            return v >= 0 ? static_cast<std::uint64_t>(v)
                          : kNttPrime - static_cast<std::uint64_t>(-v);
        };
        fa[idx] = enc(f.values[static_cast<std::size_t>(x)]);
        ga[idx] = enc(g.values[static_cast<std::size_t>(x)]);
    }
    ntt(fa, false);
    ntt(ga, false);
    for (std::size_t i = 0; i < ntt_n; ++i) fa[i] = mulmod(fa[i], ga[i]);
    ntt(fa, true);

    DenseFunction out(grp);
    for (std::size_t idx = 0; idx < 2 * embedded - 1; ++idx) {
        std::uint64_t v = fa[idx];
        if (v == 0) continue;
        // Decode the widened radices; each digit is an exact coordinate sum.
        std::size_t t = idx;
        Element gx = 0;
        std::int64_t mult = 1;
        for (std::size_t i = 0; i < grp.factors.size(); ++i) {
            std::int64_t m = grp.factors[i];
            std::int64_t digit = static_cast<std::int64_t>(t % static_cast<std::size_t>(2 * m - 1));
            t /= static_cast<std::size_t>(2 * m - 1);
            if (digit >= m) digit -= m;
            gx += digit * mult;
            mult *= m;
        }
        std::int64_t sv = v <= kNttPrime / 2 ? static_cast<std::int64_t>(v)
                                             : -static_cast<std::int64_t>(kNttPrime - v);
        out.values[static_cast<std::size_t>(gx)] += sv;
    }
    return out;
}

std::int64_t convolve_at_zero(const std::vector<DenseFunction>& fs) {
    if (fs.empty()) throw std::invalid_argument("convolve_at_zero: no factors");
    if (fs.size() == 1) return fs[0].values[0];
    DenseFunction acc = fs[0];
    for (std::size_t i = 1; i + 1 < fs.size(); ++i) acc = convolve(acc, fs[i]);
    // (acc * h)(0) = sum_y acc(y) h(-y).
    const DenseFunction& h = fs.back();
    const GroupSpec& grp = acc.group;
    __int128 total = 0;
    for (Element y = 0; y < grp.order; ++y) {
        std::int64_t a = acc.values[static_cast<std::size_t>(y)];
        if (a == 0) continue;
        total += static_cast<__int128>(a) *
                 h.values[static_cast<std::size_t>(grp.neg(y))];
    }
    if (total > std::numeric_limits<std::int64_t>::max() ||
        total < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("convolve_at_zero: count exceeds 64 bits");
    return static_cast<std::int64_t>(total);
}

Spectrum dft(const ComplexFunction& f) {
    Spectrum s;
    s.group = f.group;
    s.coeffs = f.values;
    multidim_transform(s.coeffs, s.group, false);
    return s;
}

Spectrum dft(const DenseFunction& f) { return dft(ComplexFunction::from(f)); }

ComplexFunction idft(const Spectrum& s) {
    ComplexFunction f(s.group);
    f.values = s.coeffs;
    multidim_transform(f.values, f.group, true);
    return f;
}

double lp_norm(const ComplexFunction& f, double p) {
    if (std::isinf(p)) {
        double m = 0;
        for (auto v : f.values) m = std::max(m, std::abs(v));
        return m;
    }
    if (p < 1) throw std::invalid_argument("lp_norm: p >= 1 required");
    double s = 0;
    for (auto v : f.values) s += std::pow(std::abs(v), p);
    return std::pow(s, 1.0 / p);
}

double lp_norm(const DenseFunction& f, double p) {
    if (std::isinf(p)) {
        std::int64_t m = 0;
        for (auto v : f.values) m = std::max(m, v < 0 ? -v : v);
        return static_cast<double>(m);
    }
    if (p < 1) throw std::invalid_argument("lp_norm: p >= 1 required");
    double s = 0;
    for (auto v : f.values) s += std::pow(std::abs(static_cast<double>(v)), p);
    return std::pow(s, 1.0 / p);
}

std::vector<Element> spec_delta(const GroupSet& x, double delta) {
    if (x.empty()) throw std::invalid_argument("spec_delta: empty set");
    Spectrum s = dft(DenseFunction::indicator(x));
    double scale = static_cast<double>(x.size());
    std::vector<Element> out;
    double thresh = delta * delta - 1e-12;
    for (Element gamma = 0; gamma < x.group().order; ++gamma) {
        double m2 = std::norm(s.coeffs[static_cast<std::size_t>(gamma)] / scale);
        if (m2 >= thresh) out.push_back(gamma);
    }
    return out;
}

}  // namespace addcomb
