#include "dio/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "dio/arithmetic.hpp"
#include "dio/special_functions.hpp"

namespace dio {

Rotation Rotation::of(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw std::invalid_argument("Rotation: zero denominator");
    num %= den;
    const std::uint64_t g = std::gcd(num == 0 ? den : num, den);
    return Rotation{num / g, den / g};
}

Rotation Rotation::operator+(const Rotation& o) const {
    const std::uint64_t l = std::lcm(den, o.den);
    return Rotation::of(num * (l / den) + o.num * (l / o.den), l);
}

Rotation Rotation::conjugate() const { return Rotation::of(den - num, den); }

std::complex<double> Rotation::to_complex() const {
    switch (den) {
        case 1: return {1.0, 0.0};
        case 2: return {-1.0, 0.0};
        case 4: return num == 1 ? std::complex<double>{0.0, 1.0} : std::complex<double>{0.0, -1.0};
        default: {
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
            return {std::cos(theta), std::sin(theta)};
        }
    }
}

namespace {

constexpr std::uint32_t kNonUnit = 0xffffffffu;

// x = g (mod q), x = 1 (mod rest), with a = q * rest coprime split.
std::uint64_t crt_lift(std::uint64_t g, std::uint64_t q, std::uint64_t a) {
    const std::uint64_t rest = a / q;
    if (rest == 1) return g % a;
    // solve 1 + rest * k = g (mod q); rest is invertible mod q
    std::uint64_t inv = 1;
    {
        // modular inverse by extended Euclid
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(q), newr = static_cast<std::int64_t>(rest % q);
        while (newr != 0) {
            const std::int64_t quot = r / newr;
            std::swap(t, newt);
            newt -= quot * t;
            std::swap(r, newr);
            newr -= quot * r;
        }
        if (r != 1) throw std::logic_error("crt_lift: components not coprime");
        if (t < 0) t += static_cast<std::int64_t>(q);
        inv = static_cast<std::uint64_t>(t);
    }
    const std::uint64_t gm = g % q;
    const std::uint64_t k = mul_mod((gm + q - 1) % q, inv, q);
    return (1 + rest * k) % a;
}

struct Component {
    std::uint64_t q = 1;                      // prime power
    std::vector<std::uint64_t> gen;           // local generators mod q
    std::vector<std::uint64_t> order;
    std::vector<std::uint32_t> dlog;          // q rows of gen.size() entries
};

Component build_component(std::uint64_t p, int e, std::uint64_t q) {
    Component comp;
    comp.q = q;
    if (p == 2) {
        if (e == 1) {
            // (Z/2)^* is trivial: no generators, unit 1 has the empty vector
            return comp;
        }
        if (e == 2) {
            comp.gen = {3};
            comp.order = {2};
            comp.dlog.assign(q * 1, kNonUnit);
            comp.dlog[1] = 0;
            comp.dlog[3] = 1;
            return comp;
        }
        // e >= 3: units are (-1)^s * 5^t
        const std::uint64_t half = q >> 2;  // 2^(e-2)
        comp.gen = {q - 1, 5};
        comp.order = {2, half};
        comp.dlog.assign(q * 2, kNonUnit);
        std::uint64_t x = 1;
        for (std::uint64_t t = 0; t < half; ++t) {
            comp.dlog[x * 2 + 0] = 0;
            comp.dlog[x * 2 + 1] = static_cast<std::uint32_t>(t);
            comp.dlog[(q - x) * 2 + 0] = 1;
            comp.dlog[(q - x) * 2 + 1] = static_cast<std::uint32_t>(t);
            x = (x * 5) % q;
        }
        return comp;
    }
    // odd prime power: cyclic
    const std::uint64_t g = primitive_root(q);
    std::uint64_t phi = q / p * (p - 1);
    comp.gen = {g};
    comp.order = {phi};
    comp.dlog.assign(q, kNonUnit);
    std::uint64_t x = 1;
    for (std::uint64_t t = 0; t < phi; ++t) {
        comp.dlog[x] = static_cast<std::uint32_t>(t);
        x = mul_mod(x, g, q);
    }
    return comp;
}

}  // namespace

CharacterGroup::CharacterGroup(std::uint64_t modulus) : modulus_(modulus) {
    if (modulus < 2 || modulus > 100000)
        throw std::invalid_argument("CharacterGroup: modulus must lie in [2, 10^5]");

    const Factorization f = factorize(modulus);
    order_ = euler_phi(f);

    std::vector<Component> comps;
    for (const auto& [p, e] : f.factors) {
        std::uint64_t q = 1;
        for (int i = 0; i < e; ++i) q *= p;
        comps.push_back(build_component(p, e, q));
    }

    for (const auto& comp : comps) {
        for (std::size_t i = 0; i < comp.gen.size(); ++i) {
            gens_.push_back({crt_lift(comp.gen[i], comp.q, modulus), comp.order[i]});
            exponent_lcm_ = std::lcm(exponent_lcm_, comp.order[i]);
        }
    }

    const std::size_t k = gens_.size();
    unit_.assign(modulus, 0);
    dlog_.assign(modulus * k, kNonUnit);
    for (std::uint64_t u = 0; u < modulus; ++u) {
        if (std::gcd(u, modulus) != 1) continue;
        unit_[u] = 1;
        std::size_t slot = 0;
        for (const auto& comp : comps) {
            const std::size_t width = comp.gen.size();
            const std::uint64_t res = u % comp.q;
            for (std::size_t i = 0; i < width; ++i)
                dlog_[u * k + slot + i] = comp.dlog[res * width + i];
            slot += width;
        }
    }
}

bool CharacterGroup::is_unit(std::uint64_t residue) const {
    return residue < modulus_ && unit_[residue] != 0;
}

std::span<const std::uint32_t> CharacterGroup::exponents(std::uint64_t unit) const {
    if (!is_unit(unit)) throw std::invalid_argument("CharacterGroup::exponents: not a unit residue");
    return {dlog_.data() + unit * gens_.size(), gens_.size()};
}

std::vector<DirichletCharacter> CharacterGroup::characters() const {
    std::vector<DirichletCharacter> chars;
    chars.reserve(order_);
    std::vector<std::uint32_t> exps(gens_.size(), 0);
    while (true) {
        chars.emplace_back(this, exps);
        // odometer, last position fastest
        std::size_t i = gens_.size();
        while (i > 0) {
            --i;
            if (++exps[i] < gens_[i].order) break;
            exps[i] = 0;
            if (i == 0) return chars;
        }
        if (gens_.empty()) return chars;
    }
}

DirichletCharacter CharacterGroup::principal() const {
    return DirichletCharacter(this, std::vector<std::uint32_t>(gens_.size(), 0));
}

DirichletCharacter::DirichletCharacter(const CharacterGroup* group, std::vector<std::uint32_t> exps)
    : group_(group), exps_(std::move(exps)) {
    if (exps_.size() != group_->generators().size())
        throw std::invalid_argument("DirichletCharacter: exponent tuple has wrong length");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] >= group_->generators()[i].order)
            throw std::invalid_argument("DirichletCharacter: exponent out of range");
}

bool DirichletCharacter::is_principal() const {
    for (auto c : exps_)
        if (c != 0) return false;
    return true;
}

std::optional<Rotation> DirichletCharacter::rotation_at(std::int64_t m) const {
    const auto a = static_cast<std::int64_t>(group_->modulus());
    std::int64_t r = m % a;
    if (r < 0) r += a;
    const auto u = static_cast<std::uint64_t>(r);
    if (!group_->is_unit(u)) return std::nullopt;

    // angle = sum c_i e_i(u) / d_i over the common denominator D
    const std::uint64_t D = group_->exponent_lcm();
    const auto e = group_->exponents(u);
    const auto& gens = group_->generators();
    std::uint64_t num = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        const std::uint64_t step = D / gens[i].order;
        num = (num + static_cast<std::uint64_t>(exps_[i]) * e[i] % D * step) % D;
    }
    return Rotation::of(num, D);
}

std::complex<double> DirichletCharacter::operator()(std::int64_t m) const {
    const auto rot = rotation_at(m);
    return rot ? rot->to_complex() : std::complex<double>{0.0, 0.0};
}

int DirichletCharacter::parity() const {
    const auto rot = rotation_at(-1);
    if (!rot) throw std::logic_error("parity: -1 must be a unit");
    if (rot->den == 1) return 1;
    if (rot->den == 2) return -1;
    throw std::logic_error("parity: chi(-1) was not a square root of unity");
}

std::complex<double> l_one_digamma(const DirichletCharacter& chi) {
    if (chi.is_principal()) throw std::invalid_argument("l_one_digamma: principal character rejected");
    const std::uint64_t a = chi.group().modulus();
    KahanSum re, im;
    for (std::uint64_t r = 1; r < a; ++r) {
        const auto rot = chi.rotation_at(static_cast<std::int64_t>(r));
        if (!rot) continue;
        const std::complex<double> v = rot->to_complex();
        const double psi = digamma(static_cast<double>(r) / static_cast<double>(a));
        re.add(v.real() * psi);
        im.add(v.imag() * psi);
    }
    const double inv = -1.0 / static_cast<double>(a);
    return {re.value() * inv, im.value() * inv};
}

namespace {

std::complex<double> series_from_harmonics(const DirichletCharacter& chi, const std::vector<double>& h) {
    const std::uint64_t a = chi.group().modulus();
    KahanSum re, im;
    for (std::uint64_t r = 0; r < a; ++r) {
        const auto rot = chi.rotation_at(static_cast<std::int64_t>(r));
        if (!rot) continue;
        const std::complex<double> v = rot->to_complex();
        re.add(v.real() * h[r]);
        im.add(v.imag() * h[r]);
    }
    return {re.value(), im.value()};
}

}  // namespace

std::complex<double> l_one_series(const DirichletCharacter& chi, std::uint64_t w) {
    const std::uint64_t a = chi.group().modulus();
    if (w < a) throw std::invalid_argument("l_one_series: need w >= modulus");
    return series_from_harmonics(chi, harmonic_by_residue(a, w));
}

std::vector<std::complex<double>> l_one_series_all(const CharacterGroup& group, std::uint64_t w) {
    if (w < group.modulus()) throw std::invalid_argument("l_one_series_all: need w >= modulus");
    const std::vector<double> h = harmonic_by_residue(group.modulus(), w);
    std::vector<std::complex<double>> out;
    for (const auto& chi : group.characters()) out.push_back(series_from_harmonics(chi, h));
    return out;
}

}  // namespace dio
