#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dio {

// Exact value on the unit circle, e^(2*pi*i * num/den) with the fraction
// reduced and 0 <= num < den. Character values stay in this form so identity
// tests (orthogonality, multiplicativity) can run in integer arithmetic.
struct Rotation {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Rotation of(std::uint64_t num, std::uint64_t den);
    Rotation operator+(const Rotation& o) const;  // compose = multiply values
    Rotation conjugate() const;
    bool operator==(const Rotation&) const = default;
    std::complex<double> to_complex() const;  // quarter turns rendered exactly
};

struct Generator {
    std::uint64_t element = 1;  // lifted so it is 1 on every other CRT component
    std::uint64_t order = 1;
};

class DirichletCharacter;

// (Z/aZ)^* decomposed through CRT: one generator per odd prime power, the
// classes of -1 and 5 for 2^e with e >= 3, the class of 3 for modulus 4.
// Every unit u satisfies u = prod g_i^{e_i(u)} (mod a); the exponent vectors
// e(u) are tabulated at construction.
class CharacterGroup {
  public:
    explicit CharacterGroup(std::uint64_t modulus);  // 2 <= modulus <= 10^5

    std::uint64_t modulus() const { return modulus_; }
    std::uint64_t order() const { return order_; }  // phi(modulus)
    const std::vector<Generator>& generators() const { return gens_; }
    std::uint64_t exponent_lcm() const { return exponent_lcm_; }

    bool is_unit(std::uint64_t residue) const;
    // Discrete log vector of a unit residue, one entry per generator.
    std::span<const std::uint32_t> exponents(std::uint64_t unit) const;

    // All phi(a) characters; the principal character comes first.
    std::vector<DirichletCharacter> characters() const;
    DirichletCharacter principal() const;

  private:
    std::uint64_t modulus_ = 0;
    std::uint64_t order_ = 1;
    std::uint64_t exponent_lcm_ = 1;
    std::vector<Generator> gens_;
    std::vector<std::uint32_t> dlog_;  // modulus_ rows of gens_.size() entries
    std::vector<std::uint8_t> unit_;
};

// A character is its exponent tuple c: chi(g_i) = e^(2*pi*i * c_i / d_i).
// Holds a pointer to its group, which must outlive the character.
class DirichletCharacter {
  public:
    DirichletCharacter(const CharacterGroup* group, std::vector<std::uint32_t> exps);

    const CharacterGroup& group() const { return *group_; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    bool is_principal() const;

    // Exact value: nullopt when gcd(m, a) > 1 (the value 0), otherwise the
    // rotation. Any integer argument is reduced mod a first.
    std::optional<Rotation> rotation_at(std::int64_t m) const;
    std::complex<double> operator()(std::int64_t m) const;

    int parity() const;  // chi(-1), always +1 or -1

  private:
    const CharacterGroup* group_;
    std::vector<std::uint32_t> exps_;
};

// L(1, chi) for non-principal chi from the digamma closed form
//   L(1, chi) = -(1/a) * sum_{r=1}^{a-1} chi(r) psi(r/a).
std::complex<double> l_one_digamma(const DirichletCharacter& chi);

// Truncated series sum_{n <= w} chi(n)/n, compensated; truncation error
// O(a/w). Requires w >= a. Internally groups terms by residue class, which
// is the same sum with the identical set of addends.
std::complex<double> l_one_series(const DirichletCharacter& chi, std::uint64_t w);

// Series values for every character of the group in characters() order,
// sharing a single pass over n <= w.
std::vector<std::complex<double>> l_one_series_all(const CharacterGroup& group, std::uint64_t w);

}  // namespace dio
