#pragma once

#include <map>
#include <string>
#include <utility>

namespace hlchi {

/// Formal integer combination of torus monomials z1^p z2^q.
class VirtualCharacter {
public:
    using Weight = std::pair<int, int>;

    VirtualCharacter() = default;
    static VirtualCharacter monomial(int p, int q, long mult = 1);

    void add(int p, int q, long mult);
    long multiplicity(int p, int q) const;
    const std::map<Weight, long>& terms() const noexcept { return terms_; }

    /// Sum of absolute multiplicities (the monomial count for an honest character).
    long monomial_count() const;
    bool has_trivial() const { return multiplicity(0, 0) != 0; }

    VirtualCharacter swapped() const;

    VirtualCharacter& operator+=(const VirtualCharacter& o);
    VirtualCharacter& operator-=(const VirtualCharacter& o);
    friend VirtualCharacter operator+(VirtualCharacter a, const VirtualCharacter& b) { return a += b; }
    friend VirtualCharacter operator-(VirtualCharacter a, const VirtualCharacter& b) { return a -= b; }
    friend VirtualCharacter operator*(const VirtualCharacter& a, const VirtualCharacter& b);
    friend VirtualCharacter operator*(VirtualCharacter a, long s);
    bool operator==(const VirtualCharacter&) const = default;

    std::string to_string() const;

private:
    std::map<Weight, long> terms_;
};

}  // namespace hlchi
