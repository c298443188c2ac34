#include "hlchi/character.hpp"

#include <cstdlib>

namespace hlchi {

VirtualCharacter VirtualCharacter::monomial(int p, int q, long mult) {
    VirtualCharacter v;
    v.add(p, q, mult);
    return v;
}

void VirtualCharacter::add(int p, int q, long mult) {
    if (mult == 0) return;
    auto [it, inserted] = terms_.try_emplace({p, q}, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }
}

long VirtualCharacter::multiplicity(int p, int q) const {
    auto it = terms_.find({p, q});
    return it == terms_.end() ? 0 : it->second;
}

long VirtualCharacter::monomial_count() const {
    long n = 0;
    for (const auto& [w, m] : terms_) n += std::labs(m);
    return n;
}

VirtualCharacter VirtualCharacter::swapped() const {
    VirtualCharacter r;
    for (const auto& [w, m] : terms_) r.add(w.second, w.first, m);
    return r;
}

VirtualCharacter& VirtualCharacter::operator+=(const VirtualCharacter& o) {
    for (const auto& [w, m] : o.terms_) add(w.first, w.second, m);
    return *this;
}

VirtualCharacter& VirtualCharacter::operator-=(const VirtualCharacter& o) {
    if (&o == this) {
        terms_.clear();
        return *this;
    }
    for (const auto& [w, m] : o.terms_) add(w.first, w.second, -m);
    return *this;
}

VirtualCharacter operator*(const VirtualCharacter& a, const VirtualCharacter& b) {
    VirtualCharacter r;
    for (const auto& [wa, ma] : a.terms_)
        for (const auto& [wb, mb] : b.terms_) r.add(wa.first + wb.first, wa.second + wb.second, ma * mb);
    return r;
}

VirtualCharacter operator*(VirtualCharacter a, long s) {
    if (s == 0) return {};
    for (auto& [w, m] : a.terms_) m *= s;
    return a;
}

std::string VirtualCharacter::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, m] : terms_) {
        if (!s.empty()) s += m < 0 ? " - " : " + ";
        else if (m < 0) s += "-";
        const long mag = std::labs(m);
        if (mag != 1) s += std::to_string(mag) + "*";
        s += "z1^" + std::to_string(w.first) + "*z2^" + std::to_string(w.second);
    }
    return s;
}

}  // namespace hlchi
