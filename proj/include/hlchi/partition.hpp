#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace hlchi {

/// Integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept { return size_; }
    bool empty() const noexcept { return parts_.empty(); }

    /// Part i (0-based); zero beyond the length.
    int operator[](int i) const noexcept {
        return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    /// Drops the first (largest) part.
    Partition tail() const;
    /// Prepends a part a >= parts[0].
    Partition with_first(int a) const;

    /// "[2,1,1]", "[]" for the empty partition.
    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

Partition conjugate(const Partition& mu);

/// (i, m_i) pairs: first (0, n - length), then every i >= 1 with m_i > 0.
std::vector<std::pair<int, int>> multiplicities(const Partition& mu, int n);

/// The partition formed by the nonzero multiplicities m_i(mu), including
/// m_0 = n - length.
Partition multiplicity_partition(const Partition& mu, int n);

/// Arm and leg of cell (row, col), 0-based.
std::pair<int, int> arm_leg(const Partition& mu, int row, int col);

/// All partitions of m with at most max_len parts, reverse-lexicographic.
std::vector<Partition> partitions_of(int m, int max_len);

/// Partitions of every size 0..max_size with at most max_len parts.
std::vector<Partition> partitions_up_to(int max_size, int max_len);

/// lambda >= mu in dominance order (equal sizes required).
bool dominates(const Partition& lambda, const Partition& mu);

/// True when the diagram of lambda lies inside that of mu.
bool contains(const Partition& mu, const Partition& lambda);
/// True when lambda is contained in mu and mu/lambda has at most one cell per column.
bool is_horizontal_strip(const Partition& mu, const Partition& lambda);

/// Orders by size, then reverse-lexicographically (largest first).
bool graded_revlex_less(const Partition& a, const Partition& b);

}  // namespace hlchi
