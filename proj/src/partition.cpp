#include "hlchi/partition.hpp"

#include <algorithm>
#include <numeric>

#include "hlchi/error.hpp"

namespace hlchi {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw Error("invalid-partition", "parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw Error("invalid-partition", "parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::tail() const {
    if (parts_.empty()) return {};
    return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

Partition Partition::with_first(int a) const {
    std::vector<int> p;
    p.reserve(parts_.size() + 1);
    p.push_back(a);
    p.insert(p.end(), parts_.begin(), parts_.end());
    return Partition(std::move(p));
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

Partition conjugate(const Partition& mu) {
    std::vector<int> c;
    if (mu.empty()) return {};
    c.resize(static_cast<std::size_t>(mu[0]), 0);
    for (int part : mu.parts())
        for (int j = 0; j < part; ++j) ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
}

std::vector<std::pair<int, int>> multiplicities(const Partition& mu, int n) {
    if (mu.length() > n)
        throw Error("domain", "partition too long for " + std::to_string(n) + " variables");
    std::vector<std::pair<int, int>> out{{0, n - mu.length()}};
    const auto& p = mu.parts();
    for (auto it = p.rbegin(); it != p.rend();) {
        auto jt = std::find_if(it, p.rend(), [&](int v) { return v != *it; });
        out.emplace_back(*it, static_cast<int>(jt - it));
        it = jt;
    }
    return out;
}

Partition multiplicity_partition(const Partition& mu, int n) {
    std::vector<int> m;
    for (auto [i, mi] : multiplicities(mu, n))
        if (mi > 0) m.push_back(mi);
    std::sort(m.rbegin(), m.rend());
    return Partition(std::move(m));
}

std::pair<int, int> arm_leg(const Partition& mu, int row, int col) {
    if (row < 0 || row >= mu.length() || col < 0 || col >= mu[row])
        throw Error("domain", "cell (" + std::to_string(row) + "," + std::to_string(col) +
                                  ") is outside " + mu.to_string());
    const Partition c = conjugate(mu);
    return {mu[row] - col - 1, c[col] - row - 1};
}

namespace {

void enumerate(int remaining, int max_part, int slots, std::vector<int>& cur,
               std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (slots == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        enumerate(remaining - p, p, slots - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int m, int max_len) {
    std::vector<Partition> out;
    if (m < 0 || max_len < 0) return out;
    std::vector<int> cur;
    enumerate(m, m, max_len, cur, out);
    return out;
}

std::vector<Partition> partitions_up_to(int max_size, int max_len) {
    std::vector<Partition> out;
    for (int m = 0; m <= max_size; ++m) {
        auto ps = partitions_of(m, max_len);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

bool dominates(const Partition& lambda, const Partition& mu) {
    int a = 0, b = 0;
    const int len = std::max(lambda.length(), mu.length());
    for (int i = 0; i < len; ++i) {
        a += lambda[i];
        b += mu[i];
        if (a < b) return false;
    }
    return lambda.size() == mu.size();
}

bool contains(const Partition& mu, const Partition& lambda) {
    if (lambda.length() > mu.length()) return false;
    for (int i = 0; i < lambda.length(); ++i)
        if (lambda[i] > mu[i]) return false;
    return true;
}

bool is_horizontal_strip(const Partition& mu, const Partition& lambda) {
    if (lambda.length() > mu.length()) return false;
    // Interlacing: mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ...
    for (int i = 0; i < mu.length(); ++i) {
        if (lambda[i] > mu[i]) return false;
        if (lambda[i] < mu[i + 1]) return false;
    }
    return true;
}

bool graded_revlex_less(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() > b.parts();
}

}  // namespace hlchi
