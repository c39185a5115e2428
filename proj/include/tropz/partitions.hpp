#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tropz {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

// Multiset of positive integers, kept sorted non-increasing.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(); }
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(); }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    int multiplicity(int v) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
    }

    Partition operator+(const Partition& o) const {
        std::vector<int> v = parts_;
        v.insert(v.end(), o.parts_.begin(), o.parts_.end());
        return Partition(std::move(v));
    }

    auto operator<=>(const Partition&) const = default;

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    void normalize() {
        for (int p : parts_)
            if (p < 1) throw DomainError("partition parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }
    std::vector<int> parts_;
};

struct TailDecomposition {
    Partition oo, ee, o, e;
};

inline TailDecomposition tail_decompose(const Partition& p) {
    std::map<int, int> mult;
    for (int v : p) ++mult[v];
    std::vector<int> oo, ee, o, e;
    for (auto [v, m] : mult) {
        auto& paired = (v % 2) ? oo : ee;
        auto& single = (v % 2) ? o : e;
        for (int i = 0; i < m / 2; ++i) paired.push_back(v);
        if (m % 2) single.push_back(v);
    }
    return {Partition(oo), Partition(ee), Partition(o), Partition(e)};
}

// Inverse of tail_decompose: (oo^2, ee^2, o, e).
inline Partition reassemble(const TailDecomposition& t) {
    return t.oo + t.oo + t.ee + t.ee + t.o + t.e;
}

inline Partition extend_with_ones(const Partition& p, int k) {
    if (k < 0) throw DomainError("negative count of ones");
    std::vector<int> v(p.begin(), p.end());
    v.insert(v.end(), static_cast<std::size_t>(k), 1);
    return Partition(std::move(v));
}

inline Partition ones(int k) { return extend_with_ones(Partition{}, k); }

inline bool riemann_hurwitz_ok(int g, const Partition& lam, const Partition& mu, int s, int t) {
    if (lam.size() != mu.size()) throw DomainError("|lambda| != |mu|");
    return 2 * s + t == lam.length() + mu.length() + 2 * g - 2;
}

namespace detail {
inline bool is_2k_or_kk(const Partition& p, int d) {
    if (p.length() == 1) return d % 2 == 0;
    return p.length() == 2 && p[0] == p[1];
}
}  // namespace detail

inline bool is_excluded_pair(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size()) throw DomainError("|lambda| != |mu|");
    int d = lam.size();
    return detail::is_2k_or_kk(lam, d) && detail::is_2k_or_kk(mu, d);
}

// All partitions of n, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxp) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Order of the stabilizer of an element of cycle type p in S_|p|.
inline BigInt centralizer_order(const Partition& p) {
    std::map<int, int> mult;
    for (int v : p) ++mult[v];
    BigInt z = 1;
    for (auto [v, m] : mult) {
        for (int i = 0; i < m; ++i) z *= v;
        z *= factorial(m);
    }
    return z;
}

}  // namespace tropz
