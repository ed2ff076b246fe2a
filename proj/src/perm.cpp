#include "lppforge/perm.hpp"

#include <algorithm>
#include <numeric>

namespace lppforge {

Perm identity_perm(int n) {
    Perm a(n);
    std::iota(a.begin(), a.end(), 0);
    return a;
}

bool is_permutation(const Perm& a) {
    std::vector<bool> seen(a.size(), false);
    for (auto v : a) {
        if (v >= a.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Perm compose(const Perm& a, const Perm& b) {
    require(a.size() == b.size(), errc::size_mismatch, "permutation sizes differ");
    Perm c(a.size());
    for (size_t x = 0; x < b.size(); ++x) c[x] = a[b[x]];
    return c;
}

Perm inverse(const Perm& a) {
    Perm c(a.size());
    for (size_t x = 0; x < a.size(); ++x) c[a[x]] = static_cast<std::uint8_t>(x);
    return c;
}

bool has_fixed_point(const Perm& a) {
    for (size_t x = 0; x < a.size(); ++x)
        if (a[x] == x) return true;
    return false;
}

std::vector<int> cycle_type(const Perm& a) {
    std::vector<int> lens;
    std::vector<bool> seen(a.size(), false);
    for (size_t s = 0; s < a.size(); ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (size_t x = s; !seen[x]; x = a[x]) {
            seen[x] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
}

std::vector<std::vector<int>> cycles(const Perm& a) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(a.size(), false);
    for (size_t s = 0; s < a.size(); ++s) {
        if (seen[s] || a[s] == s) {
            seen[s] = true;
            continue;
        }
        std::vector<int> cyc;
        for (size_t x = s; !seen[x]; x = a[x]) {
            seen[x] = true;
            cyc.push_back(static_cast<int>(x));
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

Perm perm_from_cycles(int n, const std::vector<std::vector<int>>& cs) {
    Perm a = identity_perm(n);
    std::vector<bool> used(n, false);
    for (const auto& cyc : cs) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i];
            int to = cyc[(i + 1) % cyc.size()];
            require(from >= 0 && from < n && to >= 0 && to < n, errc::bad_input,
                    "cycle entry out of range");
            require(!used[from], errc::bad_input, "cycles are not disjoint");
            used[from] = true;
            a[from] = static_cast<std::uint8_t>(to);
        }
    }
    return a;
}

int perm_order(const Perm& a) {
    int ord = 1;
    Perm x = a;
    const Perm id = identity_perm(static_cast<int>(a.size()));
    while (x != id) {
        x = compose(x, a);
        ++ord;
    }
    return ord;
}

bool tuple_valid(const PermTuple& tuple) {
    require(!tuple.empty(), errc::wrong_length, "empty tuple");
    const size_t q = tuple[0].size();
    require(tuple.size() == q, errc::wrong_length,
            "tuple must contain exactly q permutations of q points");
    for (const auto& b : tuple) {
        require(b.size() == q, errc::wrong_length, "tuple entries act on different sets");
        if (!is_permutation(b)) return false;
    }
    // inverse(beta_i)*beta_j fixed-point-free <=> beta_i and beta_j disagree
    // at every point.
    for (size_t i = 0; i < q; ++i)
        for (size_t j = i + 1; j < q; ++j)
            for (size_t x = 0; x < q; ++x)
                if (tuple[i][x] == tuple[j][x]) return false;
    return true;
}

PermTuple tuple_transform(const Perm& sigma, const PermTuple& omega, const Perm& delta) {
    PermTuple out;
    out.reserve(omega.size());
    for (const auto& b : omega) out.push_back(compose(sigma, compose(b, delta)));
    return out;
}

std::optional<std::pair<Perm, Perm>> tuples_equivalent(const PermTuple& omega,
                                                       const PermTuple& gamma) {
    require(!omega.empty() && omega.size() == gamma.size(), errc::wrong_length,
            "tuples have different lengths");
    const size_t q = omega.size();
    const Perm beta0_inv = inverse(omega[0]);
    Perm delta = identity_perm(static_cast<int>(q));
    std::sort(delta.begin(), delta.end());
    do {
        // sigma is forced by index 0: sigma = gamma_0 delta^-1 beta_0^-1.
        Perm sigma = compose(gamma[0], compose(inverse(delta), beta0_inv));
        bool ok = true;
        for (size_t i = 1; i < q && ok; ++i)
            ok = compose(sigma, compose(omega[i], delta)) == gamma[i];
        if (ok) return std::make_pair(sigma, delta);
    } while (std::next_permutation(delta.begin(), delta.end()));
    return std::nullopt;
}

} // namespace lppforge
