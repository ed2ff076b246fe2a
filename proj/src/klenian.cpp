#include "lppforge/klenian.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace lppforge {

namespace {

long ipow(int b, int e) {
    long v = 1;
    for (int i = 0; i < e; ++i) v *= b;
    return v;
}

// Number of elements of order dividing p^k in Z_{p^a} x Z_{p^b}.
long dividing_count(int p, int a, int b, int k) {
    return ipow(p, std::min(k, a)) * ipow(p, std::min(k, b));
}

} // namespace

std::pair<Perm, Perm> eklenian_generators(const Field::Ptr& field, int e) {
    const int p = field->p(), r = field->r(), q = field->q();
    require(e >= 0 && e <= r, errc::bad_exponent, "need 0 <= e <= r");
    const int l = static_cast<int>(ipow(p, e));
    const int t = q / l;
    Perm alpha(q), beta(q);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < l; ++j) {
            alpha[j + i * l] = static_cast<std::uint8_t>((j + 1) % l + i * l);
            beta[j + i * l] = static_cast<std::uint8_t>(j + ((i + 1) % t) * l);
        }
    return {alpha, beta};
}

EKlenianGroup eklenian_group_from_generators(const Field::Ptr& field, int e, Perm alpha,
                                             Perm beta) {
    const int p = field->p(), r = field->r(), q = field->q();
    require(e >= 0 && e <= r, errc::bad_exponent, "need 0 <= e <= r");
    const int l = static_cast<int>(ipow(p, e));
    const int t = q / l;
    require(static_cast<int>(alpha.size()) == q && static_cast<int>(beta.size()) == q,
            errc::invalid_generators, "generators must act on q points");
    require(is_permutation(alpha) && is_permutation(beta), errc::invalid_generators,
            "generators must be permutations");

    auto expect_type = [](const Perm& g, int len, int copies) {
        auto ct = cycle_type(g);
        return static_cast<int>(ct.size()) == copies &&
               std::all_of(ct.begin(), ct.end(), [&](int c) { return c == len; });
    };
    require(expect_type(alpha, l, t), errc::invalid_generators,
            "alpha must be " + std::to_string(t) + " disjoint " + std::to_string(l) + "-cycles");
    require(expect_type(beta, t, l), errc::invalid_generators,
            "beta must be " + std::to_string(l) + " disjoint " + std::to_string(t) + "-cycles");
    require(compose(alpha, beta) == compose(beta, alpha), errc::invalid_generators,
            "generators must commute");

    EKlenianGroup G;
    G.field = field;
    G.e = e;
    G.l = l;
    G.t = t;
    G.alpha = alpha;
    G.beta = beta;
    G.elements.resize(q);
    std::set<Perm> seen;
    Perm bpow = identity_perm(q);
    for (int j = 0; j < t; ++j) {
        Perm prod = bpow;
        for (int i = 0; i < l; ++i) {
            G.elements[i + j * l] = prod;
            require(seen.insert(prod).second, errc::invalid_generators,
                    "generator products collide; group order below q");
            prod = compose(alpha, prod);
        }
        bpow = compose(beta, bpow);
    }
    const Perm id = identity_perm(q);
    for (const auto& g : G.elements)
        require(g == id || !has_fixed_point(g), errc::invalid_generators,
                "non-identity element with a fixed point");
    return G;
}

EKlenianGroup eklenian_group(const Field::Ptr& field, int e) {
    auto [alpha, beta] = eklenian_generators(field, e);
    return eklenian_group_from_generators(field, e, std::move(alpha), std::move(beta));
}

EKlenianGroup cycle_group(const Field::Ptr& field, const Perm& beta) {
    const int q = field->q();
    auto ct = cycle_type(beta);
    require(ct.size() == 1 && ct[0] == q, errc::invalid_generators,
            "expected a single cycle through all q elements");
    return eklenian_group_from_generators(field, 0, identity_perm(q), beta);
}

MPoly eklenian_poly(const EKlenianGroup& group, const Perm& base) {
    require(is_permutation(base) && base.size() == group.elements[0].size(),
            errc::invalid_generators, "base must be a permutation of the q points");
    PermTuple tuple;
    tuple.reserve(group.elements.size());
    for (const auto& g : group.elements) tuple.push_back(compose(base, g));
    return tuple_to_lpp(group.field, tuple);
}

MPoly eklenian_poly(const EKlenianGroup& group) {
    return eklenian_poly(group, identity_perm(group.field->q()));
}

bigint count_0klenian_polys(int p, int r) {
    const long q = ipow(p, r);
    bigint qfact = 1, q1fact = 1;
    for (long i = 2; i <= q; ++i) qfact *= i;
    for (long i = 2; i <= q - 1; ++i) q1fact *= i;
    bigint phi = ipow(p, r - 1) * (p - 1);
    bigint groups = q1fact / phi;
    require(groups * phi == q1fact, errc::bad_input, "phi(q) must divide (q-1)!");
    return qfact * groups;
}

bigint count_0klenian_polys(const Field::Ptr& field) {
    return count_0klenian_polys(field->p(), field->r());
}

bigint count_equivalent_to_eklenian(int q, const bigint& n_klenian) {
    bigint q1fact = 1;
    for (long i = 2; i <= q - 1; ++i) q1fact *= i;
    return q1fact * n_klenian;
}

bool is_fpf_subgroup(const std::vector<Perm>& perms) {
    if (perms.empty()) return false;
    const size_t n = perms[0].size();
    std::set<Perm> keys;
    for (const auto& g : perms) {
        if (g.size() != n || !is_permutation(g)) return false;
        keys.insert(g);
    }
    if (keys.size() != perms.size()) return false;
    const Perm id = identity_perm(static_cast<int>(n));
    if (!keys.count(id)) return false;
    for (const auto& g : perms) {
        if (g != id && has_fixed_point(g)) return false;
        if (!keys.count(inverse(g))) return false;
        for (const auto& h : perms)
            if (!keys.count(compose(g, h))) return false;
    }
    return true;
}

MPoly group_polynomial(const Field::Ptr& field, const std::vector<Perm>& ordered_elements) {
    require(static_cast<int>(ordered_elements.size()) == field->q(), errc::wrong_length,
            "need exactly q group elements");
    require(is_fpf_subgroup(ordered_elements), errc::invalid_tuple,
            "elements do not form a fixed-point-free subgroup");
    return tuple_to_lpp(field, ordered_elements);
}

namespace {

std::optional<int> eklenian_parameter_impl(const std::vector<Perm>& elements, int p, int r,
                                           std::vector<int>* orders_out) {
    const long q = ipow(p, r);
    if (static_cast<long>(elements.size()) != q) return std::nullopt;
    const size_t n = elements[0].size();
    if (static_cast<long>(n) != q) return std::nullopt;

    std::vector<Perm> keys(elements);
    std::sort(keys.begin(), keys.end());
    for (const auto& g : keys)
        if (g.size() != n || !is_permutation(g)) return std::nullopt;
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) return std::nullopt;
    auto contains = [&](const Perm& g) {
        return std::binary_search(keys.begin(), keys.end(), g);
    };

    const Perm id = identity_perm(static_cast<int>(n));
    if (!contains(id)) return std::nullopt;
    for (const auto& g : elements) {
        if (g != id && has_fixed_point(g)) return std::nullopt;
        for (const auto& h : elements) {
            Perm gh = compose(g, h);
            if (!contains(gh)) return std::nullopt;
            if (gh != compose(h, g)) return std::nullopt;
        }
    }

    // Abelian group of order p^r; match the order profile of Z_l x Z_t.
    std::vector<int> orders;
    orders.reserve(elements.size());
    int max_ord = 1;
    for (const auto& g : elements) {
        int o = perm_order(g);
        orders.push_back(o);
        max_ord = std::max(max_ord, o);
    }
    int m = 0;
    while (ipow(p, m) < max_ord) ++m;
    if (ipow(p, m) != max_ord) return std::nullopt;
    const int e = r - m;
    if (e < 0 || e > m) return std::nullopt;
    for (int k = 0; k <= m; ++k) {
        long pk = ipow(p, k);
        long want = dividing_count(p, e, m, k);
        long have = std::count_if(orders.begin(), orders.end(),
                                  [&](int o) { return pk % o == 0; });
        if (want != have) return std::nullopt;
    }
    if (orders_out) *orders_out = std::move(orders);
    return e;
}

} // namespace

std::optional<int> eklenian_parameter(const std::vector<Perm>& elements, int p, int r) {
    return eklenian_parameter_impl(elements, p, r, nullptr);
}

std::optional<EKlenianEquivalence> is_equivalent_to_eklenian(const MPoly& f, int e) {
    const Field::Ptr field = f.field_ptr();
    const int p = field->p(), r = field->r(), q = field->q();
    require(e >= 0 && e <= r, errc::bad_exponent, "need 0 <= e <= r");
    PermTuple tuple = lpp_to_tuple(f);  // throws NotLPP for non-LPP input

    // Equivalence to an e-Klenian polynomial <=> the tuple set is a left
    // coset of an e-Klenian group. Normalizing by the first entry exposes
    // the group itself.
    const Perm mu0_inv = inverse(tuple[0]);
    std::vector<Perm> normalized;
    normalized.reserve(tuple.size());
    for (const auto& m : tuple) normalized.push_back(compose(mu0_inv, m));

    std::vector<int> orders;
    auto found = eklenian_parameter_impl(normalized, p, r, &orders);
    if (!found) return std::nullopt;
    const int e_req = std::min(e, r - e);
    if (*found != e_req) return std::nullopt;

    const int l = static_cast<int>(ipow(p, e));
    const int t = q / l;
    // Recover a generator pair of orders (l, t) whose products enumerate the
    // group; existence is guaranteed by the profile match.
    for (size_t ai = 0; ai < normalized.size(); ++ai) {
        if (orders[ai] != l) continue;
        for (size_t bi = 0; bi < normalized.size(); ++bi) {
            if (orders[bi] != t) continue;
            std::set<Perm> seen;
            Perm bpow = identity_perm(q);
            bool distinct = true;
            for (int j = 0; j < t && distinct; ++j) {
                Perm prod = bpow;
                for (int i = 0; i < l && distinct; ++i) {
                    distinct = seen.insert(prod).second;
                    prod = compose(normalized[ai], prod);
                }
                bpow = compose(normalized[bi], bpow);
            }
            if (!distinct) continue;
            EKlenianEquivalence w;
            w.sigma = tuple[0];
            w.delta = identity_perm(q);
            w.group = eklenian_group_from_generators(field, e, normalized[ai], normalized[bi]);
            return w;
        }
    }
    return std::nullopt;
}

} // namespace lppforge
