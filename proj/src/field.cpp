#include "lppforge/field.hpp"

#include <algorithm>
#include <cctype>

namespace lppforge {

const char* errc_name(errc code) {
    switch (code) {
        case errc::not_prime: return "NotPrime";
        case errc::reducible_modulus: return "ReducibleModulus";
        case errc::invalid_order: return "InvalidOrder";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::arity_mismatch: return "ArityMismatch";
        case errc::incomplete_table: return "IncompleteTable";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::size_mismatch: return "SizeMismatch";
        case errc::wrong_length: return "WrongLength";
        case errc::not_lpp: return "NotLPP";
        case errc::invalid_tuple: return "InvalidTuple";
        case errc::not_latin: return "NotLatin";
        case errc::equal_points: return "EqualPoints";
        case errc::gcd_violation: return "GcdViolation";
        case errc::unsupported_order: return "UnsupportedOrder";
        case errc::not_permutation: return "NotPermutation";
        case errc::not_linear_lpp: return "NotLinearLPP";
        case errc::even_characteristic: return "EvenCharacteristic";
        case errc::not_companions: return "NotCompanions";
        case errc::order_mismatch: return "OrderMismatch";
        case errc::bad_exponent: return "BadExponent";
        case errc::invalid_generators: return "InvalidGenerators";
        case errc::too_large: return "TooLarge";
        case errc::bad_input: return "BadInput";
    }
    return "Error";
}

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense univariate polynomials over F_p, coefficients low-to-high.
using PPoly = std::vector<int>;

void ptrim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic g.
PPoly pmod(PPoly f, const PPoly& g, int p) {
    ptrim(f);
    const int dg = static_cast<int>(g.size()) - 1;
    while (static_cast<int>(f.size()) - 1 >= dg) {
        int df = static_cast<int>(f.size()) - 1;
        int c = f[df];
        if (c != 0) {
            for (int i = 0; i <= dg; ++i) {
                int& t = f[df - dg + i];
                t = ((t - c * g[i]) % p + p) % p;
            }
        }
        f.pop_back();
        ptrim(f);
    }
    return f;
}

bool is_zero(const PPoly& f) {
    return std::all_of(f.begin(), f.end(), [](int c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const PPoly& f, int p) {
    const int deg = static_cast<int>(f.size()) - 1;
    if (deg < 1) return false;
    for (int d = 1; 2 * d <= deg; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            PPoly g(d + 1, 0);
            long c = code;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (is_zero(pmod(f, g, p))) return false;
        }
    }
    return true;
}

PPoly default_modulus(int p, int r) {
    if (r == 1) return {0, 1};  // F_p[x]/(x)
    long count = 1;
    for (int i = 0; i < r; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
        PPoly f(r + 1, 0);
        long c = code;
        for (int i = 0; i < r; ++i) {
            f[i] = static_cast<int>(c % p);
            c /= p;
        }
        f[r] = 1;
        if (is_irreducible(f, p)) return f;
    }
    fail(errc::reducible_modulus, "no irreducible modulus found");  // unreachable for prime p
}

} // namespace

Field::Ptr Field::make(int p, int r,
                       std::optional<std::vector<int>> modulus,
                       std::optional<std::vector<std::vector<int>>> order) {
    require(is_prime(p), errc::not_prime, "characteristic " + std::to_string(p) + " is not prime");
    require(r >= 1, errc::bad_input, "extension degree must be >= 1");

    long q_long = 1;
    for (int i = 0; i < r; ++i) {
        q_long *= p;
        require(q_long <= kMaxFieldOrder, errc::too_large,
                "field order exceeds supported maximum " + std::to_string(kMaxFieldOrder));
    }
    const int q = static_cast<int>(q_long);

    PPoly mod;
    if (modulus) {
        require(static_cast<int>(modulus->size()) == r + 1, errc::reducible_modulus,
                "modulus must have degree r (r+1 coefficients, low-to-high)");
        mod = *modulus;
        for (int& c : mod) {
            require(c >= 0 && c < p, errc::reducible_modulus, "modulus coefficient out of range");
        }
        require(mod[r] == 1, errc::reducible_modulus, "modulus must be monic");
        if (r > 1) {
            require(is_irreducible(mod, p), errc::reducible_modulus,
                    "modulus is reducible over F_" + std::to_string(p));
        }
    } else {
        mod = default_modulus(p, r);
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->r_ = r;
    f->q_ = q;
    f->modulus_ = mod;

    // Coefficient vector of an encoding, and back.
    auto decode = [&](felem a) {
        std::vector<int> c(r);
        int v = a;
        for (int i = 0; i < r; ++i) {
            c[i] = v % p;
            v /= p;
        }
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        int v = 0;
        for (int i = r - 1; i >= 0; --i) v = v * p + c[i];
        return static_cast<felem>(v);
    };

    f->add_.resize(static_cast<size_t>(q) * q);
    f->mul_.resize(static_cast<size_t>(q) * q);
    f->neg_.resize(q);
    f->inv_.assign(q, 0);

    for (int a = 0; a < q; ++a) {
        auto ca = decode(static_cast<felem>(a));
        std::vector<int> nc(r);
        for (int i = 0; i < r; ++i) nc[i] = (p - ca[i]) % p;
        f->neg_[a] = encode(nc);
        for (int b = 0; b < q; ++b) {
            auto cb = decode(static_cast<felem>(b));
            std::vector<int> sum(r);
            for (int i = 0; i < r; ++i) sum[i] = (ca[i] + cb[i]) % p;
            f->add_[static_cast<size_t>(a) * q + b] = encode(sum);

            PPoly prod(2 * r - 1, 0);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
            PPoly red = pmod(prod, mod, p);
            red.resize(r, 0);
            f->mul_[static_cast<size_t>(a) * q + b] = encode(red);
        }
    }
    for (int a = 1; a < q; ++a) {
        for (int b = 1; b < q; ++b) {
            if (f->mul_[static_cast<size_t>(a) * q + b] == 1) {
                f->inv_[a] = static_cast<felem>(b);
                break;
            }
        }
        require(f->inv_[a] != 0, errc::reducible_modulus,
                "modulus is reducible over F_" + std::to_string(p));
    }

    if (order) {
        require(static_cast<int>(order->size()) == q, errc::invalid_order,
                "order must list all " + std::to_string(q) + " elements");
        std::vector<bool> seen(q, false);
        f->order_.resize(q);
        for (int i = 0; i < q; ++i) {
            const auto& c = (*order)[i];
            require(static_cast<int>(c.size()) == r, errc::invalid_order,
                    "order entry has wrong coefficient count");
            for (int v : c)
                require(v >= 0 && v < p, errc::invalid_order, "order coefficient out of range");
            felem e = encode(c);
            require(!seen[e], errc::invalid_order, "order repeats an element");
            seen[e] = true;
            f->order_[i] = e;
        }
    } else {
        f->order_.resize(q);
        for (int i = 0; i < q; ++i) f->order_[i] = static_cast<felem>(i);
    }
    f->index_.assign(q, 0);
    for (int i = 0; i < q; ++i) f->index_[f->order_[i]] = i;

    return f;
}

felem Field::inv(felem a) const {
    require(a != 0, errc::division_by_zero, "inverse of zero");
    return inv_[a];
}

felem Field::pow(felem a, long k) const {
    require(k >= 0, errc::bad_input, "negative exponent");
    if (a == 0) return k == 0 ? one() : zero();
    k %= (q_ - 1);
    felem result = 1;
    felem base = a;
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

felem Field::from_int(long v) const {
    long m = ((v % p_) + p_) % p_;
    return static_cast<felem>(m);
}

felem Field::element(int idx) const {
    require(idx >= 0 && idx < q_, errc::bad_input, "element index out of range");
    return order_[idx];
}

std::vector<int> Field::coeffs(felem a) const {
    std::vector<int> c(r_);
    int v = a;
    for (int i = 0; i < r_; ++i) {
        c[i] = v % p_;
        v /= p_;
    }
    return c;
}

felem Field::from_coeffs(const std::vector<int>& c) const {
    require(static_cast<int>(c.size()) == r_, errc::bad_input, "coefficient vector has wrong length");
    int v = 0;
    for (int i = r_ - 1; i >= 0; --i) {
        require(c[i] >= 0 && c[i] < p_, errc::bad_input, "coefficient out of range");
        v = v * p_ + c[i];
    }
    return static_cast<felem>(v);
}

int Field::mult_order(felem a) const {
    require(a != 0, errc::bad_input, "multiplicative order of zero");
    int ord = 1;
    felem x = a;
    while (x != 1) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

felem Field::primitive_element() const {
    for (int i = 0; i < q_; ++i) {
        felem a = order_[i];
        if (a != 0 && mult_order(a) == q_ - 1) return a;
    }
    fail(errc::bad_input, "no primitive element");  // unreachable
}

std::string Field::label(felem a) const {
    if (r_ == 1) return std::to_string(a);
    auto c = coeffs(a);
    std::string s;
    for (int i = r_ - 1; i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c[i]);
        } else {
            if (c[i] != 1) s += std::to_string(c[i]);
            s += "u";
            if (i >= 2) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

felem Field::parse(const std::string& text) const {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    require(!s.empty(), errc::bad_input, "empty element");

    // Terms are evaluated with field arithmetic, so exponents of u beyond the
    // power basis ("u^5" in F_8) are accepted as well.
    const felem u_elem = r_ > 1 ? static_cast<felem>(p_) : one();
    felem result = zero();
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
        }
        require(i < s.size(), errc::bad_input, "dangling sign in element '" + text + "'");
        bool have_digits = false;
        long coef = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coef = coef * 10 + (s[i] - '0');
            have_digits = true;
            ++i;
        }
        if (i < s.size() && s[i] == '*') ++i;
        long exp = 0;
        if (i < s.size() && (s[i] == 'u' || s[i] == 'U')) {
            require(r_ > 1, errc::bad_input, "'u' has no meaning in a prime field");
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                require(i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])),
                        errc::bad_input, "missing exponent in element '" + text + "'");
                exp = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    exp = exp * 10 + (s[i] - '0');
                    ++i;
                }
            }
            if (!have_digits) coef = 1;
        } else {
            require(have_digits, errc::bad_input, "malformed element '" + text + "'");
        }
        if (i < s.size() && s[i] != '+' && s[i] != '-')
            fail(errc::bad_input, "malformed element '" + text + "'");
        felem term = mul(from_int(sign * coef), pow(u_elem, exp));
        result = add(result, term);
    }
    return result;
}

} // namespace lppforge
