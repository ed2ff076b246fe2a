#include "lppforge/mpoly.hpp"

#include <algorithm>

namespace lppforge {

namespace {

void check_same_field(const MPoly& a, const MPoly& b) {
    require(same_field(a.field(), b.field()), errc::field_mismatch,
            "operands belong to different fields");
}

long table_size(int q, int nvars) {
    require(nvars >= 1, errc::arity_mismatch, "need at least one variable");
    require(q <= kMaxTableOrder, errc::too_large,
            "table-based operations support q <= " + std::to_string(kMaxTableOrder));
    long n = 1;
    for (int i = 0; i < nvars; ++i) {
        n *= q;
        require(n <= 65536, errc::too_large, "value table too large");
    }
    return n;
}

} // namespace

MPoly::MPoly(Field::Ptr field, int nvars) : field_(std::move(field)), nvars_(nvars) {
    require(static_cast<bool>(field_), errc::bad_input, "null field");
    require(nvars_ >= 1, errc::arity_mismatch, "need at least one variable");
}

MPoly MPoly::constant(Field::Ptr field, int nvars, felem c) {
    MPoly f(std::move(field), nvars);
    if (c != 0) f.terms_.emplace(ExpVec(nvars, 0), c);
    return f;
}

MPoly MPoly::variable(Field::Ptr field, int nvars, int var) {
    MPoly f(std::move(field), nvars);
    require(var >= 0 && var < nvars, errc::arity_mismatch, "variable index out of range");
    ExpVec e(nvars, 0);
    e[var] = 1;
    f.terms_.emplace(std::move(e), f.field().one());
    return f;
}

MPoly MPoly::monomial(Field::Ptr field, int nvars, const std::vector<long>& exps, felem c) {
    MPoly f(std::move(field), nvars);
    require(static_cast<int>(exps.size()) == nvars, errc::arity_mismatch,
            "exponent vector has wrong length");
    if (c == 0) return f;
    ExpVec e(nvars);
    for (int i = 0; i < nvars; ++i)
        e[i] = static_cast<std::uint16_t>(reduce_exponent(exps[i], f.field().q()));
    f.terms_.emplace(std::move(e), c);
    return f;
}

void MPoly::add_term(const ExpVec& exps, felem c) {
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        felem s = field_->add(it->second, c);
        if (s == 0)
            terms_.erase(it);
        else
            it->second = s;
    }
}

std::optional<long> MPoly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    // Descending graded order: the first term carries the maximum degree.
    long d = 0;
    for (auto e : terms_.begin()->first) d += e;
    return d;
}

felem MPoly::coeff(const std::vector<long>& exps) const {
    require(static_cast<int>(exps.size()) == nvars_, errc::arity_mismatch,
            "exponent vector has wrong length");
    ExpVec e(nvars_);
    for (int i = 0; i < nvars_; ++i) e[i] = static_cast<std::uint16_t>(exps[i]);
    auto it = terms_.find(e);
    return it == terms_.end() ? field_->zero() : it->second;
}

felem MPoly::eval(std::span<const felem> point) const {
    require(static_cast<int>(point.size()) == nvars_, errc::arity_mismatch,
            "point length does not match variable count");
    const Field& F = *field_;
    felem acc = 0;
    for (const auto& [e, c] : terms_) {
        felem t = c;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] != 0) t = F.mul(t, F.pow(point[i], e[i]));
        }
        acc = F.add(acc, t);
    }
    return acc;
}

MPoly add(const MPoly& a, const MPoly& b) {
    check_same_field(a, b);
    require(a.nvars() == b.nvars(), errc::arity_mismatch, "variable counts differ");
    MPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

MPoly sub(const MPoly& a, const MPoly& b) {
    check_same_field(a, b);
    require(a.nvars() == b.nvars(), errc::arity_mismatch, "variable counts differ");
    MPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, b.field().neg(c));
    return out;
}

MPoly scale(const MPoly& a, felem c) {
    MPoly out(a.field_ptr(), a.nvars());
    if (c == 0) return out;
    for (const auto& [e, v] : a.terms_) out.add_term(e, a.field().mul(v, c));
    return out;
}

MPoly multiply(const MPoly& a, const MPoly& b) {
    check_same_field(a, b);
    require(a.nvars() == b.nvars(), errc::arity_mismatch, "variable counts differ");
    const Field& F = a.field();
    const int q = F.q();
    MPoly out(a.field_ptr(), a.nvars());
    ExpVec e(a.nvars());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars(); ++i)
                e[i] = static_cast<std::uint16_t>(reduce_exponent(long(ea[i]) + eb[i], q));
            out.add_term(e, F.mul(ca, cb));
        }
    }
    return out;
}

MPoly power(const MPoly& a, long k) {
    require(k >= 0, errc::bad_input, "negative power");
    MPoly result = MPoly::constant(a.field_ptr(), a.nvars(), a.field().one());
    for (long i = 0; i < k; ++i) result = multiply(result, a);
    return result;
}

MPoly compose_univariate(const MPoly& g, const MPoly& f) {
    require(g.nvars() == 1, errc::arity_mismatch, "outer polynomial must be univariate");
    require(same_field(g.field(), f.field()), errc::field_mismatch,
            "operands belong to different fields");
    // Horner over the dense coefficient list of g.
    long dg = g.total_degree().value_or(0);
    std::vector<felem> coef(dg + 1, 0);
    for (const auto& [e, c] : g.terms()) coef[e[0]] = c;
    MPoly result = MPoly::constant(f.field_ptr(), f.nvars(), coef[dg]);
    for (long k = dg - 1; k >= 0; --k) {
        result = multiply(result, f);
        result = add(result, MPoly::constant(f.field_ptr(), f.nvars(), coef[k]));
    }
    return result;
}

MPoly interpolate(const Field::Ptr& field, int nvars, std::span<const felem> table) {
    const Field& F = *field;
    const int q = F.q();
    const long size = table_size(q, nvars);
    require(static_cast<long>(table.size()) == size, errc::incomplete_table,
            "table must cover all q^n points");

    // Dense indicator rows: ind[a][k] = coefficient of x^k in 1 - (x - c_a)^(q-1).
    std::vector<std::vector<felem>> ind(q, std::vector<felem>(q, 0));
    for (int ai = 0; ai < q; ++ai) {
        felem a = F.element(ai);
        std::vector<felem> pw(q, 0);
        pw[0] = F.one();
        std::vector<felem> nxt(q, 0);
        for (int step = 0; step < q - 1; ++step) {  // multiply by (x - a)
            std::fill(nxt.begin(), nxt.end(), 0);
            for (int k = 0; k < q; ++k) {
                if (pw[k] == 0) continue;
                if (k + 1 < q) nxt[k + 1] = F.add(nxt[k + 1], pw[k]);
                nxt[k] = F.add(nxt[k], F.mul(pw[k], F.neg(a)));
            }
            std::swap(pw, nxt);
        }
        for (int k = 0; k < q; ++k) ind[ai][k] = F.neg(pw[k]);
        ind[ai][0] = F.add(ind[ai][0], F.one());
    }

    std::vector<felem> dense(size, 0);
    std::vector<int> digits(nvars);
    std::vector<const std::vector<felem>*> rows(nvars);
    // Tensor accumulation per nonzero table entry.
    std::vector<int> eidx(nvars, 0);
    for (long I = 0; I < size; ++I) {
        felem v = table[I];
        if (v == 0) continue;
        long rem = I;
        for (int i = nvars - 1; i >= 0; --i) {
            digits[i] = static_cast<int>(rem % q);
            rem /= q;
        }
        for (int i = 0; i < nvars; ++i) rows[i] = &ind[digits[i]];
        std::fill(eidx.begin(), eidx.end(), 0);
        while (true) {
            felem w = v;
            for (int i = 0; i < nvars && w != 0; ++i) w = F.mul(w, (*rows[i])[eidx[i]]);
            if (w != 0) {
                long flat = 0;
                for (int i = 0; i < nvars; ++i) flat = flat * q + eidx[i];
                dense[flat] = F.add(dense[flat], w);
            }
            int i = nvars - 1;
            while (i >= 0 && ++eidx[i] == q) eidx[i--] = 0;
            if (i < 0) break;
        }
    }

    MPoly out(field, nvars);
    ExpVec e(nvars);
    for (long flat = 0; flat < size; ++flat) {
        if (dense[flat] == 0) continue;
        long rem = flat;
        for (int i = nvars - 1; i >= 0; --i) {
            e[i] = static_cast<std::uint16_t>(rem % q);
            rem /= q;
        }
        out.terms_.emplace(e, dense[flat]);
    }
    return out;
}

std::vector<felem> value_table(const MPoly& f) {
    const Field& F = f.field();
    const int q = F.q();
    const long size = table_size(q, f.nvars());
    std::vector<felem> table(size);
    std::vector<felem> point(f.nvars());
    for (long I = 0; I < size; ++I) {
        long rem = I;
        for (int i = f.nvars() - 1; i >= 0; --i) {
            point[i] = F.element(static_cast<int>(rem % q));
            rem /= q;
        }
        table[I] = f.eval(point);
    }
    return table;
}

} // namespace lppforge
