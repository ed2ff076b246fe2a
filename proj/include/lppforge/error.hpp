#ifndef LPPFORGE_ERROR_HPP
#define LPPFORGE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lppforge {

enum class errc {
    not_prime,
    reducible_modulus,
    invalid_order,
    division_by_zero,
    arity_mismatch,
    incomplete_table,
    field_mismatch,
    size_mismatch,
    wrong_length,
    not_lpp,
    invalid_tuple,
    not_latin,
    equal_points,
    gcd_violation,
    unsupported_order,
    not_permutation,
    not_linear_lpp,
    even_characteristic,
    not_companions,
    order_mismatch,
    bad_exponent,
    invalid_generators,
    too_large,
    bad_input,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace lppforge

#endif
