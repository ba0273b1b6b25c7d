#pragma once

#include <stdexcept>
#include <string>

namespace heckeimage {

enum class errc {
    not_prime,
    reducible_modulus,
    degree_mismatch,
    context_mismatch,
    zero_element,
    no_such_order,
    conj_undefined,
    degenerate_parameter,
    not_exchangeable,
    index_out_of_range,
    self_conjugate_shape,
    not_scalar,
    not_agreeing_on_commutators,
    too_few_strands,
    odd_length,
    dimension_mismatch,
    even_characteristic,
    degenerate,
    inadmissible_parameter,
    hook_not_lambda_zero,
    unsupported_family,
    not_irreducible,
    norm_equation_failure,
    max_random_retries_exceeded,
    singular,
    bad_format,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

} // namespace heckeimage
