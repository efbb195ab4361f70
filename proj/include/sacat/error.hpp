#pragma once

#include <stdexcept>
#include <string>

namespace sacat {

enum class errc {
    not_closed,
    not_associative,
    no_identity,
    no_inverse,
    parse_error,
    unsupported_name,
    closure_too_large,
    foreign_subgroup,
    not_normal,
    not_nested,
    non_abelian_quotient,
    infinite_cokernel,
    order_cap_exceeded,
    solver_cap_exceeded,
    not_a_cycle,
    not_surjective,
    not_central,
    kernel_mismatch,
    base_mismatch,
    not_composable,
    not_perfect,
    catalog_incomplete,
    schema_error,
    internal
};

const char* errc_name(errc c);

/// Domain error carrying a machine-readable code plus a human message.
class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void check(bool ok, errc code, const std::string& what) {
    if (!ok)
        fail(code, what);
}

} // namespace sacat
