#pragma once

#include <stdexcept>
#include <string>

namespace multicyclic {

enum class Errc {
    not_prime,
    reducible_modulus,
    degree_too_large,
    invalid_argument,
    division_by_zero,
    order_not_dividing,
    ctx_mismatch,
    arity_mismatch,
    axis_out_of_range,
    index_out_of_range,
    not_idempotent,
    not_orbit_constant,
    dimension_mismatch,
    zero_idempotent,
    rank_deficient,
    budget_exceeded,
    infeasible,
    parse_error,
};

inline const char* errc_name(Errc code) {
    switch (code) {
        case Errc::not_prime: return "NotPrime";
        case Errc::reducible_modulus: return "ReducibleModulus";
        case Errc::degree_too_large: return "DegreeTooLarge";
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::order_not_dividing: return "OrderNotDividing";
        case Errc::ctx_mismatch: return "CtxMismatch";
        case Errc::arity_mismatch: return "ArityMismatch";
        case Errc::axis_out_of_range: return "AxisOutOfRange";
        case Errc::index_out_of_range: return "IndexOutOfRange";
        case Errc::not_idempotent: return "NotIdempotent";
        case Errc::not_orbit_constant: return "NotOrbitConstant";
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::zero_idempotent: return "ZeroIdempotent";
        case Errc::rank_deficient: return "RankDeficient";
        case Errc::budget_exceeded: return "BudgetExceeded";
        case Errc::infeasible: return "Infeasible";
        case Errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace multicyclic
