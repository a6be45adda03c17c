#include "ewb/rational.hpp"

#include "ewb/error.hpp"

namespace ewb {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::AxiomViolation: return "AxiomViolation";
        case ErrorCode::NotNormal: return "NotNormal";
        case ErrorCode::NotHomomorphism: return "NotHomomorphism";
        case ErrorCode::NotAutomorphism: return "NotAutomorphism";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::OrderMismatch: return "OrderMismatch";
        case ErrorCode::NotFound: return "NotFound";
        case ErrorCode::NotPGroup: return "NotPGroup";
        case ErrorCode::InconsistentStructure: return "InconsistentStructure";
        case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
        case ErrorCode::NotPrimitive: return "NotPrimitive";
        case ErrorCode::NotPIntegral: return "NotPIntegral";
        case ErrorCode::BoundViolated: return "BoundViolated";
        case ErrorCode::IntegralityViolated: return "IntegralityViolated";
        case ErrorCode::ClaimViolated: return "ClaimViolated";
        case ErrorCode::IdentityViolated: return "IdentityViolated";
        case ErrorCode::UsageError: return "UsageError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

long padic_val(const Int& n, const Int& p) {
    if (n == 0) throw Error(ErrorCode::Internal, "padic_val of integer zero");
    Int m = abs(n);
    long v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

std::optional<long> padic_val(const Rat& q, const Int& p) {
    if (q == 0) return std::nullopt;
    return padic_val(numerator(q), p) - padic_val(denominator(q), p);
}

bool is_p_integer(const Rat& q, const Int& p) {
    if (q == 0) return true;
    return denominator(q) % p != 0;
}

std::string rat_to_string(const Rat& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

Rat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
    }
}

} // namespace ewb
