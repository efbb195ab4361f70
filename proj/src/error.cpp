#include "sacat/error.hpp"

namespace sacat {

const char* errc_name(errc c) {
    switch (c) {
    case errc::not_closed: return "NotClosed";
    case errc::not_associative: return "NotAssociative";
    case errc::no_identity: return "NoIdentity";
    case errc::no_inverse: return "NoInverse";
    case errc::parse_error: return "ParseError";
    case errc::unsupported_name: return "UnsupportedName";
    case errc::closure_too_large: return "ClosureTooLarge";
    case errc::foreign_subgroup: return "ForeignSubgroup";
    case errc::not_normal: return "NotNormal";
    case errc::not_nested: return "NotNested";
    case errc::non_abelian_quotient: return "NonAbelianQuotient";
    case errc::infinite_cokernel: return "InfiniteCokernel";
    case errc::order_cap_exceeded: return "OrderCapExceeded";
    case errc::solver_cap_exceeded: return "SolverCapExceeded";
    case errc::not_a_cycle: return "NotACycle";
    case errc::not_surjective: return "NotSurjective";
    case errc::not_central: return "NotCentral";
    case errc::kernel_mismatch: return "KernelMismatch";
    case errc::base_mismatch: return "BaseMismatch";
    case errc::not_composable: return "NotComposable";
    case errc::not_perfect: return "NotPerfect";
    case errc::catalog_incomplete: return "CatalogIncomplete";
    case errc::schema_error: return "SchemaError";
    case errc::internal: return "Internal";
    }
    return "Unknown";
}

} // namespace sacat
