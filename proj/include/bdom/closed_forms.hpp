#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace bdom {

/// Value of a closed-form evaluator together with where it comes from and
/// the parameter range it is stated for.
struct FormulaResult {
    std::int64_t value = 0;
    std::string source;
    std::string applicability;
};

nlohmann::json to_json(const FormulaResult& r);

// Every evaluator throws DomainError outside its stated parameter range and
// never extrapolates.

/// Γ(C_3 □ C_n) = n, n >= 3.
FormulaResult upper_gamma_c3_torus(std::int64_t n);

/// Γ(C_m □ C_n) by parity of m and n, m, n >= 3.
FormulaResult upper_gamma_torus(std::int64_t m, std::int64_t n);

/// Γ_b(C_n): 1 for n = 3, n - 2 for even n, n - 3 for odd n > 3.
FormulaResult upper_gamma_b_cycle(std::int64_t n);

/// Γ_b(C_m □ C_n) = m · Γ_b(C_n) for 3 <= m <= n. Does not swap arguments.
FormulaResult upper_gamma_b_torus(std::int64_t m, std::int64_t n);

/// γ(C_m □ C_n) for m in {3, 4, 5}, n >= 4. For m = 5 and n ≡ 3 (mod 5)
/// only an upper bound is known, which raises CapabilityError.
FormulaResult gamma_torus_small(std::int64_t m, std::int64_t n);

/// γ_b(C_m □ C_n) = ceil((m + n) / 2) - 1, m, n >= 3.
FormulaResult gamma_b_torus_cited(std::int64_t m, std::int64_t n);

/// diam(C_m □ C_n) = floor(m/2) + floor(n/2), m, n >= 3.
FormulaResult torus_diameter(std::int64_t m, std::int64_t n);

/// C_n is diametrical iff n ∈ {3, 4, 5}.
bool cycle_is_diametrical(std::int64_t n);

/// Tori are never diametrical.
bool torus_is_diametrical(std::int64_t m, std::int64_t n);

/// P_m □ P_n (1 <= m <= n) is diametrical iff it is a nontrivial path or P_2 □ P_2.
bool grid_is_diametrical(std::int64_t m, std::int64_t n);

}  // namespace bdom
