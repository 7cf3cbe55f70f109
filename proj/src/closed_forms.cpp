#include "bdom/closed_forms.hpp"

#include "bdom/errors.hpp"

namespace bdom {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

bool even(std::int64_t x) { return x % 2 == 0; }

std::string pair_str(std::int64_t m, std::int64_t n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

}  // namespace

nlohmann::json to_json(const FormulaResult& r) {
    return {{"value", r.value}, {"source", r.source}, {"applicability", r.applicability}};
}

FormulaResult upper_gamma_c3_torus(std::int64_t n) {
    require(n >= 3, "upper_gamma_c3_torus needs n >= 3, got " + std::to_string(n));
    return {n, "upper-domination:C3xCn", "n >= 3"};
}

FormulaResult upper_gamma_torus(std::int64_t m, std::int64_t n) {
    require(m >= 3 && n >= 3, "upper_gamma_torus needs m, n >= 3, got " + pair_str(m, n));
    std::int64_t v = 0;
    if (even(m) && even(n)) {
        v = m * n / 2;
    } else if (even(m)) {
        v = m * (n - 1) / 2;
    } else if (even(n)) {
        v = (m - 1) * n / 2;
    } else {
        v = (m - 1) * (n - 1) / 2 + 1;
    }
    return {v, "upper-domination:torus-parity", "m, n >= 3"};
}

FormulaResult upper_gamma_b_cycle(std::int64_t n) {
    require(n >= 3, "upper_gamma_b_cycle needs n >= 3, got " + std::to_string(n));
    const std::int64_t v = n == 3 ? 1 : (even(n) ? n - 2 : n - 3);
    return {v, "upper-broadcast:cycle", "n >= 3"};
}

FormulaResult upper_gamma_b_torus(std::int64_t m, std::int64_t n) {
    require(m >= 3 && m <= n, "upper_gamma_b_torus is stated for 3 <= m <= n, got " + pair_str(m, n));
    return {m * upper_gamma_b_cycle(n).value, "upper-broadcast:torus-rows", "3 <= m <= n"};
}

FormulaResult gamma_torus_small(std::int64_t m, std::int64_t n) {
    require(m >= 3 && m <= 5 && n >= 4, "gamma_torus_small covers m in {3,4,5}, n >= 4, got " + pair_str(m, n));
    switch (m) {
        case 3: return {n - n / 4, "domination:C3xCn", "m = 3, n >= 4"};
        case 4: return {n, "domination:C4xCn", "m = 4, n >= 4"};
        default:
            if (n % 5 == 3) {
                throw CapabilityError("gamma(C5 x C" + std::to_string(n) + "): only an upper bound is known for n = 5k+3");
            }
            return {n % 5 == 0 ? n : n + 1, "domination:C5xCn", "m = 5, n >= 4, n mod 5 != 3"};
    }
}

FormulaResult gamma_b_torus_cited(std::int64_t m, std::int64_t n) {
    require(m >= 3 && n >= 3, "gamma_b_torus_cited needs m, n >= 3, got " + pair_str(m, n));
    return {(m + n + 1) / 2 - 1, "broadcast-domination:torus", "m, n >= 3"};
}

FormulaResult torus_diameter(std::int64_t m, std::int64_t n) {
    require(m >= 3 && n >= 3, "torus_diameter needs m, n >= 3, got " + pair_str(m, n));
    return {m / 2 + n / 2, "diameter:torus", "m, n >= 3"};
}

bool cycle_is_diametrical(std::int64_t n) {
    require(n >= 3, "cycle_is_diametrical needs n >= 3, got " + std::to_string(n));
    return n <= 5;
}

bool torus_is_diametrical(std::int64_t m, std::int64_t n) {
    require(m >= 3 && n >= 3, "torus_is_diametrical needs m, n >= 3, got " + pair_str(m, n));
    return false;
}

bool grid_is_diametrical(std::int64_t m, std::int64_t n) {
    require(m >= 1 && m <= n, "grid_is_diametrical is stated for 1 <= m <= n, got " + pair_str(m, n));
    // P_1 □ P_1 is a single vertex, which is not diametrical.
    return (m == 1 && n >= 2) || (m == 2 && n == 2);
}

}  // namespace bdom
