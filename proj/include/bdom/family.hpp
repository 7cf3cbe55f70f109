#pragma once

#include <string>
#include <string_view>

#include "bdom/closed_forms.hpp"
#include "bdom/generators.hpp"
#include "bdom/graph.hpp"
#include "bdom/solvers.hpp"

namespace bdom {

/// A named graph family instance, as written on the command line:
///
///   path:k  cycle:k  star:k  grid:m,n  torus:m,n  lobster:d:i,T;i,T;...
///
/// For one-parameter families the parameter is stored in `n` and `m` is 0.
struct Family {
    enum class Kind { path, cycle, star, grid, torus, lobster };

    Kind kind = Kind::path;
    int m = 0;
    int n = 0;
    LobsterSpec lobster;  ///< Only for Kind::lobster.

    Graph build() const;
    std::string to_string() const;
};

std::string to_string(Family::Kind k);
/// "path", "cycle", ... Throws InputError on unknown names.
Family::Kind family_kind_from_string(std::string_view s);

/// Throws InputError on malformed specs. Parameter ranges are checked when the
/// graph is built.
Family parse_family(std::string_view spec);

/// The known closed form for `inv` on this family instance.
/// Throws CapabilityError if no formula covers the family, DomainError if the
/// parameters fall outside the formula's stated range.
FormulaResult closed_form(const Family& f, Invariant inv);

/// Closed-form diametricality (cycles, tori, grids). Same errors as closed_form.
bool closed_form_diametrical(const Family& f);

}  // namespace bdom
