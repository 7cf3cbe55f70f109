#include "bdom/family.hpp"

#include <charconv>
#include <vector>

#include "bdom/errors.hpp"

namespace bdom {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

int parse_int(std::string_view s, std::string_view spec) {
    int value = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (s.empty() || ec != std::errc() || ptr != end) {
        throw InputError("family '" + std::string(spec) + "': '" + std::string(s) + "' is not an integer");
    }
    return value;
}

}  // namespace

std::string to_string(Family::Kind k) {
    switch (k) {
        case Family::Kind::path: return "path";
        case Family::Kind::cycle: return "cycle";
        case Family::Kind::star: return "star";
        case Family::Kind::grid: return "grid";
        case Family::Kind::torus: return "torus";
        case Family::Kind::lobster: return "lobster";
    }
    return "?";
}

Family::Kind family_kind_from_string(std::string_view s) {
    for (auto k : {Family::Kind::path, Family::Kind::cycle, Family::Kind::star, Family::Kind::grid,
                   Family::Kind::torus, Family::Kind::lobster}) {
        if (s == to_string(k)) return k;
    }
    throw InputError("unknown family '" + std::string(s) + "' (expected path, cycle, star, grid, torus, lobster)");
}

Family parse_family(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw InputError("family '" + std::string(spec) + "' has no parameters");
    Family f;
    f.kind = family_kind_from_string(spec.substr(0, colon));
    const std::string_view rest = spec.substr(colon + 1);

    switch (f.kind) {
        case Family::Kind::path:
        case Family::Kind::cycle:
        case Family::Kind::star: f.n = parse_int(rest, spec); break;
        case Family::Kind::grid:
        case Family::Kind::torus: {
            auto parts = split(rest, ',');
            if (parts.size() != 2) throw InputError("family '" + std::string(spec) + "' needs two parameters m,n");
            f.m = parse_int(parts[0], spec);
            f.n = parse_int(parts[1], spec);
            break;
        }
        case Family::Kind::lobster: {
            const auto sep = rest.find(':');
            f.lobster.path_length = parse_int(rest.substr(0, sep), spec);
            f.n = f.lobster.path_length;
            if (sep != std::string_view::npos && sep + 1 < rest.size()) {
                for (auto item : split(rest.substr(sep + 1), ';')) {
                    auto parts = split(item, ',');
                    if (parts.size() != 2 || parts[1].size() != 1) {
                        throw InputError("family '" + std::string(spec) + "': limb '" + std::string(item) +
                                         "' should look like 3,A");
                    }
                    f.lobster.limbs.push_back({parse_int(parts[0], spec), limb_kind_from_char(parts[1][0])});
                }
            }
            f.lobster.validate();
            break;
        }
    }
    return f;
}

Graph Family::build() const {
    switch (kind) {
        case Kind::path: return path_graph(n);
        case Kind::cycle: return cycle_graph(n);
        case Kind::star: return star_graph(n);
        case Kind::grid: return grid_graph(m, n);
        case Kind::torus: return torus_graph(m, n);
        case Kind::lobster: return lobster_graph(lobster);
    }
    return {};
}

std::string Family::to_string() const {
    std::string s = bdom::to_string(kind) + ":";
    switch (kind) {
        case Kind::grid:
        case Kind::torus: return s + std::to_string(m) + "," + std::to_string(n);
        case Kind::lobster: {
            s += std::to_string(lobster.path_length);
            for (std::size_t i = 0; i < lobster.limbs.size(); ++i) {
                s += i == 0 ? ':' : ';';
                s += std::to_string(lobster.limbs[i].position) + "," + to_char(lobster.limbs[i].kind);
            }
            return s;
        }
        default: return s + std::to_string(n);
    }
}

FormulaResult closed_form(const Family& f, Invariant inv) {
    using K = Family::Kind;
    if (inv == Invariant::Gamma_b) {
        if (f.kind == K::cycle) return upper_gamma_b_cycle(f.n);
        if (f.kind == K::torus) return upper_gamma_b_torus(f.m, f.n);
        if (f.kind == K::star) {
            if (f.n < 1) throw DomainError("star needs k >= 1");
            return {f.n, "upper-broadcast:star-or-path", "k >= 1"};
        }
        if (f.kind == K::path) {
            if (f.n < 2) throw DomainError("path needs k >= 2 vertices");
            return {f.n - 1, "upper-broadcast:star-or-path", "k >= 2"};
        }
    }
    if (f.kind == K::torus) {
        if (inv == Invariant::Gamma) return f.m == 3 ? upper_gamma_c3_torus(f.n) : upper_gamma_torus(f.m, f.n);
        if (inv == Invariant::gamma) return gamma_torus_small(f.m, f.n);
        if (inv == Invariant::gamma_b) return gamma_b_torus_cited(f.m, f.n);
    }
    throw CapabilityError("no closed form for " + to_string(inv) + " on " + bdom::to_string(f.kind));
}

bool closed_form_diametrical(const Family& f) {
    switch (f.kind) {
        case Family::Kind::cycle: return cycle_is_diametrical(f.n);
        case Family::Kind::torus: return torus_is_diametrical(f.m, f.n);
        case Family::Kind::grid: return grid_is_diametrical(f.m, f.n);
        default: throw CapabilityError("no closed-form diametricality for " + to_string(f.kind));
    }
}

}  // namespace bdom
