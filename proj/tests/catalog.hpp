#pragma once

#include <optional>
#include <string>
#include <vector>

// Hand-computed ideal catalog, fixed before the engine existed. Each entry
// records generators, the projective dimension and top-degree worked out on
// paper, and the distinct point count where the locus is zero-dimensional.
namespace tidiv::testing {

struct CatalogEntry {
    const char* name;
    std::size_t num_vars;
    std::vector<const char*> generators;
    std::int64_t dimension;
    std::int64_t degree;  // ignored when dimension = -1
    std::optional<std::size_t> distinct_points;
};

inline const std::vector<CatalogEntry>& ideal_catalog() {
    static const std::vector<CatalogEntry> entries = {
        // a coordinate line in P^3: one linear condition short of a point
        {"line_in_p3", 4, {"X0", "X1"}, 1, 1, std::nullopt},
        // smooth quadric surface: hypersurface of degree 2
        {"quadric_in_p3", 4, {"X0*X3 - X1*X2"}, 2, 2, std::nullopt},
        // twisted cubic curve: rational normal curve of degree 3
        {"twisted_cubic", 4, {"X0*X2 - X1^2", "X1*X3 - X2^2", "X0*X3 - X1*X2"}, 1, 3,
         std::nullopt},
        // irrelevant ideal: empty projective set
        {"irrelevant_p3", 4, {"X0", "X1", "X2", "X3"}, -1, 0, std::nullopt},
        // the three coordinate points of P^2, pairwise products
        {"coordinate_points_p2", 3, {"X0*X1", "X0*X2", "X1*X2"}, 0, 3, 3},
        // a double point: degree 2 scheme supported on one point
        {"double_point_p2", 3, {"X0^2", "X1"}, 0, 2, 1},
        // two conjugate points over Q(sqrt 2): X0 = +-sqrt(2) X1 on the line X2 = 0
        {"sqrt2_points_p2", 3, {"X0^2 - 2*X1^2", "X2"}, 0, 2, 2},
        // coordinate triangle: squarefree cubic curve in P^2
        {"triangle_p2", 3, {"X0*X1*X2"}, 1, 3, std::nullopt},
        // three concurrent lines in the plane X0 = 0 inside P^3
        {"three_lines_p3", 4, {"X0", "X1*X2*X3"}, 1, 3, std::nullopt},
        // conic meets a transverse line in two conjugate points (X1^2 = -X0^2)
        {"conic_line_p2", 3, {"X0*X2 - X1^2", "X0 + X2"}, 0, 2, 2},
    };
    return entries;
}

}  // namespace tidiv::testing
