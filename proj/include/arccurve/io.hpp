#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "arccurve/forms.hpp"
#include "arccurve/pointsets.hpp"

namespace arccurve::io {

// Point-set files:
//   q=<spec> n=<count> [modulus=c0,c1,...]
//   x:y:z
//   ...
// Blank lines and lines starting with '#' are ignored. Parse errors carry the
// 1-based line number.
struct LoadOptions {
    // When set, the set must be a maximal arc of this degree.
    std::optional<std::size_t> maximal_arc_degree;
};

PointSet read_pointset(std::istream& in, const LoadOptions& options = {});
PointSet load_pointset(const std::filesystem::path& path, const LoadOptions& options = {});
void write_pointset(std::ostream& out, const PointSet& k);
void save_pointset(const std::filesystem::path& path, const PointSet& k);

// Throws ValidationError naming the first line of the plane that meets K in
// neither 0 nor n points (or the size mismatch).
void validate_maximal_arc(const PointSet& k, std::size_t n);

// Certificate files:
//   degree <d> over <spec> [modulus=c0,c1,...]
//   i,j,k: coeff
// Terms in grlex order, nonzero coefficients only.
HomogeneousForm read_certificate(std::istream& in);
HomogeneousForm load_certificate(const std::filesystem::path& path);
void write_certificate(std::ostream& out, const HomogeneousForm& form);
void save_certificate(const std::filesystem::path& path, const HomogeneousForm& form);

// Writes `contents` to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace arccurve::io
