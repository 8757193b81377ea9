#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "int_matrix.hpp"

namespace orbitk::quiver {

using exactla::IntMatrix;

/// Finite quiver: ordered vertex labels plus arrows (parallel arrows allowed).
/// Matrix rows/columns follow the declaration order of the vertices.
class Quiver {
 public:
  Quiver(std::vector<std::string> vertices,
         std::vector<std::pair<std::string, std::string>> arrows);

  /// Presets: "A<s>", "D<s>" (s >= 3), "E6" | "E7" | "E8", "kronecker<m>".
  static Quiver preset(const std::string& name);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& arrows() const {
    return arrows_;
  }
  std::size_t vertex_count() const { return vertices_.size(); }

  bool is_acyclic() const;
  /// Underlying graph is a Dynkin diagram of type A, D or E.
  bool is_dynkin_ade() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> arrows_;
};

/// Entry (i,j) counts directed paths i -> j, length-0 paths included.
/// Unitriangular under any topological order, so det = +-1.
IntMatrix cartan_matrix(const Quiver& q);

/// Coxeter transformation on the simple basis: -C^{-T} * C.
IntMatrix coxeter_matrix(const Quiver& q);

/// C^{-T} as an integer matrix.
IntMatrix euler_form(const Quiver& q);

}  // namespace orbitk::quiver
