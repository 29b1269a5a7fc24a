#ifndef GRPD_FAMILIES_HPP
#define GRPD_FAMILIES_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "grpd/groupoid.hpp"
#include "grpd/hom.hpp"

namespace grpd {

struct GeneratedFamily {
  FiniteGroupoid groupoid;
  std::vector<GroupoidHom> canonical_homs;
};

/// Objects 0..n-1, one arrow (x,y) per ordered pair, (x,y)(y,z) = (x,z).
/// Canonical hom: (x,y) -> x - y in Z.
GeneratedFamily pair_groupoid(std::size_t n, const Limits& limits = {});

/// One-object groupoid of a finite group given by its Cayley table
/// (table[a][b] = ab, elements 0..n-1). No canonical homs.
GeneratedFamily group_groupoid(const std::vector<std::vector<std::uint32_t>>& cayley,
                               const Limits& limits = {});

/// Z/n as a one-object groupoid, with the identity hom into Z/n.
GeneratedFamily cyclic_group(std::size_t n, const Limits& limits = {});

/// Base Z/n, arrows (p,v) from p to p+v, (p,v)(p+v,w) = (p,v+w).
/// Canonical hom: (p,v) -> v in Z/n.
GeneratedFamily affine_cyclic(std::size_t n, const Limits& limits = {});

/// Pair groupoid over the n-by-n grid. Canonical homs, in order: the
/// Gaussian difference (x1-y1) + i(x2-y2), then the two coordinate
/// differences into Z.
GeneratedFamily complex_pair(std::size_t n, const Limits& limits = {});

/// Dispatch by name: pair, group (cyclic), affine_cyclic, complex_pair.
/// Throws Error(BadParams) on an unknown family or a zero size.
GeneratedFamily generate(std::string_view kind, std::size_t size, const Limits& limits = {});

}  // namespace grpd

#endif  // GRPD_FAMILIES_HPP
