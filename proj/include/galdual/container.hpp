#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "galdual/wavefunction.hpp"

/// Binary grid container, little-endian throughout.
///
///   magic "GDUALGRD" (8 bytes), uint32 version = 1,
///   uint32 basis (0 momentum, 1 position), uint32 rep (0 galilei, 1 dual),
///   float64 invariant (m or E), float64 c, float64 t,
///   int32 n[3], float64 spacing[3], float64 origin[3], uint32 field_count,
///   then field_count blocks of n0*n1*n2 interleaved (re, im) float64 pairs,
///   row-major with the last index fastest.
///
/// Real fields (potentials, E, B, rho, j) are stored with zero imaginary parts.
namespace galdual {

struct ContainerHeader {
  Basis basis = Basis::position;
  RepKind rep = RepKind::dual;
  double invariant = 1.0;
  double c = 1.0;
  double t = 0.0;
  Grid3 grid;
  std::uint32_t field_count = 1;
};

struct Container {
  ContainerHeader header;
  std::vector<ComplexField> fields;
};

void write_container(const std::string& path, const Container& c);
Container read_container(const std::string& path);

void write_wavefunction(const std::string& path, const WaveFunction& w);
/// Reads a single-field container as a wavefunction.
WaveFunction read_wavefunction(const std::string& path);

/// Packs real fields (e.g. A0, A, E, B) into a container with the given grid.
Container pack_real_fields(const Grid3& g, const std::vector<const RealField*>& fields);

}  // namespace galdual
