#pragma once

#include <functional>
#include <vector>

#include "galdual/grid.hpp"

/// FFT-backed operations on periodic grids (FFTW3 underneath).
namespace galdual::fourier {

/// In-place unnormalized 3D DFT; sign -1 is forward, +1 backward.
void fft3(const Grid3& g, ComplexField& data, int sign);

/// Angular wavenumbers of one axis in FFT order.
std::vector<double> wavenumbers(int n, double h);

/// Unitary centered transform psi(x) -> phi(p) = (2 pi)^(-3/2) sum e^{-i p.x} psi dV,
/// with phi sampled on g.reciprocal().
ComplexField to_momentum(const Grid3& g, const ComplexField& psi);
/// Inverse of to_momentum; g is the position grid.
ComplexField to_position(const Grid3& g, const ComplexField& phi);

ComplexField spectral_derivative(const Grid3& g, const ComplexField& f, int axis);
RealField spectral_derivative(const Grid3& g, const RealField& f, int axis);

/// f(x - s) for a band-limited periodic f.
ComplexField fourier_shift(const Grid3& g, const ComplexField& f, const Vec3& s);
RealField fourier_shift(const Grid3& g, const RealField& f, const Vec3& s);

/// Multiplies the spectrum by m(k) and transforms back.
ComplexField apply_multiplier(const Grid3& g, const ComplexField& f,
                              const std::function<cplx(const Vec3&)>& m);

}  // namespace galdual::fourier
