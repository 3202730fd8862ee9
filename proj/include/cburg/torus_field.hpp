#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace cburg {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double two_pi = 2.0 * pi;

/// Complex samples u(x_j) on the uniform grid x_j = j/J of the unit torus.
/// h = 1/J is always derived from the sample count.
class ComplexField {
public:
    explicit ComplexField(std::size_t J);
    explicit ComplexField(std::vector<cplx> samples);

    /// Sample f at the grid points x_j = j/J.
    static ComplexField sample(std::size_t J, const std::function<cplx(double)>& f);

    std::size_t size() const { return samples_.size(); }
    double h() const { return 1.0 / static_cast<double>(samples_.size()); }

    cplx& operator[](std::size_t j) { return samples_[j]; }
    const cplx& operator[](std::size_t j) const { return samples_[j]; }

    const std::vector<cplx>& samples() const { return samples_; }

private:
    std::vector<cplx> samples_;
};

/// Fourier coefficients c_k, |k| <= K, of a field whose x-dependence goes
/// through k0*x. The physical frequency of index k is k*k0; the synthesis
/// convention is f(x) = sum_k c_k e^{+2 pi i k k0 x}.
class ModeSpectrum {
public:
    explicit ModeSpectrum(int K, int base_frequency = 1);

    int truncation() const { return K_; }
    int base_frequency() const { return k0_; }

    cplx& at(int k) { return c_[static_cast<std::size_t>(k + K_)]; }
    const cplx& at(int k) const { return c_[static_cast<std::size_t>(k + K_)]; }

    /// c_0, the mean of the represented field.
    cplx mean() const { return at(0); }

    const std::vector<cplx>& raw() const { return c_; }

private:
    int K_;
    int k0_;
    std::vector<cplx> c_;  // index k + K_
};

/// Forward transform, c_k = (1/J) sum_j e^{-2 pi i k j / J} u_j.
/// Requires 2K+1 <= J. Exact inverse of idft on band-limited fields.
ModeSpectrum dft(const ComplexField& field, int K, int base_frequency = 1);

/// Synthesis, u_j = sum_k c_k e^{+2 pi i k j / J}. Requires 2K+1 <= J.
ComplexField idft(const ModeSpectrum& spectrum, std::size_t J);

/// Euclidean Sobolev norm:
///   |w|_{H^s} = ( sum_k sum_{a<=s} (2 pi k k0)^{2a} |c_k|^2 )^{1/2}.
/// s = 0 reduces to the L2 norm.
double sobolev_norm(const ModeSpectrum& spectrum, int s);
double l2_norm(const ModeSpectrum& spectrum);

double linf_max_im(const ComplexField& field);
double linf_max_abs_re(const ComplexField& field);
double linf_max_abs(const ComplexField& field);

}  // namespace cburg
