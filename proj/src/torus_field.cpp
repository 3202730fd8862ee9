#include "cburg/torus_field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cburg {

ComplexField::ComplexField(std::size_t J) : samples_(J, cplx{0.0, 0.0}) {
    if (J < 2) throw std::invalid_argument("ComplexField: grid size J must be >= 2");
}

ComplexField::ComplexField(std::vector<cplx> samples) : samples_(std::move(samples)) {
    if (samples_.size() < 2) throw std::invalid_argument("ComplexField: grid size J must be >= 2");
}

ComplexField ComplexField::sample(std::size_t J, const std::function<cplx(double)>& f) {
    ComplexField out(J);
    const double h = 1.0 / static_cast<double>(J);
    for (std::size_t j = 0; j < J; ++j) out[j] = f(static_cast<double>(j) * h);
    return out;
}

ModeSpectrum::ModeSpectrum(int K, int base_frequency)
    : K_(K), k0_(base_frequency), c_(static_cast<std::size_t>(2 * K + 1), cplx{0.0, 0.0}) {
    if (K < 0) throw std::invalid_argument("ModeSpectrum: truncation K must be >= 0");
    if (base_frequency < 1) throw std::invalid_argument("ModeSpectrum: base frequency must be >= 1");
}

namespace {

// Unit roots e^{-2 pi i j / J}, j in [0, J). Indexing (j*k) mod J keeps the
// transform exact for integer frequencies.
std::vector<cplx> root_table(std::size_t J) {
    std::vector<cplx> w(J);
    for (std::size_t j = 0; j < J; ++j) {
        const double phase = -two_pi * static_cast<double>(j) / static_cast<double>(J);
        w[j] = cplx(std::cos(phase), std::sin(phase));
    }
    return w;
}

}  // namespace

ModeSpectrum dft(const ComplexField& field, int K, int base_frequency) {
    const std::size_t J = field.size();
    if (static_cast<std::size_t>(2 * K + 1) > J)
        throw std::invalid_argument("dft: truncation 2K+1 exceeds grid size J");
    const auto w = root_table(J);
    ModeSpectrum spec(K, base_frequency);
    const double inv_j = 1.0 / static_cast<double>(J);
    for (int k = -K; k <= K; ++k) {
        const std::size_t kk = static_cast<std::size_t>(((k % static_cast<int>(J)) + static_cast<int>(J))) % J;
        cplx acc{0.0, 0.0};
        std::size_t idx = 0;
        for (std::size_t j = 0; j < J; ++j) {
            acc += field[j] * w[idx];
            idx += kk;
            if (idx >= J) idx -= J;
        }
        spec.at(k) = acc * inv_j;
    }
    return spec;
}

ComplexField idft(const ModeSpectrum& spectrum, std::size_t J) {
    const int K = spectrum.truncation();
    if (static_cast<std::size_t>(2 * K + 1) > J)
        throw std::invalid_argument("idft: truncation 2K+1 exceeds grid size J");
    const auto w = root_table(J);
    ComplexField out(J);
    for (int k = -K; k <= K; ++k) {
        const cplx c = spectrum.at(k);
        if (c == cplx{0.0, 0.0}) continue;
        // synthesis uses e^{+...}: conjugate index direction
        const std::size_t kk = static_cast<std::size_t>(((-k % static_cast<int>(J)) + static_cast<int>(J))) % J;
        std::size_t idx = 0;
        for (std::size_t j = 0; j < J; ++j) {
            out[j] += c * w[idx];
            idx += kk;
            if (idx >= J) idx -= J;
        }
    }
    return out;
}

double sobolev_norm(const ModeSpectrum& spectrum, int s) {
    if (s < 0) throw std::invalid_argument("sobolev_norm: s must be >= 0");
    const int K = spectrum.truncation();
    const double k0 = static_cast<double>(spectrum.base_frequency());
    double sum = 0.0;
    for (int k = -K; k <= K; ++k) {
        const double m = std::norm(spectrum.at(k));
        if (m == 0.0) continue;
        const double w2 = two_pi * static_cast<double>(k) * k0 * two_pi * static_cast<double>(k) * k0;
        double weight = 1.0;
        double acc = 1.0;
        for (int a = 1; a <= s; ++a) {
            weight *= w2;
            acc += weight;
        }
        sum += acc * m;
    }
    return std::sqrt(sum);
}

double l2_norm(const ModeSpectrum& spectrum) { return sobolev_norm(spectrum, 0); }

double linf_max_im(const ComplexField& field) {
    double m = field[0].imag();
    for (const cplx& u : field.samples()) m = std::max(m, u.imag());
    return m;
}

double linf_max_abs_re(const ComplexField& field) {
    double m = 0.0;
    for (const cplx& u : field.samples()) m = std::max(m, std::abs(u.real()));
    return m;
}

double linf_max_abs(const ComplexField& field) {
    double m = 0.0;
    for (const cplx& u : field.samples()) m = std::max(m, std::abs(u));
    return m;
}

}  // namespace cburg
