// SPDX-License-Identifier: Apache-2.0
#include "tafnoise/telegraph.hpp"

#include "tafnoise/errors.hpp"
#include "tafnoise/physics.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace tafnoise {

namespace {

// splitmix64; used to derive one independent substream per
// (segment, fluctuator) pair so results do not depend on evaluation order
std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t segment,
                          std::uint64_t fluctuator)
{
    return std::mt19937_64(
        splitmix64(splitmix64(seed ^ (segment * 0x51a2b3c4d5e6f708ULL)) +
                   fluctuator));
}

// One telegraph trajectory accumulated into the per-sample jump array.
// jumps[j] collects state changes taking effect at sample j; a prefix sum
// over all fluctuators reconstructs the summed signal.
void accumulate_telegraph(Eigen::ArrayXd& jumps, double rate_per_s,
                          double sample_rate, std::mt19937_64& rng)
{
    const auto n = jumps.size();
    std::uniform_int_distribution<int> coin(0, 1);
    std::exponential_distribution<double> dwell(0.5 * rate_per_s);

    double state = coin(rng) ? 1.0 : -1.0;  // equilibrium start
    jumps[0] += state;
    const double t_end = static_cast<double>(n) / sample_rate;
    double t = dwell(rng);
    while (t < t_end) {
        const auto j = static_cast<Eigen::Index>(std::ceil(t * sample_rate));
        if (j < n)
            jumps[j] += -2.0 * state;
        state = -state;
        t += dwell(rng);
    }
}

}  // namespace

NoiseCurve rts_montecarlo(const RtsConfig& cfg)
{
    if (!(cfg.sample_rate_Hz > 0))
        throw InvalidConfigError("sample rate must be positive");
    if (!(cfg.duration_s > 0))
        throw InvalidConfigError("duration must be positive");
    if (cfg.segment_length < 16)
        throw InvalidConfigError("segment length must be at least 16");

    const auto n_fluct = cfg.activation_energies_eV.size();
    std::vector<double> rates(n_fluct);
    for (std::size_t k = 0; k < n_fluct; ++k)
        rates[k] = taf_rate(cfg.activation_energies_eV[k], cfg.temperature_K,
                            cfg.attempt_time_s);
    if (n_fluct > 0) {
        const auto [lo, hi] = std::minmax_element(rates.begin(), rates.end());
        if (cfg.sample_rate_Hz <= 10.0 * *hi)
            throw InvalidConfigError(
                "undersampled: sample rate must exceed 10x the fastest "
                "switching rate");
        if (cfg.duration_s * *lo < 10.0)
            throw InvalidConfigError(
                "duration spans fewer than 10 correlation times of the "
                "slowest fluctuator");
    }

    const Eigen::Index L = cfg.segment_length;
    const auto n_seg = static_cast<Eigen::Index>(
        cfg.duration_s * cfg.sample_rate_Hz / static_cast<double>(L));
    if (n_seg < 1)
        throw InvalidConfigError("duration shorter than one segment");

    const Eigen::Index n_bins = L / 2 - 1;  // skip DC and Nyquist
    Eigen::ArrayXd psd = Eigen::ArrayXd::Zero(n_bins);

    Eigen::FFT<double> fft;
    std::vector<double> signal(static_cast<std::size_t>(L));
    std::vector<std::complex<double>> spectrum;

    for (Eigen::Index seg = 0; seg < n_seg; ++seg) {
        Eigen::ArrayXd jumps = Eigen::ArrayXd::Zero(L);
        for (std::size_t k = 0; k < n_fluct; ++k) {
            auto rng = substream(cfg.seed, static_cast<std::uint64_t>(seg),
                                 static_cast<std::uint64_t>(k));
            accumulate_telegraph(jumps, rates[k], cfg.sample_rate_Hz, rng);
        }
        double level = 0;
        for (Eigen::Index i = 0; i < L; ++i) {
            level += jumps[i];
            signal[static_cast<std::size_t>(i)] = level;
        }
        fft.fwd(spectrum, signal);
        for (Eigen::Index b = 0; b < n_bins; ++b)
            psd[b] += std::norm(spectrum[static_cast<std::size_t>(b + 1)]);
    }

    // one-sided PSD in 1/Hz (rectangular window, non-overlapping segments)
    psd *= 2.0 / (cfg.sample_rate_Hz * static_cast<double>(L) *
                  static_cast<double>(n_seg));

    Eigen::ArrayXd omega(n_bins);
    for (Eigen::Index b = 0; b < n_bins; ++b)
        omega[b] = 2.0 * std::numbers::pi * cfg.sample_rate_Hz *
                   static_cast<double>(b + 1) / static_cast<double>(L);
    return NoiseCurve::at_fixed_temperature(cfg.temperature_K,
                                            std::move(omega), std::move(psd));
}

}  // namespace tafnoise
