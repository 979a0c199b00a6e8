#pragma once

// Independent test oracles. These deliberately avoid the library's exact
// root-counting path: the winding oracle samples the circle with certified
// step bounds, and the rank oracle re-derives W /\ K- degree data from plain
// nullspace computations.

#include <cmath>
#include <complex>
#include <optional>

#include "loopgrass/lattice.hpp"

namespace oracles {

/// Winding of a Laurent polynomial around 0 by accumulating principal argument
/// increments over a circle mesh. The mesh is refined until the Lipschitz bound
/// L * step < min|h|/2 rules out branch ambiguity, which makes the rounded sum
/// exact for inputs with no circle roots. Returns nullopt if no admissible mesh
/// is found (oracle inconclusive).
inline std::optional<long> mesh_winding(const loopgrass::LaurentPoly& h) {
    if (h.is_zero()) return std::nullopt;
    // Lipschitz bound on the circle: |dh/dtheta| <= sum |e| |c_e|
    double lip = 0.0;
    for (auto& [e, c] : h.terms())
        lip += std::abs(static_cast<double>(e)) * std::sqrt(c.norm_sq().get_d());
    lip *= 1.0 + 1e-9;
    for (long m = 256; m <= (1L << 22); m *= 4) {
        const double step = 2.0 * M_PI / static_cast<double>(m);
        std::vector<std::complex<double>> vals(static_cast<std::size_t>(m));
        double min_abs = 1e300;
        for (long j = 0; j < m; ++j) {
            const double th = step * static_cast<double>(j);
            const std::complex<double> z(std::cos(th), std::sin(th));
            std::complex<double> acc(0.0, 0.0);
            for (auto& [e, c] : h.terms())
                acc += std::complex<double>(c.re.get_d(), c.im.get_d()) *
                       std::pow(z, static_cast<double>(e));
            vals[static_cast<std::size_t>(j)] = acc;
            min_abs = std::min(min_abs, std::abs(acc));
        }
        if (!(lip * step < min_abs / 2.0) || min_abs < 1e-9) continue;
        double total = 0.0;
        for (long j = 0; j < m; ++j)
            total += std::arg(vals[static_cast<std::size_t>((j + 1) % m)] /
                              vals[static_cast<std::size_t>(j)]);
        const double w = total / (2.0 * M_PI);
        const double rounded = std::round(w);
        if (std::abs(w - rounded) > 0.05) return std::nullopt;
        return static_cast<long>(rounded);
    }
    return std::nullopt;
}

/// Rank via the minimal-degree characterization, driven by raw nullspace
/// computations over the window: the largest j such that W contains a nonzero
/// element supported on exponents <= -j; 0 if none.
inline long rank_via_min_degree(const loopgrass::Lattice& w) {
    using namespace loopgrass;
    const long r = w.r();
    const auto& rows = w.basis();
    long best = 0;
    for (long j = 1; j <= r; ++j) {
        // constraints: slots with exponent > -j must vanish
        std::vector<std::size_t> banned;
        for (std::size_t s = 0; s < window::slots(r); ++s)
            if (window::exponent_of(s, r) > -j) banned.push_back(s);
        QiMatrix m(banned.size(), rows.size());
        for (std::size_t i = 0; i < banned.size(); ++i)
            for (std::size_t k = 0; k < rows.size(); ++k) m.at(i, k) = rows[k][banned[i]];
        if (!nullspace(m).empty()) best = j;
    }
    return best;
}

}  // namespace oracles
