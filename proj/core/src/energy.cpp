#include "capwave/energy.hpp"

#include <cmath>
#include <random>

#include "capwave/cutoff.hpp"
#include "capwave/diagonal.hpp"
#include "capwave/dirichlet_neumann.hpp"
#include "capwave/errors.hpp"
#include "capwave/ops.hpp"
#include "capwave/symbols.hpp"

namespace capwave {

double EnergyFunctional::E3() const {
    double s = E_m;
    for (double v : E_a) s += v;
    for (double v : E_b) s += v;
    return s;
}

SpectralField build_W(const SpectralField& u, const SpectralField& gamma, int k) {
    if (k < 0 || k > 2) throw config_error("build_W: k must lie in 0..2");
    SpectralField w = u;
    for (int j = 0; j < k; ++j) {
        SpectralField d = fractional_derivative(w, 1.5, true);
        d += apply_sigma_gamma(w, gamma);
        w = std::move(d);
    }
    return w;
}

namespace {

constexpr std::array<std::pair<int, int>, 4> kSignPairs{
    std::pair<int, int>{+1, +1}, {+1, -1}, {-1, +1}, {-1, -1}};

// Re (1/L^2) sum_{xi,eta} conj(Ahat(xi)) Bhat(eta) Chat(xi-eta) m(xi,eta).
double cubic_pairing(const SpectralField& A, const SpectralField& B, const SpectralField& C,
                     const Symbol2& m, double* imag_residue) {
    const FrequencyLattice& lat = A.lattice;
    const long half = static_cast<long>(lat.size() / 2);
    const double dxi = lat.spacing();
    cplx acc(0.0);
    for (long mo = -half; mo < half; ++mo) {
        const cplx av = A.coeffs[lat.slot(mo)];
        if (av == cplx(0.0)) continue;
        const double xi = dxi * static_cast<double>(mo);
        for (long me = -half; me < half; ++me) {
            const cplx bv = B.coeffs[lat.slot(me)];
            if (bv == cplx(0.0)) continue;
            const std::size_t sc = lat.slot(mo - me);
            if (sc == FrequencyLattice::npos) continue;
            const cplx cv = C.coeffs[sc];
            if (cv == cplx(0.0)) continue;
            const double eta = dxi * static_cast<double>(me);
            acc += std::conj(av) * bv * cv * m(xi, eta);
        }
    }
    acc /= lat.length() * lat.length();
    if (imag_residue) *imag_residue = std::max(*imag_residue, std::abs(acc.imag()));
    return acc.real();
}

}  // namespace

EnergyFunctional energy_total(const SpectralField& u, const SpectralField& gamma, int k) {
    EnergyFunctional ef;
    ef.k = k;
    ef.N0 = 1.5 * k;
    SpectralField W = build_W(u, gamma, k);
    SpectralField Wbar = conjugate_field(W);
    SpectralField ubar = conjugate_field(u);

    double e2 = 0.0;
    for (const auto& c : W.coeffs) e2 += std::norm(c);
    ef.E2 = 0.5 * e2 / W.lattice.length();

    const double N0 = ef.N0;
    Symbol2 mN = [N0](double xi, double eta) { return symbols::m_energy(N0, xi, eta); };
    ef.E_m = cubic_pairing(W, W, u, mN, &ef.imag_residue);

    for (std::size_t s = 0; s < kSignPairs.size(); ++s) {
        const int e1 = kSignPairs[s].first, e2s = kSignPairs[s].second;
        Symbol2 aN = [e1, e2s, N0](double xi, double eta) {
            return symbols::a_energy(e1, e2s, N0, xi, eta);
        };
        Symbol2 bN = [e1, e2s, N0](double xi, double eta) {
            return symbols::b_energy(e1, e2s, N0, xi, eta);
        };
        const SpectralField& Weps = (e2s > 0) ? W : Wbar;
        const SpectralField& ueps1 = (e1 > 0) ? u : ubar;
        const SpectralField& ueps2 = (e2s > 0) ? u : ubar;
        ef.E_a[s] = cubic_pairing(W, Weps, ueps1, aN, &ef.imag_residue);
        ef.E_b[s] = cubic_pairing(W, ueps2, ueps1, bN, &ef.imag_residue);
    }
    return ef;
}

namespace {

// Gaussian-envelope packet with unit-amplitude shape scaled by eps.
WaveState packet_state(const FrequencyLattice& lat, double eps, double xi0, double width) {
    WaveState st;
    st.t = 0.0;
    const double L = lat.length();
    const double x0 = 0.5 * L;
    st.h = sample_real(lat, [&](double x) {
        const double envelope = std::exp(-std::pow((x - x0) / width, 2));
        return eps * envelope * std::cos(xi0 * (x - x0));
    });
    st.phi = sample_real(lat, [&](double x) {
        const double envelope = std::exp(-std::pow((x - x0) / width, 2));
        return eps * envelope * std::sin(xi0 * (x - x0));
    });
    st.h.project_zero_mean();
    st.phi.project_zero_mean();
    return st;
}

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

EnergyFunctional energy_of_state(const WaveState& st, const IntegratorConfig& cfg, int k) {
    if (!cfg.nonlinear) {
        // Free flow: no nonlinearity, hence no cubic correction; the energy
        // degenerates to the exactly conserved quadratic form of U.
        SpectralField U = state_to_U(st);
        EnergyFunctional ef;
        ef.k = k;
        ef.N0 = 1.5 * k;
        SpectralField W = fractional_derivative(U, ef.N0, true);
        double e2 = 0.0;
        for (const auto& c : W.coeffs) e2 += std::norm(c);
        ef.E2 = 0.5 * e2 / W.lattice.length();
        return ef;
    }
    SpectralField G = dn_apply(st.h, st.phi, cfg.dn_mode, cfg.oracle_tol);
    ParalinearSplit ps = paralinear_split(st.h, st.phi, G);
    GoodUnknownBundle gb = build_good_unknown(st.h, st.phi, ps);
    return energy_total(gb.u, gb.gamma, k);
}

}  // namespace

DriftExperimentResult drift_experiment(const FrequencyLattice& lat,
                                       const std::vector<double>& eps_list,
                                       const IntegratorConfig& cfg, int k) {
    if (eps_list.size() < 3) throw config_error("drift_experiment: need at least 3 amplitudes");
    DriftExperimentResult res;
    res.eps = eps_list;
    for (double eps : eps_list) {
        WaveState st = packet_state(lat, eps, 1.0, lat.length() / 10.0);
        EnergyFunctional e0 = energy_of_state(st, cfg, k);
        WaveState fin = run(st, cfg, {}, nullptr);
        EnergyFunctional e1 = energy_of_state(fin, cfg, k);
        res.corrected_drift.push_back(std::abs(e1.total() - e0.total()));
        res.uncorrected_drift.push_back(std::abs(e1.E2 - e0.E2));
    }
    res.corrected_exponent = fit_loglog_slope(res.eps, res.corrected_drift);
    res.uncorrected_exponent = fit_loglog_slope(res.eps, res.uncorrected_drift);
    return res;
}

namespace {

struct BlockSpec {
    int k, k1, k2;
};

// l1 norm of the 2D inverse transform of the block-localized symbol.
// Sampled in block-adapted coordinates a = (xi-eta)/2^{k1}, b = eta/2^{k2},
// under which the S-infinity norm is invariant and the support is an O(1)
// box even for strongly separated blocks.
double sinf_proxy(const Symbol2& m, const BlockSpec& b, int M) {
    const double R = 1.7;
    const double s1 = std::exp2(b.k1), s2 = std::exp2(b.k2);
    std::vector<std::vector<cplx>> grid(M, std::vector<cplx>(M));
    const double da = 2.0 * R / M;
    for (int ia = 0; ia < M; ++ia) {
        const double av = -R + (ia + 0.5) * da;
        for (int ib = 0; ib < M; ++ib) {
            const double bv = -R + (ib + 0.5) * da;
            const double eta = s2 * bv;
            const double xi = s1 * av + eta;
            const double w = cutoff::phi_k(xi, b.k) * cutoff::phi_k(av, 0) * cutoff::phi_k(bv, 0);
            grid[ia][ib] = (w == 0.0) ? cplx(0.0) : w * m(xi, eta);
        }
    }
    // 2D FFT by rows then columns; proxy = (1/M^2) sum |coeff|.
    std::vector<cplx> line(M);
    for (int ia = 0; ia < M; ++ia) {
        line = grid[ia];
        fft::forward(line);
        grid[ia] = line;
    }
    double total = 0.0;
    for (int ib = 0; ib < M; ++ib) {
        for (int ia = 0; ia < M; ++ia) line[ia] = grid[ia][ib];
        fft::forward(line);
        for (int ia = 0; ia < M; ++ia) total += std::abs(line[ia]);
    }
    return total / (static_cast<double>(M) * static_cast<double>(M));
}

bool in_X(const BlockSpec& b) {
    int mx = std::max(b.k, std::max(b.k1, b.k2));
    int mn = std::min(b.k, std::min(b.k1, b.k2));
    int med = b.k + b.k1 + b.k2 - mx - mn;
    return mx - med <= 4;
}

}  // namespace

std::vector<SymbolBoundReport> symbol_bound_sampler(const std::string& lemma_id, int trials,
                                                    int resolution, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> kdist(-6, 6);
    std::vector<SymbolBoundReport> out;

    auto push = [&](const Symbol2& m, const BlockSpec& b, double bound) {
        SymbolBoundReport r;
        r.lemma = lemma_id;
        r.k = b.k;
        r.k1 = b.k1;
        r.k2 = b.k2;
        r.proxy = sinf_proxy(m, b, resolution);
        r.dyadic_bound = bound;
        r.ratio = bound > 0.0 ? r.proxy / bound : r.proxy;
        out.push_back(r);
    };

    for (int trial = 0; trial < trials; ++trial) {
        BlockSpec b{kdist(rng), kdist(rng), kdist(rng)};
        if (lemma_id == "a_plus" || lemma_id == "a_minus") {
            // support indicator: k2 - k1 >= 6; the chi cutoff itself only
            // activates around ten octaves of separation
            b.k1 = b.k2 - 10 - (trial % 4);
            b.k = b.k2 + (trial % 3) - 1;
            if (!in_X(b)) continue;
            const int e2 = (lemma_id == "a_plus") ? +1 : -1;
            const int e1 = (trial % 2 == 0) ? +1 : -1;
            Symbol2 m = [e1, e2](double xi, double eta) {
                return symbols::a_sym(e1, e2, xi, eta);
            };
            double bound;
            if (e2 > 0) {
                bound = std::exp2(1.5 * b.k1);
            } else {
                bound = (b.k >= 2) ? std::exp2(1.5 * b.k1)
                                   : std::exp2(0.5 * b.k1 + b.k);
            }
            push(m, b, bound);
        } else if (lemma_id == "b") {
            b.k1 = b.k2 + (trial % 7) - 3;
            b.k = std::max(b.k1, b.k2) + (trial % 2) - 4;
            if (!in_X(b)) continue;
            const auto& sp = kSignPairs[trial % 4];
            Symbol2 m = [sp](double xi, double eta) {
                return symbols::b_sym(sp.first, sp.second, xi, eta);
            };
            push(m, b, std::exp2(1.5 * b.k));
        } else if (lemma_id == "m_N") {
            b.k1 = b.k2 - 10 - (trial % 4);
            b.k = b.k2 + (trial % 3) - 1;
            if (!in_X(b)) continue;
            Symbol2 m = [](double xi, double eta) { return symbols::m_energy(9.0, xi, eta); };
            push(m, b, std::exp2(0.5 * b.k1 - 0.5 * b.k));
        } else if (lemma_id == "m_low" || lemma_id == "q_low" || lemma_id == "r_low" ||
                   lemma_id == "m_weighted1" || lemma_id == "m_weighted2" ||
                   lemma_id == "m_weighted3") {
            // sup-sampled evaluables: record max |value| over the block sample.
            if (!in_X(b)) continue;
            const auto& sp = kSignPairs[trial % 4];
            const double t = 10.0;
            Symbol2 m = [&, sp](double xi, double eta) -> cplx {
                if (lemma_id == "m_low") return symbols::m_low(sp.first, sp.second, t, xi, eta);
                if (lemma_id == "q_low")
                    return symbols::q_low_weighted(sp.first, sp.second, t, xi, eta);
                if (lemma_id == "r_low")
                    return symbols::r_low_weighted(sp.first, sp.second, t, xi, eta);
                if (lemma_id == "m_weighted1")
                    return symbols::m_weighted1(sp.first, sp.second, 3.0, xi, eta);
                if (lemma_id == "m_weighted2")
                    return symbols::m_weighted2(sp.first, sp.second, 3.0, xi, eta);
                return symbols::m_weighted3(sp.first, sp.second, 3.0, xi, eta);
            };
            SymbolBoundReport r;
            r.lemma = lemma_id;
            r.k = b.k;
            r.k1 = b.k1;
            r.k2 = b.k2;
            double sup = 0.0;
            std::uniform_real_distribution<double> u(-1.0, 1.0);
            for (int s = 0; s < 64; ++s) {
                const double xi = std::exp2(b.k) * (1.0 + 0.5 * u(rng));
                const double eta = std::exp2(b.k2) * (1.0 + 0.5 * u(rng));
                const cplx v = m(xi, eta);
                if (std::isfinite(v.real()) && std::isfinite(v.imag()))
                    sup = std::max(sup, std::abs(v));
            }
            r.proxy = sup;
            r.dyadic_bound = 1.0;
            r.ratio = sup;
            out.push_back(r);
        } else {
            throw config_error("symbol_bound_sampler: unknown lemma id " + lemma_id);
        }
    }
    return out;
}

}  // namespace capwave
