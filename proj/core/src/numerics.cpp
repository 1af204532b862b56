#include "bohl/numerics.hpp"

#include <cmath>
#include <cstdio>

#include "bohl/errors.hpp"

namespace bohl {

double default_generator_value(int k) {
    if (k < 1) throw BindingError("generator index must be positive");
    int count = 0;
    for (int candidate = 2;; ++candidate) {
        bool prime = true;
        for (int d = 2; d * d <= candidate; ++d) {
            if (candidate % d == 0) {
                prime = false;
                break;
            }
        }
        if (prime && ++count == k) return std::sqrt(static_cast<double>(candidate));
    }
}

BindingEnv BindingEnv::defaults_for(const std::set<std::string>& generators) {
    BindingEnv env;
    int k = 1;
    for (const std::string& name : generators) env.bind(name, default_generator_value(k++));
    return env;
}

void BindingEnv::bind(const std::string& name, double value) {
    if (!(value > 0.0) || !std::isfinite(value))
        throw BindingError("binding for generator '" + name + "' must be a positive real, got " +
                           std::to_string(value));
    values_[name] = value;
}

double BindingEnv::get(const std::string& name) const {
    auto it = values_.find(name);
    if (it == values_.end()) throw UnboundGeneratorError(name);
    return it->second;
}

namespace {

double frequency_value(const FreqVector& freq, const BindingEnv& env) {
    double value = freq.rational_part().to_double();
    for (const auto& [name, coeff] : freq.generator_coords())
        value += coeff.to_double() * env.get(name);
    return value;
}

}  // namespace

std::complex<double> evaluate(const BohlFunction& f, double t, const BindingEnv& env) {
    std::complex<double> sum = 0.0;
    for (const auto& [key, coeff] : f.term_map()) {
        std::complex<double> c(coeff.re().to_double(), coeff.im().to_double());
        double growth = key.exponent.growth().to_double();
        double omega = frequency_value(key.exponent.frequency(), env);
        std::complex<double> value = c * std::exp(std::complex<double>(growth * t, omega * t));
        if (key.power > 0) value *= std::pow(t, static_cast<double>(key.power));
        sum += value;
    }
    return sum;
}

SampleSeries sample(const BohlFunction& f, double t0, double t1, int n, const BindingEnv& env) {
    if (!(t0 < t1)) throw DomainError("sample needs t0 < t1");
    if (n < 1) throw DomainError("sample needs a positive grid count");
    SampleSeries out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    double step = (t1 - t0) / n;
    for (int k = 0; k <= n; ++k) {
        double t = k == n ? t1 : t0 + k * step;
        out.push_back({t, evaluate(f, t, env)});
    }
    return out;
}

double sup_norm_estimate(const BohlFunction& f, double t0, double t1, int n,
                         const BindingEnv& env) {
    double best = 0.0;
    for (const SamplePoint& p : sample(f, t0, t1, n, env)) best = std::max(best, std::abs(p.value));
    return best;
}

std::vector<double> translation_number_search(const BohlFunction& f, double eps, double window_lo,
                                              double window_hi, int grid_points,
                                              double probe_range, const BindingEnv& env,
                                              int probe_points) {
    if (!(eps > 0.0)) throw DomainError("translation search needs eps > 0");
    if (!f.is_ap_form())
        throw DomainError("translation numbers are defined for AP-form functions only");
    if (!(window_lo <= window_hi)) throw DomainError("translation search window is empty");
    if (grid_points < 1 || probe_points < 1) throw DomainError("grid counts must be positive");
    if (!(probe_range > 0.0)) throw DomainError("probe range must be positive");

    // f on the probe grid once; each candidate tau needs only the shifted grid.
    std::vector<double> probe_t;
    std::vector<std::complex<double>> probe_f;
    probe_t.reserve(static_cast<std::size_t>(probe_points) + 1);
    probe_f.reserve(static_cast<std::size_t>(probe_points) + 1);
    double probe_step = 2.0 * probe_range / probe_points;
    for (int k = 0; k <= probe_points; ++k) {
        double t = -probe_range + k * probe_step;
        probe_t.push_back(t);
        probe_f.push_back(evaluate(f, t, env));
    }

    std::vector<double> found;
    double tau_step = grid_points > 0 ? (window_hi - window_lo) / grid_points : 0.0;
    for (int k = 0; k <= grid_points; ++k) {
        double tau = k == grid_points ? window_hi : window_lo + k * tau_step;
        double worst = 0.0;
        for (std::size_t j = 0; j < probe_t.size(); ++j) {
            worst = std::max(worst, std::abs(probe_f[j] - evaluate(f, probe_t[j] + tau, env)));
            if (worst >= eps) break;
        }
        if (worst < eps) found.push_back(tau);
    }
    return found;
}

LowerBoundSequence lower_bound_sequence(const BohlFunction& f, int count, const BindingEnv& env,
                                        const SearchGrid& grid) {
    if (f.is_zero()) throw DomainError("lower-bound sequence needs a nonzero function");
    if (!f.is_ap_form()) throw DomainError("lower-bound sequence needs an AP-form function");
    if (count < 1) throw DomainError("lower-bound sequence needs a positive point count");
    if (grid.window_lengths.empty() || grid.points_per_unit < 1)
        throw DomainError("search grid needs window lengths and a positive density");

    // Grid maximizer t_* and eps = |f(t_*)|/2.
    constexpr double kCoarseSpan = 64.0;
    double best = -1.0;
    int coarse = static_cast<int>(kCoarseSpan) * grid.points_per_unit;
    for (const SamplePoint& p : sample(f, 0.0, kCoarseSpan, coarse, env)) {
        double mag = std::abs(p.value);
        if (mag > best) best = mag;
    }
    if (!(best > 0.0)) throw SearchResolutionError("coarse grid found no nonzero value");

    LowerBoundSequence out;
    out.eps = best / 2.0;

    for (double window : grid.window_lengths) {
        out.points.clear();
        bool ok = true;
        for (int k = 0; k < count && ok; ++k) {
            // Half-open window [k*window, (k+1)*window) keeps points strictly
            // increasing across adjacent windows.
            double lo = k * window;
            int steps = std::max(1, static_cast<int>(window * grid.points_per_unit));
            double step = window / steps;
            bool hit = false;
            for (int j = 0; j < steps; ++j) {
                double t = lo + j * step;
                if (std::abs(evaluate(f, t, env)) >= out.eps) {
                    out.points.push_back(t);
                    hit = true;
                    break;
                }
            }
            ok = hit;
        }
        if (ok) {
            out.window_length = window;
            return out;
        }
    }
    throw SearchResolutionError(
        "no point with |f| >= eps in some window at the scheduled resolutions; "
        "increase the grid density");
}

std::vector<ProbePoint> unboundedness_probe(const BohlFunction& f,
                                            const std::vector<double>& horizons,
                                            const BindingEnv& env, int samples_per_horizon) {
    for (std::size_t k = 1; k < horizons.size(); ++k) {
        if (!(horizons[k - 1] < horizons[k]))
            throw DomainError("probe horizons must be strictly increasing");
    }
    std::vector<ProbePoint> out;
    out.reserve(horizons.size());
    for (double horizon : horizons) {
        if (!(horizon > 0.0)) throw DomainError("probe horizons must be positive");
        out.push_back({horizon, sup_norm_estimate(f, 0.0, horizon, samples_per_horizon, env)});
    }
    return out;
}

std::string to_csv(const SampleSeries& series) {
    std::string out = "t,re,im\n";
    char row[128];
    for (const SamplePoint& p : series) {
        std::snprintf(row, sizeof(row), "%.17g,%.17g,%.17g\n", p.t, p.value.real(),
                      p.value.imag());
        out += row;
    }
    return out;
}

}  // namespace bohl
