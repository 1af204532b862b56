#pragma once

#include <complex>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bohl/bohl_function.hpp"

namespace bohl {

/// Numeric values for the formal frequency generators. Values must be
/// positive; the default scheme binds the k-th generator (in name order) to
/// the square root of the k-th prime, a classically Q-linearly independent
/// family.
class BindingEnv {
public:
    BindingEnv() = default;

    static BindingEnv defaults_for(const std::set<std::string>& generators);

    /// Binds or overrides one generator. Throws BindingError unless value > 0.
    void bind(const std::string& name, double value);
    bool contains(const std::string& name) const { return values_.count(name) != 0; }
    /// Throws UnboundGeneratorError when the generator is missing.
    double get(const std::string& name) const;

    const std::map<std::string, double>& values() const { return values_; }

private:
    std::map<std::string, double> values_;
};

/// sqrt of the k-th prime (k one-based).
double default_generator_value(int k);

struct SamplePoint {
    double t = 0.0;
    std::complex<double> value;
};
using SampleSeries = std::vector<SamplePoint>;

/// Double-precision evaluation in canonical term order.
std::complex<double> evaluate(const BohlFunction& f, double t, const BindingEnv& env);

/// n+1 equispaced evaluations on [t0, t1], endpoints exact.
SampleSeries sample(const BohlFunction& f, double t0, double t1, int n, const BindingEnv& env);

/// max |f| over the sample grid; a lower bound for the sup on [t0, t1].
double sup_norm_estimate(const BohlFunction& f, double t0, double t1, int n,
                         const BindingEnv& env);

/// Grid points tau in [window_lo, window_hi] with
/// max_{|t| <= probe_range} |f(t) - f(t + tau)| < eps over a probe grid.
/// Requires eps > 0 and an AP-form f.
std::vector<double> translation_number_search(const BohlFunction& f, double eps, double window_lo,
                                              double window_hi, int grid_points,
                                              double probe_range, const BindingEnv& env,
                                              int probe_points = 2000);

struct LowerBoundSequence {
    double eps = 0.0;            // |f(t_*)| / 2 at the grid maximizer t_*
    double window_length = 0.0;  // the window length T that succeeded
    std::vector<double> points;  // strictly increasing, point k in [k*T, (k+1)*T)
};

/// Window-length schedule and grid density for the windowed searches.
/// The defaults (1000 points per unit window) suit the functions this
/// library produces; a SearchResolutionError asks the caller to raise them.
struct SearchGrid {
    std::vector<double> window_lengths{8.0, 16.0, 32.0, 64.0, 128.0};
    int points_per_unit = 1000;
};

/// Witnesses that |f| stays above a fixed eps on an unbounded sequence:
/// find a grid maximizer t_*, set eps = |f(t_*)|/2, then pick one point with
/// |f| >= eps from each of `count` consecutive windows. Throws
/// SearchResolutionError when no window length in the schedule succeeds.
LowerBoundSequence lower_bound_sequence(const BohlFunction& f, int count, const BindingEnv& env,
                                        const SearchGrid& grid = {});

struct ProbePoint {
    double horizon = 0.0;
    double sup_estimate = 0.0;
};

/// sup-norm estimates on [0, T] for each horizon T (horizons strictly
/// increasing). Bounded functions plateau; polynomial or growing ones climb.
std::vector<ProbePoint> unboundedness_probe(const BohlFunction& f,
                                            const std::vector<double>& horizons,
                                            const BindingEnv& env,
                                            int samples_per_horizon = 20000);

/// Writes "t,re,im" CSV.
std::string to_csv(const SampleSeries& series);

}  // namespace bohl
