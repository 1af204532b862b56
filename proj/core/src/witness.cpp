#include "bohl/witness.hpp"

#include <atomic>
#include <set>

#include "bohl/errors.hpp"

namespace bohl {

namespace {

// f_j = e^(i s l_{2j-1} t) + e^(i s l_{2j} t) - 1, j one-based.
BohlFunction witness_entry(const std::vector<std::string>& names, int j, int s) {
    Rational scale(s);
    Exponent first = Exponent::imaginary(FreqVector::generator(names[2 * j - 2], scale));
    Exponent second = Exponent::imaginary(FreqVector::generator(names[2 * j - 1], scale));
    return BohlFunction::exponential(first) + BohlFunction::exponential(second) -
           BohlFunction::one();
}

void require_distinct(const std::vector<std::string>& names) {
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != names.size())
        throw DomainError("witness generator names must be pairwise distinct");
}

}  // namespace

WitnessSpec WitnessSpec::with_default_names(int n, int s) {
    WitnessSpec spec;
    spec.n = n;
    spec.s = s;
    if (n >= 1) {
        spec.generator_names.reserve(static_cast<std::size_t>(4 * n));
        for (int k = 1; k <= 4 * n; ++k) spec.generator_names.push_back("w" + std::to_string(k));
    }
    spec.validate();
    return spec;
}

WitnessSpec WitnessSpec::with_fresh_names(int n, int s) {
    static std::atomic<long> counter{0};
    WitnessSpec spec;
    spec.n = n;
    spec.s = s;
    if (n >= 1) {
        spec.generator_names.reserve(static_cast<std::size_t>(4 * n));
        for (int k = 0; k < 4 * n; ++k)
            spec.generator_names.push_back("u" + std::to_string(++counter));
    }
    spec.validate();
    return spec;
}

void WitnessSpec::validate() const {
    if (n < 1) throw DomainError("witness parameter n must be positive");
    if (s < 1) throw DomainError("witness parameter s must be positive");
    if (generator_names.size() != static_cast<std::size_t>(4 * n))
        throw ArityError("witness needs 4n generator names, got " +
                         std::to_string(generator_names.size()));
    require_distinct(generator_names);
}

BohlTuple bsr_witness(const WitnessSpec& spec) {
    spec.validate();
    BohlTuple out;
    out.entries.reserve(static_cast<std::size_t>(spec.n) + 1);
    for (int j = 1; j <= spec.n; ++j)
        out.entries.push_back(witness_entry(spec.generator_names, j, spec.s));

    BohlFunction g = BohlFunction::constant(GaussianRational(Rational(1, 4)));
    for (int j = 1; j <= spec.n; ++j) {
        g -= witness_entry(spec.generator_names, j, spec.s) *
             witness_entry(spec.generator_names, spec.n + j, spec.s);
    }
    out.entries.push_back(std::move(g));
    return out;
}

BohlTuple bsr_witness_inverse(const WitnessSpec& spec) {
    spec.validate();
    const GaussianRational four{Rational(4)};
    BohlTuple out;
    out.entries.reserve(static_cast<std::size_t>(spec.n) + 1);
    for (int j = 1; j <= spec.n; ++j)
        out.entries.push_back(witness_entry(spec.generator_names, spec.n + j, spec.s).scaled(four));
    out.entries.push_back(BohlFunction::constant(four));
    return out;
}

BohlTuple tsr_witness(int n, const std::vector<std::string>& generator_names) {
    if (n < 1) throw DomainError("witness parameter n must be positive");
    if (generator_names.size() != static_cast<std::size_t>(2 * n))
        throw ArityError("tsr witness needs 2n generator names, got " +
                         std::to_string(generator_names.size()));
    require_distinct(generator_names);
    BohlTuple out;
    out.entries.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) out.entries.push_back(witness_entry(generator_names, j, 1));
    return out;
}

bool bezout_verify(const BohlTuple& f, const BohlTuple& g) {
    if (f.size() != g.size())
        throw ArityError("Bezout check needs tuples of equal length (got " +
                         std::to_string(f.size()) + " and " + std::to_string(g.size()) + ")");
    if (f.size() == 0) throw ArityError("Bezout check needs nonempty tuples");
    BohlFunction sum;
    for (std::size_t j = 0; j < f.size(); ++j) sum += f.entries[j] * g.entries[j];
    return sum == BohlFunction::one();
}

PsiReduction push_reduction_through_psi(const BohlTuple& f_with_g, const BohlTuple& h,
                                        const BohlTuple& x) {
    if (f_with_g.size() < 2)
        throw ArityError("expected a tuple (f_1..f_N, g) of length at least 2");
    const std::size_t n = f_with_g.size() - 1;
    if (h.size() != n || x.size() != n)
        throw ArityError("expected H and X of length " + std::to_string(n) + ", got " +
                         std::to_string(h.size()) + " and " + std::to_string(x.size()));
    for (const BohlFunction& entry : f_with_g.entries) {
        if (!entry.is_ap_form())
            throw DomainError("push_reduction_through_psi needs AP-form f_1..f_N and g");
    }

    const BohlFunction& g = f_with_g.entries[n];
    PsiReduction out;
    out.h.entries.reserve(n);
    out.x.entries.reserve(n);
    BohlFunction original_sum;
    BohlFunction projected_sum;
    for (std::size_t j = 0; j < n; ++j) {
        BohlFunction psi_h = h.entries[j].psi();
        BohlFunction psi_x = x.entries[j].psi();
        original_sum += (f_with_g.entries[j] + h.entries[j] * g) * x.entries[j];
        projected_sum += (f_with_g.entries[j] + psi_h * g) * psi_x;
        out.h.entries.push_back(std::move(psi_h));
        out.x.entries.push_back(std::move(psi_x));
    }
    out.check =
        original_sum == BohlFunction::one() && projected_sum == BohlFunction::one();
    return out;
}

}  // namespace bohl
