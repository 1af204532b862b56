#pragma once

#include <string>
#include <vector>

#include "bohl/bohl_function.hpp"

namespace bohl {

/// Parameters of the unimodular-tuple constructions. The 4N generator names
/// stand for positive reals that are linearly independent over Q; pairwise
/// distinct names encode that independence.
struct WitnessSpec {
    int n = 1;
    int s = 1;
    std::vector<std::string> generator_names;  // 4n names, pairwise distinct

    /// Deterministic names w1..w4n; the CLI surface.
    static WitnessSpec with_default_names(int n, int s = 1);
    /// Names drawn from a process-wide counter, so tuples built for separate
    /// experiments never share a generator.
    static WitnessSpec with_fresh_names(int n, int s = 1);
    void validate() const;
};

/// (f_1, ..., f_N, g) with f_j = e^(i s l_{2j-1} t) + e^(i s l_{2j} t) - 1 and
/// g = 1/4 - sum_j f_j f_{N+j}. Every entry is a generalized trigonometric
/// polynomial.
BohlTuple bsr_witness(const WitnessSpec& spec);

/// The explicit Bezout inverse (4 f_{N+1}, ..., 4 f_{2N}, 4) of bsr_witness.
BohlTuple bsr_witness_inverse(const WitnessSpec& spec);

/// (f_1, ..., f_n) with f_j = e^(i l_{2j-1} t) + e^(i l_{2j} t) - 1 over 2n
/// distinct generator names.
BohlTuple tsr_witness(int n, const std::vector<std::string>& generator_names);

/// Checks sum f_j * g_j == 1 exactly. Throws ArityError on length mismatch.
bool bezout_verify(const BohlTuple& f, const BohlTuple& g);

struct PsiReduction {
    BohlTuple h;     // psi applied entrywise to H
    BohlTuple x;     // psi applied entrywise to X
    bool check = false;
};

/// The projection step of a reduction: given F = (f_1..f_N, g) with AP-form
/// entries and candidate tuples H, X of length N, returns (psi(H), psi(X))
/// together with check = [sum (f_j + h_j g) x_j == 1 and
/// sum (f_j + psi(h_j) g) psi(x_j) == 1].
PsiReduction push_reduction_through_psi(const BohlTuple& f_with_g, const BohlTuple& h,
                                        const BohlTuple& x);

}  // namespace bohl
